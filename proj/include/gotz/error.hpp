#pragma once

#include <stdexcept>
#include <string>

namespace gotz {

enum class ErrorCode {
  InvalidArgument,  // precondition violated by the caller
  Parse,            // malformed monomial / ideal / order text
  Invariant,        // a structural guarantee failed to hold (a bug or a misread)
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

inline void require(bool ok, const std::string& what) {
  if (!ok) fail(ErrorCode::InvalidArgument, what);
}

inline void ensure(bool ok, const std::string& what) {
  if (!ok) fail(ErrorCode::Invariant, what);
}

}  // namespace gotz
