#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gotz {

inline constexpr int kMaxVars = 16;

// PolyS is k[x_1..x_n]; SqfR is the same ring modulo all squares of variables.
enum class Flavor { PolyS, SqfR };

std::string_view flavor_name(Flavor f);

// Variable count, labels and ring flavor. Immutable and cheap to copy: the
// label list is shared between copies.
class RingContext {
 public:
  // Default labels a, b, c, ...
  RingContext(int n, Flavor flavor);
  RingContext(std::vector<std::string> names, Flavor flavor);

  int num_vars() const noexcept { return static_cast<int>(names_->size()); }
  Flavor flavor() const noexcept { return flavor_; }
  bool is_sqf() const noexcept { return flavor_ == Flavor::SqfR; }

  const std::string& name(int i) const;
  const std::vector<std::string>& names() const noexcept { return *names_; }
  std::optional<int> index_of(std::string_view name) const;

  RingContext with_flavor(Flavor f) const;
  // The ring with variable i removed (Q = R/(x_i) or S/(x_i)); remaining
  // variables keep their relative order and labels.
  RingContext without(int i) const;
  // Inverse of without(): insert a new variable labelled `name` at position i.
  RingContext with_inserted(int i, std::string name) const;

  friend bool operator==(const RingContext& a, const RingContext& b) {
    return a.flavor_ == b.flavor_ &&
           (a.names_ == b.names_ || *a.names_ == *b.names_);
  }

 private:
  std::shared_ptr<const std::vector<std::string>> names_;
  Flavor flavor_;
};

std::string default_var_name(int i);

}  // namespace gotz
