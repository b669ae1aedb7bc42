#include "gotz/ring.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "gotz/error.hpp"

namespace gotz {

namespace {

bool valid_name(std::string_view s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s.front())))
    return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

}  // namespace

std::string_view flavor_name(Flavor f) {
  return f == Flavor::PolyS ? "S" : "R";
}

std::string default_var_name(int i) {
  return std::string(1, static_cast<char>('a' + i));
}

RingContext::RingContext(int n, Flavor flavor) : flavor_(flavor) {
  require(n >= 0 && n <= kMaxVars,
          "variable count must be in 0.." + std::to_string(kMaxVars));
  std::vector<std::string> names;
  names.reserve(n);
  for (int i = 0; i < n; ++i) names.push_back(default_var_name(i));
  names_ = std::make_shared<const std::vector<std::string>>(std::move(names));
}

RingContext::RingContext(std::vector<std::string> names, Flavor flavor)
    : flavor_(flavor) {
  require(names.size() <= static_cast<std::size_t>(kMaxVars),
          "at most " + std::to_string(kMaxVars) + " variables are supported");
  std::set<std::string_view> seen;
  for (const auto& s : names) {
    require(valid_name(s), "invalid variable name '" + s + "'");
    require(seen.insert(s).second, "duplicate variable name '" + s + "'");
  }
  names_ = std::make_shared<const std::vector<std::string>>(std::move(names));
}

const std::string& RingContext::name(int i) const {
  require(i >= 0 && i < num_vars(), "variable index out of range");
  return (*names_)[i];
}

std::optional<int> RingContext::index_of(std::string_view name) const {
  for (int i = 0; i < num_vars(); ++i)
    if ((*names_)[i] == name) return i;
  return std::nullopt;
}

RingContext RingContext::with_flavor(Flavor f) const {
  RingContext out = *this;
  out.flavor_ = f;
  return out;
}

RingContext RingContext::without(int i) const {
  require(i >= 0 && i < num_vars(), "variable index out of range");
  std::vector<std::string> names = *names_;
  names.erase(names.begin() + i);
  return RingContext(std::move(names), flavor_);
}

RingContext RingContext::with_inserted(int i, std::string name) const {
  require(i >= 0 && i <= num_vars(), "insertion position out of range");
  std::vector<std::string> names = *names_;
  names.insert(names.begin() + i, std::move(name));
  return RingContext(std::move(names), flavor_);
}

}  // namespace gotz
