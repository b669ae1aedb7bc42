#pragma once

#include <optional>
#include <string>

#include "json.hpp"

#include "gotz/ring.hpp"

// JSON reports behind the C API and the command line. Every report carries
// "command", "ring", "n", "gens", "result" and "diagnostics".
namespace gotz::report {

using nlohmann::json;

struct Input {
  std::string text;
  std::optional<int> n;  // inferred from the text when absent
};

json check(const Input& in, Flavor flavor);
json classify(const Input& in);
json lexify(const Input& in);
json dual_ideal(const Input& in);
json dual_space(const Input& in);
// `var` defaults to pick_variable.
json decompose(const Input& in, const std::optional<std::string>& var);
json compress(const Input& in, const std::string& var, const std::optional<std::string>& order);
json count(int max_n);
json series(int order);
json selftest();

}  // namespace gotz::report
