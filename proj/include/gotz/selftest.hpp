#pragma once

#include <string>
#include <vector>

namespace gotz {

struct SelftestCase {
  std::string name;
  bool passed = false;
  std::string detail;
};

// Worked examples with known answers: Gotzmann ideals of R that are not lex
// in any order, the reconstruction example, the mixed-degree ideal whose
// components need different orders, the two decomposition counterexamples and
// the small counts.
std::vector<SelftestCase> run_selftest();

}  // namespace gotz
