// Reads a stanza file written by `gotz enumerate --n N` and checks it lists
// exactly the enumeration, in order.
#include <fstream>
#include <iostream>
#include <iterator>
#include <string>

#include "gotz/gotz.h"

int main(int argc, char** argv) {
  if (argc != 3) {
    std::cerr << "usage: roundtrip FILE N\n";
    return 2;
  }
  std::ifstream in(argv[1]);
  const std::string text{std::istreambuf_iterator<char>(in), {}};
  const int n = std::stoi(argv[2]);
  gotz_ideal_list* parsed = nullptr;
  gotz_ideal_list* expected = nullptr;
  if (gotz_ideal_list_parse(text.c_str(), n, GOTZ_RING_S, &parsed) != GOTZ_OK ||
      gotz_enumerate(n, &expected) != GOTZ_OK) {
    std::cerr << gotz_last_error() << '\n';
    return 1;
  }
  int bad = gotz_ideal_list_size(parsed) == gotz_ideal_list_size(expected) ? 0 : 1;
  for (size_t k = 0; !bad && k < gotz_ideal_list_size(parsed); ++k) {
    int eq = 0;
    gotz_ideal_equal(gotz_ideal_list_at(parsed, k), gotz_ideal_list_at(expected, k), &eq);
    bad = !eq;
  }
  std::cout << gotz_ideal_list_size(parsed) << " ideals reparsed, " << (bad ? "MISMATCH" : "all equal") << '\n';
  gotz_ideal_list_free(parsed);
  gotz_ideal_list_free(expected);
  return bad;
}
