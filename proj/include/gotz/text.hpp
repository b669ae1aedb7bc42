#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gotz/ideal.hpp"
#include "gotz/space.hpp"

namespace gotz {

// Monomial text: concatenated letters ("abd", "a^2b") or star-separated
// names ("x1*x2*x4"). Lists are separated by commas or newlines; '#' starts a
// comment. "1" is the unit monomial and a lone "0" denotes the zero ideal.
struct MonomialList {
  std::vector<Monomial> monomials;
  bool zero_marker = false;
  int vars_used = 0;  // largest variable index referenced, plus one
};

// Without a context, letters a..p map to indices 0..15 and x<k> to k-1.
MonomialList parse_monomials(std::string_view text);
MonomialList parse_monomials(std::string_view text, const RingContext& ctx);

Monomial parse_monomial(std::string_view token, const RingContext& ctx);

// The ring has `n` variables when given, otherwise as many as the largest
// variable used requires.
MonomialIdeal parse_ideal(std::string_view text, std::optional<int> n, Flavor flavor);
MonomialIdeal parse_ideal(std::string_view text, const RingContext& ctx);

// The degree is read off the monomials; an empty list needs `degree`.
MonomialSpace parse_space(std::string_view text, std::optional<int> n, Flavor flavor,
                          std::optional<int> degree = std::nullopt);
MonomialSpace parse_space(std::string_view text, const RingContext& ctx,
                          std::optional<int> degree = std::nullopt);

// Blank-line separated stanzas, one ideal per stanza, all over n variables.
std::vector<MonomialIdeal> parse_ideal_stanzas(std::string_view text, int n, Flavor flavor);

std::string format_monomial(const Monomial& m, const RingContext& ctx);
std::string format_monomial(SqfMonomial m, const RingContext& ctx);
// "ab,ac,bd" / "0" / "1"
std::string format_ideal(const MonomialIdeal& ideal);
// One generator per line, newline terminated.
std::string format_ideal_lines(const MonomialIdeal& ideal);
// "ab,ac" or "0" for the zero space.
std::string format_space(const MonomialSpace& v);

std::vector<std::string> monomial_strings(const MonomialSpace& v);
std::vector<std::string> monomial_strings(const MonomialIdeal& ideal);

}  // namespace gotz
