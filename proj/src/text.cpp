#include "gotz/text.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <functional>

#include "gotz/error.hpp"

namespace gotz {

namespace {

using Resolver = std::function<std::optional<int>(std::string_view)>;

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

[[noreturn]] void parse_error(std::string_view token, const std::string& why) {
  fail(ErrorCode::Parse, "cannot parse '" + std::string(token) + "': " + why);
}

std::optional<int> default_resolve(std::string_view name) {
  if (name.size() == 1 && name[0] >= 'a' && name[0] < 'a' + kMaxVars)
    return name[0] - 'a';
  if (name.size() >= 2 && name[0] == 'x') {
    int k = 0;
    auto [p, ec] = std::from_chars(name.data() + 1, name.data() + name.size(), k);
    if (ec == std::errc() && p == name.data() + name.size() && k >= 1 && k <= kMaxVars)
      return k - 1;
  }
  return std::nullopt;
}

Resolver ctx_resolver(const RingContext& ctx) {
  return [&ctx](std::string_view name) -> std::optional<int> {
    if (auto i = ctx.index_of(name)) return i;
    if (auto i = default_resolve(name); i && name.size() >= 2 && *i < ctx.num_vars())
      return i;  // x<k> is always accepted
    return std::nullopt;
  };
}

// Splits "name^k" into name and exponent.
std::pair<std::string_view, int> split_power(std::string_view piece, std::string_view token) {
  const auto caret = piece.find('^');
  if (caret == std::string_view::npos) return {piece, 1};
  int e = 0;
  const auto digits = piece.substr(caret + 1);
  auto [p, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), e);
  if (ec != std::errc() || p != digits.data() + digits.size() || e < 1 || e > 255)
    parse_error(token, "bad exponent");
  return {piece.substr(0, caret), e};
}

void add_exponent(std::array<int, kMaxVars>& exps, int idx, int e, std::string_view token) {
  if (idx < 0 || idx >= kMaxVars) parse_error(token, "variable index out of range");
  exps[idx] += e;
  if (exps[idx] > 255) parse_error(token, "exponent too large");
}

Monomial parse_token(std::string_view token, const Resolver& resolve, int& vars_used) {
  token = trim(token);
  if (token.empty()) parse_error(token, "empty monomial");
  if (token == "1") return Monomial{};
  std::array<int, kMaxVars> exps{};
  std::size_t start = 0;
  while (start <= token.size()) {
    const auto star = token.find('*', start);
    const auto piece = trim(token.substr(start, star == std::string_view::npos
                                                    ? std::string_view::npos
                                                    : star - start));
    if (piece.empty()) parse_error(token, "empty factor");
    // A whole piece naming one variable (x3, a custom name) wins over reading
    // it as concatenated letters.
    if (piece != "1") {
      const auto caret = piece.find('^');
      const bool whole = caret == std::string_view::npos ||
                         std::all_of(piece.begin() + caret + 1, piece.end(),
                                     [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
      const auto name = piece.substr(0, caret);
      if (auto idx = resolve(name); whole && idx && (name.size() > 1 || caret != std::string_view::npos)) {
        add_exponent(exps, *idx, split_power(piece, token).second, token);
      } else {
        std::size_t i = 0;
        while (i < piece.size()) {
          if (!std::isalpha(static_cast<unsigned char>(piece[i])))
            parse_error(token, "unexpected character");
          std::size_t j = i + 1;
          if (j < piece.size() && piece[j] == '^') {
            ++j;
            while (j < piece.size() && std::isdigit(static_cast<unsigned char>(piece[j]))) ++j;
          }
          auto [letter, pe] = split_power(piece.substr(i, j - i), token);
          auto li = resolve(letter);
          if (!li) parse_error(token, "unknown variable '" + std::string(letter) + "'");
          add_exponent(exps, *li, pe, token);
          i = j;
        }
      }
    }
    if (star == std::string_view::npos) break;
    start = star + 1;
  }
  std::array<int, kMaxVars> copy = exps;
  for (int i = 0; i < kMaxVars; ++i)
    if (copy[i]) vars_used = std::max(vars_used, i + 1);
  return Monomial::from_exponents(copy);
}

MonomialList parse_list(std::string_view text, const Resolver& resolve) {
  MonomialList out;
  std::size_t line_start = 0;
  while (line_start <= text.size()) {
    auto nl = text.find('\n', line_start);
    auto line = text.substr(line_start, nl == std::string_view::npos ? std::string_view::npos
                                                                      : nl - line_start);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::size_t pos = 0;
    while (pos <= line.size()) {
      auto comma = line.find(',', pos);
      auto tok = trim(line.substr(pos, comma == std::string_view::npos ? std::string_view::npos
                                                                       : comma - pos));
      // Tolerate surrounding parentheses: "(ab, ac)".
      while (!tok.empty() && tok.front() == '(') tok = trim(tok.substr(1));
      while (!tok.empty() && tok.back() == ')') tok = trim(tok.substr(0, tok.size() - 1));
      if (!tok.empty()) {
        if (tok == "0") {
          out.zero_marker = true;
        } else {
          out.monomials.push_back(parse_token(tok, resolve, out.vars_used));
        }
      } else if (comma != std::string_view::npos) {
        parse_error(line, "empty entry in list");
      }
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
    if (nl == std::string_view::npos) break;
    line_start = nl + 1;
  }
  if (out.zero_marker && !out.monomials.empty())
    fail(ErrorCode::Parse, "'0' (zero ideal) cannot be combined with other monomials");
  return out;
}

RingContext make_ctx(const MonomialList& list, std::optional<int> n, Flavor flavor) {
  const int vars = n.value_or(list.vars_used);
  if (vars < list.vars_used)
    fail(ErrorCode::Parse, "input uses " + std::to_string(list.vars_used) +
                               " variables but n = " + std::to_string(vars));
  return RingContext(vars, flavor);
}

}  // namespace

MonomialList parse_monomials(std::string_view text) {
  return parse_list(text, default_resolve);
}

MonomialList parse_monomials(std::string_view text, const RingContext& ctx) {
  auto out = parse_list(text, ctx_resolver(ctx));
  if (out.vars_used > ctx.num_vars())
    fail(ErrorCode::Parse, "monomial uses a variable outside the ring");
  return out;
}

Monomial parse_monomial(std::string_view token, const RingContext& ctx) {
  int used = 0;
  auto m = parse_token(token, ctx_resolver(ctx), used);
  if (used > ctx.num_vars()) fail(ErrorCode::Parse, "monomial uses a variable outside the ring");
  return m;
}

MonomialIdeal parse_ideal(std::string_view text, std::optional<int> n, Flavor flavor) {
  auto list = parse_monomials(text);
  return parse_ideal(text, make_ctx(list, n, flavor));
}

MonomialIdeal parse_ideal(std::string_view text, const RingContext& ctx) {
  auto list = parse_monomials(text, ctx);
  try {
    return minimalize(ctx, std::move(list.monomials));
  } catch (const Error& e) {
    fail(ErrorCode::Parse, e.what());
  }
}

MonomialSpace parse_space(std::string_view text, std::optional<int> n, Flavor flavor,
                          std::optional<int> degree) {
  auto list = parse_monomials(text);
  return parse_space(text, make_ctx(list, n, flavor), degree);
}

MonomialSpace parse_space(std::string_view text, const RingContext& ctx,
                          std::optional<int> degree) {
  auto list = parse_monomials(text, ctx);
  int d = -1;
  if (degree) d = *degree;
  else if (!list.monomials.empty()) d = list.monomials.front().degree();
  if (d < 0) fail(ErrorCode::Parse, "cannot infer the degree of an empty space");
  for (const auto& m : list.monomials)
    if (m.degree() != d) fail(ErrorCode::Parse, "monomial space must be homogeneous");
  try {
    return MonomialSpace(ctx, d, std::move(list.monomials));
  } catch (const Error& e) {
    fail(ErrorCode::Parse, e.what());
  }
}

std::vector<MonomialIdeal> parse_ideal_stanzas(std::string_view text, int n, Flavor flavor) {
  std::vector<MonomialIdeal> out;
  std::string stanza;
  bool has_content = false;
  auto flush = [&] {
    if (has_content) out.push_back(parse_ideal(stanza, n, flavor));
    stanza.clear();
    has_content = false;
  };
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    auto line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    auto content = line.substr(0, line.find('#'));
    if (trim(line).empty()) {
      flush();
    } else {
      if (!trim(content).empty()) has_content = true;
      stanza.append(line);
      stanza.push_back('\n');
    }
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
  flush();
  return out;
}

std::string format_monomial(const Monomial& m, const RingContext& ctx) {
  if (m.is_unit()) return "1";
  const bool letters = std::all_of(ctx.names().begin(), ctx.names().end(),
                                   [](const std::string& s) { return s.size() == 1; });
  std::string out;
  for (int i = 0; i < ctx.num_vars(); ++i) {
    const int e = m.exponent(i);
    if (!e) continue;
    if (!letters && !out.empty()) out += '*';
    out += ctx.name(i);
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

std::string format_monomial(SqfMonomial m, const RingContext& ctx) {
  return format_monomial(Monomial::from_support(m), ctx);
}

std::vector<std::string> monomial_strings(const MonomialSpace& v) {
  std::vector<std::string> out;
  for (const auto& m : v.basis()) out.push_back(format_monomial(m, v.ctx()));
  return out;
}

std::vector<std::string> monomial_strings(const MonomialIdeal& ideal) {
  std::vector<std::string> out;
  for (const auto& m : ideal.gens()) out.push_back(format_monomial(m, ideal.ctx()));
  return out;
}

namespace {
std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}
}  // namespace

std::string format_ideal(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) return "0";
  return join(monomial_strings(ideal), ",");
}

std::string format_ideal_lines(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) return "0\n";
  return join(monomial_strings(ideal), "\n") + "\n";
}

std::string format_space(const MonomialSpace& v) {
  if (v.empty()) return "0";
  return join(monomial_strings(v), ",");
}

}  // namespace gotz
