#include "gotz/gotz.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <string>
#include <vector>

#include "gotz/counting.hpp"
#include "gotz/duality.hpp"
#include "gotz/error.hpp"
#include "gotz/lex.hpp"
#include "gotz/supernova.hpp"
#include "gotz/text.hpp"
#include "report.hpp"

struct gotz_ideal {
  gotz::MonomialIdeal value;
};

struct gotz_ideal_list {
  std::vector<gotz_ideal> items;
};

namespace {

thread_local std::string last_error;

gotz_status code_of(gotz::ErrorCode c) {
  switch (c) {
    case gotz::ErrorCode::InvalidArgument: return GOTZ_ERR_ARGUMENT;
    case gotz::ErrorCode::Parse: return GOTZ_ERR_PARSE;
    case gotz::ErrorCode::Invariant: return GOTZ_ERR_INVARIANT;
  }
  return GOTZ_ERR_INTERNAL;
}

template <class F>
gotz_status guarded(F&& f) {
  try {
    f();
    last_error.clear();
    return GOTZ_OK;
  } catch (const gotz::Error& e) {
    last_error = e.what();
    return code_of(e.code());
  } catch (const std::exception& e) {
    last_error = e.what();
    return GOTZ_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown failure";
    return GOTZ_ERR_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  auto* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

void need(const void* p, const char* what) {
  gotz::require(p != nullptr, std::string(what) + " must not be null");
}

gotz::Flavor flavor_of(gotz_ring r) {
  gotz::require(r == GOTZ_RING_S || r == GOTZ_RING_R, "unknown ring");
  return r == GOTZ_RING_R ? gotz::Flavor::SqfR : gotz::Flavor::PolyS;
}

std::optional<int> count_of(int n) { return n > 0 ? std::optional<int>(n) : std::nullopt; }

gotz::report::Input input(const char* text, int n) {
  need(text, "text");
  return {text, count_of(n)};
}

template <class F>
gotz_status emit(char** out, F&& make) {
  return guarded([&] {
    need(out, "output");
    *out = dup_string(make().dump(2));
  });
}

}  // namespace

extern "C" {

const char* gotz_version(void) { return "0.1.0"; }

const char* gotz_last_error(void) { return last_error.c_str(); }

void gotz_string_free(char* s) { std::free(s); }

gotz_status gotz_ideal_parse(const char* text, int n, gotz_ring ring, gotz_ideal** out) {
  return guarded([&] {
    need(text, "text");
    need(out, "output");
    *out = new gotz_ideal{gotz::parse_ideal(text, count_of(n), flavor_of(ring))};
  });
}

void gotz_ideal_free(gotz_ideal* ideal) { delete ideal; }

int gotz_ideal_num_vars(const gotz_ideal* ideal) {
  return ideal ? ideal->value.ctx().num_vars() : -1;
}

gotz_ring gotz_ideal_ring(const gotz_ideal* ideal) {
  return ideal && ideal->value.ctx().is_sqf() ? GOTZ_RING_R : GOTZ_RING_S;
}

gotz_status gotz_ideal_format(const gotz_ideal* ideal, char** out) {
  return guarded([&] {
    need(ideal, "ideal");
    need(out, "output");
    *out = dup_string(gotz::format_ideal(ideal->value));
  });
}

gotz_status gotz_ideal_equal(const gotz_ideal* a, const gotz_ideal* b, int* out) {
  return guarded([&] {
    need(a, "ideal");
    need(b, "ideal");
    need(out, "output");
    *out = a->value == b->value;
  });
}

gotz_status gotz_ideal_is_gotzmann(const gotz_ideal* ideal, int* out) {
  return guarded([&] {
    need(ideal, "ideal");
    need(out, "output");
    *out = gotz::is_gotzmann_ideal(ideal->value);
  });
}

gotz_status gotz_ideal_is_supernova(const gotz_ideal* ideal, int* out) {
  return guarded([&] {
    need(ideal, "ideal");
    need(out, "output");
    gotz::require(ideal->value.is_squarefree(), "supernova forms need a squarefree ideal");
    *out = gotz::recognize_supernova(ideal->value).has_value();
  });
}

gotz_status gotz_ideal_lexify(const gotz_ideal* ideal, gotz_ideal** out) {
  return guarded([&] {
    need(ideal, "ideal");
    need(out, "output");
    *out = new gotz_ideal{gotz::lexify_in_R(ideal->value.in_flavor(gotz::Flavor::SqfR))};
  });
}

gotz_status gotz_ideal_dual(const gotz_ideal* ideal, gotz_ideal** out) {
  return guarded([&] {
    need(ideal, "ideal");
    need(out, "output");
    *out = new gotz_ideal{gotz::alexander_dual_ideal(ideal->value)};
  });
}

gotz_status gotz_ideal_is_gdual(const gotz_ideal* ideal, int* out) {
  return guarded([&] {
    need(ideal, "ideal");
    need(out, "output");
    *out = gotz::is_gdual_ideal(ideal->value);
  });
}

gotz_status gotz_enumerate(int n, gotz_ideal_list** out) {
  return guarded([&] {
    need(out, "output");
    auto list = std::make_unique<gotz_ideal_list>();
    for (auto& i : gotz::enumerate_gotzmann(n)) list->items.push_back({std::move(i)});
    *out = list.release();
  });
}

gotz_status gotz_ideal_list_parse(const char* text, int n, gotz_ring ring, gotz_ideal_list** out) {
  return guarded([&] {
    need(text, "text");
    need(out, "output");
    auto list = std::make_unique<gotz_ideal_list>();
    for (auto& i : gotz::parse_ideal_stanzas(text, n, flavor_of(ring)))
      list->items.push_back({std::move(i)});
    *out = list.release();
  });
}

size_t gotz_ideal_list_size(const gotz_ideal_list* list) { return list ? list->items.size() : 0; }

const gotz_ideal* gotz_ideal_list_at(const gotz_ideal_list* list, size_t i) {
  if (!list || i >= list->items.size()) return nullptr;
  return &list->items[i];
}

gotz_status gotz_ideal_list_format(const gotz_ideal_list* list, char** out) {
  return guarded([&] {
    need(list, "list");
    need(out, "output");
    std::string text;
    for (std::size_t k = 0; k < list->items.size(); ++k) {
      if (k) text += '\n';
      text += gotz::format_ideal_lines(list->items[k].value);
    }
    *out = dup_string(text);
  });
}

void gotz_ideal_list_free(gotz_ideal_list* list) { delete list; }

gotz_status gotz_report_check(const char* text, int n, gotz_ring ring, char** json) {
  return emit(json, [&] { return gotz::report::check(input(text, n), flavor_of(ring)); });
}

gotz_status gotz_report_classify(const char* text, int n, char** json) {
  return emit(json, [&] { return gotz::report::classify(input(text, n)); });
}

gotz_status gotz_report_lexify(const char* text, int n, char** json) {
  return emit(json, [&] { return gotz::report::lexify(input(text, n)); });
}

gotz_status gotz_report_dual(const char* text, int n, char** json) {
  return emit(json, [&] { return gotz::report::dual_ideal(input(text, n)); });
}

gotz_status gotz_report_dual_space(const char* text, int n, char** json) {
  return emit(json, [&] { return gotz::report::dual_space(input(text, n)); });
}

gotz_status gotz_report_decompose(const char* text, int n, const char* var, char** json) {
  return emit(json, [&] {
    return gotz::report::decompose(input(text, n),
                                   var ? std::optional<std::string>(var) : std::nullopt);
  });
}

gotz_status gotz_report_compress(const char* text, int n, const char* var, const char* order,
                                 char** json) {
  return emit(json, [&] {
    need(var, "variable");
    return gotz::report::compress(input(text, n), var,
                                  order ? std::optional<std::string>(order) : std::nullopt);
  });
}

gotz_status gotz_report_count(int max_n, char** json) {
  return emit(json, [&] { return gotz::report::count(max_n); });
}

gotz_status gotz_report_series(int order, char** json) {
  return emit(json, [&] { return gotz::report::series(order); });
}

gotz_status gotz_report_selftest(char** json) {
  return emit(json, [&] { return gotz::report::selftest(); });
}

}  // extern "C"
