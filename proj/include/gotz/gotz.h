/* C interface to the Gotzmann ideal library. */
#ifndef GOTZ_GOTZ_H
#define GOTZ_GOTZ_H

#include <stddef.h>

#if defined(GOTZ_BUILDING_LIBRARY)
#define GOTZ_API __attribute__((visibility("default")))
#else
#define GOTZ_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gotz_status {
  GOTZ_OK = 0,
  GOTZ_ERR_ARGUMENT = 1,
  GOTZ_ERR_PARSE = 2,
  GOTZ_ERR_INVARIANT = 3,
  GOTZ_ERR_INTERNAL = 4
} gotz_status;

typedef enum gotz_ring { GOTZ_RING_S = 0, GOTZ_RING_R = 1 } gotz_ring;

typedef struct gotz_ideal gotz_ideal;
typedef struct gotz_ideal_list gotz_ideal_list;

GOTZ_API const char* gotz_version(void);

/* Message of the last failed call on this thread; "" after a success. */
GOTZ_API const char* gotz_last_error(void);

/* Strings returned through char** out-parameters are owned by the caller. */
GOTZ_API void gotz_string_free(char* s);

/* n <= 0 infers the variable count from the text. */
GOTZ_API gotz_status gotz_ideal_parse(const char* text, int n, gotz_ring ring, gotz_ideal** out);
GOTZ_API void gotz_ideal_free(gotz_ideal* ideal);
GOTZ_API int gotz_ideal_num_vars(const gotz_ideal* ideal);
GOTZ_API gotz_ring gotz_ideal_ring(const gotz_ideal* ideal);
GOTZ_API gotz_status gotz_ideal_format(const gotz_ideal* ideal, char** out);
GOTZ_API gotz_status gotz_ideal_equal(const gotz_ideal* a, const gotz_ideal* b, int* out);
GOTZ_API gotz_status gotz_ideal_is_gotzmann(const gotz_ideal* ideal, int* out);
/* Squarefree S-ideals: 1 when the ideal has a nested supernova form. */
GOTZ_API gotz_status gotz_ideal_is_supernova(const gotz_ideal* ideal, int* out);
/* R-ideals only. */
GOTZ_API gotz_status gotz_ideal_lexify(const gotz_ideal* ideal, gotz_ideal** out);
GOTZ_API gotz_status gotz_ideal_dual(const gotz_ideal* ideal, gotz_ideal** out);
GOTZ_API gotz_status gotz_ideal_is_gdual(const gotz_ideal* ideal, int* out);

/* Every Gotzmann squarefree ideal of S in n variables, n <= 6. */
GOTZ_API gotz_status gotz_enumerate(int n, gotz_ideal_list** out);
/* Blank-line separated stanzas, one ideal each, over n variables. */
GOTZ_API gotz_status gotz_ideal_list_parse(const char* text, int n, gotz_ring ring,
                                           gotz_ideal_list** out);
GOTZ_API size_t gotz_ideal_list_size(const gotz_ideal_list* list);
/* Borrowed; valid until the list is freed. */
GOTZ_API const gotz_ideal* gotz_ideal_list_at(const gotz_ideal_list* list, size_t i);
GOTZ_API gotz_status gotz_ideal_list_format(const gotz_ideal_list* list, char** out);
GOTZ_API void gotz_ideal_list_free(gotz_ideal_list* list);

/* JSON reports with keys command, ring, n, gens, result, diagnostics.
   Text arguments use the ideal syntax; n <= 0 infers the variable count. */
GOTZ_API gotz_status gotz_report_check(const char* text, int n, gotz_ring ring, char** json);
GOTZ_API gotz_status gotz_report_classify(const char* text, int n, char** json);
GOTZ_API gotz_status gotz_report_lexify(const char* text, int n, char** json);
GOTZ_API gotz_status gotz_report_dual(const char* text, int n, char** json);
GOTZ_API gotz_status gotz_report_dual_space(const char* text, int n, char** json);
/* var may be NULL to let the library pick the variable. */
GOTZ_API gotz_status gotz_report_decompose(const char* text, int n, const char* var, char** json);
/* order ranks the remaining variables, e.g. "bcde"; NULL for the identity. */
GOTZ_API gotz_status gotz_report_compress(const char* text, int n, const char* var,
                                          const char* order, char** json);
GOTZ_API gotz_status gotz_report_count(int max_n, char** json);
GOTZ_API gotz_status gotz_report_series(int order, char** json);
GOTZ_API gotz_status gotz_report_selftest(char** json);

#ifdef __cplusplus
}
#endif

#endif
