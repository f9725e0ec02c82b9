/* C interface to the sum-network library. All functions return a status;
 * on failure sumnet_last_error() describes the problem (per thread). Strings
 * handed out by the library are released with sumnet_string_free. */
#ifndef SUMNET_SUMNET_H
#define SUMNET_SUMNET_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define SUMNET_API __declspec(dllexport)
#else
#define SUMNET_API __attribute__((visibility("default")))
#endif

typedef struct sumnet_network sumnet_network;

typedef enum sumnet_status {
  SUMNET_OK = 0,
  SUMNET_ERR_PARSE = 1,
  SUMNET_ERR_VALIDATION = 2,
  SUMNET_ERR_CYCLE = 3,
  SUMNET_ERR_NOT_THREE_BY_THREE = 4,
  SUMNET_ERR_INVALID_FIELD = 5,
  SUMNET_ERR_INVALID_ALPHA = 6,
  SUMNET_ERR_FIELD_MISMATCH = 7,
  SUMNET_ERR_CODE_SHAPE = 8,
  SUMNET_ERR_CLASS_MISMATCH = 9,
  SUMNET_ERR_NO_VALID_PATHS = 10,
  SUMNET_ERR_INVALID_WITNESS = 11,
  SUMNET_ERR_SEARCH_SPACE_TOO_LARGE = 12,
  SUMNET_ERR_GENERATION_FAILED = 13,
  SUMNET_ERR_INVALID_ARGUMENT = 14,
  SUMNET_ERR_INTERNAL = 15
} sumnet_status;

typedef enum sumnet_format { SUMNET_FORMAT_TEXT = 0, SUMNET_FORMAT_STRUCTURED = 1 } sumnet_format;

typedef enum sumnet_verdict {
  SUMNET_NOT_CONNECTED = 0,
  SUMNET_NONSOLVABLE = 1,
  SUMNET_SOLVABLE_EXCEPT_F2 = 2,
  SUMNET_SOLVABLE_ALL_FIELDS = 3
} sumnet_verdict;

typedef enum sumnet_mode {
  SUMNET_MODE_XOR = 0,
  SUMNET_MODE_LINEAR = 1,
  SUMNET_MODE_THEOREM2 = 2,
  SUMNET_MODE_FRACTIONAL = 3
} sumnet_mode;

typedef enum sumnet_outcome {
  SUMNET_FOUND = 0,
  SUMNET_NONE_COMPLETE = 1,
  SUMNET_BUDGET_EXHAUSTED = 2
} sumnet_outcome;

typedef struct sumnet_construct_options {
  sumnet_mode mode;
  uint32_t field;
  uint32_t k, n;            /* fractional mode only */
  int64_t alpha;            /* theorem2 mode; used when has_alpha != 0 */
  int has_alpha;
  uint64_t max_codes;       /* 0 keeps the default */
  double time_limit_seconds; /* <= 0 keeps the default */
  uint64_t seed;
} sumnet_construct_options;

typedef struct sumnet_generator_config {
  size_t node_budget;
  size_t edge_budget;
  uint64_t seed;
  int ensure_connected;
  int has_kappa;
  size_t kappa;
  int plant_cut_pair;
} sumnet_generator_config;

/* Defaults: mode linear, field 2, (k, n) = (2, 3), library budgets. */
SUMNET_API void sumnet_construct_options_init(sumnet_construct_options* options);
SUMNET_API void sumnet_generator_config_init(sumnet_generator_config* config);

SUMNET_API const char* sumnet_last_error(void);
SUMNET_API const char* sumnet_status_name(sumnet_status status);
SUMNET_API void sumnet_string_free(char* s);

SUMNET_API sumnet_status sumnet_network_parse(const char* text, sumnet_network** out);
SUMNET_API void sumnet_network_free(sumnet_network* net);
SUMNET_API sumnet_status sumnet_network_render(const sumnet_network* net, char** out);
SUMNET_API sumnet_status sumnet_network_size(const sumnet_network* net, size_t* nodes, size_t* edges);
SUMNET_API sumnet_status sumnet_kappa(const sumnet_network* net, size_t* out);

SUMNET_API sumnet_status sumnet_analyze(const sumnet_network* net, sumnet_format format, char** report);
SUMNET_API sumnet_status sumnet_classify(const sumnet_network* net, sumnet_format format,
                                         sumnet_verdict* verdict, char** report);
/* code_text receives the code in the code-file format (NULL when none was
 * found); pass NULL to skip it. */
SUMNET_API sumnet_status sumnet_construct(const sumnet_network* net, const sumnet_construct_options* options,
                                          sumnet_format format, sumnet_outcome* outcome, char** report,
                                          char** code_text);
/* expected_field 0 accepts any field. */
SUMNET_API sumnet_status sumnet_verify(const sumnet_network* net, const char* code_text, uint32_t expected_field,
                                       sumnet_format format, int* passed, char** report);
SUMNET_API sumnet_status sumnet_oracle(const sumnet_network* net, uint32_t field, sumnet_format format,
                                       int* found, char** report);
SUMNET_API sumnet_status sumnet_generate(const sumnet_generator_config* config, sumnet_network** out);

#ifdef __cplusplus
}
#endif

#endif
