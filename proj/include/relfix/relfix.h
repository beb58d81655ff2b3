/*
 * relfix C API.
 *
 * Problems and reports are opaque handles owned by the caller and released
 * with the matching *_free function. Every fallible call returns a
 * relfix_status; on failure relfix_last_error() describes the cause (the
 * message is thread-local and valid until the next call on that thread).
 */
#ifndef RELFIX_RELFIX_H
#define RELFIX_RELFIX_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define RELFIX_API __declspec(dllexport)
#else
#define RELFIX_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct relfix_problem relfix_problem;
typedef struct relfix_report relfix_report;

/* The first three values double as process exit statuses. */
typedef enum relfix_status {
  RELFIX_OK = 0,
  RELFIX_VERDICT_FAILED = 1,
  RELFIX_INPUT_ERROR = 2,
  RELFIX_INVALID_ARGUMENT = 3,
  RELFIX_IO_ERROR = 4,
  RELFIX_INTERNAL_ERROR = 5
} relfix_status;

typedef struct relfix_run_options {
  int has_tol;
  double tol;
  const char* start; /* point reference ("3" by coordinate, "@2" by id); NULL for the default */
  int has_max_iter;
  uint64_t max_iter;
  int has_s;
  double s;
} relfix_run_options;

RELFIX_API const char* relfix_version(void);
RELFIX_API const char* relfix_last_error(void);
/* Line of the last problem-file error, 0 when not tied to a line. */
RELFIX_API int relfix_last_error_line(void);

RELFIX_API void relfix_run_options_init(relfix_run_options* options);

RELFIX_API relfix_status relfix_problem_parse(const char* text, size_t length, relfix_problem** out);
RELFIX_API relfix_status relfix_problem_load(const char* path, relfix_problem** out);
RELFIX_API void relfix_problem_free(relfix_problem* problem);

RELFIX_API size_t relfix_problem_point_count(const relfix_problem* problem);
RELFIX_API relfix_status relfix_problem_coordinate(const relfix_problem* problem, size_t id, double* out);
RELFIX_API relfix_status relfix_problem_distance(const relfix_problem* problem, size_t a, size_t b, double* out);

/* Canonical problem-file text; release with relfix_string_free. */
RELFIX_API relfix_status relfix_problem_serialize(const relfix_problem* problem, char** out);
RELFIX_API void relfix_string_free(char* text);

/*
 * Runs "axioms", "verify", "solve", "certify" or "report". Returns RELFIX_OK
 * when every requested verdict passes and RELFIX_VERDICT_FAILED otherwise; in
 * both cases *out holds the report. Bad commands or overrides return
 * RELFIX_INPUT_ERROR and leave *out NULL.
 */
RELFIX_API relfix_status relfix_run(const relfix_problem* problem, const char* command,
                                    const relfix_run_options* options, relfix_report** out);

RELFIX_API const char* relfix_report_json(const relfix_report* report);
RELFIX_API const char* relfix_report_text(const relfix_report* report);
RELFIX_API int relfix_report_passed(const relfix_report* report);
RELFIX_API int relfix_report_exit_status(const relfix_report* report);
RELFIX_API void relfix_report_free(relfix_report* report);

/* s_arg - s_coeff * t; see the b-simulation bound in the documentation. */
RELFIX_API relfix_status relfix_b_simulation_bound(double t, double s_arg, double s_coeff, double* out);

#ifdef __cplusplus
}
#endif

#endif /* RELFIX_RELFIX_H */
