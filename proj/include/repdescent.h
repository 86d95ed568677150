#ifndef REPDESCENT_H
#define REPDESCENT_H

#include <stddef.h>

#if defined(REPDESCENT_BUILDING)
#define RD_API __attribute__((visibility("default")))
#else
#define RD_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Return codes. Positive values mirror repdescent::ErrorCode. */
typedef enum rd_status {
  RD_OK = 0,
  RD_ERR_INVALID_ARGUMENT = 1,
  RD_ERR_ORDER_MISMATCH = 2,
  RD_ERR_DIMENSION_MISMATCH = 3,
  RD_ERR_NOT_A_GROUP = 4,
  RD_ERR_NO_VALID_LIFT = 5,
  RD_ERR_BOUND_EXCEEDED = 6,
  RD_ERR_NOT_SCALAR = 7,
  RD_ERR_NOT_NORMAL = 8,
  RD_ERR_SCHEMA = 9,
  RD_ERR_CORRUPT = 10,
  RD_ERR_IO = 11,
  RD_ERR_INTERNAL = 99
} rd_status;

/* Outcome of a check, as stored in a report. */
typedef enum rd_check { RD_CHECK_PASS = 0, RD_CHECK_FAIL = 1, RD_CHECK_VACUOUS = 2 } rd_check;

typedef struct rd_report rd_report;

RD_API const char* rd_version(void);

/* Message for the last failing call on this thread, or "" if none. */
RD_API const char* rd_last_error(void);

/* Runs one verb. options_json may be NULL or an object with any of
   "indices", "prime", "aut_bound", "ring_bound". On success *out owns a
   report that must be released with rd_report_free. */
RD_API rd_status rd_dispatch(const char* verb, const char* const* inputs, size_t n_inputs, const char* options_json,
                             rd_report** out);

/* Shape-checks one input file for verb without running it. */
RD_API rd_status rd_validate_input(const char* path, const char* verb);

RD_API rd_check rd_report_status(const rd_report* report);

/* 0 for pass and vacuous, 1 for fail. */
RD_API int rd_report_exit_code(const rd_report* report);

/* Borrowed strings, valid until rd_report_free. */
RD_API const char* rd_report_json(const rd_report* report);
RD_API const char* rd_report_summary(const rd_report* report);

/* Writes the JSON (or summary when summary != 0) via a temporary file and rename. */
RD_API rd_status rd_write_report(const rd_report* report, const char* path, int summary);

RD_API void rd_report_free(rd_report* report);

#ifdef __cplusplus
}
#endif

#endif
