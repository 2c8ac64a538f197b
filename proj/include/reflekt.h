#ifndef REFLEKT_H
#define REFLEKT_H

/* C API for the reflekt verification core.  A job is configured with
 * string key/value options, run, and queried for its report.  All
 * functions are thread-compatible: distinct jobs may be used from
 * distinct threads concurrently.
 *
 * Option keys:
 *   suite       one of the registered suite names (see reflekt_suites)
 *   model       "a1-affine" (default) or "a1"
 *   spin        "1/2" (default), "1", "3/2"
 *   sites       chain length for the hamiltonian suite, "1".."3"
 *   seed        unsigned integer seed for specialized draws
 *   format      "text" (default) or "json"
 *   specialize  comma-separated var=value bindings, e.g. "xi=3/7,v=2"
 *
 * Errors: functions returning int yield 0 on success and a nonzero code
 * otherwise; reflekt_job_last_error returns the matching message. */

#ifdef __cplusplus
extern "C" {
#endif

typedef struct reflekt_job reflekt_job;

/* Library version string, static storage. */
const char* reflekt_version(void);

/* Newline-separated registered suite names, static storage. */
const char* reflekt_suites(void);

reflekt_job* reflekt_job_new(void);
void reflekt_job_free(reflekt_job* job);

/* Set a configuration option; unknown keys or bad values fail. */
int reflekt_job_set(reflekt_job* job, const char* key, const char* value);

/* Run the configured suite.  Returns 0 when the run completed, even if
 * checks failed; configuration and internal errors are nonzero. */
int reflekt_job_run(reflekt_job* job);

/* 1 when the last run completed with every check passing, else 0. */
int reflekt_job_passed(const reflekt_job* job);

/* Report of the last run in the configured format; caller frees with
 * reflekt_string_free.  NULL before a run or on allocation failure. */
char* reflekt_job_report(const reflekt_job* job);

/* Message for the last failed call on this job, static per-job storage;
 * empty string when no error occurred. */
const char* reflekt_job_last_error(const reflekt_job* job);

void reflekt_string_free(char* text);

#ifdef __cplusplus
}
#endif

#endif /* REFLEKT_H */
