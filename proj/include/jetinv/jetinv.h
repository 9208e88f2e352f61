/* C interface to the jetinv engine. */
#ifndef JETINV_JETINV_H
#define JETINV_JETINV_H

#ifdef __cplusplus
extern "C" {
#endif

#if defined(JETINV_BUILDING)
#define JETINV_API __attribute__((visibility("default")))
#else
#define JETINV_API
#endif

typedef enum jetinv_status {
  JETINV_OK = 0,
  JETINV_VIOLATION = 1,      /* computation finished, a checked expectation failed */
  JETINV_INVALID_INPUT = 2,
  JETINV_RESOURCE_LIMIT = 3,
  JETINV_INTERNAL = 4
} jetinv_status;

typedef struct jetinv_params jetinv_params;
typedef struct jetinv_result jetinv_result;

JETINV_API jetinv_params* jetinv_params_create(void);
JETINV_API void jetinv_params_destroy(jetinv_params* params);
/* Sets a named parameter ("k", "sigma", ...). Flags take "1". */
JETINV_API jetinv_status jetinv_params_set(jetinv_params* params, const char* key, const char* value);

/*
 * Runs a command such as "group-matrix", "generators" or "orbit-codim-report".
 * On OK and VIOLATION *result receives a handle owned by the caller, except
 * that VIOLATION leaves it NULL when the failure aborted the run.
 * On other codes *result is NULL and jetinv_last_error() describes the failure.
 */
JETINV_API jetinv_status jetinv_run(const char* command, const jetinv_params* params, jetinv_result** result);

/* Pointers stay valid until jetinv_result_destroy. */
JETINV_API const char* jetinv_result_json(const jetinv_result* result);
JETINV_API const char* jetinv_result_text(const jetinv_result* result);
JETINV_API void jetinv_result_destroy(jetinv_result* result);

/* Message of the most recent failure on the calling thread, "" if none. */
JETINV_API const char* jetinv_last_error(void);
JETINV_API const char* jetinv_version(void);

#ifdef __cplusplus
}
#endif

#endif
