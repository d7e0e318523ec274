/*
 * C interface to the darboux library.
 *
 * Objects are opaque handles created by *_parse / *_load functions and
 * released with the matching *_free function. Every fallible call returns a
 * dbx_status; on failure dbx_last_error() describes the problem (the message
 * is thread-local and valid until the next call on the same thread).
 * Reports are returned as NUL-terminated JSON strings owned by the caller
 * and released with dbx_string_free().
 */
#ifndef DARBOUX_DARBOUX_H
#define DARBOUX_DARBOUX_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(DARBOUX_BUILDING_LIBRARY)
#    define DARBOUX_API __declspec(dllexport)
#  else
#    define DARBOUX_API __declspec(dllimport)
#  endif
#else
#  define DARBOUX_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum dbx_status {
  DBX_OK = 0,
  DBX_ERR_NULL_ARGUMENT = 1,
  DBX_ERR_IO = 2,
  DBX_ERR_PARSE = 3,
  DBX_ERR_CONTEXT = 4,
  DBX_ERR_ARITHMETIC = 5,
  DBX_ERR_PRECONDITION = 6,
  DBX_ERR_INVARIANT = 7,
  DBX_ERR_INTERNAL = 8
} dbx_status;

typedef struct dbx_derivation dbx_derivation;
typedef struct dbx_automorphism dbx_automorphism;

typedef struct dbx_options {
  unsigned threads;            /* worker threads for degree levels, >= 1 */
  int oracle_check;            /* nonzero: cross-check systems with the dense oracle */
  size_t oracle_column_limit;  /* largest system (columns) sent to the oracle */
  int include_timings;         /* nonzero: add per-degree wall clock to certificates */
  const char* preferred_symmetry; /* JSON {"weights":[..],"shift":c,"modulus":m} or NULL */
} dbx_options;

DARBOUX_API const char* dbx_version(void);
DARBOUX_API const char* dbx_status_name(dbx_status status);
DARBOUX_API const char* dbx_last_error(void);

DARBOUX_API void dbx_options_init(dbx_options* options);

/* Derivation document JSON: {"vars": [...], "images": [...]} or {"vars": [...], "beta": [[...]]}. */
DARBOUX_API dbx_status dbx_derivation_parse(const char* json, dbx_derivation** out);
DARBOUX_API dbx_status dbx_derivation_load(const char* path, dbx_derivation** out);
/* d(x) = t^2, d(y) = z*t, d(z) = y^2, d(t) = x*y. */
DARBOUX_API dbx_status dbx_derivation_reference(dbx_derivation** out);
DARBOUX_API void dbx_derivation_free(dbx_derivation* d);
DARBOUX_API size_t dbx_derivation_arity(const dbx_derivation* d);
/* Canonical JSON document of the derivation. */
DARBOUX_API dbx_status dbx_derivation_to_json(const dbx_derivation* d, char** json_out);

/* Automorphism document JSON: {"scalars": ["z8^3", ...]}, one scalar per variable. */
DARBOUX_API dbx_status dbx_automorphism_parse(const char* json, size_t arity, dbx_automorphism** out);
DARBOUX_API void dbx_automorphism_free(dbx_automorphism* a);

/* w_d = det(beta - I) when it fits a long, and the normality flag. */
DARBOUX_API dbx_status dbx_wd(const dbx_derivation* d, long* wd_out, int* normal_out);

DARBOUX_API dbx_status dbx_report_wd(const dbx_derivation* d, char** json_out);
DARBOUX_API dbx_status dbx_report_symmetry(const dbx_derivation* d, long modulus, char** json_out);
DARBOUX_API dbx_status dbx_report_conjugate(const dbx_derivation* d, const dbx_automorphism* a, char** json_out);
DARBOUX_API dbx_status dbx_report_constants(const dbx_derivation* d, long max_degree, const dbx_options* options,
                                            char** json_out);
/* Bounded-degree certificate; the verdict is part of the JSON document. */
DARBOUX_API dbx_status dbx_certify(const dbx_derivation* d, long degree_bound, long modulus,
                                   const dbx_options* options, char** json_out);

DARBOUX_API void dbx_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* DARBOUX_DARBOUX_H */
