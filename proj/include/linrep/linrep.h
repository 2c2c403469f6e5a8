/* linrep - exact linear representations of HNN-extensions and Artin groups
 *
 * C interface. Objects are opaque handles; every call returns an lr_status
 * and, on failure, leaves a message retrievable with lr_last_error() on the
 * calling thread. Strings returned through char** are owned by the caller
 * and released with lr_string_free().
 */

#ifndef LINREP_LINREP_H_
#define LINREP_LINREP_H_

#include <stddef.h>

#if defined(__GNUC__)
#define LR_API __attribute__((visibility("default")))
#else
#define LR_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum lr_status {
  LR_OK                  = 0,
  LR_VERIFICATION_FAILED = 1, /* a construction or check did not hold */
  LR_PARSE_ERROR         = 2, /* malformed word, JSON or generator file */
  LR_INVALID_ARGUMENT    = 3,
  LR_INTERNAL_ERROR      = 4
} lr_status;

typedef struct lr_rep lr_rep;

typedef struct lr_artin_params {
  long          m;
  int           symbolic; /* nonzero: entries in Z[lambda, mu, s^+-1] */
  long          lambda;
  long          mu;
  unsigned long s;       /* prime for Q_p; shear parameter when integer */
  int           integer; /* nonzero: the SL representation over Z */
} lr_artin_params;

LR_API const char* lr_last_error(void);
LR_API void        lr_string_free(char* s);

/* Representations of A(m) on the canonical generators x, y. */
LR_API lr_status lr_artin_build(const lr_artin_params* params, lr_rep** out);
LR_API lr_status lr_rep_from_json(const char* json, lr_rep** out);
LR_API lr_status lr_rep_to_json(const lr_rep* rep, char** out);
LR_API lr_status lr_rep_degree(const lr_rep* rep, size_t* out);
/* Image of a word over the generator names, as a matrix document. */
LR_API lr_status lr_rep_eval(const lr_rep* rep, const char* word, char** out);
LR_API void      lr_rep_free(lr_rep* rep);

/* Runs relations, golden, center or faithfulness. passed is set to 0 or 1;
 * text and json receive the human and machine reports (either may be NULL).
 */
LR_API lr_status lr_check_suite(const char*            suite,
                                const lr_artin_params* params,
                                size_t                 max_len,
                                unsigned               workers,
                                int*                   passed,
                                char**                 text,
                                char**                 json);

/* Words over x0.., t, with the aliases x and y for the canonical
 * generators of A(m). */
LR_API lr_status lr_word_normal_form(long m, const char* word, char** out);
LR_API lr_status lr_word_equal(long m, const char* word, const char* word2, int* equal);

/* Builds the representation of Phi x| G from generator documents.
 * phi_json NULL and tau NULL: trivial Phi. tau "inner" with phi_json NULL:
 * Phi = Int(G). tau "inner" with phi_json: tau sends the i-th Phi generator
 * to the i-th G generator. Verifies the result to word length max_len.
 */
LR_API lr_status lr_splittable_run(const char* g_json,
                                   const char* phi_json,
                                   const char* tau,
                                   size_t      sample_len,
                                   size_t      max_len,
                                   int*        passed,
                                   char**      rep_json,
                                   char**      text,
                                   char**      report_json);

#ifdef __cplusplus
}
#endif

#endif /* LINREP_LINREP_H_ */
