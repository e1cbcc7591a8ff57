/* C interface to the beadcalc engine.
 *
 * All inputs and outputs are JSON text. Functions returning a string hand it
 * over through `out`; release it with bc_string_free. On failure the status is
 * nonzero and bc_last_error returns {"error": "<Kind>", "message": "..."}.
 * A context is not meant to be shared between threads without locking. */
#ifndef BEADCALC_H
#define BEADCALC_H

#if defined(_WIN32)
#define BC_API __declspec(dllexport)
#else
#define BC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct bc_context bc_context;

typedef enum bc_status {
  BC_OK = 0,
  BC_INTERNAL = 1,
  BC_VALIDATION = 2,
  BC_CAP = 3
} bc_status;

BC_API bc_context* bc_context_new(void);
BC_API void bc_context_free(bc_context* ctx);

/* Valid until the next call on the same context. */
BC_API const char* bc_last_error(const bc_context* ctx);
BC_API void bc_string_free(char* s);

/* Enumeration / quotient degree cap (default 6). */
BC_API bc_status bc_set_max_degree(bc_context* ctx, int degree);
/* Largest hair truncation (default 7). */
BC_API bc_status bc_set_truncation_cap(bc_context* ctx, int degree);
/* Largest degree of builtin Lambda elements (default 5). */
BC_API bc_status bc_set_lambda_cap(bc_context* ctx, int degree);

/* {"encoding", "sign", "degree", "loop_degree"} */
BC_API bc_status bc_canon(bc_context* ctx, const char* diagram, char** out);
/* legs: JSON array of labels. Array of {"encoding", "diagram"}. */
BC_API bc_status bc_enumerate(bc_context* ctx, int degree, const char* legs, int connected, char** out);
/* {"degree", "legs", "connected", "dimension"[, "basis"]}; f_piece restricts
 * to connected diagrams with a trivalent vertex. */
BC_API bc_status bc_dim(bc_context* ctx, int degree, const char* legs, int connected, int f_piece,
                        int with_basis, char** out);
BC_API bc_status bc_reduce(bc_context* ctx, const char* combination, char** out);

/* {"<p>": combination} over bead degrees p. */
BC_API bc_status bc_bead_split(bc_context* ctx, const char* beaded, char** out);
/* {"truncation", "degrees": {"<d>": {"terms", "is_zero"}}} for d = 1..D. */
BC_API bc_status bc_hair(bc_context* ctx, const char* beaded, int truncation, char** out);
/* {"<d>": bool} for d = 1..D. */
BC_API bc_status bc_kernel_check(bc_context* ctx, const char* beaded, int truncation, char** out);

/* Lambda elements come back as {"degree", "antisymmetric", "element"}. */
BC_API bc_status bc_lambda_t(bc_context* ctx, char** out);
BC_API bc_status bc_lambda_x(bc_context* ctx, int n, char** out);
BC_API bc_status bc_lambda_mult(bc_context* ctx, const char* a, const char* b, char** out);
/* Combination obtained by inserting lambda at `vertex` of the diagram. */
BC_API bc_status bc_lambda_insert(bc_context* ctx, const char* lambda, const char* diagram, int vertex,
                                  char** out);
/* {"equal": bool, "degree", "legs"} */
BC_API bc_status bc_lambda_verify(bc_context* ctx, const char* lhs, const char* rhs, char** out);

#ifdef __cplusplus
}
#endif

#endif
