/* C interface to the Brauer algebra block library.
 *
 * Every function returns a brauer_status. On failure the message is
 * available from brauer_last_error() until the next call on the same
 * thread. Strings returned through char** are owned by the caller and
 * released with brauer_string_free; handles with their *_free function.
 * Partitions use the text format "6,4,4,2,1", with "0" for the empty one.
 */
#ifndef BRAUER_BRAUER_H_
#define BRAUER_BRAUER_H_

#include <stddef.h>

#if defined(BRAUER_BUILDING_LIBRARY)
#define BRAUER_API __attribute__((visibility("default")))
#else
#define BRAUER_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  BRAUER_OK               = 0,
  BRAUER_INVALID_ARGUMENT = 1,
  BRAUER_SIZE_MISMATCH    = 2,
  BRAUER_DIMENSION_CAP    = 3,
  BRAUER_INTERNAL         = 4
} brauer_status;

typedef enum {
  BRAUER_FORMAT_TEXT = 0,
  BRAUER_FORMAT_JSON = 1,
  BRAUER_FORMAT_DOT  = 2
} brauer_format;

typedef struct brauer_partition   brauer_partition;
typedef struct brauer_cell_module brauer_cell_module;

BRAUER_API const char* brauer_last_error(void);
BRAUER_API void        brauer_string_free(char* s);

/* Partitions */
BRAUER_API brauer_status brauer_partition_parse(const char* text, brauer_partition** out);
BRAUER_API void          brauer_partition_free(brauer_partition* p);
BRAUER_API brauer_status brauer_partition_to_string(const brauer_partition* p, char** out);
BRAUER_API brauer_status brauer_partition_size(const brauer_partition* p, int* out);

/* Blocks */
BRAUER_API brauer_status brauer_is_balanced(const brauer_partition* lambda, const brauer_partition* mu,
                                            long delta, int* out);
BRAUER_API brauer_status brauer_is_minimal(const brauer_partition* lambda, long delta, int* out);
BRAUER_API brauer_status brauer_minimal_weight(const brauer_partition* lambda, long delta,
                                               brauer_partition** out);
/* *out is NULL when lambda is minimal in its block. */
BRAUER_API brauer_status brauer_hom_target(const brauer_partition* lambda, long delta,
                                           brauer_partition** out);
BRAUER_API brauer_status brauer_maximal_balanced_sub(const brauer_partition* lambda,
                                                     const brauer_partition* mu, long delta,
                                                     brauer_partition** out);
/* "lambda -> ... -> minimal" chain, text or JSON list of part lists. */
BRAUER_API brauer_status brauer_descent_chain(const brauer_partition* lambda, long delta,
                                              brauer_format format, char** out);
BRAUER_API brauer_status brauer_blocks(int n, long delta, brauer_format format, char** out);
BRAUER_API brauer_status brauer_hat(const brauer_partition* lambda, long delta, brauer_format format,
                                    char** out);
BRAUER_API brauer_status brauer_lattice(const brauer_partition* lambda, const brauer_partition* mu,
                                        long delta, brauer_format format, char** out);

/* Rendering. Boxes are labelled by content, or by charge for the given
 * delta when show_charge is nonzero. */
BRAUER_API brauer_status brauer_render_partition(const brauer_partition* lambda, int show_charge,
                                                 long delta, char** out);
BRAUER_API brauer_status brauer_render_skew(const brauer_partition* lambda, const brauer_partition* mu,
                                            char** out);

/* Oracle */
BRAUER_API brauer_status brauer_hom_dim(int n, long delta, const brauer_partition* lambda,
                                        const brauer_partition* mu, size_t* out);
BRAUER_API brauer_status brauer_gram_rank(int n, long delta, const brauer_partition* mu, size_t* out);
/* Central scalar as "p/q" text. */
BRAUER_API brauer_status brauer_central_scalar(int n, long delta, const brauer_partition* mu, char** out);
/* *all_pass is 1 when every check passed. */
BRAUER_API brauer_status brauer_verify_blocks(int n, long delta, brauer_format format, int* all_pass,
                                              char** out);

/* Cell modules */
BRAUER_API brauer_status brauer_cell_module_new(int n, long delta, const brauer_partition* mu,
                                                brauer_cell_module** out);
BRAUER_API void          brauer_cell_module_free(brauer_cell_module* m);
BRAUER_API brauer_status brauer_cell_module_dim(const brauer_cell_module* m, size_t* out);
BRAUER_API brauer_status brauer_cell_module_matrices_json(const brauer_cell_module* m, char** out);
BRAUER_API brauer_status brauer_cell_module_t_action_check(const brauer_cell_module* m, int* out);

#ifdef __cplusplus
}
#endif

#endif /* BRAUER_BRAUER_H_ */
