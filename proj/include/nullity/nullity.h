/* C interface to the nullity library: exact zero-product probabilities of
 * finite group algebras.
 *
 * Objects are opaque handles released with the matching *_free function.
 * Every fallible call returns a nullity_status; on failure a one-line
 * diagnostic is available from nullity_last_error() on the calling thread.
 * Strings returned through char** out-parameters are heap allocated and must
 * be released with nullity_string_free().
 */
#ifndef NULLITY_NULLITY_H
#define NULLITY_NULLITY_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(NULLITY_BUILDING_LIBRARY)
#define NULLITY_API __declspec(dllexport)
#else
#define NULLITY_API __declspec(dllimport)
#endif
#else
#define NULLITY_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum nullity_status {
  NULLITY_OK = 0,
  NULLITY_ERR_PARSE = 1,
  NULLITY_ERR_INVALID_ARGUMENT = 2,
  NULLITY_ERR_CAP_EXCEEDED = 3,
  NULLITY_ERR_NOT_INVERTIBLE = 4,
  NULLITY_ERR_DOMAIN = 5,
  NULLITY_ERR_INTERNAL = 6,
  NULLITY_ERR_IO = 7
} nullity_status;

typedef enum nullity_side { NULLITY_SIDE_LEFT = 0, NULLITY_SIDE_RIGHT = 1, NULLITY_SIDE_TWOSIDED = 2 } nullity_side;

typedef enum nullity_relation {
  NULLITY_REL_PRODUCT_ZERO = 0,      /* ab = 0 */
  NULLITY_REL_BOTH_PRODUCTS_ZERO = 1 /* ab = 0 and ba = 0 */
} nullity_relation;

typedef enum nullity_arith_op {
  NULLITY_OP_ADD = 0,
  NULLITY_OP_SUB = 1,
  NULLITY_OP_MUL = 2,
  NULLITY_OP_NEG = 3,
  NULLITY_OP_INV = 4
} nullity_arith_op;

typedef enum nullity_command {
  NULLITY_CMD_ORACLE = 0,
  NULLITY_CMD_FORMULA = 1,
  NULLITY_CMD_COMPARE = 2,
  NULLITY_CMD_TABLE1 = 3,
  NULLITY_CMD_CATALOG = 4
} nullity_command;

typedef enum nullity_format { NULLITY_FORMAT_TEXT = 0, NULLITY_FORMAT_JSON = 1 } nullity_format;

typedef enum nullity_variant {
  NULLITY_VARIANT_BOTH = 0,
  NULLITY_VARIANT_PRINTED = 1,
  NULLITY_VARIANT_DERIVED = 2
} nullity_variant;

typedef struct nullity_limits {
  uint64_t max_elements; /* elements swept by the census */
  uint64_t max_pairs;    /* pairs visited by the naive counter */
  unsigned workers;      /* 0 = hardware concurrency */
} nullity_limits;

typedef struct nullity_ring nullity_ring;
typedef struct nullity_group nullity_group;
typedef struct nullity_histogram nullity_histogram;

NULLITY_API const char* nullity_last_error(void);
NULLITY_API const char* nullity_status_name(nullity_status status);
NULLITY_API void nullity_string_free(char* s);
NULLITY_API void nullity_limits_default(nullity_limits* out);

/* Coefficient rings: "F:p^m", "F:q", "Z:n". size_cap 0 selects the default. */
NULLITY_API nullity_status nullity_ring_parse(const char* spec, uint64_t size_cap, nullity_ring** out);
NULLITY_API void nullity_ring_free(nullity_ring* ring);
NULLITY_API uint32_t nullity_ring_size(const nullity_ring* ring);
NULLITY_API uint32_t nullity_ring_characteristic(const nullity_ring* ring);
NULLITY_API int nullity_ring_is_field(const nullity_ring* ring);
/* b is ignored by NEG and INV. */
NULLITY_API nullity_status nullity_ring_arith(const nullity_ring* ring, nullity_arith_op op, uint32_t a, uint32_t b,
                                              uint32_t* out);
/* *solvable = 1 and (x, y) the first witness of x^2 + y^2 = -1, or 0. */
NULLITY_API nullity_status nullity_ring_sum_of_squares_minus_one(const nullity_ring* ring, int* solvable, uint32_t* x,
                                                                 uint32_t* y);

/* Groups: "C:n", "AxB", "S3", "Q8", "@table.json". */
NULLITY_API nullity_status nullity_group_parse(const char* spec, nullity_group** out);
/* order*order row-major Cayley table with identity at index 0. */
NULLITY_API nullity_status nullity_group_from_table(const uint32_t* table, size_t order, nullity_group** out);
NULLITY_API void nullity_group_free(nullity_group* group);
NULLITY_API uint32_t nullity_group_order(const nullity_group* group);
NULLITY_API uint32_t nullity_group_mul(const nullity_group* group, uint32_t i, uint32_t j);
NULLITY_API int nullity_group_is_abelian(const nullity_group* group);

/* Group algebra arithmetic on coefficient vectors of length group order. */
NULLITY_API nullity_status nullity_gr_multiply(const nullity_ring* ring, const nullity_group* group, const uint32_t* a,
                                               const uint32_t* b, uint32_t* out);
/* Decimal string of |Ann_side(x)|. */
NULLITY_API nullity_status nullity_annihilator_size(const nullity_ring* ring, const nullity_group* group,
                                                    const uint32_t* x, nullity_side side, const nullity_limits* limits,
                                                    char** out);

/* Rank census; the ring must be a field. */
NULLITY_API nullity_status nullity_histogram_compute(const nullity_ring* ring, const nullity_group* group,
                                                     nullity_side side, const nullity_limits* limits,
                                                     nullity_histogram** out);
NULLITY_API void nullity_histogram_free(nullity_histogram* h);
/* n + 1 entries, k = 0..n. */
NULLITY_API size_t nullity_histogram_length(const nullity_histogram* h);
NULLITY_API uint64_t nullity_histogram_count(const nullity_histogram* h, size_t k);
NULLITY_API nullity_status nullity_histogram_probability(const nullity_histogram* h, char** out);
NULLITY_API nullity_status nullity_histogram_json(const nullity_histogram* h, char** out);

/* "num/den" of the zero-product probability (any coefficient ring). */
NULLITY_API nullity_status nullity_probability(const nullity_ring* ring, const nullity_group* group, nullity_side side,
                                               const nullity_limits* limits, char** out);
/* Decimal string of the number of pairs satisfying the relation. */
NULLITY_API nullity_status nullity_pair_count(const nullity_ring* ring, const nullity_group* group,
                                              nullity_relation relation, const nullity_limits* limits, char** out);
/* JSON array of every closed form that applies. */
NULLITY_API nullity_status nullity_formulas(const nullity_ring* ring, const nullity_group* group, nullity_side side,
                                            char** out);

typedef struct nullity_request {
  nullity_command command;
  const char* coeff;     /* may be NULL for table1/catalog */
  const char* group;     /* may be NULL for table1/catalog */
  int side;              /* nullity_side, or -1 for the command default */
  nullity_variant variant;
  nullity_format format;
  nullity_limits limits;
  const char* threshold; /* catalog: "a/b"; NULL = 1/4 */
  int timing;            /* 0 pins elapsed_ms to 0 */
} nullity_request;

NULLITY_API void nullity_request_default(nullity_request* out);
/* Runs a CLI command. *report receives stdout text; *exit_code is 0 iff no
 * unexpected mismatch. The return value reports parse/cap/domain failures. */
NULLITY_API nullity_status nullity_run(const nullity_request* request, char** report, int* exit_code);

#ifdef __cplusplus
}
#endif

#endif /* NULLITY_NULLITY_H */
