#ifndef IAN_H
#define IAN_H

/* C interface to the IA-automorphism toolkit: words in a free group,
 * validated automorphisms, Magnus expansions, the lower-central filtration
 * of IA_n with its level images, and integer-lattice reasoning on top.
 *
 * Every function returns a status code (IAN_OK or an IAN_ERR_* value) and
 * writes results through out-pointers. On failure the thread-local message
 * from ian_last_error() describes what went wrong. Out-pointers documented
 * as optional may be NULL. Returned char* buffers are owned by the caller
 * and released with ian_string_free; handles with the matching *_free.
 */

#ifndef IAN_API
#define IAN_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

#define IAN_OK 0
#define IAN_ERR_INVALID_ARGUMENT 1
#define IAN_ERR_RANK_MISMATCH 2
#define IAN_ERR_INDEX_RANGE 3
#define IAN_ERR_NOT_INVERSE 4
#define IAN_ERR_PARSE 5
#define IAN_ERR_NON_UNIT 6
#define IAN_ERR_NOT_LIE 7
#define IAN_ERR_IDENTITY_WORD 8
#define IAN_ERR_TRUNCATION_TOO_SMALL 9
#define IAN_ERR_ZERO_ELEMENT 10
#define IAN_ERR_DEPTH_TOO_LOW 11
#define IAN_ERR_NOT_IA 12
#define IAN_ERR_TRIVIAL_SUBGROUP 13
#define IAN_ERR_ALL_INNER_UP_TO_BUDGET 14
#define IAN_ERR_DIMENSION_MISMATCH 15
#define IAN_ERR_INTERNAL 16

/* Stable kebab-case name of a status code ("ok", "parse", ...). */
IAN_API const char* ian_errc_name(int code);

/* Message for the most recent failing call on this thread; "" after a
 * success. The buffer stays valid until the next call on the thread. */
IAN_API const char* ian_last_error(void);

IAN_API void ian_string_free(char* s);

typedef struct ian_word ian_word;
typedef struct ian_aut ian_aut;
typedef struct ian_series ian_series;
typedef struct ian_mat ian_mat;
typedef struct ian_outer ian_outer;
typedef struct ian_zfun ian_zfun;

IAN_API void ian_word_free(ian_word* w);
IAN_API void ian_aut_free(ian_aut* a);
IAN_API void ian_series_free(ian_series* s);
IAN_API void ian_mat_free(ian_mat* m);
IAN_API void ian_outer_free(ian_outer* o);
IAN_API void ian_zfun_free(ian_zfun* f);

/* ---- words ----
 * Grammar: whitespace-separated `x<k>` with optional `^<int>` powers,
 * commutator sugar `[u,v]` = u^-1 v^-1 u v, `1` for the identity. */
IAN_API int ian_word_parse(int rank, const char* text, ian_word** out);
IAN_API int ian_word_identity(int rank, ian_word** out);
IAN_API int ian_word_generator(int rank, int index, int sign, ian_word** out);
IAN_API int ian_word_mul(const ian_word* a, const ian_word* b, ian_word** out);
IAN_API int ian_word_inverse(const ian_word* w, ian_word** out);
IAN_API int ian_word_pow(const ian_word* w, long e, ian_word** out);
IAN_API int ian_word_commutator(const ian_word* a, const ian_word* b, ian_word** out);
IAN_API int ian_word_rank(const ian_word* w, int* out);
IAN_API int ian_word_length(const ian_word* w, int* out);
IAN_API int ian_word_equal(const ian_word* a, const ian_word* b, int* out);
IAN_API int ian_word_str(const ian_word* w, char** out);

/* ---- automorphisms ----
 * Values are validated: construction checks that the supplied inverse
 * really is one and fails with IAN_ERR_NOT_INVERSE otherwise. */
IAN_API int ian_aut_identity(int rank, ian_aut** out);
IAN_API int ian_aut_ad(const ian_word* y, ian_aut** out); /* x -> y^-1 x y */
IAN_API int ian_aut_conj(int rank, int i, int j, ian_aut** out);      /* x_i -> x_j^-1 x_i x_j */
IAN_API int ian_aut_mul_right(int rank, int i, int j, ian_aut** out); /* x_i -> x_i x_j */
IAN_API int ian_aut_swap(int rank, int i, int j, ian_aut** out);
IAN_API int ian_aut_inv_gen(int rank, int i, ian_aut** out); /* x_i -> x_i^-1 */
IAN_API int ian_aut_mul_comm(int rank, int i, int j, int k, ian_aut** out); /* x_i -> x_i [x_j,x_k] */
/* fwd and bwd are arrays of `rank` images of x_1..x_rank. */
IAN_API int ian_aut_build(int rank, const ian_word* const* fwd, const ian_word* const* bwd,
                          ian_aut** out);
IAN_API int ian_aut_apply(const ian_aut* a, const ian_word* w, ian_word** out);
/* Applies `first`, then `second`. */
IAN_API int ian_aut_compose(const ian_aut* first, const ian_aut* second, ian_aut** out);
IAN_API int ian_aut_inverse(const ian_aut* a, ian_aut** out);
IAN_API int ian_aut_pow(const ian_aut* a, long e, ian_aut** out);
IAN_API int ian_aut_rank(const ian_aut* a, int* out);
IAN_API int ian_aut_is_identity(const ian_aut* a, int* out);
IAN_API int ian_aut_equal(const ian_aut* a, const ian_aut* b, int* out);
IAN_API int ian_aut_image(const ian_aut* a, int index, ian_word** out);
IAN_API int ian_aut_backward_image(const ian_aut* a, int index, ian_word** out);

/* ---- Magnus expansion ---- */
IAN_API int ian_magnus_expand(const ian_word* w, int truncation, ian_series** out);
IAN_API int ian_series_str(const ian_series* s, char** out);
/* {"truncation": "...", "terms": [{"coeff": "...", "monomial": ["1","2"]}]},
 * integers rendered as decimal strings. */
IAN_API int ian_series_json(const ian_series* s, char** out);
/* Lowest degree of mu(w) - 1. Writes -1 and the marker text ">= D+1" when
 * nothing is visible at the truncation. Either out may be NULL. */
IAN_API int ian_gamma_depth(const ian_word* w, int truncation, int* depth_or_minus1, char** text);

/* ---- Lyndon basis of the free Lie ring ---- */
IAN_API int ian_witt_rank(int rank, int degree, char** out_decimal);
IAN_API int ian_lyndon_basis_size(int rank, int degree, long* out);
/* Entry i (0-based, lex order): the word as "x1 x2 x2" and its canonical
 * bracketing as "[[x1,x2],x2]". Either out may be NULL. */
IAN_API int ian_lyndon_basis_entry(int rank, int degree, long i, char** word_out, char** tree_out);
/* Rank of the kernel of v -> ([x_i, v])_i on the degree-d component, over
 * the integers (modulus 0) or mod a prime. */
IAN_API int ian_center_check(int rank, int degree, int modulus, long* kernel_rank);

/* ---- integer matrices ---- */
IAN_API int ian_mat_rows(const ian_mat* m, long* out);
IAN_API int ian_mat_cols(const ian_mat* m, long* out);
IAN_API int ian_mat_entry_str(const ian_mat* m, long i, long j, char** out);
IAN_API int ian_mat_str(const ian_mat* m, char** out);
/* JSON: array of rows, entries as decimal strings. */
IAN_API int ian_mat_json(const ian_mat* m, char** out);
IAN_API int ian_mat_snf_rank(const ian_mat* m, long* out);
/* JSON array of the min(rows, cols) diagonal entries of the Smith form. */
IAN_API int ian_mat_snf_diagonal_json(const ian_mat* m, char** out);

/* ---- the filtration of IA_n ----
 * kind: 0 the map is not IA, 1 exact depth, 2 depth >= truncation. */
#define IAN_DEPTH_NOT_IA 0
#define IAN_DEPTH_EXACT 1
#define IAN_DEPTH_AT_LEAST 2
IAN_API int ian_aut_depth(const ian_aut* a, int truncation, int* kind, int* depth, char** text);
/* Level image: one row per generator, witt_rank(n, level+1) columns. */
IAN_API int ian_johnson(const ian_aut* a, int level, int truncation, ian_mat** out);
/* Column per degree-`level` basis tree t: flattened level image of
 * conjugation by the realized tree word. */
IAN_API int ian_ad_matrix(int rank, int level, int truncation, ian_mat** out);

IAN_API int ian_outer_depth(const ian_aut* a, int truncation, ian_outer** out);
IAN_API int ian_outer_is_bounded(const ian_outer* o, int* inner_up_to_budget);
/* The remaining accessors fail with IAN_ERR_INVALID_ARGUMENT when the class
 * stayed inner up to the budget. */
IAN_API int ian_outer_level(const ian_outer* o, int* out);
IAN_API int ian_outer_image(const ian_outer* o, ian_mat** out);
/* JSON array of decimal strings: the image in coordinates reduced to the
 * canonical residue modulo the conjugation lattice. */
IAN_API int ian_outer_residue_json(const ian_outer* o, char** out);
IAN_API int ian_outer_representative(const ian_outer* o, ian_aut** out);

IAN_API int ian_subgroup_depth(const ian_aut* const* gens, long count, int truncation, int outer,
                               int* at_least, int* level);

/* Surjection onto the integers defined on the subgroup the generators span;
 * outer mode quotients by inner automorphisms first. */
IAN_API int ian_map_to_z(const ian_aut* const* gens, long count, int truncation, int outer,
                         ian_zfun** out);
IAN_API int ian_zfun_level(const ian_zfun* f, int* out);
IAN_API int ian_zfun_is_outer(const ian_zfun* f, int* out);
IAN_API int ian_zfun_divisor_str(const ian_zfun* f, char** out);
IAN_API int ian_zfun_functional_json(const ian_zfun* f, char** out);
IAN_API int ian_zfun_generator_evaluations_json(const ian_zfun* f, char** out);
IAN_API int ian_zfun_evaluate(const ian_zfun* f, const ian_aut* g, char** out_decimal);

/* ---- verification suites ----
 * Seeded property checks across the whole library. Bit-reproducible for a
 * fixed seed; `cases` scales the sampled suites. Outputs are optional:
 * a text table, and JSON {"rank", "truncation", "cases", "seed",
 * "all_passed", "suites": [...]} with integers as decimal strings. */
IAN_API int ian_verify_run(int rank, int truncation, long cases, unsigned long long seed,
                           int* all_passed, char** table_text, char** json);

#ifdef __cplusplus
}
#endif

#endif /* IAN_H */
