/*
 * cbp — colored bin packing solver library.
 *
 * C API over the C++ core. All objects are opaque handles created and
 * released through these functions; every fallible call returns a
 * cbp_status, with CBP_OK meaning success. On failure a human-readable
 * message is available from cbp_last_error() until the next failing call
 * on the same thread. Strings returned through char** outputs are owned
 * by the caller and released with cbp_string_free().
 */

#ifndef CBP_H
#define CBP_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define CBP_API __declspec(dllexport)
#else
#define CBP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct cbp_instance cbp_instance;
typedef struct cbp_packing cbp_packing;

typedef enum cbp_status {
    CBP_OK = 0,
    CBP_ERR_PARSE = 1,            /* malformed instance or packing text */
    CBP_ERR_INVALID_ARGUMENT = 2, /* contract violation (bad names, odd capacity in combine, ...) */
    CBP_ERR_WRONG_MODE = 3,       /* zero-weight operation on a unit instance or vice versa */
    CBP_ERR_INFEASIBLE = 4,       /* single-sequence ordering with positive discrepancy */
    CBP_ERR_LIMIT = 5,            /* oracle item limit exceeded */
    CBP_ERR_VALIDATION = 6,       /* packing violates instance constraints */
    CBP_ERR_EMPTY = 7,            /* stats on an instance without items */
    CBP_ERR_IO = 8,               /* file could not be read */
    CBP_ERR_NOMEM = 9
} cbp_status;

CBP_API const char* cbp_status_name(cbp_status status);
CBP_API const char* cbp_last_error(void);
CBP_API const char* cbp_version(void);

/* ---- instances ------------------------------------------------------- */

CBP_API cbp_status cbp_instance_parse(const char* text, size_t len, cbp_instance** out);
CBP_API cbp_status cbp_instance_parse_file(const char* path, cbp_instance** out);
CBP_API cbp_status cbp_instance_create(uint64_t capacity, const char* const* names,
                                       const uint64_t* counts, size_t num_colors,
                                       cbp_instance** out);
CBP_API void cbp_instance_free(cbp_instance* instance);

CBP_API uint64_t cbp_instance_capacity(const cbp_instance* instance);
CBP_API size_t cbp_instance_num_colors(const cbp_instance* instance);
CBP_API uint64_t cbp_instance_total_items(const cbp_instance* instance);
/* Color ids are dense 0..k-1 in the canonical interned order
 * (descending initial count, ties by name). */
CBP_API const char* cbp_instance_color_name(const cbp_instance* instance, uint32_t color);
CBP_API uint64_t cbp_instance_color_count(const cbp_instance* instance, uint32_t color);
CBP_API cbp_status cbp_instance_to_text(const cbp_instance* instance, char** out);

typedef struct cbp_stats {
    uint32_t max_color;
    uint64_t max_count;
    uint64_t other_count;
    int64_t discrepancy;
} cbp_stats;

/* CBP_ERR_EMPTY distinguishes the empty instance; callers treat it as
 * needing 0 bins. */
CBP_API cbp_status cbp_instance_stats(const cbp_instance* instance, cbp_stats* out);

/* ---- solving --------------------------------------------------------- */

/* Dispatches on the capacity sentinel: 0 solves zero-weight, >= 1 unit. */
CBP_API cbp_status cbp_solve(const cbp_instance* instance, cbp_packing** out);
CBP_API cbp_status cbp_pack_zero(const cbp_instance* instance, cbp_packing** out);
CBP_API cbp_status cbp_pack_unit(const cbp_instance* instance, cbp_packing** out);

/* Orders all items into one adjacency-safe sequence (discrepancy <= 0
 * required). Two-call pattern: pass cap 0 to query the length. */
CBP_API cbp_status cbp_zero_sequence(const cbp_instance* instance, uint32_t* colors_out,
                                     size_t cap, size_t* len_out);

CBP_API void cbp_packing_free(cbp_packing* packing);
CBP_API size_t cbp_packing_bin_count(const cbp_packing* packing);
CBP_API size_t cbp_packing_bin_size(const cbp_packing* packing, size_t bin);
CBP_API uint32_t cbp_packing_item(const cbp_packing* packing, size_t bin, size_t pos);

/* ---- validation ------------------------------------------------------ */

typedef enum cbp_violation_kind {
    CBP_VIOLATION_ADJACENCY = 0,
    CBP_VIOLATION_CAPACITY = 1,
    CBP_VIOLATION_CONSERVATION = 2,
    CBP_VIOLATION_EMPTY_BIN = 3
} cbp_violation_kind;

typedef struct cbp_violation {
    cbp_violation_kind kind;
    uint64_t bin;
    uint64_t position;
    uint32_t color;
    uint64_t expected;
    uint64_t found;
} cbp_violation;

/* Returns CBP_OK when the packing is valid. Otherwise CBP_ERR_VALIDATION;
 * *out_count receives the number of violations and up to buf_len of them
 * are copied into buf (two-call pattern with buf NULL / buf_len 0). */
CBP_API cbp_status cbp_validate(const cbp_instance* instance, const cbp_packing* packing,
                                cbp_violation* buf, size_t buf_len, size_t* out_count);

/* ---- prediction ------------------------------------------------------ */

typedef enum cbp_case_tag {
    CBP_CASE_EMPTY = 0,
    CBP_CASE_SINGLE_BIN = 1,
    CBP_CASE_DISCREPANCY_BOUND = 2,
    CBP_CASE_UNIT_CAPACITY = 3,
    CBP_CASE_CAPACITY_BOUND = 4,
    CBP_CASE_EVEN_COMBINE = 5,
    CBP_CASE_ODD_REDUCIBLE = 6,
    CBP_CASE_ODD_DISCREPANCY_BOUND = 7
} cbp_case_tag;

typedef struct cbp_breakdown {
    int zero_mode;
    cbp_case_tag case_tag;
    int64_t discrepancy;          /* D */
    uint64_t full_bins;           /* F */
    uint64_t leftover_others;     /* R */
    uint64_t pair_capacity;       /* P */
    uint64_t singleton_bins;      /* M */
    uint64_t combined_bins;       /* C */
    uint64_t leftover_tops;       /* RO */
    uint64_t leftover_singletons; /* X */
    uint64_t total;
} cbp_breakdown;

/* Closed-form optimal bin count without packing, with the intermediate
 * quantities of the fired case (others are zero). */
CBP_API cbp_status cbp_predict(const cbp_instance* instance, cbp_breakdown* out);
CBP_API const char* cbp_case_tag_name(cbp_case_tag tag);

/* ---- exact oracle ----------------------------------------------------- */

/* Exhaustive minimum over all valid packings; refuses instances with more
 * than item_limit items (CBP_ERR_LIMIT). Pass 0 for the default limit. */
CBP_API cbp_status cbp_oracle(const cbp_instance* instance, uint32_t item_limit,
                              uint64_t* out_bins);

/* ---- serialization ---------------------------------------------------- */

typedef enum cbp_packing_format {
    CBP_FORMAT_TEXT = 0,
    CBP_FORMAT_STRUCTURED = 1
} cbp_packing_format;

CBP_API cbp_status cbp_packing_serialize(const cbp_packing* packing,
                                         const cbp_instance* instance,
                                         cbp_packing_format format, char** out);
CBP_API cbp_status cbp_packing_parse(const cbp_instance* instance, const char* text,
                                     size_t len, cbp_packing** out);
CBP_API void cbp_string_free(char* str);

/* ---- generation ------------------------------------------------------- */

typedef enum cbp_skew {
    CBP_SKEW_UNIFORM = 0,
    CBP_SKEW_MAX_HEAVY = 1, /* discrepancy forced > 0 */
    CBP_SKEW_BALANCED = 2   /* discrepancy forced <= 0 */
} cbp_skew;

typedef struct cbp_genspec {
    uint32_t colors;
    uint64_t items;
    uint64_t capacity;
    uint64_t seed;
    cbp_skew skew;
} cbp_genspec;

/* Deterministic: the same spec always yields the same instance
 * (SplitMix64 seeded with `seed`; see README for the exact procedure). */
CBP_API cbp_status cbp_generate(const cbp_genspec* spec, cbp_instance** out);
CBP_API uint32_t cbp_populated_colors(const cbp_instance* instance);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* CBP_H */
