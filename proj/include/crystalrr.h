/* crystalrr: exact verification of colored-partition identities whose
 * difference conditions come from crystal energy matrices.
 *
 * C interface of the shared library.  All objects are opaque handles; every
 * fallible call returns a crr_status and writes its result through an out
 * parameter.  Strings returned through char** are heap-allocated and must be
 * released with crr_string_free.  Handles are not thread-safe individually,
 * but distinct handles may be used from distinct threads.
 */
#ifndef CRYSTALRR_H
#define CRYSTALRR_H

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define CRR_API __declspec(dllexport)
#else
#define CRR_API __attribute__((visibility("default")))
#endif

typedef enum crr_status {
    CRR_OK = 0,
    CRR_ERR_BAD_ARG = 1,      /* null pointer, bad order, missing capability */
    CRR_ERR_UNKNOWN_CASE = 2, /* name not in the catalog */
    CRR_ERR_PARSE = 3,        /* malformed JSON or text input */
    CRR_ERR_DIVERGENT = 4,    /* specialization with nonpositive degrees */
    CRR_ERR_INTERNAL = 5      /* inconsistent data; see crr_last_error */
} crr_status;

typedef struct crr_case crr_case;
typedef struct crr_report crr_report;

CRR_API const char* crr_version(void);

/* Message for the most recent failure on the calling thread. */
CRR_API const char* crr_last_error(void);

CRR_API void crr_string_free(char* s);

/* JSON array describing the built-in cases. */
CRR_API crr_status crr_case_list_json(char** out_json);

CRR_API crr_status crr_case_open(const char* name, crr_case** out);
/* Case from a JSON definition: {colors, matrix|crystal, specialization, ...} */
CRR_API crr_status crr_case_from_json(const char* json_text, crr_case** out);
CRR_API void crr_case_free(crr_case* c);

CRR_API const char* crr_case_name(const crr_case* c);
CRR_API int crr_case_default_order(const crr_case* c);
CRR_API int crr_case_is_assert_mode(const crr_case* c);
CRR_API int crr_case_has_crystal(const crr_case* c);

/* Compare the generating function against the case's product side through
 * order N.  with_oracle != 0 additionally cross-checks the enumerator
 * against the brute-force oracle (exponential; small orders only). */
CRR_API crr_status crr_verify(const crr_case* c, int order, int with_oracle, crr_report** out);

/* Path-space parameterization audit within a box budget; needs a crystal. */
CRR_API crr_status crr_audit(const crr_case* c, int box_budget, crr_report** out);

/* Sum-side series (and product-side expansion) as JSON, keys = doubled
 * exponents, values = decimal coefficient strings. */
CRR_API crr_status crr_sum_series_json(const crr_case* c, int order, char** out_json);
CRR_API crr_status crr_product_series_json(const crr_case* c, int order, char** out_json);

/* Sum-side series rendered as "1 + q + 2q^2 + ...". */
CRR_API crr_status crr_sum_series_text(const crr_case* c, int order, char** out_text);

/* Run every cataloged case; order_override < 0 keeps per-case defaults.
 * out_all_passed is 1 when no assert-mode case failed. */
CRR_API crr_status crr_run_all(int order_override, int with_oracle, char** out_json_array,
                               int* out_all_passed);

/* 1 when the verdict is "pass" or "reported". */
CRR_API int crr_report_passed(const crr_report* r);
CRR_API const char* crr_report_verdict(const crr_report* r);
CRR_API crr_status crr_report_json(const crr_report* r, char** out_json);
CRR_API crr_status crr_report_text(const crr_report* r, char** out_text);
CRR_API void crr_report_free(crr_report* r);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* CRYSTALRR_H */
