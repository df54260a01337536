#ifndef PAIRWALK_H
#define PAIRWALK_H

/*
 * C API of the pairwalk shared library: total-graph construction, Laplacian
 * spectra (numeric and exact), pair-state transfer certification, and pretty
 * good transfer search. Handles are opaque; every function reports a status
 * code, with pw_last_error() holding a human-readable detail for the most
 * recent failure on the calling thread. Strings returned through char**
 * out-parameters are heap-allocated JSON/CSV documents owned by the caller;
 * release them with pw_string_free().
 */

#include <stdint.h>

#if defined(_WIN32)
#define PW_API __declspec(dllexport)
#else
#define PW_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pw_status {
  PW_OK = 0,
  PW_ERR_INVALID_PARAMETER = 1,
  PW_ERR_INVALID_MATRIX = 2,
  PW_ERR_NUMERIC_FAILURE = 3,
  PW_ERR_UNSUPPORTED = 4,
  PW_ERR_CERTIFICATION_UNAVAILABLE = 5,
  PW_ERR_TOO_LARGE = 6,
  PW_ERR_INTERNAL = 7
} pw_status;

typedef struct pw_graph pw_graph;
typedef struct pw_spectrum pw_spectrum;

PW_API const char* pw_version(void);
PW_API const char* pw_status_name(pw_status status);
PW_API const char* pw_last_error(void);
PW_API void pw_string_free(char* s);

/* Builders. family: complete|cycle|circulant|cocktail|hypercube|petersen|total;
 * params: "k=v,..." (lists use ':', e.g. "n=6,s=1:3:5"); total graphs take the
 * base recipe through base_family/base_params (pass NULL otherwise). */
PW_API pw_status pw_graph_build(const char* family, const char* params,
                                const char* base_family, const char* base_params,
                                pw_graph** out);
/* "n m" header plus m lines "u v", 0-based. */
PW_API pw_status pw_graph_from_edge_list(const char* text, pw_graph** out);
PW_API void pw_graph_free(pw_graph* g);

PW_API pw_status pw_graph_vertex_count(const pw_graph* g, int32_t* out);
PW_API pw_status pw_graph_edge_count(const pw_graph* g, int32_t* out);
PW_API pw_status pw_graph_summary_json(const pw_graph* g, char** json_out);

/* Numeric spectral decomposition plus exact eigenvalue labels whenever the
 * graph supports them (integer spectrum, or total graph of an integral
 * regular base). grouping_tol <= 0 selects the default 1e-8 * max(1,|L|). */
PW_API pw_status pw_spectrum_compute(const pw_graph* g, double grouping_tol, pw_spectrum** out);
PW_API void pw_spectrum_free(pw_spectrum* s);
PW_API pw_status pw_spectrum_json(const pw_spectrum* s, char** json_out);

/* Pair-state analysis on the decomposed graph. tol <= 0 selects the default
 * support tolerance. */
PW_API pw_status pw_support_json(const pw_spectrum* s, int32_t a, int32_t b, double tol,
                                 char** json_out);
PW_API pw_status pw_cospectral_json(const pw_spectrum* s, int32_t a, int32_t b, int32_t c,
                                    int32_t d, double tol, char** json_out);
PW_API pw_status pw_amplitude_json(const pw_spectrum* s, int32_t a, int32_t b, int32_t c,
                                   int32_t d, double time, char** json_out);
PW_API pw_status pw_amplitude_sweep_csv(const pw_spectrum* s, int32_t a, int32_t b, int32_t c,
                                        int32_t d, double t0, double t1, int32_t steps,
                                        char** csv_out);

/* Exact PST certification; fails with PW_ERR_CERTIFICATION_UNAVAILABLE when
 * the spectrum carries no exact labels. */
PW_API pw_status pw_certify_pst_json(const pw_spectrum* s, int32_t a, int32_t b, int32_t c,
                                     int32_t d, double tol, char** json_out);
PW_API pw_status pw_scan_pst_json(const pw_spectrum* s, double tol, char** json_out);

/* Pretty good transfer search on T(G) driven by the base graph g; pairs are
 * base vertices. Hypothesis checks are included when the base spectrum is
 * exact. */
PW_API pw_status pw_search_pgst_json(const pw_graph* g, int32_t a, int32_t b, int32_t c,
                                     int32_t d, double epsilon, int64_t ell_max, int32_t refine,
                                     double tol, char** json_out);

/* Registered theorem-verification cases; params ("k=v,...") override the
 * registered defaults. pw_theorem_cases_json lists the registry. */
PW_API pw_status pw_theorem_cases_json(char** json_out);
PW_API pw_status pw_verify_theorem_json(const char* case_id, const char* params, char** json_out);

#ifdef __cplusplus
}
#endif

#endif /* PAIRWALK_H */
