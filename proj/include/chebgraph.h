#ifndef CHEBGRAPH_H
#define CHEBGRAPH_H

/*
 * C interface to the chebgraph library: functional graphs of Chebyshev
 * polynomials T_n over finite fields F_q, computed from the structure
 * theorem and checked against brute-force iteration.
 *
 * Conventions
 *   - Every function returns a cg_status. On failure cg_last_error() holds a
 *     message for the calling thread until its next library call.
 *   - Strings returned through char** are owned by the caller and must be
 *     released with cg_string_free(). Graph handles with cg_graph_free().
 *   - Field elements are exchanged as base-p integers in [0, q): the
 *     coefficient vector (c_0, ..., c_{k-1}) maps to sum c_i p^i.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define CG_API __declspec(dllexport)
#else
#define CG_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cg_status {
  CG_OK = 0,
  CG_ERR_INVALID_ARGUMENT = 1,
  CG_ERR_NOT_PRIME = 2,
  CG_ERR_NOT_PRIME_POWER = 3,
  CG_ERR_DIVISION_BY_ZERO = 4,
  CG_ERR_ZERO_ELEMENT = 5,
  CG_ERR_OUTSIDE_DOMAIN = 6,
  CG_ERR_NOT_COPRIME = 7,
  CG_ERR_BAD_RADICAL = 8,
  CG_ERR_NOT_A_SUMMAND = 9,
  CG_ERR_NOT_BISECTABLE = 10,
  CG_ERR_NON_UNIFORM_COMPONENT = 11,
  CG_ERR_INTERNAL = 12,
  CG_ERR_OUT_OF_BUDGET = 13,
  CG_ERR_PARSE = 14,
  CG_ERR_UNKNOWN = 99
} cg_status;

typedef enum cg_format { CG_FORMAT_TEXT = 0, CG_FORMAT_JSON = 1 } cg_format;

/* Symbolic functional graph: a multiset of multiplicity x Cyc(length, tree). */
typedef struct cg_graph cg_graph;

typedef struct cg_params {
  /* C = c_hat / domain_size and T = t_hat / domain_size, R = C + T. */
  uint64_t domain_size;
  uint64_t n_components;
  uint64_t n_periodic;
  uint64_t c_hat;
  uint64_t t_hat;
} cg_params;

typedef struct cg_orbit {
  uint64_t formula_period;
  uint64_t formula_preperiod;
  int iterated; /* 0 when the orbit was too long to walk */
  uint64_t iterated_period;
  uint64_t iterated_preperiod;
} cg_orbit;

CG_API const char* cg_last_error(void);
CG_API const char* cg_status_name(cg_status status);
CG_API void cg_string_free(char* s);

/* Accepts "25" or "5^2". */
CG_API cg_status cg_parse_prime_power(const char* text, uint64_t* p, uint32_t* k, uint64_t* q);

/* Graph construction: from the structure theorem, or by brute force. */
CG_API cg_status cg_chebyshev_spec(uint64_t n, uint64_t q, cg_graph** out);
CG_API cg_status cg_mult_spec(uint64_t n, uint64_t m, cg_graph** out);
CG_API cg_status cg_brute_chebyshev(uint64_t n, uint64_t q, cg_graph** out);
CG_API cg_status cg_brute_mult(uint64_t n, uint64_t m, cg_graph** out);
CG_API cg_status cg_brute_power_map(uint64_t n, uint64_t q, cg_graph** out);
CG_API cg_status cg_graph_from_json(const char* json, cg_graph** out);
CG_API void cg_graph_free(cg_graph* g);

/* 1 when both graphs have identical normal forms, 0 otherwise. */
CG_API int cg_graph_equal(const cg_graph* a, const cg_graph* b);
CG_API cg_status cg_graph_total_nodes(const cg_graph* g, uint64_t* out);
CG_API cg_status cg_graph_class_count(const cg_graph* g, size_t* out);
/* Class i in normal-form order; tree_key is the balanced-parenthesis key. */
CG_API cg_status cg_graph_class(const cg_graph* g, size_t i, uint64_t* multiplicity, uint64_t* cycle_length,
                                uint64_t* tree_nodes, char** tree_key);
CG_API cg_status cg_graph_render(const cg_graph* g, cg_format format, char** out);
CG_API cg_status cg_graph_params(const cg_graph* g, cg_params* out);

/* Graphviz rendering of the brute-force graph of T_n on F_q / n x on Z_m. */
CG_API cg_status cg_chebyshev_dot(uint64_t n, uint64_t q, char** out);
CG_API cg_status cg_mult_dot(uint64_t n, uint64_t m, char** out);

CG_API cg_status cg_params_brute(uint64_t n, uint64_t q, cg_params* out);
/* Structural, closed-form and oracle columns side by side. */
CG_API cg_status cg_params_report(uint64_t n, uint64_t q, char** out);

/* *ok = 1 when theorem and oracle agree. Input errors are reported via the status. */
CG_API cg_status cg_verify(uint64_t n, uint64_t q, int deep, int* ok, char** report);
CG_API cg_status cg_verify_mult(uint64_t n, uint64_t m, int* ok, char** report);
CG_API cg_status cg_sweep(uint64_t n_max, uint64_t q_max, unsigned jobs, int closed_form_report, int* ok,
                          char** report);

/* T_n as text ("x^2 - 2") and as decimal coefficients, ascending, comma separated. */
CG_API cg_status cg_cheb_coeffs(uint64_t n, char** text, char** csv);
CG_API cg_status cg_cheb_eval(uint64_t n, uint64_t q, uint64_t a, uint64_t* out);

CG_API cg_status cg_orbit_values(uint64_t n, uint64_t q, uint64_t a, cg_orbit* out);
CG_API cg_status cg_orbit_report(uint64_t n, uint64_t q, uint64_t a, char** out);

CG_API cg_status cg_predicates(uint64_t n, uint64_t q, int* permutation, int* involution, char** report);

#ifdef __cplusplus
}
#endif

#endif /* CHEBGRAPH_H */
