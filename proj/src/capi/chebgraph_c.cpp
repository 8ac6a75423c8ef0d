#include "chebgraph.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "error.hpp"
#include "ff.hpp"
#include "oracle.hpp"
#include "render.hpp"
#include "report.hpp"
#include "structure.hpp"

struct cg_graph {
  chebgraph::structure::GraphSpec spec;
};

namespace {

using namespace chebgraph;

thread_local std::string last_error;

constexpr std::uint64_t kMaxCoeffDegree = 20000;

cg_status status_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return CG_ERR_INVALID_ARGUMENT;
    case ErrorCode::NotPrime: return CG_ERR_NOT_PRIME;
    case ErrorCode::NotPrimePower: return CG_ERR_NOT_PRIME_POWER;
    case ErrorCode::DivisionByZero: return CG_ERR_DIVISION_BY_ZERO;
    case ErrorCode::ZeroElement: return CG_ERR_ZERO_ELEMENT;
    case ErrorCode::OutsideDomain: return CG_ERR_OUTSIDE_DOMAIN;
    case ErrorCode::NotCoprime: return CG_ERR_NOT_COPRIME;
    case ErrorCode::BadRadical: return CG_ERR_BAD_RADICAL;
    case ErrorCode::NotASummand: return CG_ERR_NOT_A_SUMMAND;
    case ErrorCode::NotBisectable: return CG_ERR_NOT_BISECTABLE;
    case ErrorCode::NonUniformComponent: return CG_ERR_NON_UNIFORM_COMPONENT;
    case ErrorCode::InternalInconsistency: return CG_ERR_INTERNAL;
    case ErrorCode::OutOfBudget: return CG_ERR_OUT_OF_BUDGET;
    case ErrorCode::ParseError: return CG_ERR_PARSE;
  }
  return CG_ERR_UNKNOWN;
}

// Runs `body`, translating exceptions into status codes.
template <typename Body>
cg_status guarded(Body&& body) {
  last_error.clear();
  try {
    body();
    return CG_OK;
  } catch (const Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return CG_ERR_OUT_OF_BUDGET;
  } catch (const std::exception& e) {
    last_error = e.what();
    return CG_ERR_UNKNOWN;
  }
}

template <typename... Ptrs>
void require_out(Ptrs... ptrs) {
  if (((ptrs == nullptr) || ...)) fail(ErrorCode::InvalidArgument, "null output pointer");
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

ff::PrimePower field_of(std::uint64_t q) { return ff::prime_power_of(q); }

BigInt positive_n(std::uint64_t n) {
  if (n < 1) fail(ErrorCode::InvalidArgument, "n must be a positive integer");
  return n;
}

cg_status make_graph(cg_graph** out, structure::GraphSpec (*build)(std::uint64_t, std::uint64_t), std::uint64_t n,
                     std::uint64_t modulus) {
  return guarded([&] {
    require_out(out);
    *out = nullptr;
    *out = new cg_graph{build(n, modulus)};
  });
}

void fill_params(const structure::ParamReport& r, cg_params* out) {
  out->domain_size = to_u64(r.domain_size);
  out->n_components = to_u64(r.N);
  out->n_periodic = to_u64(r.T0);
  out->c_hat = to_u64(r.C_hat);
  out->t_hat = to_u64(r.T_hat);
}

}  // namespace

extern "C" {

const char* cg_last_error(void) { return last_error.c_str(); }

const char* cg_status_name(cg_status status) {
  switch (status) {
    case CG_OK: return "ok";
    case CG_ERR_INVALID_ARGUMENT: return "invalid argument";
    case CG_ERR_NOT_PRIME: return "not prime";
    case CG_ERR_NOT_PRIME_POWER: return "not a prime power";
    case CG_ERR_DIVISION_BY_ZERO: return "division by zero";
    case CG_ERR_ZERO_ELEMENT: return "zero element";
    case CG_ERR_OUTSIDE_DOMAIN: return "outside domain";
    case CG_ERR_NOT_COPRIME: return "not coprime";
    case CG_ERR_BAD_RADICAL: return "bad radical";
    case CG_ERR_NOT_A_SUMMAND: return "not a summand";
    case CG_ERR_NOT_BISECTABLE: return "not bisectable";
    case CG_ERR_NON_UNIFORM_COMPONENT: return "non-uniform component";
    case CG_ERR_INTERNAL: return "internal inconsistency";
    case CG_ERR_OUT_OF_BUDGET: return "out of budget";
    case CG_ERR_PARSE: return "parse error";
    case CG_ERR_UNKNOWN: break;
  }
  return "unknown error";
}

void cg_string_free(char* s) { std::free(s); }

cg_status cg_parse_prime_power(const char* text, uint64_t* p, uint32_t* k, uint64_t* q) {
  return guarded([&] {
    require_out(p, k, q);
    if (!text) fail(ErrorCode::InvalidArgument, "null text");
    const auto pp = ff::parse_prime_power(text);
    *p = pp.p;
    *k = pp.k;
    *q = pp.q;
  });
}

cg_status cg_chebyshev_spec(uint64_t n, uint64_t q, cg_graph** out) {
  return make_graph(out, [](std::uint64_t n, std::uint64_t q) {
    return structure::chebyshev_graph_spec(positive_n(n), field_of(q));
  }, n, q);
}

cg_status cg_mult_spec(uint64_t n, uint64_t m, cg_graph** out) {
  return make_graph(out, [](std::uint64_t n, std::uint64_t m) { return structure::mult_map_spec(positive_n(n), m); },
                    n, m);
}

cg_status cg_brute_chebyshev(uint64_t n, uint64_t q, cg_graph** out) {
  return make_graph(out, [](std::uint64_t n, std::uint64_t q) { return oracle::brute_cheb(positive_n(n), field_of(q)); },
                    n, q);
}

cg_status cg_brute_mult(uint64_t n, uint64_t m, cg_graph** out) {
  return make_graph(out, [](std::uint64_t n, std::uint64_t m) { return oracle::brute_mult(positive_n(n), m); }, n, m);
}

cg_status cg_brute_power_map(uint64_t n, uint64_t q, cg_graph** out) {
  return make_graph(out, [](std::uint64_t n, std::uint64_t q) {
    return oracle::brute_power_map(positive_n(n), field_of(q));
  }, n, q);
}

cg_status cg_graph_from_json(const char* json, cg_graph** out) {
  return guarded([&] {
    require_out(out);
    *out = nullptr;
    if (!json) fail(ErrorCode::InvalidArgument, "null JSON text");
    *out = new cg_graph{render::spec_from_json(json)};
  });
}

void cg_graph_free(cg_graph* g) { delete g; }

int cg_graph_equal(const cg_graph* a, const cg_graph* b) {
  if (!a || !b) return 0;
  return a->spec == b->spec ? 1 : 0;
}

cg_status cg_graph_total_nodes(const cg_graph* g, uint64_t* out) {
  return guarded([&] {
    require_out(g, out);
    *out = to_u64(g->spec.total_nodes());
  });
}

cg_status cg_graph_class_count(const cg_graph* g, size_t* out) {
  return guarded([&] {
    require_out(g, out);
    *out = g->spec.classes.size();
  });
}

cg_status cg_graph_class(const cg_graph* g, size_t i, uint64_t* multiplicity, uint64_t* cycle_length,
                         uint64_t* tree_nodes, char** tree_key) {
  return guarded([&] {
    require_out(g);
    if (i >= g->spec.classes.size()) fail(ErrorCode::InvalidArgument, "class index out of range");
    const auto& c = g->spec.classes[i];
    if (multiplicity) *multiplicity = to_u64(c.multiplicity);
    if (cycle_length) *cycle_length = to_u64(c.cycle_len);
    if (tree_nodes) *tree_nodes = to_u64(c.tree.node_count());
    if (tree_key) *tree_key = copy_string(c.tree.canonical_key());
  });
}

cg_status cg_graph_render(const cg_graph* g, cg_format format, char** out) {
  return guarded([&] {
    require_out(g, out);
    switch (format) {
      case CG_FORMAT_TEXT: *out = copy_string(render::spec_text(g->spec)); return;
      case CG_FORMAT_JSON: *out = copy_string(render::spec_json(g->spec) + "\n"); return;
    }
    fail(ErrorCode::InvalidArgument, "unknown format");
  });
}

cg_status cg_graph_params(const cg_graph* g, cg_params* out) {
  return guarded([&] {
    require_out(g, out);
    fill_params(structure::params_from_spec(g->spec), out);
  });
}

cg_status cg_chebyshev_dot(uint64_t n, uint64_t q, char** out) {
  return guarded([&] {
    require_out(out);
    const auto pp = field_of(q);
    const auto field = ff::Field::make(pp.p, pp.k);
    const auto g = oracle::cheb_raw_graph(positive_n(n), field);
    std::vector<std::string> labels;
    labels.reserve(g.size());
    for (std::size_t v = 0; v < g.size(); ++v) labels.push_back(std::to_string(v));
    *out = copy_string(render::graph_dot(g, labels, "T_" + std::to_string(n) + " on F_" + std::to_string(q)));
  });
}

cg_status cg_mult_dot(uint64_t n, uint64_t m, char** out) {
  return guarded([&] {
    require_out(out);
    const auto g = oracle::mult_raw_graph(positive_n(n), m);
    std::vector<std::string> labels;
    for (std::size_t v = 0; v < g.size(); ++v) labels.push_back(std::to_string(v));
    *out = copy_string(render::graph_dot(g, labels, std::to_string(n) + "x on Z_" + std::to_string(m)));
  });
}

cg_status cg_params_brute(uint64_t n, uint64_t q, cg_params* out) {
  return guarded([&] {
    require_out(out);
    fill_params(oracle::brute_params(positive_n(n), field_of(q)), out);
  });
}

cg_status cg_params_report(uint64_t n, uint64_t q, char** out) {
  return guarded([&] {
    require_out(out);
    *out = copy_string(report::params_report(positive_n(n), field_of(q)));
  });
}

cg_status cg_verify(uint64_t n, uint64_t q, int deep, int* ok, char** report_out) {
  return guarded([&] {
    require_out(ok);
    const auto r = report::verify_chebyshev(positive_n(n), field_of(q), deep != 0);
    *ok = r.ok ? 1 : 0;
    if (report_out) *report_out = copy_string(r.text);
  });
}

cg_status cg_verify_mult(uint64_t n, uint64_t m, int* ok, char** report_out) {
  return guarded([&] {
    require_out(ok);
    const auto r = report::verify_mult(positive_n(n), m);
    *ok = r.ok ? 1 : 0;
    if (report_out) *report_out = copy_string(r.text);
  });
}

cg_status cg_sweep(uint64_t n_max, uint64_t q_max, unsigned jobs, int closed_form_report, int* ok,
                   char** report_out) {
  return guarded([&] {
    require_out(ok);
    report::SweepOptions options;
    options.n_max = n_max;
    options.q_max = q_max;
    options.jobs = jobs;
    const auto summary = report::sweep(options);
    *ok = summary.ok() ? 1 : 0;
    if (report_out) *report_out = copy_string(report::format_sweep(summary, closed_form_report != 0));
  });
}

cg_status cg_cheb_coeffs(uint64_t n, char** text, char** csv) {
  return guarded([&] {
    // Coefficients grow like 2^n and the recurrence is quadratic; keep it desk-sized.
    if (n > kMaxCoeffDegree)
      fail(ErrorCode::OutOfBudget, "coefficient listing is limited to n <= " + std::to_string(kMaxCoeffDegree));
    const auto coeffs = ff::cheb_coeffs(n);
    if (text) *text = copy_string(render::polynomial(coeffs));
    if (csv) {
      std::string s;
      for (std::size_t i = 0; i < coeffs.size(); ++i) s += (i ? "," : "") + coeffs[i].str();
      *csv = copy_string(s);
    }
  });
}

cg_status cg_cheb_eval(uint64_t n, uint64_t q, uint64_t a, uint64_t* out) {
  return guarded([&] {
    require_out(out);
    const auto pp = field_of(q);
    const auto field = ff::Field::make(pp.p, pp.k);
    *out = field.encode(ff::cheb_eval(field, positive_n(n), field.decode(a)));
  });
}

cg_status cg_orbit_values(uint64_t n, uint64_t q, uint64_t a, cg_orbit* out) {
  return guarded([&] {
    require_out(out);
    const auto check = report::orbit_check(positive_n(n), field_of(q), a);
    out->formula_period = to_u64(check.formula_period);
    out->formula_preperiod = check.formula_preperiod;
    out->iterated = check.iterated ? 1 : 0;
    out->iterated_period = check.iterated_period;
    out->iterated_preperiod = check.iterated_preperiod;
  });
}

cg_status cg_orbit_report(uint64_t n, uint64_t q, uint64_t a, char** out) {
  return guarded([&] {
    require_out(out);
    *out = copy_string(report::orbit_report(positive_n(n), field_of(q), a));
  });
}

cg_status cg_predicates(uint64_t n, uint64_t q, int* permutation, int* involution, char** report_out) {
  return guarded([&] {
    const auto pp = field_of(q);
    const auto p = structure::predicates(positive_n(n), pp);
    if (permutation) *permutation = p.permutation ? 1 : 0;
    if (involution) *involution = p.involution ? 1 : 0;
    if (report_out) *report_out = copy_string(report::predicates_report(n, pp));
  });
}

}  // extern "C"
