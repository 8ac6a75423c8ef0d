// chebgraph: command-line front end over the C API.
//
// Exit codes: 0 success, 1 verification mismatch (or an internal
// inconsistency), 2 usage or input error.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "chebgraph.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

struct Failure {
  int code;
};

int exit_code_for(cg_status s) {
  switch (s) {
    case CG_OK: return kExitOk;
    case CG_ERR_INTERNAL:
    case CG_ERR_NON_UNIFORM_COMPONENT:
    case CG_ERR_UNKNOWN: return kExitMismatch;
    default: return kExitUsage;
  }
}

void check(cg_status s) {
  if (s == CG_OK) return;
  std::cerr << "error: " << cg_last_error() << " (" << cg_status_name(s) << ")\n";
  throw Failure{exit_code_for(s)};
}

// Owns a string handed out by the library.
struct OwnedString {
  char* ptr = nullptr;
  ~OwnedString() { cg_string_free(ptr); }
  std::string str() const { return ptr ? ptr : ""; }
};

struct OwnedGraph {
  cg_graph* ptr = nullptr;
  ~OwnedGraph() { cg_graph_free(ptr); }
};

struct Options {
  std::uint64_t n = 0;
  std::string q;
  std::optional<std::uint64_t> m;
  std::uint64_t a = 0;
  std::string format = "text";
  std::uint64_t n_max = 60;
  std::uint64_t q_max = 343;
  unsigned jobs = 1;
  bool deep = false;
  bool closed_form_report = false;
  std::string out;
};

std::uint64_t parse_q(const std::string& text) {
  std::uint64_t p = 0, q = 0;
  std::uint32_t k = 0;
  check(cg_parse_prime_power(text.c_str(), &p, &k, &q));
  return q;
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream file(o.out, std::ios::binary);
  if (!file) {
    std::cerr << "error: cannot open " << o.out << " for writing\n";
    throw Failure{kExitUsage};
  }
  file << text;
}

void require_q_or_m(const Options& o) {
  if (o.q.empty() == !o.m.has_value()) {
    std::cerr << "error: give exactly one of --q or --m\n";
    throw Failure{kExitUsage};
  }
}

int cmd_spec(const Options& o) {
  require_q_or_m(o);
  OwnedString text;
  if (o.format == "dot") {
    if (o.m) {
      check(cg_mult_dot(o.n, *o.m, &text.ptr));
    } else {
      check(cg_chebyshev_dot(o.n, parse_q(o.q), &text.ptr));
    }
  } else {
    OwnedGraph g;
    if (o.m) {
      check(cg_mult_spec(o.n, *o.m, &g.ptr));
    } else {
      check(cg_chebyshev_spec(o.n, parse_q(o.q), &g.ptr));
    }
    check(cg_graph_render(g.ptr, o.format == "json" ? CG_FORMAT_JSON : CG_FORMAT_TEXT, &text.ptr));
  }
  emit(o, text.str());
  return kExitOk;
}

int cmd_verify(const Options& o) {
  require_q_or_m(o);
  OwnedString text;
  int ok = 0;
  if (o.m) {
    check(cg_verify_mult(o.n, *o.m, &ok, &text.ptr));
  } else {
    check(cg_verify(o.n, parse_q(o.q), o.deep ? 1 : 0, &ok, &text.ptr));
  }
  emit(o, text.str());
  return ok ? kExitOk : kExitMismatch;
}

int cmd_sweep(const Options& o) {
  OwnedString text;
  int ok = 0;
  check(cg_sweep(o.n_max, o.q_max, o.jobs, o.closed_form_report ? 1 : 0, &ok, &text.ptr));
  emit(o, text.str());
  return ok ? kExitOk : kExitMismatch;
}

int cmd_params(const Options& o) {
  OwnedString text;
  check(cg_params_report(o.n, parse_q(o.q), &text.ptr));
  emit(o, text.str());
  return kExitOk;
}

int cmd_coeffs(const Options& o) {
  OwnedString text;
  check(cg_cheb_coeffs(o.n, &text.ptr, nullptr));
  emit(o, "T_" + std::to_string(o.n) + "(x) = " + text.str() + "\n");
  return kExitOk;
}

int cmd_orbit(const Options& o) {
  const std::uint64_t q = parse_q(o.q);
  OwnedString text;
  check(cg_orbit_report(o.n, q, o.a, &text.ptr));
  cg_orbit values{};
  check(cg_orbit_values(o.n, q, o.a, &values));
  emit(o, text.str());
  const bool agree = !values.iterated || (values.formula_period == values.iterated_period &&
                                          values.formula_preperiod == values.iterated_preperiod);
  return agree ? kExitOk : kExitMismatch;
}

int cmd_predicates(const Options& o) {
  OwnedString text;
  check(cg_predicates(o.n, parse_q(o.q), nullptr, nullptr, &text.ptr));
  emit(o, text.str());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Functional graphs of Chebyshev polynomials over finite fields"};
  app.require_subcommand(1);
  Options o;

  auto add_n = [&](CLI::App* cmd) {
    cmd->add_option("--n", o.n, "Chebyshev degree (or multiplier for --m)")->required()->check(CLI::PositiveNumber);
  };
  auto add_q = [&](CLI::App* cmd, bool required) {
    auto* opt = cmd->add_option("--q", o.q, "field size, e.g. 25 or 5^2");
    if (required) opt->required();
  };
  auto add_out = [&](CLI::App* cmd) { cmd->add_option("--out", o.out, "write output to this file"); };

  auto* spec = app.add_subcommand("spec", "structure-theorem graph of T_n on F_q (or n x on Z_m)");
  add_n(spec);
  add_q(spec, false);
  spec->add_option("--m", o.m, "modulus for the multiplication map on Z_m")->check(CLI::PositiveNumber);
  spec->add_option("--format", o.format, "text, json or dot")->check(CLI::IsMember({"text", "json", "dot"}));
  add_out(spec);

  auto* verify = app.add_subcommand("verify", "compare the theorem against brute-force iteration");
  add_n(verify);
  add_q(verify, false);
  verify->add_option("--m", o.m, "verify the multiplication map on Z_m instead")->check(CLI::PositiveNumber);
  verify->add_flag("--deep", o.deep, "also run the covering checks through F_{q^2}");
  add_out(verify);

  auto* sweep = app.add_subcommand("sweep", "verify every prime power q <= q-max and n <= n-max");
  sweep->add_option("--n-max", o.n_max, "largest n")->check(CLI::PositiveNumber);
  sweep->add_option("--q-max", o.q_max, "largest q")->check(CLI::PositiveNumber);
  sweep->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
  sweep->add_flag("--closed-form-report", o.closed_form_report, "list cells where the printed T formula differs");
  add_out(sweep);

  auto* params = app.add_subcommand("params", "N, T0, C, T, R: structural, closed form and oracle");
  add_n(params);
  add_q(params, true);
  add_out(params);

  auto* coeffs = app.add_subcommand("coeffs", "integer coefficients of T_n");
  add_n(coeffs);
  add_out(coeffs);

  auto* orbit = app.add_subcommand("orbit", "period and preperiod of one element");
  add_n(orbit);
  add_q(orbit, true);
  orbit->add_option("--a", o.a, "element as a base-p integer in [0, q)")->required();
  add_out(orbit);

  auto* predicates = app.add_subcommand("predicates", "permutation and involution criteria");
  add_n(predicates);
  add_q(predicates, true);
  add_out(predicates);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*spec) return cmd_spec(o);
    if (*verify) return cmd_verify(o);
    if (*sweep) return cmd_sweep(o);
    if (*params) return cmd_params(o);
    if (*coeffs) return cmd_coeffs(o);
    if (*orbit) return cmd_orbit(o);
    if (*predicates) return cmd_predicates(o);
  } catch (const Failure& f) {
    return f.code;
  }
  return kExitUsage;
}
