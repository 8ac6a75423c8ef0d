#include "report.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <iomanip>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>
#include <unordered_map>

#include "error.hpp"
#include "oracle.hpp"
#include "render.hpp"
#include "structure.hpp"

namespace chebgraph::report {

namespace {

using u64 = std::uint64_t;
constexpr u64 kIterationCap = 1u << 24;

std::string field_name(const ff::PrimePower& q) {
  std::string s = "F_" + std::to_string(q.q);
  if (q.k > 1) s += " (" + std::to_string(q.p) + "^" + std::to_string(q.k) + ")";
  return s;
}

void append_diff(std::ostringstream& out, const std::vector<std::string>& theorem,
                 const std::vector<std::string>& oracle) {
  const std::set<std::string> a(theorem.begin(), theorem.end());
  const std::set<std::string> b(oracle.begin(), oracle.end());
  out << "--- theorem\n+++ oracle\n";
  for (const auto& line : theorem) out << (b.count(line) ? "  " : "- ") << line << "\n";
  for (const auto& line : oracle)
    if (!a.count(line)) out << "+ " << line << "\n";
}

bool compare_params(std::ostringstream& out, const structure::ParamReport& theorem,
                    const structure::ParamReport& oracle) {
  bool ok = true;
  auto row = [&](const char* name, const BigInt& t, const BigInt& o) {
    const bool same = t == o;
    ok = ok && same;
    out << "  " << std::left << std::setw(6) << name << std::setw(14) << t.str() << std::setw(14) << o.str()
        << (same ? "ok" : "MISMATCH") << "\n";
  };
  out << "  param structural    oracle\n";
  row("N", theorem.N, oracle.N);
  row("T0", theorem.T0, oracle.T0);
  row("C_hat", theorem.C_hat, oracle.C_hat);
  row("T_hat", theorem.T_hat, oracle.T_hat);
  return ok;
}

std::string residue_text(const BigInt& r, const BigInt& m) {
  if (m == 1) return "0";
  if (r == 1) return "1";
  if (r == m - 1) return "-1";
  return r.str();
}

}  // namespace

VerifyOutcome verify_chebyshev(const BigInt& n, const ff::PrimePower& q, bool deep) {
  std::ostringstream out;
  const auto theorem = structure::chebyshev_graph_spec(n, q);
  const auto field = ff::Field::make(q.p, q.k);
  const auto raw = oracle::cheb_raw_graph(n, field);
  const auto brute = oracle::canonical_spec(raw, n, structure::Domain::Chebyshev, q.q);

  out << "verify T_" << n.str() << " on " << field_name(q) << "\n";
  bool ok = theorem == brute;
  if (ok) {
    out << "structure: theorem and oracle agree (" << theorem.classes.size() << " cycle classes, "
        << theorem.total_nodes().str() << " nodes)\n";
  } else {
    out << "structure: MISMATCH\n";
    append_diff(out, render::spec_lines(theorem), render::spec_lines(brute));
  }
  out << "parameters:\n";
  ok = compare_params(out, structure::params_from_spec(theorem), oracle::brute_params(raw)) && ok;

  if (deep) {
    try {
      const auto cov = oracle::covering_checks(n, q);
      out << "covering: eta-transport " << cov.transport_checked << ", inversion " << cov.inversion_checked
          << ", negation " << cov.negation_checked << ", fibers " << cov.fibers_checked << " checked; "
          << (cov.ok() ? "all hold" : std::to_string(cov.violations.size()) + " violations") << "\n";
      for (const auto& v : cov.violations) out << "  " << v << "\n";
      ok = ok && cov.ok();
    } catch (const Error& e) {
      if (e.code() != ErrorCode::OutOfBudget) throw;
      out << "covering: skipped (" << e.what() << ")\n";
    }
  }
  out << (ok ? "PASS" : "FAIL") << "\n";
  return {ok, out.str()};
}

VerifyOutcome verify_mult(const BigInt& n, std::uint64_t m) {
  std::ostringstream out;
  const auto theorem = structure::mult_map_spec(n, m);
  const auto raw = oracle::mult_raw_graph(n, m);
  const auto brute = oracle::canonical_spec(raw, n, structure::Domain::Multiplication, m);
  out << "verify x -> " << n.str() << "x on Z_" << m << "\n";
  bool ok = theorem == brute;
  if (ok) {
    out << "structure: theorem and oracle agree (" << theorem.classes.size() << " cycle classes, " << m
        << " nodes)\n";
  } else {
    out << "structure: MISMATCH\n";
    append_diff(out, render::spec_lines(theorem), render::spec_lines(brute));
  }
  out << "parameters:\n";
  ok = compare_params(out, structure::params_from_spec(theorem), oracle::brute_params(raw)) && ok;
  out << (ok ? "PASS" : "FAIL") << "\n";
  return {ok, out.str()};
}

SweepSummary sweep(const SweepOptions& options) {
  if (options.jobs < 1) fail(ErrorCode::InvalidArgument, "jobs must be at least 1");
  if (options.n_max < 1) fail(ErrorCode::InvalidArgument, "n-max must be at least 1");
  if (options.q_max > oracle::kOracleBudget) fail(ErrorCode::OutOfBudget, "q-max exceeds the oracle budget");
  const auto start = std::chrono::steady_clock::now();

  std::vector<ff::PrimePower> powers;
  std::vector<ff::Field> fields;
  for (u64 q = 2; q <= options.q_max; ++q) {
    if (auto pp = ff::try_prime_power(q)) {
      powers.push_back(*pp);
      fields.push_back(ff::Field::make(pp->p, pp->k));
    }
  }

  SweepSummary summary;
  summary.options = options;
  summary.fields = powers.size();
  summary.cells.resize(powers.size() * options.n_max);

  std::atomic<u64> next{0};
  auto worker = [&] {
    for (u64 i = next++; i < summary.cells.size(); i = next++) {
      const auto& pp = powers[i / options.n_max];
      const auto& field = fields[i / options.n_max];
      SweepCell& cell = summary.cells[i];
      cell.q = pp.q;
      cell.n = i % options.n_max + 1;
      const BigInt n = cell.n;
      try {
        const auto theorem = structure::chebyshev_graph_spec(n, pp);
        const auto raw = oracle::cheb_raw_graph(n, field);
        const auto brute = oracle::canonical_spec(raw, n, structure::Domain::Chebyshev, pp.q);
        cell.structural_ok = theorem == brute;
        cell.params_ok = structure::params_from_spec(theorem) == oracle::brute_params(raw);

        const auto cf = structure::params_closed_form(n, pp);
        cell.closed_form_ok = cf.N_agrees && cf.T0_agrees && cf.C_agrees;
        cell.printed_T_agrees = cf.T_agrees;
        cell.printed_T = to_string(cf.T_printed);
        cell.structural_T = to_string(cf.structural.T);

        const bool all_leaves = std::all_of(brute.classes.begin(), brute.classes.end(),
                                            [](const auto& c) { return c.tree.is_leaf(); });
        cell.permutation_ok = structure::is_permutation(n, pp) == all_leaves;

        if (pp.q <= options.involution_q_max) {
          cell.involution_checked = true;
          bool twice_identity = true;
          for (u64 v = 0; v < raw.size(); ++v) twice_identity = twice_identity && raw.succ[raw.succ[v]] == v;
          cell.involution_ok = structure::is_involution(n, pp) == twice_identity;
        }
        cell.roundtrip_ok = render::spec_from_json(render::spec_json(theorem)) == theorem;
      } catch (const std::exception& e) {
        cell.error = e.what();
      }
    }
  };
  const unsigned threads = static_cast<unsigned>(std::min<u64>(options.jobs, std::max<u64>(1, summary.cells.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  for (const auto& c : summary.cells) {
    if (!c.error.empty()) {
      ++summary.errors;
      continue;
    }
    summary.structural_failures += !c.structural_ok;
    summary.param_failures += !c.params_ok;
    summary.closed_form_failures += !c.closed_form_ok;
    summary.printed_T_discrepancies += !c.printed_T_agrees;
    summary.permutation_failures += !c.permutation_ok;
    summary.involution_checked += c.involution_checked;
    summary.involution_failures += c.involution_checked && !c.involution_ok;
    summary.roundtrip_failures += !c.roundtrip_ok;
  }
  summary.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return summary;
}

std::string format_sweep(const SweepSummary& s, bool closed_form_report) {
  std::ostringstream out;
  out << "sweep: n in [1, " << s.options.n_max << "], prime powers q <= " << s.options.q_max << " (" << s.fields
      << " fields), " << s.cells.size() << " cells, jobs=" << s.options.jobs << "\n";
  out << s.structural_failures << " structural failures\n";
  out << s.param_failures << " parameter failures (N, T0, C_hat, T_hat vs oracle)\n";
  out << s.closed_form_failures << " closed-form N/T0/C disagreements\n";
  out << s.printed_T_discrepancies << " cells where the printed T formula differs from the structural T\n";
  out << s.permutation_failures << " permutation-criterion failures\n";
  out << s.involution_failures << " involution-criterion failures (" << s.involution_checked
      << " cells with q <= " << s.options.involution_q_max << ")\n";
  out << s.roundtrip_failures << " JSON round-trip failures\n";
  out << s.errors << " errors\n";
  for (const auto& c : s.cells) {
    if (!c.error.empty()) {
      out << "  error n=" << c.n << " q=" << c.q << ": " << c.error << "\n";
    } else if (!c.structural_ok || !c.params_ok || !c.closed_form_ok || !c.permutation_ok ||
               (c.involution_checked && !c.involution_ok) || !c.roundtrip_ok) {
      out << "  failure n=" << c.n << " q=" << c.q << ":" << (c.structural_ok ? "" : " structure")
          << (c.params_ok ? "" : " params") << (c.closed_form_ok ? "" : " closed-form")
          << (c.permutation_ok ? "" : " permutation")
          << (c.involution_checked && !c.involution_ok ? " involution" : "") << (c.roundtrip_ok ? "" : " json")
          << "\n";
    }
  }
  if (closed_form_report) {
    out << "printed-T census (n, q, printed T, structural T):\n";
    for (const auto& c : s.cells)
      if (c.error.empty() && !c.printed_T_agrees)
        out << "  n=" << c.n << " q=" << c.q << " printed=" << c.printed_T << " structural=" << c.structural_T << "\n";
  }
  out << std::fixed << std::setprecision(2) << "elapsed " << s.seconds << " s\n";
  out << (s.ok() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

std::string params_report(const BigInt& n, const ff::PrimePower& q) {
  const auto cf = structure::params_closed_form(n, q);
  const auto& st = cf.structural;
  std::ostringstream out;
  out << "N=" << st.N.str() << " T0=" << st.T0.str() << " C=" << to_string(st.C) << " T=" << to_string(st.T)
      << " R=" << to_string(st.R) << " (structural)\n";

  std::optional<structure::ParamReport> brute;
  try {
    brute = oracle::brute_params(n, q);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::OutOfBudget) throw;
  }
  auto agree = [](bool b) { return b ? "agrees" : "DIFFERS"; };
  out << "T_" << n.str() << " on " << field_name(q) << ", |X| = " << q.q << "\n";
  out << std::left << std::setw(7) << "param" << std::setw(28) << "structural" << std::setw(40) << "closed form"
      << "oracle\n";
  auto row = [&](const std::string& name, const std::string& s, const std::string& c, const std::string& o) {
    out << std::setw(7) << name << std::setw(28) << s << std::setw(40) << c << o << "\n";
  };
  auto big = [&](const BigInt structure::ParamReport::*field) { return brute ? ((*brute).*field).str() : "-"; };
  auto rat = [&](const Rational structure::ParamReport::*field) {
    return brute ? render::rational((*brute).*field) : "-";
  };
  row("N", st.N.str(), to_string(cf.N) + " (" + agree(cf.N_agrees) + ")", big(&structure::ParamReport::N));
  row("T0", st.T0.str(), to_string(cf.T0) + " (" + agree(cf.T0_agrees) + ")", big(&structure::ParamReport::T0));
  row("C", render::rational(st.C), to_string(cf.C) + " (" + agree(cf.C_agrees) + ")",
      rat(&structure::ParamReport::C));
  row("T", render::rational(st.T),
      to_string(cf.T_printed) + " (printed formula; " + (cf.T_agrees ? "agrees" : "differs") + ")",
      rat(&structure::ParamReport::T));
  row("R", render::rational(st.R), "-", rat(&structure::ParamReport::R));
  row("C_hat", st.C_hat.str(), "-", big(&structure::ParamReport::C_hat));
  row("T_hat", st.T_hat.str(), "-", big(&structure::ParamReport::T_hat));
  if (!brute) out << "(oracle column skipped: q exceeds the brute-force budget)\n";
  return out.str();
}

OrbitCheck orbit_check(const BigInt& n, const ff::PrimePower& q, std::uint64_t a) {
  if (a >= q.q) fail(ErrorCode::InvalidArgument, "element code " + std::to_string(a) + " is not below q");
  const auto ext = ff::QuadraticExtension::make(q);
  const auto& field = ext.base();
  const auto orbit = structure::per_pper(n, ext, field.decode(a));
  OrbitCheck check;
  check.formula_period = orbit.period;
  check.formula_preperiod = orbit.preperiod;

  std::unordered_map<u64, u64> seen;
  ff::FieldElement x = field.decode(a);
  for (u64 step = 0; step <= kIterationCap; ++step) {
    const u64 code = field.encode(x);
    auto [it, inserted] = seen.emplace(code, step);
    if (!inserted) {
      check.iterated = true;
      check.iterated_preperiod = it->second;
      check.iterated_period = step - it->second;
      break;
    }
    x = ff::cheb_eval(field, n, x);
  }
  return check;
}

std::string orbit_report(const BigInt& n, const ff::PrimePower& q, std::uint64_t a) {
  const auto ext = ff::QuadraticExtension::make(q);
  const auto orbit = structure::per_pper(n, ext, ext.base().decode(a));
  const auto check = orbit_check(n, q, a);
  std::ostringstream out;
  out << "orbit of a=" << a << " under T_" << n.str() << " on " << field_name(q) << "\n";
  out << "eta-preimage order " << orbit.alpha_order.str() << " = " << orbit.u.str() << " * " << orbit.d.str()
      << " (n-decomposition)\n";
  out << "formula:   per=" << check.formula_period.str() << " pper=" << check.formula_preperiod << "\n";
  if (check.iterated) {
    out << "iteration: per=" << check.iterated_period << " pper=" << check.iterated_preperiod << "\n";
    out << (check.agree() ? "agree" : "DISAGREE") << "\n";
  } else {
    out << "iteration: skipped (orbit longer than " << kIterationCap << " steps)\n";
  }
  return out.str();
}

std::string predicates_report(const BigInt& n, const ff::PrimePower& q) {
  const auto p = structure::predicates(n, q);
  const BigInt qq = q.q;
  std::ostringstream out;
  out << "T_" << n.str() << " on " << field_name(q) << "\n";
  out << "permutation: " << (p.permutation ? "true" : "false") << " (gcd(q^2 - 1, n) = gcd(" << BigInt(qq * qq - 1).str()
      << ", " << n.str() << ") = " << p.gcd_q2m1_n.str() << ")\n";
  out << "involution: " << (p.involution ? "true" : "false") << " (";
  out << "q - 1 = " << p.nu0.str() << " * " << p.omega0.str() << ", q + 1 = " << p.nu1.str() << " * "
      << p.omega1.str() << "; ";
  out << n.str() << "^2 = " << residue_text(p.n2_mod_omega0, p.omega0) << " mod " << p.omega0.str() << ", "
      << n.str() << "^2 = " << residue_text(p.n2_mod_omega1, p.omega1) << " mod " << p.omega1.str() << ")\n";
  if (p.nu0 != 1 || p.nu1 != 1) out << "  not an involution: n shares a factor with q^2 - 1\n";
  return out.str();
}

}  // namespace chebgraph::report
