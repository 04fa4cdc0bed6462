// Verification suites behind the `verify` command. Every suite returns its
// CheckReports in a fixed order; float samples draw from sub_seed(seed, k)
// so a run is reproducible byte for byte.

#ifndef QUARKALG_VERIFY_HPP
#define QUARKALG_VERIFY_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "quarkalg/covariance.hpp"
#include "quarkalg/cyclo.hpp"
#include "quarkalg/graded_algebra.hpp"
#include "quarkalg/invariant_forms.hpp"
#include "quarkalg/matrix.hpp"
#include "quarkalg/report.hpp"
#include "quarkalg/sampling.hpp"

namespace quarkalg {

enum class Backend { automatic, exact, floating };

struct RunConfig {
  std::string suite = "all";
  Backend backend = Backend::automatic;
  std::uint64_t samples = 100;
  std::uint64_t seed = 42;
  double tolerance = 1e-9;
  std::optional<std::string> json_path;
};

/// Closure residual bound for sampled SU(3) elements.
inline constexpr double kAdjointClosureTolerance = 1e-10;

namespace suites {

inline bool use_exact(const RunConfig& c) { return c.backend != Backend::floating; }
inline bool use_float(const RunConfig& c) { return c.backend != Backend::exact; }

inline CheckReport make(std::string name, bool ok, double residual, std::uint64_t samples, std::uint64_t seed,
                        std::string details) {
  return {std::move(name), status_of(ok), residual, samples, seed, std::move(details)};
}

/// Number of distinct canonical words reached by normalising every word of
/// the given length over one family; the brute-force side of the count.
inline std::size_t brute_force_count(Family f, int n, int length) {
  std::set<GradedWord> seen;
  std::vector<int> idx(static_cast<std::size_t>(length), 1);
  while (true) {
    std::vector<Generator> s;
    for (int a : idx) s.push_back({f, a});
    if (auto nf = normal_form(GradedWord(s))) seen.insert(nf->word);
    int pos = length - 1;
    while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == n) idx[static_cast<std::size_t>(pos--)] = 1;
    if (pos < 0) break;
    ++idx[static_cast<std::size_t>(pos)];
  }
  return seen.size();
}

inline std::vector<CheckReport> dims(const RunConfig& cfg) {
  std::vector<CheckReport> out;
  const std::pair<FamilyPair, int> cases[] = {{FamilyPair::theta, 2}, {FamilyPair::q, 3}, {FamilyPair::theta, 4}};
  for (const auto& [pair, n] : cases) {
    const long formula[] = {n, n * n, (n * n * n - n) / 3};
    std::ostringstream d;
    d << "N=" << n << ":";
    double worst = 0.0;
    long total = 0;
    for (int len = 1; len <= 3; ++len) {
      const auto basis = enumerate_basis(pair, n, len);
      const auto brute = brute_force_count(unbarred(pair), n, len);
      const long got = static_cast<long>(basis.size());
      worst = std::max(worst, static_cast<double>(std::abs(got - formula[len - 1])));
      worst = std::max(worst, static_cast<double>(std::abs(got - static_cast<long>(brute))));
      d << (len == 1 ? " " : ",") << got;
      total += got;
    }
    d << " total " << total << " (N + N^2 + (N^3-N)/3 = " << formula[0] + formula[1] + formula[2] << ")";
    const std::string family = pair == FamilyPair::theta ? "theta" : "q";
    out.push_back(make("dims/" + family + "-N" + std::to_string(n), worst == 0.0, worst, 1, cfg.seed, d.str()));
  }
  // Grade-0 quark/antiquark products x^a y^b.
  for (const auto& [pair, n] : {std::pair{FamilyPair::theta, 2}, std::pair{FamilyPair::q, 3}}) {
    std::size_t mixed = 0;
    for (const auto& w : enumerate_basis(pair, n, 2, WordSector::all))
      if (w.grade() == 0) ++mixed;
    const double diff = std::abs(static_cast<double>(mixed) - n * n);
    out.push_back(make(std::string("dims/mixed-quadratic-") + (pair == FamilyPair::theta ? "theta" : "q"),
                       diff == 0.0, diff, 1, cfg.seed,
                       "grade-0 x*y words: " + std::to_string(mixed) + ", expected " + std::to_string(n * n)));
  }
  return out;
}

inline std::vector<CheckReport> quartic(const RunConfig& cfg) {
  std::vector<CheckReport> out;
  for (const auto& [f, n] : {std::pair{Family::theta, 2}, std::pair{Family::theta_bar, 2}, std::pair{Family::q, 3},
                             std::pair{Family::q_bar, 3}}) {
    std::size_t words = 0, survivors = 0;
    for (int a = 1; a <= n; ++a)
      for (int b = 1; b <= n; ++b)
        for (int c = 1; c <= n; ++c)
          for (int d = 1; d <= n; ++d) {
            ++words;
            if (normal_form(GradedWord{{f, a}, {f, b}, {f, c}, {f, d}})) ++survivors;
          }
    out.push_back(make("quartic/" + Generator{f, 1}.to_string().substr(0, Generator{f, 1}.to_string().size() - 1) +
                           "-N" + std::to_string(n),
                       survivors == 0, static_cast<double>(survivors), words, cfg.seed,
                       std::to_string(words) + " words, " + std::to_string(survivors) + " nonzero"));
  }
  return out;
}

inline std::vector<CheckReport> rho_covariance(const RunConfig& cfg) {
  std::vector<CheckReport> out;
  const auto rho = make_rho();
  if (use_exact(cfg)) {
    double worst = 0.0;
    bool det_ok = true;
    for (std::uint64_t k = 0; k < cfg.samples; ++k) {
      Rng rng(sub_seed(cfg.seed, k));
      const ExactMatrix u = random_exact_matrix(rng, 2);
      const ExactMatrix lambda = lambda_closed_form(u);
      worst = std::max(worst, rho_covariance_residual(u, lambda, rho));
      worst = std::max(worst, conjugate_covariance_residual(u));
      det_ok = det_ok && determinant(lambda) == determinant(u).pow(3);
    }
    out.push_back(make("rho-covariance/exact", worst == 0.0 && det_ok, worst, cfg.samples, cfg.seed,
                       "closed form vs 8-triple contraction (rho and rho-bar), det Lambda = det U^3 exact: " +
                           std::string(det_ok ? "yes" : "no")));
  }
  if (use_float(cfg)) {
    double worst = 0.0;
    for (std::uint64_t k = 0; k < cfg.samples; ++k) {
      Rng rng(sub_seed(cfg.seed, k));
      FloatMatrix u(2, 2);
      for (std::size_t r = 0; r < 2; ++r)
        for (std::size_t c = 0; c < 2; ++c) u(r, c) = rng.complex_symmetric();
      const FloatMatrix lambda = lambda_closed_form(u);
      worst = std::max(worst, rho_covariance_residual(u, lambda, rho));
      worst = std::max(worst, conjugate_covariance_residual(u));
      worst = std::max(worst, std::abs(determinant(lambda) - std::pow(determinant(u), 3)));
    }
    out.push_back(make("rho-covariance/float", worst <= cfg.tolerance, worst, cfg.samples, cfg.seed,
                       "closed form vs contraction and det Lambda = det U^3"));
  }
  return out;
}

inline std::vector<CheckReport> cover(const RunConfig& cfg) {
  std::vector<CheckReport> out;
  const CycloScalar j = CycloScalar::j(), j2 = CycloScalar::j2();
  if (use_exact(cfg)) {
    bool ok = true;
    for (std::uint64_t k = 0; k < cfg.samples && ok; ++k) {
      Rng rng(sub_seed(cfg.seed, k));
      const ExactMatrix l1 = random_exact_sl2(rng), l2 = random_exact_sl2(rng);
      const ExactMatrix u1 = spinor_cover(l1);
      ok = ok && determinant(u1) == j2 && determinant(u1.conjugate()) == j;
      for (int phase = 0; phase < 3; ++phase) ok = ok && lambda_from_U(spinor_cover(l1, phase)) == l1;
      ok = ok && u1 * spinor_cover(l2) == j * spinor_cover(ExactMatrix(l1 * l2));
      ok = ok && conjugate_covariance_residual(u1) == 0.0;
    }
    out.push_back(make("cover/exact", ok, ok ? 0.0 : 1.0, cfg.samples, cfg.seed,
                       "det U = j^2, det Ubar = j, Lambda(U(L)) = L on all three sheets, U(L1)U(L2) = j U(L1L2)"));
  }
  if (use_float(cfg)) {
    double det_err = 0.0, trip_err = 0.0, prod_err = 0.0;
    int phase_counts[3] = {0, 0, 0};
    const ComplexFloat phases[3] = {1.0, j.to_complex(), j2.to_complex()};
    for (std::uint64_t k = 0; k < cfg.samples; ++k) {
      Rng rng(sub_seed(cfg.seed, k));
      const FloatMatrix l1 = sample_sl2c(rng), l2 = sample_sl2c(rng);
      const FloatMatrix u1 = spinor_cover(l1), u2 = spinor_cover(l2);
      det_err = std::max(det_err, std::abs(determinant(u1) - phases[2]));
      const FloatMatrix back = lambda_closed_form(u1);
      trip_err = std::max({trip_err, max_abs_diff(back, l1), rho_covariance_residual(u1, back, make_rho())});
      const FloatMatrix u12 = spinor_cover(FloatMatrix(l1 * l2));
      std::size_t best = 0;
      double best_err = 1e300;
      for (std::size_t p = 0; p < 3; ++p) {
        const double e = max_abs_diff(FloatMatrix(u1 * u2), phases[p] * u12);
        if (e < best_err) {
          best_err = e;
          best = p;
        }
      }
      ++phase_counts[best];
      prod_err = std::max(prod_err, best_err);
    }
    const double worst = std::max({det_err, trip_err, prod_err});
    std::ostringstream d;
    d << "det U = j^2 err " << format_number(det_err) << "; round trip err " << format_number(trip_err)
      << "; product phase counts 1:" << phase_counts[0] << " j:" << phase_counts[1] << " j^2:" << phase_counts[2];
    out.push_back(make("cover/float", worst <= cfg.tolerance, worst, cfg.samples, cfg.seed, d.str()));
  }
  return out;
}

inline std::vector<CheckReport> vector_rep_suite(const RunConfig& cfg) {
  std::vector<CheckReport> out;
  const ExactMatrix g = minkowski_metric();
  if (use_exact(cfg)) {
    bool real = true, metric = true;
    std::vector<ExactMatrix> inputs;
    const CycloScalar j = CycloScalar::j();
    inputs.push_back(ExactMatrix::identity(2) * j);
    inputs.push_back(ExactMatrix::diagonal({j, CycloScalar::j2()}));
    inputs.push_back(ExactMatrix{{0, CycloScalar::i()}, {CycloScalar::i(), 0}});
    for (std::uint64_t k = 0; k < cfg.samples; ++k) {
      Rng rng(sub_seed(cfg.seed, k));
      inputs.push_back(spinor_cover(random_exact_sl2(rng)));
    }
    for (const auto& u : inputs) {
      const ExactMatrix lam = vector_rep(u);
      real = real && lam.conjugate() == lam;
      metric = metric && lam.transpose() * g * lam == g;
    }
    out.push_back(make("vector-rep/exact", real && metric, (real && metric) ? 0.0 : 1.0, inputs.size(), cfg.seed,
                       std::string("entries fixed by conjugation: ") + (real ? "yes" : "no") +
                           "; Lambda^T g Lambda = g: " + (metric ? "yes" : "no")));
  }
  if (use_float(cfg)) {
    const FloatMatrix gf = to_float(g);
    double imag = 0.0, metric = 0.0;
    for (std::uint64_t k = 0; k < cfg.samples; ++k) {
      const FloatMatrix lam = vector_rep(spinor_cover(sample_sl2c(sub_seed(cfg.seed, k))));
      for (const auto& x : lam.data()) imag = std::max(imag, std::abs(x.imag()));
      metric = std::max(metric, max_abs_diff(FloatMatrix(lam.transpose() * gf * lam), gf));
    }
    const double worst = std::max(imag, metric);
    out.push_back(make("vector-rep/float", worst <= cfg.tolerance, worst, cfg.samples, cfg.seed,
                       "max imaginary part " + format_number(imag) + "; metric residual " + format_number(metric)));
  }
  return out;
}

inline std::vector<CheckReport> metric(const RunConfig& cfg) {
  const auto rep = minkowski_metric_report();
  const ExactMatrix expected = ExactMatrix::diagonal({1, -1, -1, -1});
  const bool ok = rep.pairing == expected && rep.pairing == rep.pairing.transpose();
  std::vector<CheckReport> out;
  out.push_back(make("metric/pi-pibar", ok, max_abs_diff(rep.pairing, expected), 1, cfg.seed,
                     "g = (1/2) pi^mu_{A Bdot} pibar^{nu Bdot A} = diag(1,-1,-1,-1) exact"));
  const bool factor_ok = rep.as_printed_factor.has_value();
  out.push_back(make("metric/pi-pi-as-printed", factor_ok, 0.0, 1, cfg.seed,
                     factor_ok ? "(1/2) pi^mu_{A Bdot} pi^{nu A Bdot} = (" + rep.as_printed_factor->to_string() +
                                     ") * diag(1,-1,-1,-1); non-real factor, reported not enforced"
                               : "as-printed contraction is not a scalar multiple of the metric"));
  const auto pi_factor = pi_symmetry_factor();
  out.push_back(make("metric/pi-symmetry", pi_factor.has_value(), 0.0, 1, cfg.seed,
                     pi_factor ? "pi^mu_{A Bdot} = (" + pi_factor->to_string() + ") * pibar^mu_{Bdot A}"
                               : "pi and pibar are not proportional"));
  return out;
}

inline std::vector<CheckReport> su3_adjoint_suite(const RunConfig& cfg) {
  std::vector<CheckReport> out;
  if (use_float(cfg)) {
    double closure = 0.0, character = 0.0;
    for (std::uint64_t k = 0; k < cfg.samples; ++k) {
      const FloatMatrix u = sample_su3(sub_seed(cfg.seed, k));
      const auto adj = su3_adjoint(u);
      closure = std::max(closure, adj.residual);
      const double expect = std::norm(trace(u)) - 1.0;
      character = std::max(character, std::abs(trace(adj.s) - ComplexFloat(expect, 0.0)));
    }
    out.push_back(make("su3-adjoint/closure", closure <= kAdjointClosureTolerance, closure, cfg.samples, cfg.seed,
                       "transformed K stays in the K span (bound 1e-10)"));
    out.push_back(make("su3-adjoint/character", character <= cfg.tolerance, character, cfg.samples, cfg.seed,
                       "trace S = |trace U|^2 - 1"));
    auto hom = su3_homomorphism_check(cfg.samples, cfg.seed, cfg.tolerance);
    hom.name = "su3-adjoint/homomorphism";
    out.push_back(hom);
  }
  if (use_exact(cfg)) {
    double worst = 0.0;
    bool phase_ok = true, character_ok = true;
    const CycloScalar j = CycloScalar::j();
    for (std::uint64_t k = 0; k < cfg.samples; ++k) {
      Rng rng(sub_seed(cfg.seed, k));
      const ExactMatrix u = random_exact_phase_permutation(rng);
      const auto adj = su3_adjoint(u);
      worst = std::max(worst, adj.residual);
      phase_ok = phase_ok && su3_adjoint(ExactMatrix(j * u)).s == adj.s;
      const CycloScalar t = trace(u);
      // For unitary U outside SU(3) the character picks up det U.
      character_ok = character_ok && trace(adj.s) == determinant(u) * (t * t.conj() - CycloScalar(1));
    }
    out.push_back(make("su3-adjoint/exact", worst == 0.0 && phase_ok && character_ok, worst, cfg.samples, cfg.seed,
                       "phase/permutation matrices: residual 0, S(jU) = S(U), trace S = det U (|trace U|^2 - 1)"));
  }
  return out;
}

inline std::vector<CheckReport> su3_stabilizer(const RunConfig& cfg) {
  std::vector<CheckReport> out;
  const CycloScalar half = CycloScalar::rational(1, 2);
  const std::pair<const char*, ExactMatrix> probes[] = {
      {"su3-stabilizer/diag(2,1/2,1)", ExactMatrix::diagonal({2, half, 1})},
      {"su3-stabilizer/diag(j,j^2,1)", ExactMatrix::diagonal({CycloScalar::j(), CycloScalar::j2(), 1})},
      {"su3-stabilizer/identity", ExactMatrix::identity(3)},
  };
  for (const auto& [name, u] : probes) {
    if (use_exact(cfg)) {
      auto r = stabilizer_probe(u, cfg.tolerance);
      r.name = std::string(name) + "/exact";
      r.seed = cfg.seed;
      out.push_back(r);
    }
    if (use_float(cfg)) {
      auto r = stabilizer_probe(to_float(u), cfg.tolerance);
      r.name = std::string(name) + "/float";
      r.seed = cfg.seed;
      out.push_back(r);
    }
  }
  return out;
}

inline std::vector<CheckReport> nine_form(const RunConfig& cfg) {
  std::vector<CheckReport> out;
  if (use_float(cfg)) {
    double worst = 0.0;
    for (std::uint64_t k = 0; k < cfg.samples; ++k) {
      Rng rng(sub_seed(cfg.seed, k));
      const FloatMatrix u1 = sample_su3(rng), u2 = sample_su3(rng);
      const auto r1 = nine_form_rep(u1);
      const auto r2 = nine_form_rep(u2);
      worst = std::max(worst, r1.residual);
      worst = std::max(worst, std::abs(trace(r1.rep) - ComplexFloat(std::norm(trace(u1)), 0.0)));
      worst = std::max(worst, max_abs_diff(nine_form_rep(FloatMatrix(u1 * u2)).rep, FloatMatrix(r1.rep * r2.rep)));
    }
    out.push_back(make("nine-form/float", worst <= cfg.tolerance, worst, cfg.samples, cfg.seed,
                       "rep ~ U (x) conj(U), trace = |trace U|^2, multiplicative"));
  }
  if (use_exact(cfg)) {
    double worst = 0.0;
    bool character_ok = true;
    for (std::uint64_t k = 0; k < cfg.samples; ++k) {
      Rng rng(sub_seed(cfg.seed, k));
      const ExactMatrix u = random_exact_phase_permutation(rng);
      const auto r = nine_form_rep(u);
      worst = std::max(worst, r.residual);
      const CycloScalar t = trace(u);
      character_ok = character_ok && trace(r.rep) == t * t.conj();
    }
    out.push_back(make("nine-form/exact", worst == 0.0 && character_ok, worst, cfg.samples, cfg.seed,
                       "phase/permutation matrices: rep ~ U (x) conj(U) exactly, trace = |trace U|^2"));
  }
  return out;
}

inline std::vector<CheckReport> anticommutation(const RunConfig& cfg) {
  const auto us = enumerate_basis(FamilyPair::theta, 2, 3, WordSector::unbarred);
  const auto vs = enumerate_basis(FamilyPair::theta, 2, 3, WordSector::barred);
  std::size_t pairs = 0, bad = 0;
  for (const auto& u : us)
    for (const auto& v : vs) {
      ++pairs;
      const AlgebraElement uv = multiply(u, v), vu = multiply(v, u);
      if (uv.is_zero() || uv != -vu) ++bad;
    }
  const CycloScalar witness = anticommutation_witness(2);
  const bool ok = bad == 0 && witness == CycloScalar(-1);
  return {make("anticommutation/cubic-blocks", ok, static_cast<double>(bad), pairs, cfg.seed,
               std::to_string(pairs) + " pairs u*v = -v*u; exchange phase (-j)^9 = " + witness.to_string())};
}

}  // namespace suites

using SuiteFn = std::function<std::vector<CheckReport>(const RunConfig&)>;

/// Suites in the order `all` runs them.
inline const std::vector<std::pair<std::string, SuiteFn>>& suite_table() {
  static const std::vector<std::pair<std::string, SuiteFn>> table = {
      {"dims", suites::dims},
      {"quartic", suites::quartic},
      {"rho-covariance", suites::rho_covariance},
      {"cover", suites::cover},
      {"vector-rep", suites::vector_rep_suite},
      {"metric", suites::metric},
      {"su3-adjoint", suites::su3_adjoint_suite},
      {"su3-stabilizer", suites::su3_stabilizer},
      {"nine-form", suites::nine_form},
      {"anticommutation", suites::anticommutation},
  };
  return table;
}

inline std::vector<std::string> suite_names() {
  std::vector<std::string> names;
  for (const auto& [name, fn] : suite_table()) names.push_back(name);
  names.push_back("all");
  return names;
}

inline std::vector<CheckReport> run_suites(const RunConfig& cfg) {
  if (cfg.samples < 1) throw std::invalid_argument("samples must be at least 1");
  if (!(cfg.tolerance > 0.0)) throw std::invalid_argument("tolerance must be positive");
  std::vector<CheckReport> out;
  bool found = false;
  for (const auto& [name, fn] : suite_table()) {
    if (cfg.suite != "all" && cfg.suite != name) continue;
    found = true;
    try {
      auto reports = fn(cfg);
      out.insert(out.end(), reports.begin(), reports.end());
    } catch (const std::exception& e) {
      out.push_back({name + "/error", Status::fail, 0.0, cfg.samples, cfg.seed, e.what()});
    }
  }
  if (!found) throw std::invalid_argument("unknown suite '" + cfg.suite + "'");
  return out;
}

inline bool all_passed(const std::vector<CheckReport>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const CheckReport& r) { return r.passed(); });
}

}  // namespace quarkalg

#endif  // QUARKALG_VERIFY_HPP
