// Covariance equations for the invariant forms.
//
// For a basis change theta'^A = U^A_B theta^B the three-forms must keep
// their shape up to a linear map on their output index:
//
//   Lambda^a'_b rho^b_{ABC} = U^A'_A U^B'_B U^C'_C rho^a'_{A'B'C'}
//
// For two generators this forces Lambda = det(U) * (U with off-diagonal
// signs flipped), so det(Lambda) = det(U)^3. Matrices are indexed
// U(row, col) = U^{row}_{col}.

#ifndef QUARKALG_COVARIANCE_HPP
#define QUARKALG_COVARIANCE_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "quarkalg/cyclo.hpp"
#include "quarkalg/invariant_forms.hpp"
#include "quarkalg/matrix.hpp"
#include "quarkalg/report.hpp"
#include "quarkalg/sampling.hpp"

namespace quarkalg {

class CheckFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotUnimodular : public std::domain_error {
 public:
  NotUnimodular() : std::domain_error("matrix determinant is not 1") {}
};

/// Unimodularity tolerance for float inputs.
inline constexpr double kUnimodularTolerance = 1e-12;

namespace detail {

template <class T>
bool is_singular(const T& det) {
  if constexpr (scalar_traits<T>::exact) return det.is_zero();
  else return std::abs(det) <= 1e-14;
}

template <class T>
bool is_one(const T& x) {
  if constexpr (scalar_traits<T>::exact) return x == T(1);
  else return std::abs(x - T(1)) <= kUnimodularTolerance;
}

inline std::size_t flat(int n, const IndexTriple& idx) {
  const auto m = static_cast<std::size_t>(n);
  return static_cast<std::size_t>(idx[0] - 1) * m * m + static_cast<std::size_t>(idx[1] - 1) * m +
         static_cast<std::size_t>(idx[2] - 1);
}

}  // namespace detail

/// sum over (a,b,c) of t(label, abc) U(a,d) U(b,e) U(c,f), indexed by (d,e,f).
template <class T>
std::vector<T> transform_three_form(const CyclicTensor3& t, std::size_t label, const Matrix<T>& u) {
  const int n = t.dimension();
  if (u.rows() != static_cast<std::size_t>(n) || !u.square()) throw std::invalid_argument("basis change has wrong size");
  std::vector<T> out(static_cast<std::size_t>(n * n * n), T(0));
  for (const auto& e : t.support(label)) {
    const T value = scalar_traits<T>::from_exact(e.value);
    const auto a = static_cast<std::size_t>(e.index[0] - 1);
    const auto b = static_cast<std::size_t>(e.index[1] - 1);
    const auto c = static_cast<std::size_t>(e.index[2] - 1);
    std::size_t k = 0;
    const auto m = static_cast<std::size_t>(n);
    for (std::size_t d = 0; d < m; ++d)
      for (std::size_t e2 = 0; e2 < m; ++e2)
        for (std::size_t f = 0; f < m; ++f) out[k++] += value * u(a, d) * u(b, e2) * u(c, f);
  }
  return out;
}

/// D m D with D = diag(1, -1): off-diagonal entries change sign.
template <class T>
Matrix<T> sign_flip(const Matrix<T>& m) {
  return Matrix<T>{{m(0, 0), -m(0, 1)}, {-m(1, 0), m(1, 1)}};
}

/// Closed form det(U) * sign_flip(U) of the spinor map.
template <class T>
Matrix<T> lambda_closed_form(const Matrix<T>& u) {
  return determinant(u) * sign_flip(u);
}

/// Largest |lhs - rhs| of the three-form covariance equation over every
/// output label and index triple.
template <class T>
double rho_covariance_residual(const Matrix<T>& u, const Matrix<T>& lambda, const CyclicTensor3& rho) {
  const std::size_t labels = rho.label_count();
  if (lambda.rows() != labels || lambda.cols() != labels) throw std::invalid_argument("lambda has wrong size");
  double worst = 0.0;
  for (std::size_t out = 0; out < labels; ++out) {
    const auto rhs = transform_three_form(rho, out, u);
    for (const auto& idx : rho.all_triples()) {
      T lhs(0);
      for (std::size_t beta = 0; beta < labels; ++beta) {
        const auto& r = rho.at(beta, idx);
        if (!r.is_zero()) lhs += lambda(out, beta) * scalar_traits<T>::from_exact(r);
      }
      worst = std::max(worst, scalar_traits<T>::magnitude(lhs - rhs[detail::flat(rho.dimension(), idx)]));
    }
  }
  return worst;
}

/// Spinor matrix induced by U, checked against the full contraction.
template <class T>
Matrix<T> lambda_from_U(const Matrix<T>& u, double tolerance = 1e-9, const CyclicTensor3& rho = make_rho()) {
  if (u.rows() != 2 || !u.square()) throw std::invalid_argument("lambda_from_U needs a 2x2 matrix");
  if (detail::is_singular(determinant(u))) throw SingularMatrix();
  Matrix<T> lambda = lambda_closed_form(u);
  const double residual = rho_covariance_residual(u, lambda, rho);
  const bool ok = scalar_traits<T>::exact ? residual == 0.0 : residual <= tolerance;
  if (!ok) throw CheckFailure("three-form covariance residual " + format_number(residual));
  return lambda;
}

/// Quark-level matrix covering a unimodular L; phase_k picks one of the three
/// sheets {U, jU, j^2 U}. For phase_k = 0, det U = j^2.
template <class T>
Matrix<T> spinor_cover(const Matrix<T>& l, int phase_k = 0) {
  if (l.rows() != 2 || !l.square()) throw std::invalid_argument("spinor_cover needs a 2x2 matrix");
  if (!detail::is_one(determinant(l))) throw NotUnimodular();
  const T phase = scalar_traits<T>::from_exact(CycloScalar::j_pow(1 + phase_k));
  return phase * sign_flip(l);
}

/// Largest residual of the conjugate covariance equation with rho-bar and
/// U-bar; the induced map is the conjugate of lambda_from_U(U).
template <class T>
double conjugate_covariance_residual(const Matrix<T>& u) {
  const Matrix<T> ubar = u.conjugate();
  const Matrix<T> lambda_bar = lambda_closed_form(u).conjugate();
  return rho_covariance_residual(ubar, lambda_bar, make_rho_bar());
}

template <class T>
Matrix<T> conjugate_cover(const Matrix<T>& u, double tolerance = 1e-9) {
  if (u.rows() != 2 || !u.square()) throw std::invalid_argument("conjugate_cover needs a 2x2 matrix");
  const double residual = conjugate_covariance_residual(u);
  const bool ok = scalar_traits<T>::exact ? residual == 0.0 : residual <= tolerance;
  if (!ok) throw CheckFailure("conjugate covariance residual " + format_number(residual));
  return u.conjugate();
}

/// 4x4 matrix Lambda^mu'_nu with U^T pi^mu' U-bar = sum_nu Lambda^mu'_nu pi^nu,
/// found by solving in the pi basis.
template <class T>
Matrix<T> vector_rep(const Matrix<T>& u) {
  if (u.rows() != 2 || !u.square()) throw std::invalid_argument("vector_rep needs a 2x2 matrix");
  const auto pi = make_pi();
  const Matrix<T> ubar = u.conjugate();
  Matrix<T> basis(4, 4), images(4, 4);
  for (std::size_t mu = 0; mu < 4; ++mu) {
    const auto p = pi[mu].matrix.map([](const CycloScalar& x) { return scalar_traits<T>::from_exact(x); });
    const Matrix<T> image = u.transpose() * p * ubar;
    for (std::size_t a = 0; a < 2; ++a)
      for (std::size_t b = 0; b < 2; ++b) {
        basis(2 * a + b, mu) = p(a, b);
        images(2 * a + b, mu) = image(a, b);
      }
  }
  Matrix<T> coords;
  try {
    coords = solve(basis, images);
  } catch (const SingularMatrix&) {
    throw std::logic_error("pi matrices do not form a basis");
  }
  return coords.transpose();
}

struct MetricReport {
  ExactMatrix pairing;     // (1/2) pi^mu_{A Bdot} pi-bar^{nu Bdot A}
  ExactMatrix as_printed;  // (1/2) pi^mu_{A Bdot} pi^{nu A Bdot}
  std::optional<CycloScalar> as_printed_factor;  // as_printed = factor * pairing
};

/// Both metric contractions, spinor indices raised with epsilon.
inline MetricReport minkowski_metric_report() {
  const auto pi = make_pi();
  const auto pib = make_pi_bar();
  const auto eps = make_epsilon();
  const CycloScalar half = CycloScalar::rational(1, 2);

  // raised(X)^{P Q} = eps_row^{P R} eps_col^{Q S} X_{R S}
  auto raise = [](const ExactMatrix& x, const ExactMatrix& e_row, const ExactMatrix& e_col) {
    return e_row * x * e_col.transpose();
  };

  MetricReport out{ExactMatrix(4, 4), ExactMatrix(4, 4), std::nullopt};
  for (std::size_t mu = 0; mu < 4; ++mu)
    for (std::size_t nu = 0; nu < 4; ++nu) {
      const ExactMatrix bar_up = raise(pib[nu].matrix, eps.dotted, eps.undotted);  // (Bdot, A)
      const ExactMatrix pi_up = raise(pi[nu].matrix, eps.undotted, eps.dotted);   // (A, Bdot)
      CycloScalar g, h;
      for (std::size_t a = 0; a < 2; ++a)
        for (std::size_t b = 0; b < 2; ++b) {
          g += pi[mu].matrix(a, b) * bar_up(b, a);
          h += pi[mu].matrix(a, b) * pi_up(a, b);
        }
      out.pairing(mu, nu) = half * g;
      out.as_printed(mu, nu) = half * h;
    }

  const CycloScalar factor = out.as_printed(0, 0) / out.pairing(0, 0);
  if (factor * out.pairing == out.as_printed) out.as_printed_factor = factor;
  return out;
}

inline ExactMatrix minkowski_metric() { return minkowski_metric_report().pairing; }

template <class T>
struct AdjointResult {
  Matrix<T> s;      // 8x8, S^Phi'_Omega
  double residual;  // max |transformed K - sum_Omega S K^Omega|
};

/// Projects each transformed K^Phi' onto the K basis (orthogonal, norm^2 = 3)
/// and measures what the projection misses.
template <class T>
AdjointResult<T> su3_adjoint(const Matrix<T>& u, const CyclicTensor3& k = make_K()) {
  if (u.rows() != 3 || !u.square()) throw std::invalid_argument("su3_adjoint needs a 3x3 matrix");
  const std::size_t labels = k.label_count();
  const T third = scalar_traits<T>::from_exact(CycloScalar::rational(1, 3));
  AdjointResult<T> out{Matrix<T>(labels, labels), 0.0};
  for (std::size_t p = 0; p < labels; ++p) {
    auto transformed = transform_three_form(k, p, u);
    for (std::size_t o = 0; o < labels; ++o) {
      T proj(0);
      for (const auto& e : k.support(o))
        proj += transformed[detail::flat(3, e.index)] * scalar_traits<T>::from_exact(e.value.conj());
      out.s(p, o) = third * proj;
    }
    for (std::size_t o = 0; o < labels; ++o)
      for (const auto& e : k.support(o))
        transformed[detail::flat(3, e.index)] -= out.s(p, o) * scalar_traits<T>::from_exact(e.value);
    for (const auto& x : transformed) out.residual = std::max(out.residual, scalar_traits<T>::magnitude(x));
  }
  return out;
}

template <class T>
bool is_unitary(const Matrix<T>& u, double tolerance = 1e-9) {
  const double d = max_abs_diff(u * u.adjoint(), Matrix<T>::identity(u.rows()));
  return scalar_traits<T>::exact ? d == 0.0 : d <= tolerance;
}

/// Sampled check that S is a unitary representation: S(U1 U2) = S(U1) S(U2),
/// S(U) S(U)^dagger = 1 and S(jU) = S(U).
inline CheckReport su3_homomorphism_check(std::uint64_t samples, std::uint64_t seed, double tolerance = 1e-9) {
  double worst = 0.0;
  const ComplexFloat j = CycloScalar::j().to_complex();
  for (std::uint64_t n = 0; n < samples; ++n) {
    Rng rng(sub_seed(seed, n));
    const FloatMatrix u1 = sample_su3(rng);
    const FloatMatrix u2 = sample_su3(rng);
    const FloatMatrix s1 = su3_adjoint(u1).s;
    const FloatMatrix s2 = su3_adjoint(u2).s;
    worst = std::max(worst, max_abs_diff(su3_adjoint(FloatMatrix(u1 * u2)).s, s1 * s2));
    worst = std::max(worst, max_abs_diff(s1 * s1.adjoint(), FloatMatrix::identity(8)));
    worst = std::max(worst, max_abs_diff(su3_adjoint(FloatMatrix(j * u1)).s, s1));
  }
  return {"su3-homomorphism", status_of(worst <= tolerance), worst, samples, seed,
          "S(U1U2)=S(U1)S(U2), S unitary, S(jU)=S(U)"};
}

/// Closure residual of the K span under U; a non-unitary U is expected to
/// leave the span (residual > 0.1), a unitary one to preserve it.
template <class T>
CheckReport stabilizer_probe(const Matrix<T>& u, double tolerance = 1e-9, double escape_threshold = 0.1) {
  if (!detail::is_one(determinant(u))) throw NotUnimodular();
  const auto adj = su3_adjoint(u);
  const bool unitary = is_unitary(u, tolerance);
  const bool ok = unitary ? (scalar_traits<T>::exact ? adj.residual == 0.0 : adj.residual <= tolerance)
                          : adj.residual > escape_threshold;
  std::ostringstream details;
  details << "backend=" << scalar_traits<T>::backend_name << " unitary=" << (unitary ? "yes" : "no")
          << " expected residual " << (unitary ? "0" : "> " + format_number(escape_threshold));
  return {"su3-stabilizer", status_of(ok), adj.residual, 1, 0, details.str()};
}

template <class T>
struct NineFormResult {
  Matrix<T> rep;    // 9x9 in the P^i basis
  Matrix<T> kron;   // U (x) conj(U) on row-major vec(X)
  double residual;  // max |C rep - kron C|, C = basis change P -> E_ab
};

/// Matrix of X -> U X conj(U)^T in the basis P^i = j^2 i lambda^i.
template <class T>
NineFormResult<T> nine_form_rep(const Matrix<T>& u) {
  if (u.rows() != 3 || !u.square()) throw std::invalid_argument("nine_form_rep needs a 3x3 matrix");
  const auto forms = make_nine_forms();
  const Matrix<T> ubar_t = u.conjugate().transpose();
  Matrix<T> basis(9, 9), images(9, 9);
  for (std::size_t k = 0; k < 9; ++k) {
    const auto p = forms[k].matrix.map([](const CycloScalar& x) { return scalar_traits<T>::from_exact(x); });
    const Matrix<T> image = u * p * ubar_t;
    for (std::size_t a = 0; a < 3; ++a)
      for (std::size_t b = 0; b < 3; ++b) {
        basis(3 * a + b, k) = p(a, b);
        images(3 * a + b, k) = image(a, b);
      }
  }
  NineFormResult<T> out{solve(basis, images), kron(u, u.conjugate()), 0.0};
  out.residual = max_abs_diff(basis * out.rep, out.kron * basis);
  return out;
}

}  // namespace quarkalg

#endif  // QUARKALG_COVARIANCE_HPP
