// Deterministic group-element samplers.
//
// All randomness comes from std::mt19937_64, whose output sequence is fixed
// by the standard; doubles are formed from the top 53 bits so a given seed
// yields bitwise-identical matrices on every conforming platform.

#ifndef QUARKALG_SAMPLING_HPP
#define QUARKALG_SAMPLING_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <random>
#include <utility>

#include "quarkalg/cyclo.hpp"
#include "quarkalg/invariant_forms.hpp"
#include "quarkalg/matrix.hpp"

namespace quarkalg {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1).
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  /// Uniform in [-1, 1).
  double symmetric() { return 2.0 * unit() - 1.0; }
  ComplexFloat complex_symmetric() {
    const double re = symmetric();
    return {re, symmetric()};
  }
  /// Uniform integer in [lo, hi].
  long integer(long lo, long hi) {
    return lo + static_cast<long>(engine_() % static_cast<std::uint64_t>(hi - lo + 1));
  }

 private:
  std::mt19937_64 engine_;
};

/// Sub-seed for sample k of a run; independent of evaluation order.
inline std::uint64_t sub_seed(std::uint64_t seed, std::uint64_t sample) { return seed ^ sample; }

inline double norm1(const FloatMatrix& m) {
  double best = 0.0;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    double s = 0.0;
    for (std::size_t r = 0; r < m.rows(); ++r) s += std::abs(m(r, c));
    best = std::max(best, s);
  }
  return best;
}

/// exp(a) by Taylor series on a / 2^s with ||a / 2^s||_1 <= 1/2, then s
/// squarings. The series is cut once a term drops below 1e-17 relative.
inline FloatMatrix expm(const FloatMatrix& a) {
  const double norm = norm1(a);
  int squarings = 0;
  if (norm > 0.5) squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
  const FloatMatrix scaled = a * ComplexFloat(std::ldexp(1.0, -squarings), 0.0);

  FloatMatrix sum = FloatMatrix::identity(a.rows());
  FloatMatrix term = sum;
  for (int k = 1; k < 40; ++k) {
    term = term * scaled * ComplexFloat(1.0 / k, 0.0);
    sum += term;
    if (norm1(term) <= 1e-17 * norm1(sum)) break;
  }
  for (int s = 0; s < squarings; ++s) sum = sum * sum;
  return sum;
}

/// exp of a traceless complex 2x2 with real and imaginary parts uniform in [-1, 1].
inline FloatMatrix sample_sl2c(Rng& rng) {
  const ComplexFloat a = rng.complex_symmetric();
  const ComplexFloat b = rng.complex_symmetric();
  const ComplexFloat c = rng.complex_symmetric();
  return expm(FloatMatrix{{a, b}, {c, -a}});
}

inline FloatMatrix sample_sl2c(std::uint64_t seed) {
  Rng rng(seed);
  return sample_sl2c(rng);
}

/// exp(i H) with H = (1/2) sum_k c_k lambda^k, c_k uniform in [-1, 1]; every
/// entry of H is bounded by 1.
inline FloatMatrix sample_su3(Rng& rng) {
  FloatMatrix h(3, 3);
  for (int k = 1; k <= 8; ++k) h += to_float(gell_mann(k)) * ComplexFloat(0.5 * rng.symmetric(), 0.0);
  return expm(h * ComplexFloat(0.0, 1.0));
}

inline FloatMatrix sample_su3(std::uint64_t seed) {
  Rng rng(seed);
  return sample_su3(rng);
}

// Exact-backend samples. Entries are small rationals combined with 1, j, i, ij.

inline CycloScalar random_cyclo(Rng& rng, long bound = 3) {
  std::array<Rational, 4> d;
  for (auto& x : d) {
    const long num = rng.integer(-bound, bound);
    const long den = rng.integer(1, 2);
    x = Rational(mpz_class(num), mpz_class(den));
    x.canonicalize();
  }
  return CycloScalar::from_display(d);
}

inline CycloScalar random_nonzero_cyclo(Rng& rng, long bound = 3) {
  CycloScalar x;
  do x = random_cyclo(rng, bound);
  while (x.is_zero());
  return x;
}

/// Random invertible exact matrix.
inline ExactMatrix random_exact_matrix(Rng& rng, std::size_t n, long bound = 3) {
  while (true) {
    ExactMatrix m(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) m(r, c) = random_cyclo(rng, bound);
    if (!determinant(m).is_zero()) return m;
  }
}

/// Exact element of SL(2) over the cyclotomic field: a diagonal torus element
/// times upper, lower and upper unipotents.
inline ExactMatrix random_exact_sl2(Rng& rng, long bound = 2) {
  const CycloScalar d = random_nonzero_cyclo(rng, bound);
  const ExactMatrix torus{{d, 0}, {0, d.inverse()}};
  const ExactMatrix up1{{1, random_cyclo(rng, bound)}, {0, 1}};
  const ExactMatrix low{{1, 0}, {random_cyclo(rng, bound), 1}};
  const ExactMatrix up2{{1, random_cyclo(rng, bound)}, {0, 1}};
  return torus * up1 * low * up2;
}

/// Exact unitary 3x3: a permutation matrix with cube-root-of-unity phases.
inline ExactMatrix random_exact_phase_permutation(Rng& rng) {
  std::array<int, 3> perm{0, 1, 2};
  for (int k = 2; k > 0; --k) std::swap(perm[static_cast<std::size_t>(k)], perm[static_cast<std::size_t>(rng.integer(0, k))]);
  ExactMatrix m(3, 3);
  for (std::size_t r = 0; r < 3; ++r)
    m(r, static_cast<std::size_t>(perm[r])) = CycloScalar::j_pow(rng.integer(0, 2));
  return m;
}

}  // namespace quarkalg

#endif  // QUARKALG_SAMPLING_HPP
