#include <gtest/gtest.h>

#include <array>
#include <cmath>
#include <complex>

#include "quarkalg/cyclo.hpp"
#include "quarkalg/sampling.hpp"

using namespace quarkalg;

namespace {

// Inverse by solving (multiplication by x) y = 1 over Q in the power basis.
CycloScalar inverse_by_linear_solve(const CycloScalar& x) {
  std::array<std::array<Rational, 5>, 4> m;
  CycloScalar basis(1);
  for (int k = 0; k < 4; ++k) {
    const auto col = (x * basis).coords();
    for (int r = 0; r < 4; ++r) m[r][k] = col[r];
    basis = basis * CycloScalar::zeta();
  }
  for (int r = 0; r < 4; ++r) m[r][4] = r == 0 ? 1 : 0;
  for (int c = 0; c < 4; ++c) {
    int p = c;
    while (m[p][c] == 0) ++p;
    std::swap(m[p], m[c]);
    for (int r = 0; r < 4; ++r) {
      if (r == c || m[r][c] == 0) continue;
      const Rational f = m[r][c] / m[c][c];
      for (int k = c; k < 5; ++k) m[r][k] -= f * m[c][k];
    }
  }
  CycloScalar::Coords y;
  for (int r = 0; r < 4; ++r) y[r] = m[r][4] / m[r][r];
  return CycloScalar(y);
}

std::complex<double> approx(const CycloScalar& x) { return x.to_complex(); }

}  // namespace

TEST(CycloScalar, BasicIdentities) {
  const CycloScalar j = CycloScalar::j(), j2 = CycloScalar::j2(), i = CycloScalar::i();
  EXPECT_TRUE((CycloScalar(1) + j + j2).is_zero());
  EXPECT_EQ(j * j2, CycloScalar(1));
  EXPECT_EQ(j * j, j2);
  EXPECT_EQ(i * i, CycloScalar(-1));
  EXPECT_EQ(CycloScalar::sqrt3() * CycloScalar::sqrt3(), CycloScalar(3));
  EXPECT_EQ(CycloScalar::zeta().pow(12), CycloScalar(1));
  EXPECT_EQ(CycloScalar::zeta().pow(6), CycloScalar(-1));
  EXPECT_EQ(CycloScalar::j_pow(-1), j2);
  EXPECT_EQ(CycloScalar::j_pow(5), j2);
}

TEST(CycloScalar, Inverse) {
  EXPECT_EQ(CycloScalar::j().inverse(), CycloScalar::j2());
  EXPECT_EQ(CycloScalar(2).inverse(), CycloScalar::rational(1, 2));
  // 1 + j = -j^2, whose inverse is -j.
  const CycloScalar x = CycloScalar(1) + CycloScalar::j();
  EXPECT_EQ(x.inverse(), -CycloScalar::j());
  EXPECT_NE(x.inverse(), -CycloScalar::j2());
  EXPECT_EQ(x.inverse(), inverse_by_linear_solve(x));
}

TEST(CycloScalar, InverseMatchesLinearSolve) {
  Rng rng(11);
  for (int k = 0; k < 100; ++k) {
    const CycloScalar x = random_nonzero_cyclo(rng, 5);
    EXPECT_EQ(x.inverse(), inverse_by_linear_solve(x)) << x.to_string();
    EXPECT_EQ(x * x.inverse(), CycloScalar(1));
    EXPECT_EQ(x / x, CycloScalar(1));
  }
}

TEST(CycloScalar, DivisionByZero) {
  EXPECT_THROW(CycloScalar(0).inverse(), DivisionByZero);
  EXPECT_THROW(CycloScalar(3) / CycloScalar(0), DivisionByZero);
}

TEST(CycloScalar, Conjugation) {
  EXPECT_EQ(conj(CycloScalar::j()), CycloScalar::j2());
  EXPECT_EQ(conj(CycloScalar::i()), -CycloScalar::i());
  EXPECT_EQ(conj(CycloScalar::sqrt3()), CycloScalar::sqrt3());
  Rng rng(3);
  for (int k = 0; k < 100; ++k) {
    const CycloScalar x = random_cyclo(rng), y = random_cyclo(rng);
    EXPECT_EQ(x.conj().conj(), x);
    EXPECT_EQ((x * y).conj(), x.conj() * y.conj());
    EXPECT_NEAR(std::abs(approx(x.conj()) - std::conj(approx(x))), 0.0, 1e-12);
    const CycloScalar n = x * x.conj();
    EXPECT_EQ(n.conj(), n);
  }
}

TEST(CycloScalar, FloatEmbeddingIsHomomorphism) {
  EXPECT_NEAR(to_float(CycloScalar::j()).real(), -0.5, 1e-15);
  EXPECT_NEAR(to_float(CycloScalar::j()).imag(), std::sqrt(3.0) / 2, 1e-15);
  EXPECT_EQ(to_float(CycloScalar::i()), ComplexFloat(0.0, 1.0));
  EXPECT_LE(std::abs(to_float(CycloScalar(1) + CycloScalar::j() + CycloScalar::j2())), 1e-15);
  Rng rng(5);
  for (int k = 0; k < 100; ++k) {
    const CycloScalar x = random_cyclo(rng), y = random_cyclo(rng);
    EXPECT_NEAR(std::abs(approx(x * y) - approx(x) * approx(y)), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(approx(x + y) - (approx(x) + approx(y))), 0.0, 1e-12);
  }
}

TEST(CycloScalar, GaloisMapsAreAutomorphisms) {
  Rng rng(9);
  for (int k : {1, 5, 7, 11}) {
    for (int n = 0; n < 20; ++n) {
      const CycloScalar x = random_cyclo(rng), y = random_cyclo(rng);
      EXPECT_EQ((x * y).galois(k), x.galois(k) * y.galois(k));
      EXPECT_EQ((x + y).galois(k), x.galois(k) + y.galois(k));
    }
  }
  EXPECT_EQ(CycloScalar::zeta().galois(11), CycloScalar::zeta().conj());
  const CycloScalar x = CycloScalar(2) + CycloScalar::i();
  EXPECT_EQ(CycloScalar(x.norm()), x * x.galois(5) * x.galois(7) * x.galois(11));
}

TEST(CycloScalar, DisplayCoordinates) {
  const std::array<Rational, 4> d{Rational(1, 2), Rational(-3), Rational(0), Rational(2)};
  const CycloScalar x = CycloScalar::from_display(d);
  EXPECT_EQ(x.display_coords(), d);
  EXPECT_EQ(x, CycloScalar::rational(1, 2) - CycloScalar(3) * CycloScalar::j() +
                   CycloScalar(2) * CycloScalar::i() * CycloScalar::j());
}

TEST(CycloScalar, TextRoundTrip) {
  EXPECT_EQ(CycloScalar(0).to_string(), "0");
  EXPECT_EQ(CycloScalar::j().to_string(), "j");
  EXPECT_EQ(CycloScalar::parse("-1/2 + 3*j - i"),
            CycloScalar::rational(-1, 2) + CycloScalar(3) * CycloScalar::j() - CycloScalar::i());
  EXPECT_EQ(CycloScalar::parse("2·ij"), CycloScalar(2) * CycloScalar::i() * CycloScalar::j());
  Rng rng(1);
  for (int k = 0; k < 100; ++k) {
    const CycloScalar x = random_cyclo(rng, 7);
    EXPECT_EQ(CycloScalar::parse(x.to_string()), x) << x.to_string();
  }
  for (const char* bad : {"", "j j", "1/0", "3*", "k", "1 +"}) EXPECT_THROW(CycloScalar::parse(bad), std::invalid_argument) << bad;
}
