// Exact arithmetic in the cyclotomic field Q(zeta), zeta = exp(i*pi/6).
//
// Elements are stored as four rational coordinates on the basis
// {1, zeta, zeta^2, zeta^3}, reduced with zeta^4 = zeta^2 - 1 (the 12th
// cyclotomic polynomial). The field holds both the cubic phase
// j = zeta^4 = exp(2*pi*i/3) and the imaginary unit i = zeta^3.

#ifndef QUARKALG_CYCLO_HPP
#define QUARKALG_CYCLO_HPP

#include <array>
#include <cctype>
#include <cmath>
#include <complex>
#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include <gmpxx.h>

namespace quarkalg {

using Rational = mpq_class;
using ComplexFloat = std::complex<double>;

class DivisionByZero : public std::domain_error {
 public:
  DivisionByZero() : std::domain_error("division by zero in cyclotomic field") {}
};

class CycloScalar {
 public:
  using Coords = std::array<Rational, 4>;

  CycloScalar() : c_{0, 0, 0, 0} {}
  CycloScalar(long n) : c_{n, 0, 0, 0} {}  // NOLINT: integers embed implicitly
  explicit CycloScalar(Rational r) : c_{std::move(r), 0, 0, 0} { c_[0].canonicalize(); }
  explicit CycloScalar(Coords c) : c_(std::move(c)) {
    for (auto& x : c_) x.canonicalize();
  }

  static CycloScalar rational(long num, long den) {
    Rational r{mpz_class(num), mpz_class(den)};
    r.canonicalize();
    return CycloScalar(std::move(r));
  }

  static CycloScalar zeta() { return CycloScalar(Coords{0, 1, 0, 0}); }
  /// Cubic phase, zeta^4 = zeta^2 - 1.
  static CycloScalar j() { return CycloScalar(Coords{-1, 0, 1, 0}); }
  static CycloScalar j2() { return CycloScalar(Coords{0, 0, -1, 0}); }
  /// Imaginary unit, zeta^3.
  static CycloScalar i() { return CycloScalar(Coords{0, 0, 0, 1}); }
  /// zeta + conj(zeta) = 2 cos(pi/6).
  static CycloScalar sqrt3() { return CycloScalar(Coords{0, 2, 0, -1}); }

  /// j^k for any integer k.
  static CycloScalar j_pow(long k) {
    switch (((k % 3) + 3) % 3) {
      case 0: return CycloScalar(1);
      case 1: return j();
      default: return j2();
    }
  }

  const Coords& coords() const { return c_; }

  bool is_zero() const { return c_[0] == 0 && c_[1] == 0 && c_[2] == 0 && c_[3] == 0; }
  bool is_rational() const { return c_[1] == 0 && c_[2] == 0 && c_[3] == 0; }

  friend bool operator==(const CycloScalar& a, const CycloScalar& b) { return a.c_ == b.c_; }
  friend bool operator!=(const CycloScalar& a, const CycloScalar& b) { return !(a == b); }

  CycloScalar operator-() const {
    return CycloScalar(Coords{-c_[0], -c_[1], -c_[2], -c_[3]}, raw_tag{});
  }

  CycloScalar& operator+=(const CycloScalar& o) {
    for (std::size_t k = 0; k < 4; ++k) c_[k] += o.c_[k];
    return *this;
  }
  CycloScalar& operator-=(const CycloScalar& o) {
    for (std::size_t k = 0; k < 4; ++k) c_[k] -= o.c_[k];
    return *this;
  }
  CycloScalar& operator*=(const CycloScalar& o) { return *this = *this * o; }
  CycloScalar& operator/=(const CycloScalar& o) { return *this = *this * o.inverse(); }

  friend CycloScalar operator+(CycloScalar a, const CycloScalar& b) { return a += b; }
  friend CycloScalar operator-(CycloScalar a, const CycloScalar& b) { return a -= b; }
  friend CycloScalar operator/(const CycloScalar& a, const CycloScalar& b) { return a * b.inverse(); }

  friend CycloScalar operator*(const CycloScalar& a, const CycloScalar& b) {
    std::array<Rational, 7> p{0, 0, 0, 0, 0, 0, 0};
    for (std::size_t x = 0; x < 4; ++x) {
      if (a.c_[x] == 0) continue;
      for (std::size_t y = 0; y < 4; ++y) {
        if (b.c_[y] == 0) continue;
        p[x + y] += a.c_[x] * b.c_[y];
      }
    }
    // zeta^k = zeta^(k-2) - zeta^(k-4)
    for (std::size_t k = 6; k >= 4; --k) {
      p[k - 2] += p[k];
      p[k - 4] -= p[k];
    }
    return CycloScalar(Coords{p[0], p[1], p[2], p[3]}, raw_tag{});
  }

  /// Field automorphism zeta -> zeta^k for k coprime to 12.
  CycloScalar galois(int k) const {
    CycloScalar z = zeta().pow(k);
    CycloScalar out;
    CycloScalar zp(1);
    for (std::size_t m = 0; m < 4; ++m) {
      if (c_[m] != 0) out += CycloScalar(c_[m]) * zp;
      zp *= z;
    }
    return out;
  }

  /// Complex conjugation, zeta -> zeta^-1 = zeta - zeta^3.
  CycloScalar conj() const {
    return CycloScalar(Coords{c_[0] + c_[2], c_[1], -c_[2], -c_[1] - c_[3]}, raw_tag{});
  }

  /// Field norm down to Q: product of the four Galois conjugates.
  Rational norm() const {
    CycloScalar n = *this * galois(5) * galois(7) * galois(11);
    return n.c_[0];
  }

  CycloScalar inverse() const {
    if (is_zero()) throw DivisionByZero();
    CycloScalar others = galois(5) * galois(7) * galois(11);
    Rational n = (*this * others).c_[0];
    Rational inv_n = 1 / n;
    for (auto& x : others.c_) x *= inv_n;
    return others;
  }

  CycloScalar pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    CycloScalar result(1), base = *this;
    while (e > 0) {
      if (e & 1) result *= base;
      base *= base;
      e >>= 1;
    }
    return result;
  }

  ComplexFloat to_complex() const {
    const double s3 = std::sqrt(3.0);
    const ComplexFloat z(s3 / 2, 0.5), z2(0.5, s3 / 2), z3(0.0, 1.0);
    return c_[0].get_d() + c_[1].get_d() * z + c_[2].get_d() * z2 + c_[3].get_d() * z3;
  }

  /// Coefficients on the display basis {1, j, i, i*j}.
  std::array<Rational, 4> display_coords() const {
    // zeta^2 = 1 + j, zeta = -i*j, zeta^3 = i
    return {c_[0] + c_[2], c_[2], c_[3], -c_[1]};
  }

  static CycloScalar from_display(const std::array<Rational, 4>& d) {
    return CycloScalar(Coords{d[0] - d[1], -d[3], d[1], d[2]});
  }

  /// Renders "a + b*j + c*i + d*ij" with zero terms omitted ("0" for zero).
  std::string to_string() const;
  /// Inverse of to_string(); also accepts U+00B7 in place of '*'.
  static CycloScalar parse(std::string_view text);

  friend std::ostream& operator<<(std::ostream& os, const CycloScalar& x) { return os << x.to_string(); }

 private:
  struct raw_tag {};
  CycloScalar(Coords c, raw_tag) : c_(std::move(c)) {}

  Coords c_;
};

inline CycloScalar conj(const CycloScalar& x) { return x.conj(); }
inline ComplexFloat to_float(const CycloScalar& x) { return x.to_complex(); }

inline std::string CycloScalar::to_string() const {
  static constexpr std::array<const char*, 4> kBasis{"", "j", "i", "ij"};
  const auto d = display_coords();
  std::string out;
  for (std::size_t k = 0; k < 4; ++k) {
    if (d[k] == 0) continue;
    Rational mag = abs(d[k]);
    const bool negative = d[k] < 0;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (k == 0) {
      out += mag.get_str();
    } else if (mag == 1) {
      out += kBasis[k];
    } else {
      out += mag.get_str() + "*" + kBasis[k];
    }
  }
  return out.empty() ? "0" : out;
}

inline CycloScalar CycloScalar::parse(std::string_view text) {
  std::string s;
  for (std::size_t k = 0; k < text.size(); ++k) {
    const unsigned char ch = static_cast<unsigned char>(text[k]);
    if (ch == ' ' || ch == '\t') continue;
    if (ch == 0xC2 && k + 1 < text.size() && static_cast<unsigned char>(text[k + 1]) == 0xB7) {
      s += '*';
      ++k;
      continue;
    }
    s += static_cast<char>(ch);
  }
  auto fail = [&]() -> CycloScalar {
    throw std::invalid_argument("malformed cyclotomic literal: '" + std::string(text) + "'");
  };
  if (s.empty()) return fail();

  std::array<Rational, 4> d{0, 0, 0, 0};
  std::size_t pos = 0;
  bool first = true;
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (!first) {
      return fail();
    }
    first = false;
    const std::size_t start = pos;
    while (pos < s.size() && s[pos] != '+' && s[pos] != '-') ++pos;
    std::string term = s.substr(start, pos - start);
    if (term.empty()) return fail();

    std::string number, basis;
    if (auto star = term.find('*'); star != std::string::npos) {
      number = term.substr(0, star);
      basis = term.substr(star + 1);
      if (number.empty() || basis.empty()) return fail();
    } else if (std::isdigit(static_cast<unsigned char>(term[0]))) {
      number = term;
    } else {
      basis = term;
    }

    std::size_t slot;
    if (basis.empty()) slot = 0;
    else if (basis == "j") slot = 1;
    else if (basis == "i") slot = 2;
    else if (basis == "ij") slot = 3;
    else return fail();

    Rational value(1);
    if (!number.empty()) {
      for (char ch : number)
        if (!std::isdigit(static_cast<unsigned char>(ch)) && ch != '/') return fail();
      try {
        value = Rational(number);
      } catch (const std::invalid_argument&) {
        return fail();
      }
      if (value.get_den() == 0) return fail();
      value.canonicalize();
    }
    d[slot] += sign * value;
  }
  return from_display(d);
}

}  // namespace quarkalg

#endif  // QUARKALG_CYCLO_HPP
