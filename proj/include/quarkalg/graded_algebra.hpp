// Z3-graded cubic algebra on generators theta^A (grade 1) and their
// conjugates theta-bar^A (grade 2), or the q/q-bar family used for the
// three-generator case.
//
// Relations:
//   x^A x^B x^C       = j   x^B x^C x^A     (grade-1 triple)
//   y^A y^B y^C       = j^2 y^B y^C y^A     (grade-2 triple)
//   x^A y^B           = -j  y^B x^A
//   any four grade-1 (or four grade-2) factors vanish.
//
// Canonical words put every grade-1 symbol before every grade-2 symbol; a
// length-3 block is represented by the lexicographically smallest of its
// rotations.

#ifndef QUARKALG_GRADED_ALGEBRA_HPP
#define QUARKALG_GRADED_ALGEBRA_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "quarkalg/cyclo.hpp"

namespace quarkalg {

enum class Family : std::uint8_t { theta, theta_bar, q, q_bar };

/// The two conjugate-pair families of generators.
enum class FamilyPair : std::uint8_t { theta, q };

inline int grade_of(Family f) { return (f == Family::theta || f == Family::q) ? 1 : 2; }
inline FamilyPair pair_of(Family f) {
  return (f == Family::theta || f == Family::theta_bar) ? FamilyPair::theta : FamilyPair::q;
}
inline Family unbarred(FamilyPair p) { return p == FamilyPair::theta ? Family::theta : Family::q; }
inline Family barred(FamilyPair p) { return p == FamilyPair::theta ? Family::theta_bar : Family::q_bar; }

inline Family conjugate_family(Family f) {
  switch (f) {
    case Family::theta: return Family::theta_bar;
    case Family::theta_bar: return Family::theta;
    case Family::q: return Family::q_bar;
    default: return Family::q;
  }
}

struct Generator {
  Family family = Family::theta;
  int index = 1;

  int grade() const { return grade_of(family); }
  friend auto operator<=>(const Generator&, const Generator&) = default;

  std::string to_string() const {
    static constexpr const char* kPrefix[] = {"t", "tb", "q", "qb"};
    return kPrefix[static_cast<int>(family)] + std::to_string(index);
  }
};

inline Generator theta(int a) { return {Family::theta, a}; }
inline Generator theta_bar(int a) { return {Family::theta_bar, a}; }
inline Generator q(int a) { return {Family::q, a}; }
inline Generator q_bar(int a) { return {Family::q_bar, a}; }

class GradedWord {
 public:
  GradedWord() = default;
  GradedWord(std::initializer_list<Generator> g) : symbols_(g) {}
  explicit GradedWord(std::vector<Generator> g) : symbols_(std::move(g)) {}

  const std::vector<Generator>& symbols() const { return symbols_; }
  std::size_t size() const { return symbols_.size(); }
  bool empty() const { return symbols_.empty(); }
  const Generator& operator[](std::size_t k) const { return symbols_[k]; }

  int grade() const {
    int g = 0;
    for (const auto& s : symbols_) g += s.grade();
    return g % 3;
  }

  friend GradedWord operator+(const GradedWord& a, const GradedWord& b) {
    std::vector<Generator> s = a.symbols_;
    s.insert(s.end(), b.symbols_.begin(), b.symbols_.end());
    return GradedWord(std::move(s));
  }

  friend auto operator<=>(const GradedWord&, const GradedWord&) = default;

  /// Space-separated symbols, e.g. "t1 t2 tb1"; the empty word renders as "1".
  std::string to_string() const {
    if (symbols_.empty()) return "1";
    std::string out;
    for (const auto& s : symbols_) {
      if (!out.empty()) out += ' ';
      out += s.to_string();
    }
    return out;
  }

  friend std::ostream& operator<<(std::ostream& os, const GradedWord& w) { return os << w.to_string(); }

 private:
  std::vector<Generator> symbols_;
};

class CapacityError : public std::length_error {
 public:
  explicit CapacityError(std::size_t len, std::size_t cap)
      : std::length_error("word of length " + std::to_string(len) + " exceeds cap " + std::to_string(cap)) {}
};

class UnsupportedMixError : public std::invalid_argument {
 public:
  UnsupportedMixError() : std::invalid_argument("word mixes theta and q generator families") {}
};

inline constexpr std::size_t kDefaultWordCap = 8;

struct Monomial {
  CycloScalar coefficient;
  GradedWord word;
};

namespace detail {

// Rotates a length-3 block to its lexicographically smallest rotation.
// Returns the number of left rotations applied, or nullopt for x x x.
inline std::optional<int> canonical_rotation(std::vector<Generator>& block) {
  if (block[0] == block[1] && block[1] == block[2]) return std::nullopt;
  std::vector<Generator> best = block;
  int best_r = 0;
  std::vector<Generator> cur = block;
  for (int r = 1; r < 3; ++r) {
    std::rotate(cur.begin(), cur.begin() + 1, cur.end());
    if (cur < best) {
      best = cur;
      best_r = r;
    }
  }
  block = std::move(best);
  return best_r;
}

inline void check_families(const GradedWord& w) {
  bool has_theta = false, has_q = false;
  for (const auto& s : w.symbols()) {
    if (pair_of(s.family) == FamilyPair::theta) has_theta = true;
    else has_q = true;
  }
  if (has_theta && has_q) throw UnsupportedMixError();
}

}  // namespace detail

/// Reduces a word to (phase, canonical word), or nullopt when it vanishes.
inline std::optional<Monomial> normal_form(const GradedWord& w, std::size_t cap = kDefaultWordCap) {
  if (w.size() > cap) throw CapacityError(w.size(), cap);
  detail::check_families(w);

  // Each grade-2 symbol passes every grade-1 symbol to its right; y x = -j^2 x y.
  std::vector<Generator> left, right;
  long exchanges = 0;
  for (const auto& s : w.symbols()) {
    if (s.grade() == 1) {
      left.push_back(s);
      exchanges += static_cast<long>(right.size());
    } else {
      right.push_back(s);
    }
  }
  if (left.size() >= 4 || right.size() >= 4) return std::nullopt;

  const CycloScalar minus_j2 = -CycloScalar::j2();
  CycloScalar coeff = minus_j2.pow(exchanges);

  if (left.size() == 3) {
    auto r = detail::canonical_rotation(left);
    if (!r) return std::nullopt;
    coeff *= CycloScalar::j_pow(*r);
  }
  if (right.size() == 3) {
    auto r = detail::canonical_rotation(right);
    if (!r) return std::nullopt;
    coeff *= CycloScalar::j_pow(2 * *r);
  }

  left.insert(left.end(), right.begin(), right.end());
  return Monomial{std::move(coeff), GradedWord(std::move(left))};
}

/// Finite linear combination of canonical words with nonzero coefficients.
class AlgebraElement {
 public:
  using Terms = std::map<GradedWord, CycloScalar>;

  AlgebraElement() = default;
  AlgebraElement(const GradedWord& w) { add_term(CycloScalar(1), w); }  // NOLINT: words embed implicitly
  AlgebraElement(const Generator& g) : AlgebraElement(GradedWord{g}) {}  // NOLINT
  AlgebraElement(const CycloScalar& c, const GradedWord& w) { add_term(c, w); }

  static AlgebraElement unit() { return AlgebraElement(GradedWord{}); }

  /// Adds c * w after normalising w.
  AlgebraElement& add_term(const CycloScalar& c, const GradedWord& w, std::size_t cap = kDefaultWordCap) {
    if (c.is_zero()) return *this;
    auto nf = normal_form(w, cap);
    if (!nf) return *this;
    accumulate(c * nf->coefficient, nf->word);
    return *this;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  CycloScalar coefficient(const GradedWord& canonical) const {
    auto it = terms_.find(canonical);
    return it == terms_.end() ? CycloScalar(0) : it->second;
  }

  /// Grade of a homogeneous element, nullopt if mixed. Zero reports grade 0.
  std::optional<int> grade() const {
    std::optional<int> g;
    for (const auto& [w, c] : terms_) {
      if (!g) g = w.grade();
      else if (*g != w.grade()) return std::nullopt;
    }
    return g.value_or(0);
  }

  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const AlgebraElement& a, const AlgebraElement& b) { return !(a == b); }

  AlgebraElement& operator+=(const AlgebraElement& o) {
    for (const auto& [w, c] : o.terms_) accumulate(c, w);
    return *this;
  }
  AlgebraElement operator-() const {
    AlgebraElement out;
    for (const auto& [w, c] : terms_) out.terms_.emplace(w, -c);
    return out;
  }
  AlgebraElement& operator-=(const AlgebraElement& o) { return *this += -o; }
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }

  friend AlgebraElement operator*(const CycloScalar& s, const AlgebraElement& x) {
    AlgebraElement out;
    if (s.is_zero()) return out;
    for (const auto& [w, c] : x.terms_) out.terms_.emplace(w, s * c);
    return out;
  }

  /// Algebra product; words are concatenated and renormalised.
  friend AlgebraElement operator*(const AlgebraElement& x, const AlgebraElement& y) {
    AlgebraElement out;
    for (const auto& [wx, cx] : x.terms_)
      for (const auto& [wy, cy] : y.terms_) out.add_term(cx * cy, wx + wy);
    return out;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [w, c] : terms_) {
      if (!out.empty()) out += " + ";
      out += "(" + c.to_string() + ")";
      if (!w.empty()) out += " " + w.to_string();
    }
    return out;
  }

  friend std::ostream& operator<<(std::ostream& os, const AlgebraElement& x) { return os << x.to_string(); }

 private:
  void accumulate(const CycloScalar& c, const GradedWord& canonical) {
    auto [it, inserted] = terms_.try_emplace(canonical, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Terms terms_;
};

inline AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y) { return x * y; }

/// Antilinear automorphism exchanging each family with its conjugate.
/// Word order is kept: reversing it is incompatible with the relations.
inline AlgebraElement conjugate(const AlgebraElement& x) {
  AlgebraElement out;
  for (const auto& [w, c] : x.terms()) {
    std::vector<Generator> s = w.symbols();
    for (auto& g : s) g.family = conjugate_family(g.family);
    out.add_term(c.conj(), GradedWord(std::move(s)));
  }
  return out;
}

/// Which part of a word-length slice enumerate_basis returns.
enum class WordSector : std::uint8_t {
  unbarred,  // grade-1 generators only
  barred,    // grade-2 generators only
  all,       // every canonical word, including mixed ones
};

namespace detail {

// Canonical single-family blocks of the given length, in lexicographic order.
inline std::vector<std::vector<Generator>> canonical_blocks(Family f, int n, int length) {
  std::vector<std::vector<Generator>> out;
  if (length == 0) {
    out.emplace_back();
    return out;
  }
  if (length > 3) return out;
  std::vector<int> idx(static_cast<std::size_t>(length), 1);
  while (true) {
    std::vector<Generator> block;
    for (int a : idx) block.push_back({f, a});
    bool keep = true;
    if (length == 3) {
      std::vector<Generator> probe = block;
      auto r = canonical_rotation(probe);
      keep = r.has_value() && *r == 0;
    }
    if (keep) out.push_back(std::move(block));
    int pos = length - 1;
    while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == n) idx[static_cast<std::size_t>(pos--)] = 1;
    if (pos < 0) break;
    ++idx[static_cast<std::size_t>(pos)];
  }
  return out;
}

}  // namespace detail

/// Canonical monomials of a fixed length; these are linearly independent.
inline std::vector<GradedWord> enumerate_basis(FamilyPair pair, int n, int length,
                                               WordSector sector = WordSector::unbarred) {
  std::vector<GradedWord> out;
  if (length < 0 || n < 1) return out;
  for (int a = 0; a <= std::min(length, 3); ++a) {
    const int b = length - a;
    if (b > 3) continue;
    if (sector == WordSector::unbarred && b != 0) continue;
    if (sector == WordSector::barred && a != 0) continue;
    for (const auto& lb : detail::canonical_blocks(unbarred(pair), n, a))
      for (const auto& rb : detail::canonical_blocks(barred(pair), n, b)) {
        std::vector<Generator> s = lb;
        s.insert(s.end(), rb.begin(), rb.end());
        out.emplace_back(std::move(s));
      }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Phase picked up when a grade-1 block of `left_len` symbols is carried
/// through a grade-2 block of `right_len` symbols, one adjacent x y -> y x
/// exchange (factor -j) at a time.
inline CycloScalar block_exchange_phase(int left_len, int right_len) {
  const CycloScalar minus_j = -CycloScalar::j();
  CycloScalar phase(1);
  for (int moved = 0; moved < left_len; ++moved)
    for (int step = 0; step < right_len; ++step) phase *= minus_j;
  return phase;
}

/// Phase relating psi psi-bar to psi-bar psi for cubic blocks: (-j)^9 = -1.
/// `n` selects the generator count the witness words are drawn from; the
/// phase itself is independent of the indices involved.
inline CycloScalar anticommutation_witness(int n) {
  if (n < 2) throw std::invalid_argument("no nonvanishing cubic words for fewer than two generators");
  const auto u = enumerate_basis(FamilyPair::theta, n, 3, WordSector::unbarred).front();
  const auto v = enumerate_basis(FamilyPair::theta, n, 3, WordSector::barred).front();
  const auto uv = normal_form(u + v);
  const auto vu = normal_form(v + u);
  // vu = (phase of v u) * canon; uv = canon, so u v = vu_phase^{-1} * v u.
  const CycloScalar witness = uv->coefficient / vu->coefficient;
  if (witness != block_exchange_phase(3, 3)) throw std::logic_error("inconsistent exchange phase");
  return witness;
}

}  // namespace quarkalg

#endif  // QUARKALG_GRADED_ALGEBRA_HPP
