// Invariant tensors on the cubic algebra: the cyclic three-forms rho and
// rho-bar (two generators), the eight K three-forms (three generators), the
// pi / pi-bar two-forms built on Pauli matrices, the spinorial metric and
// the nine Gell-Mann two-forms.

#ifndef QUARKALG_INVARIANT_FORMS_HPP
#define QUARKALG_INVARIANT_FORMS_HPP

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "quarkalg/cyclo.hpp"
#include "quarkalg/graded_algebra.hpp"
#include "quarkalg/matrix.hpp"

namespace quarkalg {

using IndexTriple = std::array<int, 3>;

/// Rank-3 component table with one output label per slice. Indices are
/// 1-based. `omega` is the declared cyclic phase t(a,b,c) = omega * t(b,c,a).
class CyclicTensor3 {
 public:
  struct Entry {
    IndexTriple index;
    CycloScalar value;
  };

  CyclicTensor3(int n, std::vector<std::string> labels, CycloScalar omega)
      : n_(n), labels_(std::move(labels)), omega_(std::move(omega)),
        data_(labels_.size() * static_cast<std::size_t>(n * n * n)) {}

  /// One label per orbit: the base triple gets 1, its first left rotation
  /// omega^-1, its second omega^-2.
  static CyclicTensor3 from_orbits(int n, const CycloScalar& omega,
                                   const std::vector<std::pair<std::string, IndexTriple>>& orbits) {
    std::vector<std::string> labels;
    for (const auto& o : orbits) labels.push_back(o.first);
    CyclicTensor3 t(n, std::move(labels), omega);
    const CycloScalar step = omega.inverse();
    for (std::size_t l = 0; l < orbits.size(); ++l) {
      IndexTriple idx = orbits[l].second;
      CycloScalar value(1);
      for (int r = 0; r < 3; ++r) {
        t.set(l, idx, value);
        idx = {idx[1], idx[2], idx[0]};
        value *= step;
      }
    }
    return t;
  }

  int dimension() const { return n_; }
  std::size_t label_count() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const CycloScalar& omega() const { return omega_; }

  const CycloScalar& at(std::size_t label, const IndexTriple& idx) const { return data_[offset(label, idx)]; }
  void set(std::size_t label, const IndexTriple& idx, CycloScalar value) { data_[offset(label, idx)] = std::move(value); }

  /// Nonzero entries of one label in lexicographic index order.
  std::vector<Entry> support(std::size_t label) const {
    std::vector<Entry> out;
    for (const auto& idx : all_triples())
      if (!at(label, idx).is_zero()) out.push_back({idx, at(label, idx)});
    return out;
  }

  std::vector<IndexTriple> all_triples() const {
    std::vector<IndexTriple> out;
    for (int a = 1; a <= n_; ++a)
      for (int b = 1; b <= n_; ++b)
        for (int c = 1; c <= n_; ++c) out.push_back({a, b, c});
    return out;
  }

  CyclicTensor3 conjugated() const {
    CyclicTensor3 out(n_, labels_, omega_.conj());
    for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = data_[k].conj();
    return out;
  }

  friend bool operator==(const CyclicTensor3& a, const CyclicTensor3& b) {
    return a.n_ == b.n_ && a.labels_ == b.labels_ && a.omega_ == b.omega_ && a.data_ == b.data_;
  }

 private:
  std::size_t offset(std::size_t label, const IndexTriple& idx) const {
    for (int v : idx)
      if (v < 1 || v > n_) throw std::out_of_range("tensor index out of range");
    if (label >= labels_.size()) throw std::out_of_range("tensor label out of range");
    const auto n = static_cast<std::size_t>(n_);
    return label * n * n * n + static_cast<std::size_t>(idx[0] - 1) * n * n +
           static_cast<std::size_t>(idx[1] - 1) * n + static_cast<std::size_t>(idx[2] - 1);
  }

  int n_;
  std::vector<std::string> labels_;
  CycloScalar omega_;
  std::vector<CycloScalar> data_;
};

/// rho^1 on the orbit of (121), rho^2 on (212). The default phase j follows
/// rho_121 = 1, rho_211 = j^2, rho_112 = j; pass j^2 for the swapped listing.
inline CyclicTensor3 make_rho(const CycloScalar& omega = CycloScalar::j()) {
  return CyclicTensor3::from_orbits(2, omega, {{"1", {1, 2, 1}}, {"2", {2, 1, 2}}});
}

inline CyclicTensor3 make_rho_bar(const CycloScalar& omega = CycloScalar::j()) {
  return make_rho(omega).conjugated();
}

/// The eight three-forms on three generators, every orbit with phase j^2.
inline CyclicTensor3 make_K() {
  return CyclicTensor3::from_orbits(3, CycloScalar::j2(),
                                    {{"3+", {1, 2, 1}},
                                     {"3-", {2, 1, 2}},
                                     {"2+", {3, 1, 3}},
                                     {"2-", {1, 3, 1}},
                                     {"1+", {2, 3, 2}},
                                     {"1-", {3, 2, 3}},
                                     {"7", {1, 2, 3}},
                                     {"8", {1, 3, 2}}});
}

/// The K listing entry by entry as originally tabulated. Labels 7 and 8 carry
/// phase j instead of j^2, so this tensor has no single cyclic phase.
inline CyclicTensor3 make_K_as_printed() {
  CyclicTensor3 t = make_K();
  const CycloScalar j = CycloScalar::j(), j2 = CycloScalar::j2();
  t.set(6, {2, 3, 1}, j2);
  t.set(6, {3, 1, 2}, j);
  t.set(7, {3, 2, 1}, j2);
  t.set(7, {2, 1, 3}, j);
  return t;
}

/// Sum over all index triples of a(l, abc) * conj(b(m, abc)).
inline CycloScalar pairing(const CyclicTensor3& a, std::size_t la, const CyclicTensor3& b, std::size_t lb) {
  CycloScalar sum;
  for (const auto& e : a.support(la)) {
    const auto& other = b.at(lb, e.index);
    if (!other.is_zero()) sum += e.value * other.conj();
  }
  return sum;
}

/// The single phase omega with t(a,b,c) = omega * t(b,c,a) on every nonzero
/// entry, provided it is j or j^2; nullopt otherwise.
inline std::optional<CycloScalar> check_cyclic_consistency(const CyclicTensor3& t) {
  std::optional<CycloScalar> omega;
  for (std::size_t l = 0; l < t.label_count(); ++l) {
    for (const auto& e : t.support(l)) {
      const auto& rotated = t.at(l, {e.index[1], e.index[2], e.index[0]});
      if (rotated.is_zero()) return std::nullopt;
      CycloScalar ratio = e.value / rotated;
      if (!omega) omega = ratio;
      else if (*omega != ratio) return std::nullopt;
    }
  }
  if (!omega || (*omega != CycloScalar::j() && *omega != CycloScalar::j2())) return std::nullopt;
  return omega;
}

/// Pairs t with a combination of canonical cubic grade-1 words: each word w
/// contributes its coefficient times sum_r t(rot^r w) * j^r, where
/// rot^r w = j^-r w in the algebra.
inline std::vector<CycloScalar> apply_three_form(const CyclicTensor3& t, const AlgebraElement& e) {
  std::vector<CycloScalar> out(t.label_count());
  for (const auto& [w, c] : e.terms()) {
    if (w.size() != 3) throw std::domain_error("three-form needs cubic words, got '" + w.to_string() + "'");
    for (const auto& s : w.symbols()) {
      if (s.grade() != 1 || s.family != w[0].family)
        throw std::domain_error("three-form needs grade-1 words, got '" + w.to_string() + "'");
      if (s.index > t.dimension()) throw std::domain_error("word index exceeds tensor dimension");
    }
    IndexTriple idx{w[0].index, w[1].index, w[2].index};
    for (std::size_t l = 0; l < t.label_count(); ++l) {
      CycloScalar sum;
      IndexTriple cur = idx;
      for (int r = 0; r < 3; ++r) {
        sum += t.at(l, cur) * CycloScalar::j_pow(r);
        cur = {cur[1], cur[2], cur[0]};
      }
      out[l] += c * sum;
    }
  }
  return out;
}

/// sigma^0 = identity, sigma^1..3 the Pauli matrices.
inline ExactMatrix pauli(int mu) {
  const CycloScalar i = CycloScalar::i();
  switch (mu) {
    case 0: return ExactMatrix{{1, 0}, {0, 1}};
    case 1: return ExactMatrix{{0, 1}, {1, 0}};
    case 2: return ExactMatrix{{0, -i}, {i, 0}};
    case 3: return ExactMatrix{{1, 0}, {0, -1}};
    default: throw std::out_of_range("pauli index must be 0..3");
  }
}

/// lambda^0 = identity, lambda^1..8 the Gell-Mann matrices.
inline ExactMatrix gell_mann(int k) {
  const CycloScalar i = CycloScalar::i();
  switch (k) {
    case 0: return ExactMatrix::identity(3);
    case 1: return ExactMatrix{{0, 1, 0}, {1, 0, 0}, {0, 0, 0}};
    case 2: return ExactMatrix{{0, -i, 0}, {i, 0, 0}, {0, 0, 0}};
    case 3: return ExactMatrix{{1, 0, 0}, {0, -1, 0}, {0, 0, 0}};
    case 4: return ExactMatrix{{0, 0, 1}, {0, 0, 0}, {1, 0, 0}};
    case 5: return ExactMatrix{{0, 0, -i}, {0, 0, 0}, {i, 0, 0}};
    case 6: return ExactMatrix{{0, 0, 0}, {0, 0, 1}, {0, 1, 0}};
    case 7: return ExactMatrix{{0, 0, 0}, {0, 0, -i}, {0, i, 0}};
    case 8: {
      const CycloScalar s = CycloScalar::sqrt3() / CycloScalar(3);
      return ExactMatrix::diagonal({s, s, CycloScalar(-2) * s});
    }
    default: throw std::out_of_range("Gell-Mann index must be 0..8");
  }
}

struct TwoForm {
  int mu;
  ExactMatrix matrix;
};

/// pi^mu_{A Bdot} = j^2 i sigma^mu, rows undotted.
inline std::vector<TwoForm> make_pi() {
  std::vector<TwoForm> out;
  const CycloScalar phase = CycloScalar::j2() * CycloScalar::i();
  for (int mu = 0; mu < 4; ++mu) out.push_back({mu, phase * pauli(mu)});
  return out;
}

/// pi-bar^mu_{Bdot A} = -j i sigma^mu_{A Bdot}, rows dotted.
inline std::vector<TwoForm> make_pi_bar() {
  std::vector<TwoForm> out;
  const CycloScalar phase = -(CycloScalar::j() * CycloScalar::i());
  for (int mu = 0; mu < 4; ++mu) out.push_back({mu, phase * pauli(mu).transpose()});
  return out;
}

/// The scalar c with pi^mu_{A Bdot} = c * pi-bar^mu_{Bdot A} for every mu,
/// or nullopt if no single scalar works.
inline std::optional<CycloScalar> pi_symmetry_factor() {
  const auto pi = make_pi();
  const auto pib = make_pi_bar();
  std::optional<CycloScalar> factor;
  for (std::size_t mu = 0; mu < 4; ++mu) {
    const ExactMatrix bar_t = pib[mu].matrix.transpose();
    for (std::size_t r = 0; r < 2; ++r)
      for (std::size_t c = 0; c < 2; ++c) {
        const auto& a = pi[mu].matrix(r, c);
        const auto& b = bar_t(r, c);
        if (a.is_zero() != b.is_zero()) return std::nullopt;
        if (a.is_zero()) continue;
        CycloScalar ratio = a / b;
        if (!factor) factor = ratio;
        else if (*factor != ratio) return std::nullopt;
      }
  }
  return factor;
}

struct EpsilonMetric {
  ExactMatrix undotted;
  ExactMatrix dotted;
};

inline EpsilonMetric make_epsilon() {
  const ExactMatrix e{{0, 1}, {-1, 0}};
  return {e, e};
}

/// P^i_{a bdot} = j^2 i lambda^i for i = 0..8.
inline std::vector<TwoForm> make_nine_forms() {
  std::vector<TwoForm> out;
  const CycloScalar phase = CycloScalar::j2() * CycloScalar::i();
  for (int k = 0; k < 9; ++k) out.push_back({k, phase * gell_mann(k)});
  return out;
}

/// [{label, indices, value}] over the nonzero entries, labels in order.
inline nlohmann::json tensor_to_json(const CyclicTensor3& t) {
  nlohmann::json out = nlohmann::json::array();
  for (std::size_t l = 0; l < t.label_count(); ++l)
    for (const auto& e : t.support(l))
      out.push_back({{"label", t.labels()[l]},
                     {"indices", {e.index[0], e.index[1], e.index[2]}},
                     {"value", e.value.to_string()}});
  return out;
}

inline CyclicTensor3 tensor_from_json(const nlohmann::json& j, int n, const CycloScalar& omega) {
  std::vector<std::string> labels;
  for (const auto& row : j) {
    const auto label = row.at("label").get<std::string>();
    if (std::find(labels.begin(), labels.end(), label) == labels.end()) labels.push_back(label);
  }
  CyclicTensor3 t(n, labels, omega);
  for (const auto& row : j) {
    const auto label = row.at("label").get<std::string>();
    const auto l = static_cast<std::size_t>(std::find(labels.begin(), labels.end(), label) - labels.begin());
    const auto idx = row.at("indices").get<std::vector<int>>();
    if (idx.size() != 3) throw std::invalid_argument("tensor entry needs three indices");
    t.set(l, {idx[0], idx[1], idx[2]}, CycloScalar::parse(row.at("value").get<std::string>()));
  }
  return t;
}

}  // namespace quarkalg

#endif  // QUARKALG_INVARIANT_FORMS_HPP
