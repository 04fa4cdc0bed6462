#include <gtest/gtest.h>

#include <map>

#include "quarkalg/invariant_forms.hpp"
#include "quarkalg/sampling.hpp"

using namespace quarkalg;

namespace {

const CycloScalar j = CycloScalar::j();
const CycloScalar j2 = CycloScalar::j2();
const CycloScalar i = CycloScalar::i();

// Dual pairing through the normal form: every raw triple x with
// x = c * w in the algebra contributes t(x) / c to the canonical word w.
std::map<GradedWord, std::vector<CycloScalar>> pairing_table(const CyclicTensor3& t, Family f) {
  std::map<GradedWord, std::vector<CycloScalar>> table;
  for (const auto& idx : t.all_triples()) {
    const auto nf = normal_form({{f, idx[0]}, {f, idx[1]}, {f, idx[2]}});
    if (!nf) continue;
    auto& row = table[nf->word];
    row.resize(t.label_count());
    for (std::size_t l = 0; l < t.label_count(); ++l) row[l] += t.at(l, idx) / nf->coefficient;
  }
  return table;
}

}  // namespace

TEST(Rho, Components) {
  const auto rho = make_rho();
  EXPECT_EQ(rho.at(0, {1, 2, 1}), CycloScalar(1));
  EXPECT_EQ(rho.at(0, {2, 1, 1}), j2);
  EXPECT_EQ(rho.at(0, {1, 1, 2}), j);
  EXPECT_EQ(rho.at(1, {2, 1, 2}), CycloScalar(1));
  EXPECT_EQ(rho.at(1, {1, 2, 2}), j2);
  EXPECT_EQ(rho.at(1, {2, 2, 1}), j);
  EXPECT_EQ(rho.support(0).size(), 3u);
  EXPECT_TRUE(rho.at(0, {2, 1, 2}).is_zero());
  EXPECT_TRUE(rho.at(1, {1, 1, 1}).is_zero());
  for (const auto& idx : rho.all_triples())
    for (std::size_t l = 0; l < 2; ++l) {
      EXPECT_EQ(rho.at(l, idx), j * rho.at(l, {idx[1], idx[2], idx[0]}));
      EXPECT_EQ(rho.at(l, idx), j2 * rho.at(l, {idx[2], idx[0], idx[1]}));
    }
}

TEST(Rho, Conjugate) {
  const auto bar = make_rho_bar();
  EXPECT_EQ(bar.at(0, {1, 2, 1}), CycloScalar(1));
  EXPECT_EQ(bar.at(0, {2, 1, 1}), j);
  EXPECT_EQ(bar.omega(), j2);
  EXPECT_EQ(check_cyclic_consistency(bar), j2);
}

TEST(K, Components) {
  const auto k = make_K();
  ASSERT_EQ(k.label_count(), 8u);
  EXPECT_EQ(k.labels().front(), "3+");
  EXPECT_EQ(k.at(0, {1, 2, 1}), CycloScalar(1));
  EXPECT_EQ(k.at(0, {1, 1, 2}), j2);
  EXPECT_EQ(k.at(0, {2, 1, 1}), j);
  EXPECT_EQ(k.at(6, {1, 2, 3}), CycloScalar(1));
  EXPECT_EQ(k.at(6, {2, 3, 1}), j);
  EXPECT_EQ(k.at(7, {3, 2, 1}), j);

  const auto printed = make_K_as_printed();
  EXPECT_EQ(printed.at(6, {2, 3, 1}), j2);
  EXPECT_EQ(printed.at(6, {3, 1, 2}), j);
  EXPECT_EQ(printed.at(7, {3, 2, 1}), j2);
}

TEST(K, OrthogonalWithNormThree) {
  const auto k = make_K();
  for (std::size_t a = 0; a < 8; ++a)
    for (std::size_t b = 0; b < 8; ++b) {
      CycloScalar sum;
      for (const auto& idx : k.all_triples()) sum += k.at(a, idx) * k.at(b, idx).conj();
      EXPECT_EQ(sum, CycloScalar(a == b ? 3 : 0)) << a << "," << b;
      EXPECT_EQ(pairing(k, a, k, b), sum);
    }
}

TEST(CyclicConsistency, Detects) {
  EXPECT_EQ(check_cyclic_consistency(make_rho()), j);
  EXPECT_EQ(check_cyclic_consistency(make_K()), j2);
  EXPECT_FALSE(check_cyclic_consistency(make_K_as_printed()));
  CyclicTensor3 single(2, {"x"}, j);
  single.set(0, {1, 1, 2}, CycloScalar(1));
  EXPECT_FALSE(check_cyclic_consistency(single));
}

TEST(ApplyThreeForm, Examples) {
  const auto rho = make_rho();
  const auto psi = apply_three_form(rho, GradedWord{theta(1), theta(2), theta(1)});
  // t1 t2 t1 = j^2 t1 t1 t2, and t1 t1 t2 pairs to 3j with rho^1.
  EXPECT_EQ(psi[0], CycloScalar(3));
  EXPECT_EQ(apply_three_form(rho, GradedWord{theta(1), theta(1), theta(2)})[0], CycloScalar(3) * j);
  EXPECT_EQ(psi[1], CycloScalar(0));
  const auto zero = apply_three_form(rho, AlgebraElement());
  EXPECT_EQ(zero, (std::vector<CycloScalar>{0, 0}));
  EXPECT_THROW(apply_three_form(rho, GradedWord{theta(1), theta(2)}), std::domain_error);
  EXPECT_THROW(apply_three_form(rho, GradedWord{theta_bar(1), theta_bar(1), theta_bar(2)}), std::domain_error);
  EXPECT_THROW(apply_three_form(rho, GradedWord{q(1), q(1), q(3)}), std::domain_error);
}

TEST(ApplyThreeForm, MatchesNormalFormPairing) {
  for (const auto& [t, f] : {std::pair{make_rho(), Family::theta}, std::pair{make_K(), Family::q}}) {
    const auto table = pairing_table(t, f);
    Rng rng(21);
    for (int trial = 0; trial < 50; ++trial) {
      AlgebraElement e;
      std::vector<CycloScalar> expected(t.label_count());
      for (const auto& [w, row] : table) {
        const CycloScalar c = random_cyclo(rng);
        e += AlgebraElement(c, w);
        for (std::size_t l = 0; l < row.size(); ++l) expected[l] += c * row[l];
      }
      EXPECT_EQ(apply_three_form(t, e), expected);
    }
  }
}

TEST(PiMatrices, Entries) {
  const auto pi = make_pi();
  const auto pib = make_pi_bar();
  ASSERT_EQ(pi.size(), 4u);
  EXPECT_EQ(pi[0].matrix, j2 * i * ExactMatrix::identity(2));
  EXPECT_EQ(pi[1].matrix(0, 1), j2 * i);
  EXPECT_EQ(pib[3].matrix(1, 1), j * i);
  for (std::size_t mu = 0; mu < 4; ++mu) EXPECT_EQ(pi[mu].matrix + j * pib[mu].matrix.transpose(), ExactMatrix(2, 2));
  EXPECT_EQ(pi_symmetry_factor(), -j);
}

TEST(PiMatrices, EpsilonIsAntisymmetric) {
  const auto eps = make_epsilon();
  EXPECT_EQ(eps.undotted, (ExactMatrix{{0, 1}, {-1, 0}}));
  EXPECT_EQ(eps.undotted.transpose(), CycloScalar(-1) * eps.undotted);
  EXPECT_EQ(eps.dotted, eps.undotted);
}

TEST(GellMann, Normalisation) {
  for (int a = 1; a <= 8; ++a) {
    const auto la = gell_mann(a);
    EXPECT_EQ(la.adjoint(), la);
    EXPECT_TRUE(trace(la).is_zero());
    for (int b = 1; b <= 8; ++b) EXPECT_EQ(trace(ExactMatrix(la * gell_mann(b))), CycloScalar(a == b ? 2 : 0));
  }
  EXPECT_EQ(gell_mann(0), ExactMatrix::identity(3));
  const auto forms = make_nine_forms();
  ASSERT_EQ(forms.size(), 9u);
  EXPECT_EQ(forms[0].matrix, j2 * i * ExactMatrix::identity(3));
}

TEST(Pauli, Algebra) {
  for (int a = 1; a <= 3; ++a) EXPECT_EQ(pauli(a) * pauli(a), ExactMatrix::identity(2));
  EXPECT_EQ(pauli(1) * pauli(2), i * pauli(3));
}

TEST(TensorJson, RoundTrip) {
  for (const auto& t : {make_rho(), make_K(), make_K_as_printed()}) {
    const auto text = tensor_to_json(t).dump();
    EXPECT_EQ(tensor_from_json(nlohmann::json::parse(text), t.dimension(), t.omega()), t);
  }
}

TEST(Tensor, IndexChecks) {
  const auto rho = make_rho();
  EXPECT_THROW(rho.at(0, {0, 1, 1}), std::out_of_range);
  EXPECT_THROW(rho.at(0, {3, 1, 1}), std::out_of_range);
  EXPECT_THROW(rho.at(2, {1, 1, 1}), std::out_of_range);
}
