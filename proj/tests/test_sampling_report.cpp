#include <gtest/gtest.h>

#include "quarkalg/report.hpp"
#include "quarkalg/sampling.hpp"
#include "quarkalg/verify.hpp"

using namespace quarkalg;

TEST(Sampling, Deterministic) {
  for (std::uint64_t s : {0ull, 42ull, 7ull}) {
    EXPECT_EQ(sample_sl2c(s), sample_sl2c(s));
    EXPECT_EQ(sample_su3(s), sample_su3(s));
  }
  EXPECT_NE(sample_su3(1), sample_su3(2));
  EXPECT_EQ(sub_seed(42, 3), 42u ^ 3u);
}

TEST(Sampling, GroupProperties) {
  for (std::uint64_t s = 0; s < 200; ++s) {
    EXPECT_NEAR(std::abs(determinant(sample_sl2c(s)) - ComplexFloat(1.0, 0.0)), 0.0, 1e-12);
    const FloatMatrix u = sample_su3(s);
    EXPECT_LE(max_abs_diff(FloatMatrix(u * u.adjoint()), FloatMatrix::identity(3)), 1e-12);
    EXPECT_NEAR(std::abs(determinant(u) - ComplexFloat(1.0, 0.0)), 0.0, 1e-12);
  }
}

TEST(Sampling, ExpmOfDiagonal) {
  const FloatMatrix e = expm(FloatMatrix::diagonal({ComplexFloat(3.0, 0.0), ComplexFloat(0.0, 2.0)}));
  EXPECT_NEAR(std::abs(e(0, 0) - std::exp(3.0)), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(e(1, 1) - std::exp(ComplexFloat(0.0, 2.0))), 0.0, 1e-14);
}

TEST(Sampling, ExactSamplers) {
  Rng rng(3);
  for (int k = 0; k < 30; ++k) {
    EXPECT_EQ(determinant(random_exact_sl2(rng)), CycloScalar(1));
    const ExactMatrix p = random_exact_phase_permutation(rng);
    EXPECT_EQ(p * p.adjoint(), ExactMatrix::identity(3));
    EXPECT_FALSE(determinant(random_exact_matrix(rng, 3)).is_zero());
  }
}

TEST(Report, JsonRoundTrip) {
  const CheckReport r{"cover/float", Status::fail, 0.1, 100, 42, "quote \" and\nnewline"};
  const auto text = report_to_json(r);
  EXPECT_EQ(text.find('\n'), std::string::npos);
  const auto back = report_from_json(nlohmann::json::parse(text));
  EXPECT_EQ(back.name, r.name);
  EXPECT_EQ(back.status, r.status);
  EXPECT_EQ(back.residual, r.residual);
  EXPECT_EQ(back.samples, r.samples);
  EXPECT_EQ(back.seed, r.seed);
  EXPECT_EQ(back.details, r.details);
  EXPECT_EQ(format_number(0.1), "0.10000000000000001");
  EXPECT_EQ(reports_to_json({}), "[\n]\n");
}

TEST(Runner, SuitesAndConfig) {
  const auto names = suite_names();
  EXPECT_EQ(names.size(), 11u);
  EXPECT_EQ(names.back(), "all");
  RunConfig cfg;
  cfg.suite = "nope";
  EXPECT_THROW(run_suites(cfg), std::invalid_argument);
  cfg.suite = "metric";
  cfg.samples = 0;
  EXPECT_THROW(run_suites(cfg), std::invalid_argument);
  cfg.samples = 5;
  cfg.tolerance = 0.0;
  EXPECT_THROW(run_suites(cfg), std::invalid_argument);
  cfg.tolerance = 1e-9;
  const auto reports = run_suites(cfg);
  ASSERT_FALSE(reports.empty());
  EXPECT_TRUE(all_passed(reports));
  for (const auto& r : reports) EXPECT_EQ(r.name.rfind("metric/", 0), 0u);
}

TEST(Runner, BackendSelection) {
  RunConfig cfg;
  cfg.suite = "nine-form";
  cfg.samples = 3;
  cfg.backend = Backend::exact;
  auto reports = run_suites(cfg);
  ASSERT_EQ(reports.size(), 1u);
  EXPECT_EQ(reports[0].name, "nine-form/exact");
  cfg.backend = Backend::floating;
  reports = run_suites(cfg);
  ASSERT_EQ(reports.size(), 1u);
  EXPECT_EQ(reports[0].name, "nine-form/float");
}

TEST(Runner, ReportsAreReproducible) {
  RunConfig cfg;
  cfg.suite = "cover";
  cfg.samples = 10;
  cfg.seed = 7;
  EXPECT_EQ(reports_to_json(run_suites(cfg)), reports_to_json(run_suites(cfg)));
}
