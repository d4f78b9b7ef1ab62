#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "sensornoise/calibration.hpp"
#include "sensornoise/distributions.hpp"
#include "sensornoise/errors.hpp"
#include "sensornoise/fit_line.hpp"

using namespace sensornoise;

TEST(FitLine, ExactLineHasZeroResidual) {
  const std::vector<double> x{1, 2, 3}, y{1.5, 2.0, 2.5};
  const FitLine f = fit_line(x, y);
  EXPECT_NEAR(f.slope, 0.5, 1e-15);
  EXPECT_NEAR(f.intercept, 1.0, 1e-15);
  EXPECT_NEAR(f.resid_std, 0.0, 1e-15);
  EXPECT_EQ(f.n_points, 3);
}

TEST(FitLine, MatchesNormalEquations) {
  std::vector<double> x, y;
  RngStream rng(1, 1);
  for (int i = 0; i < 30; ++i) {
    x.push_back(i * 0.37 - 2);
    y.push_back(1.7 * x.back() - 0.4 + draw_gaussian(0.3, rng));
  }
  const auto ref = oracle::ols(x, y);
  const FitLine f = fit_line(x, y);
  EXPECT_NEAR(f.slope, ref.slope, 1e-12);
  EXPECT_NEAR(f.intercept, ref.intercept, 1e-12);
  EXPECT_NEAR(f.resid_std, ref.resid_std, 1e-12);
}

TEST(FitLine, Errors) {
  EXPECT_THROW(fit_line(std::vector<double>{1}, std::vector<double>{1}), InsufficientDataError);
  EXPECT_THROW(fit_line(std::vector<double>{2, 2, 2}, std::vector<double>{1, 2, 3}), DegenerateDataError);
  EXPECT_EQ(fit_line(std::vector<double>{0, 1}, std::vector<double>{3, 4}).resid_std, 0.0);
}

TEST(FitJointModel, CollinearPointsAreExact) {
  std::map<int, IsoParams> per_iso;
  // log2 sigma_tl = 0.5 log2 K + 1, log2 sigma_r = -0.25 log2 K - 1.
  for (auto [iso, k] : {std::pair{100, 1.0}, {400, 4.0}, {1600, 16.0}}) {
    per_iso[iso] = IsoParams{k, 0.1, std::exp2(0.5 * std::log2(k) + 1.0), std::exp2(-0.25 * std::log2(k) - 1.0)};
  }
  per_iso[400].lambda = -0.05;
  const auto m = fit_joint_model(per_iso);
  EXPECT_NEAR(m.tl_line.slope, 0.5, 1e-12);
  EXPECT_NEAR(m.tl_line.intercept, 1.0, 1e-12);
  EXPECT_NEAR(m.tl_line.resid_std, 0.0, 1e-12);
  EXPECT_NEAR(m.row_line.slope, -0.25, 1e-12);
  EXPECT_NEAR(m.row_line.intercept, -1.0, 1e-12);
  EXPECT_EQ(m.log_k_min, 0.0);
  EXPECT_EQ(m.log_k_max, 4.0);
  EXPECT_EQ(m.lambda_pool, (std::vector<double>{0.1, -0.05, 0.1}));
}

TEST(FitJointModel, RegressionOracleOnFiftyIsos) {
  std::map<int, IsoParams> per_iso;
  RngStream rng(2, 2);
  for (int i = 0; i < 50; ++i) {
    const double lk = -1.0 + 4.0 * rng.next_uniform();
    const double ls = 0.8 * lk + 0.1 + draw_gaussian(0.05, rng);
    per_iso[100 + 50 * i] = IsoParams{std::exp2(lk), 0.0, std::exp2(ls), 1.0};
  }
  const auto m = fit_joint_model(per_iso);
  EXPECT_GE(m.tl_line.slope, 0.75);
  EXPECT_LE(m.tl_line.slope, 0.85);
  EXPECT_GE(m.tl_line.resid_std, 0.035);
  EXPECT_LE(m.tl_line.resid_std, 0.065);
  EXPECT_EQ(m.tl_line.n_points, 50);
}

TEST(FitJointModel, OrderFree) {
  const std::vector<IsoParams> params{{1.2, 0.1, 3.0, 0.7}, {2.5, 0.0, 4.1, 1.1}, {0.6, -0.1, 2.2, 0.5},
                                      {5.0, 0.2, 7.5, 1.9}};
  std::map<int, IsoParams> a, b;
  const int isos_a[] = {100, 200, 300, 400};
  const int isos_b[] = {400, 100, 300, 200};
  for (std::size_t i = 0; i < params.size(); ++i) {
    a[isos_a[i]] = params[i];
    b[isos_b[i]] = params[i];
  }
  const auto ma = fit_joint_model(a), mb = fit_joint_model(b);
  EXPECT_NEAR(ma.tl_line.slope, mb.tl_line.slope, 1e-12);
  EXPECT_NEAR(ma.tl_line.intercept, mb.tl_line.intercept, 1e-12);
  EXPECT_NEAR(ma.tl_line.resid_std, mb.tl_line.resid_std, 1e-12);
  EXPECT_NEAR(ma.row_line.slope, mb.row_line.slope, 1e-12);
  EXPECT_EQ(ma.log_k_min, mb.log_k_min);
  EXPECT_EQ(ma.log_k_max, mb.log_k_max);
  auto pa = ma.lambda_pool, pb = mb.lambda_pool;
  std::sort(pa.begin(), pa.end());
  std::sort(pb.begin(), pb.end());
  EXPECT_EQ(pa, pb);
}

TEST(FitJointModel, Errors) {
  std::map<int, IsoParams> two{{100, {1, 0, 1, 1}}, {200, {2, 0, 2, 2}}};
  EXPECT_THROW(fit_joint_model(two), InsufficientDataError);
  two[300] = {4, 0, 0.0, 1};
  EXPECT_THROW(fit_joint_model(two), CalibrationError);
}

TEST(MakeProfile, CarriesPerIsoTable) {
  std::map<int, IsoParams> per_iso{{100, {1, 0, 1, 1}}, {200, {2, 0.1, 2, 2}}, {400, {4, 0.2, 4, 3}}};
  const auto p = make_profile("cam", per_iso);
  EXPECT_EQ(p.camera_id, "cam");
  EXPECT_EQ(p.per_iso, per_iso);
  EXPECT_EQ(p.joint, fit_joint_model(per_iso));
}
