// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "hyperrecon/classifier.hpp"
#include "hyperrecon/error.hpp"

namespace hyperrecon {
namespace {

// 2-D points padded into the 8-column count schema; padding columns are
// constant, which also exercises the zero-variance scaler path.
FeatureMatrix padded(const std::vector<std::pair<double, double>>& pts) {
  FeatureMatrix x;
  x.rows = pts.size();
  x.cols = kCountFeatures;
  x.values.assign(x.rows * x.cols, 0.0);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    x.values[i * x.cols] = pts[i].first;
    x.values[i * x.cols + 1] = pts[i].second;
    x.values[i * x.cols + 5] = 3.0;
  }
  return x;
}

double accuracy(const Model& m, const FeatureMatrix& x, const std::vector<bool>& y) {
  auto p = predict_proba(m, x);
  double ok = 0;
  for (std::size_t i = 0; i < y.size(); ++i) ok += (p[i] >= 0.5) == y[i];
  return ok / y.size();
}

void separable(FeatureMatrix& x, std::vector<bool>& y) {
  std::mt19937_64 rng(1);
  std::normal_distribution<double> noise(0.0, 0.5);
  std::vector<std::pair<double, double>> pts;
  for (int i = 0; i < 120; ++i) {
    const bool pos = i % 3 == 0;
    pts.emplace_back((pos ? 2.0 : -2.0) + noise(rng), noise(rng));
    y.push_back(pos);
  }
  x = padded(pts);
}

TEST(Model, ZeroWeightsGiveOneHalf) {
  auto m = Model::zeros(FeatureKind::kMotif);
  std::vector<double> row(52, 3.0);
  EXPECT_EQ(predict_proba(m, row), 0.5);
  EXPECT_GT(predict_proba(Model::constant(FeatureKind::kCount, true), std::vector<double>(8, 1.0)), 0.99);
  EXPECT_LT(predict_proba(Model::constant(FeatureKind::kCount, false), std::vector<double>(8, 1.0)), 0.01);
  EXPECT_THROW(predict_proba(m, std::vector<double>(8, 0.0)), ValidationError);
}

TEST(Model, MonotoneInPositiveDirection) {
  auto m = Model::zeros(FeatureKind::kCount, 4);
  m.w1(0, 2) = 1.0;
  m.w2[0] = 2.0;
  std::vector<double> row(8, 0.0);
  double last = predict_proba(m, row);
  for (int i = 1; i <= 5; ++i) {
    row[2] = i * 0.5;
    const double p = predict_proba(m, row);
    EXPECT_GT(p, last);
    last = p;
  }
}

TEST(Gradient, MatchesCentralDifferences) {
  std::mt19937_64 rng(3);
  std::normal_distribution<double> normal;
  for (int trial = 0; trial < 5; ++trial) {
    auto m = Model::zeros(FeatureKind::kCount, 6);
    for (Eigen::Index i = 0; i < m.w1.size(); ++i) m.w1.data()[i] = normal(rng);
    for (Eigen::Index i = 0; i < 6; ++i) {
      m.b1[i] = normal(rng);
      m.w2[i] = normal(rng);
    }
    m.b2 = normal(rng);
    Eigen::MatrixXd xs(15, 8);
    Eigen::VectorXd y(15);
    for (Eigen::Index i = 0; i < xs.size(); ++i) xs.data()[i] = normal(rng);
    for (Eigen::Index i = 0; i < 15; ++i) y[i] = i % 4 == 0;
    Gradient g;
    loss_and_gradient(m, xs, y, 2.5, &g);

    const double h = 1e-6;
    auto check = [&](double& param, double analytic) {
      const double keep = param;
      param = keep + h;
      const double up = loss_and_gradient(m, xs, y, 2.5, nullptr);
      param = keep - h;
      const double down = loss_and_gradient(m, xs, y, 2.5, nullptr);
      param = keep;
      const double numeric = (up - down) / (2 * h);
      EXPECT_LE(std::abs(numeric - analytic), 1e-4 * std::max(1e-3, std::abs(numeric)))
          << numeric << " vs " << analytic;
    };
    for (Eigen::Index i = 0; i < m.w1.size(); ++i) check(m.w1.data()[i], g.w1.data()[i]);
    for (Eigen::Index i = 0; i < 6; ++i) {
      check(m.b1[i], g.b1[i]);
      check(m.w2[i], g.w2[i]);
    }
    check(m.b2, g.b2);
  }
}

TEST(Train, SeparableSetIsFitAndLossFalls) {
  FeatureMatrix x;
  std::vector<bool> y;
  separable(x, y);
  TrainConfig cfg;
  cfg.seed = 4;
  TrainReport report;
  auto m = train(x, y, FeatureKind::kCount, cfg, &report);
  ASSERT_EQ(report.loss.size(), 2000u);
  for (int e = 1; e <= 10; ++e) EXPECT_LT(report.loss[e], report.loss[e - 1]);
  EXPECT_DOUBLE_EQ(report.pos_weight, 2.0);
  EXPECT_EQ(accuracy(m, x, y), 1.0);
}

TEST(Train, Xor) {
  auto x = padded({{0, 0}, {1, 1}, {0, 1}, {1, 0}});
  std::vector<bool> y{false, false, true, true};
  TrainConfig cfg;
  cfg.learning_rate = 1e-2;
  cfg.epochs = 1000;
  cfg.seed = 9;
  auto m = train(x, y, FeatureKind::kCount, cfg);
  EXPECT_EQ(accuracy(m, x, y), 1.0);
}

TEST(Train, DeterministicGivenSeed) {
  FeatureMatrix x;
  std::vector<bool> y;
  separable(x, y);
  TrainConfig cfg;
  cfg.epochs = 50;
  cfg.seed = 11;
  auto a = train(x, y, FeatureKind::kCount, cfg);
  auto b = train(x, y, FeatureKind::kCount, cfg);
  EXPECT_EQ(predict_proba(a, x), predict_proba(b, x));
  cfg.seed = 12;
  auto c = train(x, y, FeatureKind::kCount, cfg);
  EXPECT_NE(predict_proba(a, x), predict_proba(c, x));
}

TEST(Train, ScalerStandardizesTrainingData) {
  FeatureMatrix x;
  std::vector<bool> y;
  separable(x, y);
  TrainConfig cfg;
  cfg.epochs = 1;
  auto m = train(x, y, FeatureKind::kCount, cfg);
  auto xs = apply_scaler(m, x);
  for (Eigen::Index j = 0; j < xs.cols(); ++j) {
    const double mean = xs.col(j).mean();
    const double sd = std::sqrt((xs.col(j).array() - mean).square().mean());
    EXPECT_NEAR(mean, 0.0, 1e-9);
    if (j == 0 || j == 1) {
      EXPECT_NEAR(sd, 1.0, 1e-9);
    } else {
      EXPECT_EQ(m.scale[j], 1.0);  // constant column
      EXPECT_EQ(sd, 0.0);
    }
  }
}

TEST(Train, RejectsBadInput) {
  auto x = padded({{0, 0}, {1, 1}});
  TrainConfig cfg;
  cfg.epochs = 1;
  EXPECT_THROW(train(x, {true, true}, FeatureKind::kCount, cfg), ValidationError);
  EXPECT_THROW(train(x, {true}, FeatureKind::kCount, cfg), ValidationError);
  EXPECT_THROW(train(x, {true, false}, FeatureKind::kMotif, cfg), ValidationError);
  x.values[1] = std::nan("");
  EXPECT_THROW(train(x, {true, false}, FeatureKind::kCount, cfg), ValidationError);
}

TEST(Model, JsonRoundTrip) {
  FeatureMatrix x;
  std::vector<bool> y;
  separable(x, y);
  TrainConfig cfg;
  cfg.epochs = 20;
  cfg.threshold = 0.4;
  auto m = train(x, y, FeatureKind::kCount, cfg);
  nlohmann::json j = m;
  auto back = nlohmann::json::parse(j.dump()).get<Model>();
  EXPECT_EQ(back.threshold, 0.4);
  EXPECT_EQ(predict_proba(back, x), predict_proba(m, x));
  j["scaler_std"][0] = 0.0;
  EXPECT_THROW(j.get<Model>(), ValidationError);
}

TEST(Classify, EmptyAndZeroThreshold) {
  ProjectedGraph g(3, {{0, 1}, {1, 2}, {0, 2}});
  auto mc = maximal_cliques(g);
  MotifContext ctx(g, mc);
  auto m = Model::constant(FeatureKind::kCount, false);
  EXPECT_TRUE(classify(m, CandidateSet{}, ctx).empty());
  CandidateSet c;
  c.candidates = {{0}, {0, 1}, {0, 1, 2}};
  c.provenance.resize(3);
  EXPECT_TRUE(classify(m, c, ctx).empty());
  m.threshold = 0.0;
  EXPECT_EQ(classify(m, c, ctx), c.candidates);
}

}  // namespace
}  // namespace hyperrecon
