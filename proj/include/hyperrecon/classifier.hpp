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

#ifndef HYPERRECON_CLASSIFIER_HPP_
#define HYPERRECON_CLASSIFIER_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>
#include <json.hpp>

#include "hyperrecon/features.hpp"
#include "hyperrecon/sampler.hpp"

namespace hyperrecon {

// One hidden ReLU layer, one sigmoid output, inputs standardized with the
// training mean/std.
struct Model {
  FeatureKind kind = FeatureKind::kCount;
  std::size_t input_dim = 0;
  Eigen::MatrixXd w1;  // hidden x input_dim
  Eigen::VectorXd b1;
  Eigen::VectorXd w2;  // hidden
  double b2 = 0.0;
  Eigen::VectorXd mean;
  Eigen::VectorXd scale;  // > 0
  double threshold = 0.5;
  std::uint64_t seed = 0;

  std::size_t hidden() const { return static_cast<std::size_t>(w1.rows()); }

  // All weights zero, identity scaler: predicts sigmoid(0) = 0.5.
  static Model zeros(FeatureKind kind, std::size_t hidden = 100);
  // Ignores its input and always answers `positive`. Used when a training
  // pool holds a single class.
  static Model constant(FeatureKind kind, bool positive);
};

struct TrainConfig {
  std::size_t epochs = 2000;
  double learning_rate = 1e-4;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;
  std::size_t hidden = 100;
  bool class_weighting = true;  // positive weight = #neg / #pos
  double threshold = 0.5;
  std::uint64_t seed = 0;
};

struct TrainReport {
  std::vector<double> loss;  // per epoch, before the update
  std::size_t positives = 0;
  std::size_t negatives = 0;
  double pos_weight = 1.0;
};

Model train(const FeatureMatrix& x, const std::vector<bool>& labels, FeatureKind kind,
            const TrainConfig& cfg, TrainReport* report = nullptr);

double predict_proba(const Model& m, std::span<const double> row);
std::vector<double> predict_proba(const Model& m, const FeatureMatrix& x);

// Candidates whose probability reaches the threshold.
std::vector<NodeSet> classify(const Model& m, const CandidateSet& candidates,
                              const MotifContext& ctx);

// Standardized copy of `x` under m's scaler.
Eigen::MatrixXd apply_scaler(const Model& m, const FeatureMatrix& x);

struct Gradient {
  Eigen::MatrixXd w1;
  Eigen::VectorXd b1;
  Eigen::VectorXd w2;
  double b2 = 0.0;
};

// Weighted mean cross entropy on already standardized rows, and its
// gradient when `grad` is non-null.
double loss_and_gradient(const Model& m, const Eigen::MatrixXd& xs, const Eigen::VectorXd& y,
                         double pos_weight, Gradient* grad);

void to_json(nlohmann::json& j, const Model& m);
void from_json(const nlohmann::json& j, Model& m);

}  // namespace hyperrecon

#endif  // HYPERRECON_CLASSIFIER_HPP_
