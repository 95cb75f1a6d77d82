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

#include "hyperrecon/classifier.hpp"

#include <cmath>
#include <string>

#include "hyperrecon/error.hpp"
#include "hyperrecon/random.hpp"

namespace hyperrecon {

namespace {

double sigmoid(double z) {
  return z >= 0.0 ? 1.0 / (1.0 + std::exp(-z)) : std::exp(z) / (1.0 + std::exp(z));
}

// log(1 + exp(z)) without overflow.
double softplus(double z) { return z > 0.0 ? z + std::log1p(std::exp(-z)) : std::log1p(std::exp(z)); }

Eigen::VectorXd logits(const Model& m, const Eigen::MatrixXd& xs) {
  Eigen::MatrixXd h = ((xs * m.w1.transpose()).rowwise() + m.b1.transpose()).cwiseMax(0.0);
  return (h * m.w2).array() + m.b2;
}

void check_row(const Model& m, std::size_t n) {
  if (n != m.input_dim) {
    throw ValidationError("feature row has " + std::to_string(n) + " entries, model expects " +
                          std::to_string(m.input_dim));
  }
}

}  // namespace

Model Model::zeros(FeatureKind kind, std::size_t hidden) {
  Model m;
  m.kind = kind;
  m.input_dim = feature_dim(kind);
  m.w1 = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(hidden), static_cast<Eigen::Index>(m.input_dim));
  m.b1 = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(hidden));
  m.w2 = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(hidden));
  m.mean = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(m.input_dim));
  m.scale = Eigen::VectorXd::Ones(static_cast<Eigen::Index>(m.input_dim));
  return m;
}

Model Model::constant(FeatureKind kind, bool positive) {
  Model m = zeros(kind);
  m.b2 = positive ? 50.0 : -50.0;
  return m;
}

Eigen::MatrixXd apply_scaler(const Model& m, const FeatureMatrix& x) {
  check_row(m, x.cols);
  Eigen::MatrixXd xs(static_cast<Eigen::Index>(x.rows), static_cast<Eigen::Index>(x.cols));
  for (std::size_t i = 0; i < x.rows; ++i) {
    for (std::size_t j = 0; j < x.cols; ++j) {
      xs(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          (x.values[i * x.cols + j] - m.mean[static_cast<Eigen::Index>(j)]) /
          m.scale[static_cast<Eigen::Index>(j)];
    }
  }
  return xs;
}

double loss_and_gradient(const Model& m, const Eigen::MatrixXd& xs, const Eigen::VectorXd& y,
                         double pos_weight, Gradient* grad) {
  const auto n = xs.rows();
  if (n == 0) return 0.0;
  Eigen::MatrixXd pre = (xs * m.w1.transpose()).rowwise() + m.b1.transpose();
  Eigen::MatrixXd h = pre.cwiseMax(0.0);
  Eigen::VectorXd z = (h * m.w2).array() + m.b2;
  double loss = 0.0;
  Eigen::VectorXd dz(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double w = y[i] > 0.5 ? pos_weight : 1.0;
    // -y log p - (1-y) log(1-p) with p = sigmoid(z)
    loss += w * (y[i] > 0.5 ? softplus(-z[i]) : softplus(z[i]));
    dz[i] = w * (sigmoid(z[i]) - y[i]) / static_cast<double>(n);
  }
  loss /= static_cast<double>(n);
  if (grad) {
    grad->w2 = h.transpose() * dz;
    grad->b2 = dz.sum();
    Eigen::MatrixXd dh = (dz * m.w2.transpose()).array() * (pre.array() > 0.0).cast<double>();
    grad->w1 = dh.transpose() * xs;
    grad->b1 = dh.colwise().sum().transpose();
  }
  return loss;
}

Model train(const FeatureMatrix& x, const std::vector<bool>& labels, FeatureKind kind,
            const TrainConfig& cfg, TrainReport* report) {
  if (x.cols != feature_dim(kind)) throw ValidationError("feature matrix does not match extractor");
  if (labels.size() != x.rows) throw ValidationError("label count does not match feature rows");
  if (cfg.epochs == 0 || !(cfg.learning_rate > 0.0) || cfg.hidden == 0) {
    throw ValidationError("invalid training configuration");
  }
  for (double v : x.values) {
    if (!std::isfinite(v)) throw ValidationError("non-finite feature value");
  }
  std::size_t pos = 0;
  for (bool l : labels) pos += l;
  const std::size_t neg = labels.size() - pos;
  if (pos == 0 || neg == 0) throw ValidationError("training labels hold a single class");

  Model m = Model::zeros(kind, cfg.hidden);
  m.threshold = cfg.threshold;
  m.seed = cfg.seed;
  const auto d = static_cast<Eigen::Index>(x.cols);
  const auto hdim = static_cast<Eigen::Index>(cfg.hidden);
  const double rows = static_cast<double>(x.rows);
  for (Eigen::Index j = 0; j < d; ++j) {
    double s = 0.0;
    for (std::size_t i = 0; i < x.rows; ++i) s += x.values[i * x.cols + static_cast<std::size_t>(j)];
    const double mu = s / rows;
    double sq = 0.0;
    for (std::size_t i = 0; i < x.rows; ++i) {
      const double t = x.values[i * x.cols + static_cast<std::size_t>(j)] - mu;
      sq += t * t;
    }
    const double sd = std::sqrt(sq / rows);
    m.mean[j] = mu;
    m.scale[j] = sd > 0.0 ? sd : 1.0;
  }

  Rng rng(derive_seed(cfg.seed, Stream::kInit));
  auto uniform = [&](double bound) { return (2.0 * uniform01(rng) - 1.0) * bound; };
  const double a1 = 1.0 / std::sqrt(static_cast<double>(d));
  const double a2 = 1.0 / std::sqrt(static_cast<double>(hdim));
  for (Eigen::Index r = 0; r < hdim; ++r) {
    for (Eigen::Index c = 0; c < d; ++c) m.w1(r, c) = uniform(a1);
  }
  for (Eigen::Index r = 0; r < hdim; ++r) m.b1[r] = uniform(a1);
  for (Eigen::Index r = 0; r < hdim; ++r) m.w2[r] = uniform(a2);
  m.b2 = uniform(a2);

  const Eigen::MatrixXd xs = apply_scaler(m, x);
  Eigen::VectorXd y(static_cast<Eigen::Index>(labels.size()));
  for (std::size_t i = 0; i < labels.size(); ++i) y[static_cast<Eigen::Index>(i)] = labels[i] ? 1.0 : 0.0;
  const double pos_weight =
      cfg.class_weighting ? static_cast<double>(neg) / static_cast<double>(pos) : 1.0;
  if (report) {
    report->loss.clear();
    report->positives = pos;
    report->negatives = neg;
    report->pos_weight = pos_weight;
  }

  Gradient g, mo, ve;
  mo.w1 = Eigen::MatrixXd::Zero(hdim, d);
  mo.b1 = Eigen::VectorXd::Zero(hdim);
  mo.w2 = Eigen::VectorXd::Zero(hdim);
  ve = mo;
  double c1 = 1.0, c2 = 1.0;
  for (std::size_t epoch = 0; epoch < cfg.epochs; ++epoch) {
    const double loss = loss_and_gradient(m, xs, y, pos_weight, &g);
    if (report) report->loss.push_back(loss);
    c1 *= cfg.beta1;
    c2 *= cfg.beta2;
    const double step = cfg.learning_rate * std::sqrt(1.0 - c2) / (1.0 - c1);
    const double eps = cfg.epsilon * std::sqrt(1.0 - c2);
    auto adam = [&](auto& param, const auto& grad, auto& m1, auto& v1) {
      m1 = cfg.beta1 * m1 + (1.0 - cfg.beta1) * grad;
      v1 = cfg.beta2 * v1 + (1.0 - cfg.beta2) * grad.cwiseProduct(grad);
      param.array() -= step * m1.array() / (v1.array().sqrt() + eps);
    };
    adam(m.w1, g.w1, mo.w1, ve.w1);
    adam(m.b1, g.b1, mo.b1, ve.b1);
    adam(m.w2, g.w2, mo.w2, ve.w2);
    mo.b2 = cfg.beta1 * mo.b2 + (1.0 - cfg.beta1) * g.b2;
    ve.b2 = cfg.beta2 * ve.b2 + (1.0 - cfg.beta2) * g.b2 * g.b2;
    m.b2 -= step * mo.b2 / (std::sqrt(ve.b2) + eps);
  }
  return m;
}

double predict_proba(const Model& m, std::span<const double> row) {
  check_row(m, row.size());
  Eigen::RowVectorXd xs(static_cast<Eigen::Index>(row.size()));
  for (std::size_t j = 0; j < row.size(); ++j) {
    const auto e = static_cast<Eigen::Index>(j);
    xs[e] = (row[j] - m.mean[e]) / m.scale[e];
  }
  return sigmoid(logits(m, xs)[0]);
}

std::vector<double> predict_proba(const Model& m, const FeatureMatrix& x) {
  if (x.rows == 0) return {};
  const Eigen::VectorXd z = logits(m, apply_scaler(m, x));
  std::vector<double> p(x.rows);
  for (std::size_t i = 0; i < x.rows; ++i) p[i] = sigmoid(z[static_cast<Eigen::Index>(i)]);
  return p;
}

std::vector<NodeSet> classify(const Model& m, const CandidateSet& candidates,
                              const MotifContext& ctx) {
  if (candidates.empty()) return {};
  const auto x = extract_matrix(ctx, m.kind, candidates.candidates);
  const auto p = predict_proba(m, x);
  std::vector<NodeSet> out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] >= m.threshold) out.push_back(candidates.candidates[i]);
  }
  return out;  // candidates are already sorted and distinct
}

void to_json(nlohmann::json& j, const Model& m) {
  auto vec = [](const Eigen::VectorXd& v) { return std::vector<double>(v.data(), v.data() + v.size()); };
  std::vector<double> w1;
  for (Eigen::Index r = 0; r < m.w1.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.w1.cols(); ++c) w1.push_back(m.w1(r, c));
  }
  j = {{"extractor", to_string(m.kind)},
       {"input_dim", m.input_dim},
       {"hidden", m.hidden()},
       {"w1", w1},
       {"b1", vec(m.b1)},
       {"w2", vec(m.w2)},
       {"b2", m.b2},
       {"scaler_mean", vec(m.mean)},
       {"scaler_std", vec(m.scale)},
       {"threshold", m.threshold},
       {"seed", m.seed}};
}

void from_json(const nlohmann::json& j, Model& m) {
  try {
    const auto kind = parse_feature_kind(j.at("extractor").get<std::string>());
    const auto hidden = j.at("hidden").get<std::size_t>();
    m = Model::zeros(kind, hidden);
    if (j.at("input_dim").get<std::size_t>() != m.input_dim) {
      throw ValidationError("model input_dim does not match its extractor");
    }
    auto load = [](const nlohmann::json& a, Eigen::VectorXd& v) {
      auto xs = a.get<std::vector<double>>();
      if (xs.size() != static_cast<std::size_t>(v.size())) throw ValidationError("model vector has wrong length");
      for (std::size_t i = 0; i < xs.size(); ++i) v[static_cast<Eigen::Index>(i)] = xs[i];
    };
    auto w1 = j.at("w1").get<std::vector<double>>();
    if (w1.size() != hidden * m.input_dim) throw ValidationError("model w1 has wrong length");
    for (std::size_t r = 0; r < hidden; ++r) {
      for (std::size_t c = 0; c < m.input_dim; ++c) {
        m.w1(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = w1[r * m.input_dim + c];
      }
    }
    load(j.at("b1"), m.b1);
    load(j.at("w2"), m.w2);
    m.b2 = j.at("b2").get<double>();
    load(j.at("scaler_mean"), m.mean);
    load(j.at("scaler_std"), m.scale);
    for (Eigen::Index i = 0; i < m.scale.size(); ++i) {
      if (!(m.scale[i] > 0.0)) throw ValidationError("model scaler std must be positive");
    }
    m.threshold = j.at("threshold").get<double>();
    m.seed = j.value("seed", std::uint64_t{0});
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("malformed model: ") + e.what());
  }
}

}  // namespace hyperrecon
