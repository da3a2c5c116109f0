#include "tempex/scorer.hpp"

#include <random>
#include <stdexcept>

namespace tempex {

namespace {

Matrix init_matrix(int rows, int cols, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> init(-0.1, 0.1);
  Matrix m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m(r, c) = init(rng);
  return m;
}

void check_features(const Scorer& scorer, const Vector& features) {
  if (features.size() != scorer.input_dim())
    throw std::invalid_argument("feature dimension " + std::to_string(features.size()) +
                                " does not match scorer input " +
                                std::to_string(scorer.input_dim()));
}

void check_upstream(const Scorer& scorer, const Vector& upstream) {
  if (upstream.size() != scorer.output_dim())
    throw std::invalid_argument("upstream dimension does not match scorer output");
}

}  // namespace

LinearScorer::LinearScorer(int input_dim, int output_dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  weights_ = init_matrix(output_dim, input_dim, rng);
  bias_ = init_matrix(output_dim, 1, rng).col(0);
}

Vector LinearScorer::score(const Vector& features) const {
  check_features(*this, features);
  return weights_ * features + bias_;
}

Vector LinearScorer::gradient(const Vector& features, const Vector& upstream,
                              Vector* feature_grad) const {
  check_features(*this, features);
  check_upstream(*this, upstream);
  Vector grad(num_params());
  const Matrix dw = upstream * features.transpose();
  grad.head(dw.size()) = Eigen::Map<const Vector>(dw.data(), dw.size());
  grad.tail(bias_.size()) = upstream;
  if (feature_grad) *feature_grad = weights_.transpose() * upstream;
  return grad;
}

Vector LinearScorer::flatten() const {
  Vector flat(weights_.size() + bias_.size());
  flat.head(weights_.size()) = Eigen::Map<const Vector>(weights_.data(), weights_.size());
  flat.tail(bias_.size()) = bias_;
  return flat;
}

void LinearScorer::unflatten(const Vector& flat) {
  if (flat.size() != weights_.size() + bias_.size())
    throw std::invalid_argument("linear scorer parameter size mismatch");
  Eigen::Map<Vector>(weights_.data(), weights_.size()) = flat.head(weights_.size());
  bias_ = flat.tail(bias_.size());
}

std::unique_ptr<Scorer> LinearScorer::clone() const {
  return std::make_unique<LinearScorer>(*this);
}

MLPScorer::MLPScorer(int input_dim, int hidden_dim, int output_dim,
                     std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  w1_ = init_matrix(hidden_dim, input_dim, rng);
  b1_ = init_matrix(hidden_dim, 1, rng).col(0);
  w2_ = init_matrix(output_dim, hidden_dim, rng);
  b2_ = init_matrix(output_dim, 1, rng).col(0);
}

Vector MLPScorer::score(const Vector& features) const {
  check_features(*this, features);
  return w2_ * (w1_ * features + b1_).array().tanh().matrix() + b2_;
}

Vector MLPScorer::gradient(const Vector& features, const Vector& upstream,
                           Vector* feature_grad) const {
  check_features(*this, features);
  check_upstream(*this, upstream);
  const Vector hidden = (w1_ * features + b1_).array().tanh();
  const Vector dhidden = w2_.transpose() * upstream;
  const Vector dpre = dhidden.array() * (1.0 - hidden.array().square());

  Vector grad(num_params());
  Eigen::Index at = 0;
  const Matrix dw1 = dpre * features.transpose();
  grad.segment(at, dw1.size()) = Eigen::Map<const Vector>(dw1.data(), dw1.size());
  at += dw1.size();
  grad.segment(at, b1_.size()) = dpre;
  at += b1_.size();
  const Matrix dw2 = upstream * hidden.transpose();
  grad.segment(at, dw2.size()) = Eigen::Map<const Vector>(dw2.data(), dw2.size());
  at += dw2.size();
  grad.segment(at, b2_.size()) = upstream;
  if (feature_grad) *feature_grad = w1_.transpose() * dpre;
  return grad;
}

Vector MLPScorer::flatten() const {
  Vector flat(w1_.size() + b1_.size() + w2_.size() + b2_.size());
  Eigen::Index at = 0;
  flat.segment(at, w1_.size()) = Eigen::Map<const Vector>(w1_.data(), w1_.size());
  at += w1_.size();
  flat.segment(at, b1_.size()) = b1_;
  at += b1_.size();
  flat.segment(at, w2_.size()) = Eigen::Map<const Vector>(w2_.data(), w2_.size());
  at += w2_.size();
  flat.segment(at, b2_.size()) = b2_;
  return flat;
}

void MLPScorer::unflatten(const Vector& flat) {
  if (flat.size() != w1_.size() + b1_.size() + w2_.size() + b2_.size())
    throw std::invalid_argument("mlp scorer parameter size mismatch");
  Eigen::Index at = 0;
  Eigen::Map<Vector>(w1_.data(), w1_.size()) = flat.segment(at, w1_.size());
  at += w1_.size();
  b1_ = flat.segment(at, b1_.size());
  at += b1_.size();
  Eigen::Map<Vector>(w2_.data(), w2_.size()) = flat.segment(at, w2_.size());
  at += w2_.size();
  b2_ = flat.segment(at, b2_.size());
}

std::unique_ptr<Scorer> MLPScorer::clone() const {
  return std::make_unique<MLPScorer>(*this);
}

std::unique_ptr<Scorer> make_scorer(const std::string& kind, int input_dim,
                                    int hidden_dim, int output_dim,
                                    std::uint64_t seed) {
  if (kind == "linear") return std::make_unique<LinearScorer>(input_dim, output_dim, seed);
  if (kind == "mlp")
    return std::make_unique<MLPScorer>(input_dim, hidden_dim, output_dim, seed);
  throw std::invalid_argument("unknown scorer kind: " + kind);
}

ScoreTable build_score_table(const Document& doc, const CandidateSet& candidates,
                             const FeatureEncoder& event_encoder,
                             const Scorer& event_scorer,
                             const FeatureEncoder& relation_encoder,
                             const Scorer& relation_scorer) {
  ScoreTable table;
  for (int k : candidates.event_candidates) {
    const Vector s = event_scorer.score(event_encoder.event_features(doc, k));
    table.event_scores[k] = {s[0], s[1]};
  }
  for (const PairKey& key : candidates.relation_candidates) {
    const Vector s =
        relation_scorer.score(relation_encoder.relation_features(doc, key.first, key.second));
    std::array<double, kNumRelationLabels> row{};
    for (int r = 0; r < kNumRelationLabels; ++r) row[r] = s[r];
    table.relation_scores[key] = row;
  }
  return table;
}

}  // namespace tempex
