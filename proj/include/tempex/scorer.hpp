// Pluggable local scorers: a linear layer or a one-hidden-layer MLP over
// extracted features, with analytic gradients for training.
#ifndef TEMPEX_SCORER_HPP
#define TEMPEX_SCORER_HPP

#include <Eigen/Core>
#include <array>
#include <map>
#include <memory>
#include <string>

#include "tempex/core.hpp"
#include "tempex/features.hpp"

namespace tempex {

using Matrix = Eigen::MatrixXd;

/// Local scores for every candidate: the interface between the scorers and
/// global inference.
struct ScoreTable {
  std::map<int, std::array<double, 2>> event_scores;  // [NON_EVENT, EVENT]
  std::map<PairKey, std::array<double, kNumRelationLabels>> relation_scores;

  bool operator==(const ScoreTable&) const = default;
};

class Scorer {
 public:
  virtual ~Scorer() = default;

  virtual int input_dim() const = 0;
  virtual int output_dim() const = 0;
  virtual std::string kind() const = 0;

  /// Raw (pre-softmax) scores. Throws std::invalid_argument on a feature
  /// dimension mismatch.
  virtual Vector score(const Vector& features) const = 0;

  /// Gradient of upstream . score(features) with respect to the flattened
  /// parameters; optionally also with respect to the features (for embedding
  /// training).
  virtual Vector gradient(const Vector& features, const Vector& upstream,
                          Vector* feature_grad = nullptr) const = 0;

  virtual Vector flatten() const = 0;
  virtual void unflatten(const Vector& flat) = 0;
  virtual std::unique_ptr<Scorer> clone() const = 0;
  int num_params() const { return static_cast<int>(flatten().size()); }
};

/// W f + b.
class LinearScorer : public Scorer {
 public:
  LinearScorer(int input_dim, int output_dim, std::uint64_t seed);

  int input_dim() const override { return static_cast<int>(weights_.cols()); }
  int output_dim() const override { return static_cast<int>(weights_.rows()); }
  std::string kind() const override { return "linear"; }
  Vector score(const Vector& features) const override;
  Vector gradient(const Vector& features, const Vector& upstream,
                  Vector* feature_grad) const override;
  Vector flatten() const override;
  void unflatten(const Vector& flat) override;
  std::unique_ptr<Scorer> clone() const override;

  Matrix& weights() { return weights_; }
  Vector& bias() { return bias_; }

 private:
  Matrix weights_;
  Vector bias_;
};

/// W2 tanh(W1 f + b1) + b2 — one hidden layer.
class MLPScorer : public Scorer {
 public:
  MLPScorer(int input_dim, int hidden_dim, int output_dim, std::uint64_t seed);

  int input_dim() const override { return static_cast<int>(w1_.cols()); }
  int hidden_dim() const { return static_cast<int>(w1_.rows()); }
  int output_dim() const override { return static_cast<int>(w2_.rows()); }
  std::string kind() const override { return "mlp"; }
  Vector score(const Vector& features) const override;
  Vector gradient(const Vector& features, const Vector& upstream,
                  Vector* feature_grad) const override;
  Vector flatten() const override;
  void unflatten(const Vector& flat) override;
  std::unique_ptr<Scorer> clone() const override;

 private:
  Matrix w1_, w2_;
  Vector b1_, b2_;
};

std::unique_ptr<Scorer> make_scorer(const std::string& kind, int input_dim,
                                    int hidden_dim, int output_dim,
                                    std::uint64_t seed);

/// Scores every candidate with the given scorers. The scorers read whichever
/// encoder they were built against; passing one shared encoder realizes the
/// multi-task sharing, two independent encoders the single-task setting.
ScoreTable build_score_table(const Document& doc, const CandidateSet& candidates,
                             const FeatureEncoder& event_encoder,
                             const Scorer& event_scorer,
                             const FeatureEncoder& relation_encoder,
                             const Scorer& relation_scorer);

}  // namespace tempex

#endif  // TEMPEX_SCORER_HPP
