// Two-stage training: cross-entropy pipeline training of the local scorers,
// then structural-SVM training with loss-augmented exact inference.
#ifndef TEMPEX_LEARNING_HPP
#define TEMPEX_LEARNING_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tempex/core.hpp"
#include "tempex/features.hpp"
#include "tempex/inference.hpp"
#include "tempex/scorer.hpp"

namespace tempex {

struct TrainConfig {
  double c = 1.0;        ///< SSVM loss weight
  double c_event = 1.0;  ///< C_E: event weight in the objective and the hinge
  std::map<RelationLabel, double> class_weights;  ///< defaults to 1 per label
  double event_weight = 1.0;  ///< entity weight in stage-1 cross-entropy
  double t_event = 0.0;  ///< tokens with P(EVENT) below this are fixed NON_EVENT
  int gold_epochs = 5;   ///< stage-1 epochs on gold events before switching
  int total_epochs = 10;    ///< stage-1 epochs
  int stage2_epochs = 5;    ///< SSVM epochs
  double learning_rate = 0.05;
  double decay = 0.1;       ///< step-decay factor applied every decay_every epochs
  int decay_every = 10000;  ///< epochs per decay step
  double momentum = 0.0;
  double l2 = 0.0;
  std::uint64_t seed = 1;
  double dropout = 0.0;  ///< reserved; scorers are small enough that l2 suffices

  std::string scorer_kind = "mlp";
  int hidden_dim = 32;
  int window = 2;
  int embedding_dim = 32;
  bool shared_encoder = true;
  bool pos_filter = true;

  double class_weight(RelationLabel r) const {
    auto it = class_weights.find(r);
    return it == class_weights.end() ? 1.0 : it->second;
  }
  double lr_at(int epoch) const;
  void validate() const;  // throws std::invalid_argument on bad rates
};

/// Event and relation scorers plus the encoder(s) they read. With a shared
/// encoder both scorers see the same embedding table, so updates through one
/// task move the other; otherwise each task owns an identically initialized
/// copy.
class Model {
 public:
  /// Trainable embeddings over the corpus vocabulary, or frozen per-token
  /// vectors when `frozen` is given (their dimension wins).
  static Model create(const std::vector<Document>& corpus, const TrainConfig& config,
                      const std::optional<std::map<std::pair<std::string, int>, Vector>>&
                          frozen = std::nullopt);

  const TrainConfig& config() const { return config_; }
  TrainConfig& config() { return config_; }
  const PosWhitelist& whitelist() const { return whitelist_; }
  const FeatureEncoder& event_encoder() const { return *event_encoder_; }
  const FeatureEncoder& relation_encoder() const { return *relation_encoder_; }
  Scorer& event_scorer() { return *event_scorer_; }
  const Scorer& event_scorer() const { return *event_scorer_; }
  Scorer& relation_scorer() { return *relation_scorer_; }
  const Scorer& relation_scorer() const { return *relation_scorer_; }
  bool frozen_embeddings() const { return frozen_mode_; }
  bool has_embeddings() const { return event_encoder_ != nullptr; }

  /// All trainable parameters (scorers, then trainable embeddings; a shared
  /// table is counted once) as one vector. flatten/unflatten is a bijection.
  Vector flatten_params() const;
  void unflatten_params(const Vector& flat);

  ScoreTable score_document(const Document& doc, const CandidateSet& candidates) const;
  double event_probability(const Document& doc, int k) const;

  void save(const std::string& path) const;
  /// Frozen-mode checkpoints need the per-token vectors re-attached via
  /// attach_frozen_embeddings before scoring.
  static Model load(const std::string& path);
  void attach_frozen_embeddings(std::map<std::pair<std::string, int>, Vector> vectors);

 private:
  friend struct ModelAccess;
  Model() = default;

  TrainConfig config_;
  PosWhitelist whitelist_;
  FeatureConfig feature_config_;
  bool frozen_mode_ = false;
  std::shared_ptr<EmbeddingTable> event_table_;
  std::shared_ptr<EmbeddingTable> relation_table_;  // == event_table_ when shared
  std::unique_ptr<FeatureEncoder> event_encoder_;
  std::unique_ptr<FeatureEncoder> relation_encoder_;
  std::unique_ptr<Scorer> event_scorer_;
  std::unique_ptr<Scorer> relation_scorer_;
};

/// -class_weight(gold) * log softmax(scores)[gold]
double cross_entropy_loss(const Vector& scores, int gold, double class_weight);
Vector softmax(const Vector& scores);

struct Stage1EpochLog {
  int epoch = 0;
  double event_loss = 0.0;     // mean over event candidates
  double relation_loss = 0.0;  // mean over relation training pairs
  bool used_predicted_events = false;
  long relation_pairs = 0;
  long none_pairs = 0;              // NONE-labeled pairs in the training set
  long false_positive_events = 0;   // predicted events that are not gold
};

/// Pipeline training with cross-entropy. The first gold_epochs epochs build
/// relation candidates from gold events; afterwards from the event model's
/// predictions, which introduces NONE-labeled pairs wherever a predicted
/// endpoint is not a gold event. Deterministic under a fixed seed.
/// Throws std::invalid_argument on an empty corpus.
std::vector<Stage1EpochLog> train_stage1(Model& model,
                                         const std::vector<Document>& corpus,
                                         const TrainConfig& config);

struct SsvmInstanceLoss {
  double loss = 0.0;   ///< (c / M) * max(0, hinge), without the regularizer
  double hinge = 0.0;  ///< Hamming margin plus the score difference
  int m = 0;           ///< |E| + |EE| over the filtered candidates
  CandidateSet candidates;  ///< after the t_event / POS restriction
  JointAssignment gold;
  JointAssignment violator;  ///< argmax of the loss-augmented objective
};

/// Loss-augmented inference against the document's gold labels over the
/// filtered candidate set.
SsvmInstanceLoss ssvm_instance_loss(const Model& model, const Document& doc,
                                    const TrainConfig& config);

struct Stage2EpochLog {
  int epoch = 0;
  double ssvm_loss = 0.0;  // mean instance loss
  long active_hinges = 0;  // instances with a nonzero hinge
};

/// SSVM subgradient training on top of a stage-1 model: for every candidate
/// whose max-violating label differs from gold, the scorer gradients at the
/// two labels are pushed apart, scaled by c/M (and c_event on event paths).
std::vector<Stage2EpochLog> train_stage2(Model& model,
                                         const std::vector<Document>& corpus,
                                         const TrainConfig& config);

enum class InferenceMode {
  LOCAL,        ///< per-candidate argmax, no constraints
  CONSISTENCY,  ///< ILP with one-label and consistency rows only
  FULL,         ///< consistency plus transitivity
};

/// Joint prediction: candidates from the training whitelist, tokens below
/// t_event fixed NON_EVENT (their pairs NONE), the rest assigned by exact
/// inference under the selected constraint set.
JointAssignment predict(const Model& model, const Document& doc,
                        const TrainConfig& config,
                        InferenceMode mode = InferenceMode::FULL);

}  // namespace tempex

#endif  // TEMPEX_LEARNING_HPP
