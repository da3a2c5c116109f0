// Feature extraction for the event and relation scorers: context-window
// embedding features plus linguistic features (token distance, tense,
// polarity, POS).
#ifndef TEMPEX_FEATURES_HPP
#define TEMPEX_FEATURES_HPP

#include <Eigen/Core>
#include <iosfwd>
#include <map>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "tempex/core.hpp"

namespace tempex {

using Vector = Eigen::VectorXd;

/// Category -> index map with a reserved unknown bucket at the end.
class Vocab {
 public:
  Vocab() = default;
  explicit Vocab(const std::vector<std::string>& categories);

  int index_of(const std::string& category) const;  // unknown bucket if absent
  int size() const { return static_cast<int>(categories_.size()) + 1; }

  const std::vector<std::string>& categories() const { return categories_; }
  bool operator==(const Vocab&) const = default;

 private:
  std::vector<std::string> categories_;          // sorted, unique
  std::map<std::string, int> index_;
};

/// Token embeddings. Either a trainable lookup keyed by word string
/// (uniform init in [-0.1, 0.1]) or frozen vectors keyed by
/// (doc_id, token index) loaded from file.
class EmbeddingTable {
 public:
  /// Trainable lookup over the given word list.
  EmbeddingTable(const std::vector<std::string>& words, int dim, std::uint64_t seed);
  /// Frozen per-token vectors.
  explicit EmbeddingTable(std::map<std::pair<std::string, int>, Vector> frozen, int dim);

  int dim() const { return dim_; }
  bool trainable() const { return trainable_; }

  /// The vector for a token; trainable mode keys on the token text (unknown
  /// words share a reserved row), frozen mode on (doc_id, index).
  const Vector& lookup(const Document& doc, int token_index) const;

  /// Row index backing a token in trainable mode (-1 when frozen).
  int row_of(const Document& doc, int token_index) const;
  int num_rows() const { return static_cast<int>(rows_.size()); }
  Vector& row(int r) { return rows_[r]; }
  const Vector& row(int r) const { return rows_[r]; }
  const std::vector<std::string>& words() const { return words_; }

  /// Rebuilds a trainable table from serialized words and rows.
  static EmbeddingTable from_rows(std::vector<std::string> words, int dim,
                                  std::vector<Vector> rows);

  /// Trainable parameters flattened row-major (empty when frozen).
  Vector flatten() const;
  void unflatten(const Vector& flat);

  bool operator==(const EmbeddingTable& other) const;

 private:
  int dim_ = 0;
  bool trainable_ = false;
  std::vector<std::string> words_;       // sorted; last row is the unknown row
  std::map<std::string, int> word_row_;
  std::vector<Vector> rows_;
  std::map<std::pair<std::string, int>, Vector> frozen_;
};

/// Dimensioning and category vocabularies shared by both scorers.
struct FeatureConfig {
  int window = 2;           ///< context half-width; 0 drops the context block
  int embedding_dim = 32;
  Vocab pos_vocab;
  Vocab tense_vocab;
  Vocab polarity_vocab;

  int event_feature_dim() const;
  int relation_feature_dim() const;
  bool operator==(const FeatureConfig&) const = default;
};

/// Builds vocabularies from every tag seen in the corpus.
FeatureConfig make_feature_config(const std::vector<Document>& corpus, int window,
                                  int embedding_dim);

/// Token distance buckets: 1, 2, 3, 4, 5-9, >=10.
int distance_bucket(int distance);
inline constexpr int kNumDistanceBuckets = 6;

/// Sparse gradient with respect to embedding rows (trainable mode).
using EmbeddingGrad = std::map<int, Vector>;

/// Extracts event and relation features against one embedding table.
class FeatureEncoder {
 public:
  FeatureEncoder(FeatureConfig config, std::shared_ptr<EmbeddingTable> embeddings);

  const FeatureConfig& config() const { return config_; }
  const std::shared_ptr<EmbeddingTable>& embeddings() const { return embeddings_; }

  /// [token embedding | mean of the 2w surrounding embeddings, zero-padded
  /// at document edges | POS one-hot]. With w = 0 the context block is empty.
  Vector event_features(const Document& doc, int k) const;

  /// [event features of i | event features of j | signed distance j-i |
  /// distance-bucket one-hot | tense-pair one-hot | polarity-pair one-hot].
  Vector relation_features(const Document& doc, int i, int j) const;

  /// Accumulates d(loss)/d(embedding rows) given d(loss)/d(features).
  /// No-ops when the table is frozen.
  void backprop_event(const Document& doc, int k, const Vector& feature_grad,
                      EmbeddingGrad& grad) const;
  void backprop_relation(const Document& doc, int i, int j,
                         const Vector& feature_grad, EmbeddingGrad& grad) const;

 private:
  void accumulate_event_block(const Document& doc, int k, const Vector& grad_block,
                              EmbeddingGrad& grad) const;

  FeatureConfig config_;
  std::shared_ptr<EmbeddingTable> embeddings_;
};

/// Embedding file format: header `D=<dim>`, then one line per token:
/// `<doc_id> <token_index> <D space-separated decimals>`.
std::map<std::pair<std::string, int>, Vector> load_embedding_file(std::istream& is,
                                                                  int* dim_out);
void save_embedding_file(std::ostream& os,
                         const std::map<std::pair<std::string, int>, Vector>& vectors,
                         int dim);

}  // namespace tempex

#endif  // TEMPEX_FEATURES_HPP
