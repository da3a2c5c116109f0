// Corpus serialization (one JSON object per line), dataset statistics, and
// a synthetic-corpus generator with planted interval-consistent temporal
// graphs.
#ifndef TEMPEX_DATA_IO_HPP
#define TEMPEX_DATA_IO_HPP

#include <array>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "tempex/core.hpp"
#include "tempex/features.hpp"

namespace tempex {

/// Parses a newline-delimited corpus. Each line holds one document object
/// with fields doc_id, tokens (text, pos, sentence, tense, polarity),
/// events (index list) and relations (src, tgt, label). Unknown fields are
/// ignored with a warning; records violating the document invariants are
/// rejected with their line number.
std::vector<Document> load_corpus(std::istream& is,
                                  std::vector<std::string>* warnings = nullptr);
std::vector<Document> load_corpus_file(const std::string& path,
                                       std::vector<std::string>* warnings = nullptr);

/// Canonical form: fixed key order, compact separators, events ascending,
/// relations sorted by (src, tgt). load followed by save reproduces a
/// canonical file byte for byte.
void save_corpus(std::ostream& os, const std::vector<Document>& corpus);
void save_corpus_file(const std::string& path, const std::vector<Document>& corpus);

struct DatasetStats {
  int documents = 0;
  int tokens = 0;
  int gold_events = 0;
  int relation_pairs = 0;  ///< annotated pairs, all labels pooled
  std::array<int, kNumRelationLabels> label_counts{};
};

DatasetStats dataset_stats(const std::vector<Document>& corpus);

/// Human-readable stats table for one or more named splits.
std::string render_stats(const std::vector<std::pair<std::string, DatasetStats>>& splits);

struct SynthConfig {
  std::uint64_t seed = 1;
  int documents = 20;
  int sentences_per_doc = 3;
  int tokens_per_sentence = 6;
  double event_rate = 0.35;
  double vague_rate = 0.1;   ///< chance a definite pair is re-labeled VAGUE
  double noise = 0.1;        ///< sigma of the corruption added to embeddings
  int embedding_dim = 8;
};

struct SynthCorpus {
  std::vector<Document> documents;
  std::map<std::pair<std::string, int>, Vector> embeddings;
};

/// Event tokens receive latent integer intervals; gold labels for candidate
/// pairs follow the interval semantics (VAGUE when no definite relation
/// holds). Definite labels flip to VAGUE with probability vague_rate only
/// when the flip keeps every triple inside its composition set, so the gold
/// graph stays valid by construction. Embeddings carry the event flag and
/// interval endpoints plus Gaussian noise.
SynthCorpus generate_synthetic(const SynthConfig& config);

}  // namespace tempex

#endif  // TEMPEX_DATA_IO_HPP
