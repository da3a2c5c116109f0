// Domain types for joint event / temporal-relation extraction:
// documents, label sets, candidate generation, joint assignments.
#ifndef TEMPEX_CORE_HPP
#define TEMPEX_CORE_HPP

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace tempex {

/// Temporal relation labels. NONE is the unique negative label (assigned to
/// pairs involving a non-event); the other six are the positive set.
enum class RelationLabel : std::uint8_t {
  BEFORE = 0,
  AFTER = 1,
  INCLUDES = 2,
  IS_INCLUDED = 3,
  SIMULTANEOUS = 4,
  VAGUE = 5,
  NONE = 6,
};

enum class EventLabel : std::uint8_t {
  NON_EVENT = 0,
  EVENT = 1,
};

inline constexpr int kNumRelationLabels = 7;
inline constexpr int kNumPositiveLabels = 6;
inline constexpr int kNumEventLabels = 2;

/// All seven relation labels in enumeration order (the tie-breaking order).
extern const std::vector<RelationLabel> kAllRelationLabels;
/// The six positive labels in enumeration order.
extern const std::vector<RelationLabel> kPositiveLabels;

inline bool is_positive(RelationLabel r) { return r != RelationLabel::NONE; }

const std::string& to_string(RelationLabel r);
const std::string& to_string(EventLabel e);
RelationLabel relation_label_from_string(const std::string& name);
EventLabel event_label_from_string(const std::string& name);

struct Token {
  int index = 0;           ///< 0-based position in the document
  std::string text;
  std::string pos;         ///< POS tag
  int sentence = 0;        ///< 0-based sentence index, nondecreasing over tokens
  std::string tense;       ///< may be empty
  std::string polarity;    ///< may be empty
};

using PairKey = std::pair<int, int>;  // (i, j) with i < j

/// A tokenized document with gold event and relation annotations.
/// Pairs are stored with i < j only; the reverse direction is implicit
/// through the label inverse.
struct Document {
  std::string doc_id;
  std::vector<Token> tokens;
  std::set<int> gold_events;
  std::map<PairKey, RelationLabel> gold_relations;

  bool is_gold_event(int k) const { return gold_events.count(k) > 0; }
  /// Gold relation for a pair; NONE when unannotated.
  RelationLabel gold_relation(int i, int j) const;
};

/// Throws std::runtime_error (with the document id) if any structural
/// invariant fails: nondecreasing sentence indices, valid relation endpoints,
/// i < j keys, and positive relations only between gold events.
void validate_document(const Document& doc);

/// POS filter for event candidates. Default admits every tag.
struct PosWhitelist {
  bool all = true;
  std::set<std::string> tags;

  static PosWhitelist everything() { return PosWhitelist{}; }
  static PosWhitelist from_tags(std::set<std::string> t) {
    return PosWhitelist{false, std::move(t)};
  }
  bool allows(const std::string& pos) const { return all || tags.count(pos) > 0; }
  bool operator==(const PosWhitelist&) const = default;
};

/// Event candidates (token indices) and relation candidates (ordered pairs
/// spanning at most adjacent sentences), both in deterministic order.
struct CandidateSet {
  std::vector<int> event_candidates;
  std::vector<PairKey> relation_candidates;

  bool empty() const { return event_candidates.empty() && relation_candidates.empty(); }
  std::size_t size() const { return event_candidates.size() + relation_candidates.size(); }
};

/// Event candidates are the tokens whose POS passes the whitelist; relation
/// candidates are all pairs of event candidates within the same or a
/// neighboring sentence. Deterministic: events by index, pairs lexicographic.
CandidateSet generate_candidates(const Document& doc, const PosWhitelist& whitelist);

/// One global labeling of all event and relation candidates.
struct JointAssignment {
  std::map<int, EventLabel> events;
  std::map<PairKey, RelationLabel> relations;

  bool operator==(const JointAssignment&) const = default;
};

/// Builds the gold assignment over a candidate set: EVENT iff the token is a
/// gold event, the annotated label (or NONE) for each pair.
JointAssignment gold_assignment(const Document& doc, const CandidateSet& candidates);

/// Number of keys (events and relations pooled) where the labels differ.
/// Throws std::invalid_argument if the key sets do not match.
int hamming_distance(const JointAssignment& a, const JointAssignment& b);

}  // namespace tempex

#endif  // TEMPEX_CORE_HPP
