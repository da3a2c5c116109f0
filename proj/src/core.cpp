#include "tempex/core.hpp"

#include <cstdlib>
#include <stdexcept>

namespace tempex {

const std::vector<RelationLabel> kAllRelationLabels = {
    RelationLabel::BEFORE,       RelationLabel::AFTER,
    RelationLabel::INCLUDES,     RelationLabel::IS_INCLUDED,
    RelationLabel::SIMULTANEOUS, RelationLabel::VAGUE,
    RelationLabel::NONE,
};

const std::vector<RelationLabel> kPositiveLabels = {
    RelationLabel::BEFORE,       RelationLabel::AFTER,
    RelationLabel::INCLUDES,     RelationLabel::IS_INCLUDED,
    RelationLabel::SIMULTANEOUS, RelationLabel::VAGUE,
};

namespace {
const std::vector<std::string> kRelationNames = {
    "BEFORE", "AFTER", "INCLUDES", "IS_INCLUDED", "SIMULTANEOUS", "VAGUE", "NONE",
};
const std::vector<std::string> kEventNames = {"NON_EVENT", "EVENT"};
}  // namespace

const std::string& to_string(RelationLabel r) {
  return kRelationNames.at(static_cast<std::size_t>(r));
}

const std::string& to_string(EventLabel e) {
  return kEventNames.at(static_cast<std::size_t>(e));
}

RelationLabel relation_label_from_string(const std::string& name) {
  for (std::size_t i = 0; i < kRelationNames.size(); ++i)
    if (kRelationNames[i] == name) return static_cast<RelationLabel>(i);
  throw std::invalid_argument("unknown relation label: " + name);
}

EventLabel event_label_from_string(const std::string& name) {
  for (std::size_t i = 0; i < kEventNames.size(); ++i)
    if (kEventNames[i] == name) return static_cast<EventLabel>(i);
  throw std::invalid_argument("unknown event label: " + name);
}

RelationLabel Document::gold_relation(int i, int j) const {
  auto it = gold_relations.find({i, j});
  return it == gold_relations.end() ? RelationLabel::NONE : it->second;
}

void validate_document(const Document& doc) {
  const int n = static_cast<int>(doc.tokens.size());
  int last_sentence = 0;
  for (int k = 0; k < n; ++k) {
    const Token& t = doc.tokens[k];
    if (t.index != k)
      throw std::runtime_error("document " + doc.doc_id + ": token " +
                               std::to_string(k) + " has index " +
                               std::to_string(t.index));
    if (t.sentence < last_sentence)
      throw std::runtime_error("document " + doc.doc_id +
                               ": sentence indices decrease at token " +
                               std::to_string(k));
    last_sentence = t.sentence;
  }
  for (int k : doc.gold_events)
    if (k < 0 || k >= n)
      throw std::runtime_error("document " + doc.doc_id +
                               ": gold event index out of range: " +
                               std::to_string(k));
  for (const auto& [key, label] : doc.gold_relations) {
    auto [i, j] = key;
    if (i < 0 || j < 0 || i >= n || j >= n)
      throw std::runtime_error("document " + doc.doc_id +
                               ": relation endpoint out of range");
    if (i >= j)
      throw std::runtime_error("document " + doc.doc_id +
                               ": relation key must satisfy i < j, got (" +
                               std::to_string(i) + ", " + std::to_string(j) + ")");
    if (is_positive(label) && (!doc.is_gold_event(i) || !doc.is_gold_event(j)))
      throw std::runtime_error("document " + doc.doc_id + ": positive relation (" +
                               std::to_string(i) + ", " + std::to_string(j) +
                               ") has a non-event endpoint");
  }
}

CandidateSet generate_candidates(const Document& doc, const PosWhitelist& whitelist) {
  CandidateSet out;
  for (const Token& t : doc.tokens)
    if (whitelist.allows(t.pos)) out.event_candidates.push_back(t.index);
  for (std::size_t a = 0; a < out.event_candidates.size(); ++a) {
    const int i = out.event_candidates[a];
    for (std::size_t b = a + 1; b < out.event_candidates.size(); ++b) {
      const int j = out.event_candidates[b];
      if (std::abs(doc.tokens[i].sentence - doc.tokens[j].sentence) <= 1)
        out.relation_candidates.push_back({i, j});
    }
  }
  return out;
}

JointAssignment gold_assignment(const Document& doc, const CandidateSet& candidates) {
  JointAssignment gold;
  for (int k : candidates.event_candidates)
    gold.events[k] = doc.is_gold_event(k) ? EventLabel::EVENT : EventLabel::NON_EVENT;
  for (const PairKey& key : candidates.relation_candidates)
    gold.relations[key] = doc.gold_relation(key.first, key.second);
  return gold;
}

int hamming_distance(const JointAssignment& a, const JointAssignment& b) {
  if (a.events.size() != b.events.size() || a.relations.size() != b.relations.size())
    throw std::invalid_argument("hamming_distance: key sets differ in size");
  int dist = 0;
  auto bi = b.events.begin();
  for (auto ai = a.events.begin(); ai != a.events.end(); ++ai, ++bi) {
    if (ai->first != bi->first)
      throw std::invalid_argument("hamming_distance: event key sets differ");
    dist += ai->second != bi->second;
  }
  auto bj = b.relations.begin();
  for (auto aj = a.relations.begin(); aj != a.relations.end(); ++aj, ++bj) {
    if (aj->first != bj->first)
      throw std::invalid_argument("hamming_distance: relation key sets differ");
    dist += aj->second != bj->second;
  }
  return dist;
}

}  // namespace tempex
