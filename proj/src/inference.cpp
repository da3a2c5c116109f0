#include "tempex/inference.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <map>
#include <stdexcept>

namespace tempex {

namespace {

constexpr int kNone = static_cast<int>(RelationLabel::NONE);
constexpr int kUnassigned = -1;
// Bound slack: subtrees are pruned only when their optimistic bound sits at
// least this far below the incumbent, so accumulated float error in the
// incremental bounds can never prune the true optimum.
constexpr double kBoundSlack = 1e-6;

// Trans(r1, r2) as label bitmasks, frozen from the composition table.
using CompMasks =
    std::array<std::array<std::uint8_t, kNumPositiveLabels>, kNumPositiveLabels>;

const CompMasks& comp_masks() {
  static const CompMasks masks = [] {
    CompMasks m{};
    for (int a = 0; a < kNumPositiveLabels; ++a)
      for (int b = 0; b < kNumPositiveLabels; ++b) {
        std::uint8_t bits = 0;
        for (RelationLabel r : composition_table().compose(
                 static_cast<RelationLabel>(a), static_cast<RelationLabel>(b)))
          bits |= static_cast<std::uint8_t>(1u << static_cast<int>(r));
        m[a][b] = bits;
      }
    return m;
  }();
  return masks;
}

struct CandidateIndex {
  std::map<int, int> event_pos;
  std::map<PairKey, int> pair_pos;
};

CandidateIndex index_candidates(const CandidateSet& candidates) {
  CandidateIndex index;
  int last_event = -1;
  for (std::size_t p = 0; p < candidates.event_candidates.size(); ++p) {
    const int k = candidates.event_candidates[p];
    if (k <= last_event)
      throw std::invalid_argument("event candidates must be strictly increasing");
    last_event = k;
    index.event_pos[k] = static_cast<int>(p);
  }
  PairKey last_pair{-1, -1};
  for (std::size_t q = 0; q < candidates.relation_candidates.size(); ++q) {
    const PairKey& key = candidates.relation_candidates[q];
    if (key.first >= key.second)
      throw std::invalid_argument("relation candidates must satisfy i < j");
    if (!(last_pair < key))
      throw std::invalid_argument("relation candidates must be lexicographically sorted");
    last_pair = key;
    if (!index.event_pos.count(key.first) || !index.event_pos.count(key.second))
      throw std::invalid_argument("relation endpoint is not an event candidate");
    index.pair_pos[key] = static_cast<int>(q);
  }
  return index;
}

std::vector<PairTriple> enumerate_triples(const CandidateSet& candidates,
                                          const CandidateIndex& index) {
  std::map<int, std::vector<std::pair<int, int>>> starts;  // i -> [(j, q)]
  for (const auto& [key, q] : index.pair_pos) starts[key.first].push_back({key.second, q});
  std::vector<PairTriple> triples;
  for (const auto& [key, q_ij] : index.pair_pos) {
    const auto [i, j] = key;
    auto it = starts.find(j);
    if (it == starts.end()) continue;
    for (const auto& [k, q_jk] : it->second) {
      auto ik = index.pair_pos.find({i, k});
      if (ik != index.pair_pos.end())
        triples.push_back({i, j, k, q_ij, ik->second, q_jk});
    }
  }
  return triples;
}

void check_scores_cover(const ScoreTable& scores, const CandidateSet& candidates) {
  for (int k : candidates.event_candidates)
    if (!scores.event_scores.count(k))
      throw std::invalid_argument("score table missing event candidate " +
                                  std::to_string(k));
  for (const PairKey& key : candidates.relation_candidates)
    if (!scores.relation_scores.count(key))
      throw std::invalid_argument("score table missing pair (" +
                                  std::to_string(key.first) + ", " +
                                  std::to_string(key.second) + ")");
}

void check_gold_covers(const JointAssignment& gold, const CandidateSet& candidates) {
  for (int k : candidates.event_candidates)
    if (!gold.events.count(k))
      throw std::invalid_argument("gold assignment missing event candidate " +
                                  std::to_string(k));
  for (const PairKey& key : candidates.relation_candidates)
    if (!gold.relations.count(key))
      throw std::invalid_argument("gold assignment missing pair candidate");
}

}  // namespace

ILPInstance build_ilp(const ScoreTable& scores, const CandidateSet& candidates,
                      double c_event,
                      const std::optional<JointAssignment>& loss_augment,
                      bool include_transitivity) {
  check_scores_cover(scores, candidates);
  if (loss_augment) check_gold_covers(*loss_augment, candidates);
  const CandidateIndex index = index_candidates(candidates);

  ILPInstance inst;
  inst.candidates = candidates;
  inst.c_event = c_event;
  inst.augmented = loss_augment.has_value();
  inst.objective_base.assign(inst.num_variables(), 0.0);
  inst.objective_bonus.assign(inst.num_variables(), 0.0);

  const int n_events = inst.num_events();
  for (int p = 0; p < n_events; ++p) {
    const int k = candidates.event_candidates[p];
    const auto& s = scores.event_scores.at(k);
    for (int e = 0; e < kNumEventLabels; ++e) {
      const int var = inst.event_var(p, static_cast<EventLabel>(e));
      inst.objective_base[var] = c_event * s[e];
      if (loss_augment &&
          loss_augment->events.at(k) != static_cast<EventLabel>(e))
        inst.objective_bonus[var] = 1.0;
    }
    LinearRow row{LinearRow::Kind::ONE_LABEL, LinearRow::Sense::EQ, {}, 1.0};
    for (int e = 0; e < kNumEventLabels; ++e)
      row.terms.push_back({inst.event_var(p, static_cast<EventLabel>(e)), 1.0});
    inst.rows.push_back(std::move(row));
  }

  for (int q = 0; q < inst.num_pairs(); ++q) {
    const PairKey& key = candidates.relation_candidates[q];
    const auto& s = scores.relation_scores.at(key);
    for (int r = 0; r < kNumRelationLabels; ++r) {
      const int var = inst.pair_var(q, static_cast<RelationLabel>(r));
      inst.objective_base[var] = s[r];
      if (loss_augment &&
          loss_augment->relations.at(key) != static_cast<RelationLabel>(r))
        inst.objective_bonus[var] = 1.0;
    }
    LinearRow one{LinearRow::Kind::ONE_LABEL, LinearRow::Sense::EQ, {}, 1.0};
    for (int r = 0; r < kNumRelationLabels; ++r)
      one.terms.push_back({inst.pair_var(q, static_cast<RelationLabel>(r)), 1.0});
    inst.rows.push_back(std::move(one));

    // Consistency, with the positive indicator encoded as 1 - y_NONE:
    //   e_i^P >= r^P   becomes   x[i, EVENT] + x[q, NONE] >= 1
    //   e_j^P >= r^P   becomes   x[j, EVENT] + x[q, NONE] >= 1
    //   e_i^N + e_j^N >= r^N
    const int pi = index.event_pos.at(key.first);
    const int pj = index.event_pos.at(key.second);
    const int none_var = inst.pair_var(q, RelationLabel::NONE);
    inst.rows.push_back({LinearRow::Kind::CONSISTENCY,
                         LinearRow::Sense::GE,
                         {{inst.event_var(pi, EventLabel::EVENT), 1.0}, {none_var, 1.0}},
                         1.0});
    inst.rows.push_back({LinearRow::Kind::CONSISTENCY,
                         LinearRow::Sense::GE,
                         {{inst.event_var(pj, EventLabel::EVENT), 1.0}, {none_var, 1.0}},
                         1.0});
    inst.rows.push_back({LinearRow::Kind::CONSISTENCY,
                         LinearRow::Sense::GE,
                         {{inst.event_var(pi, EventLabel::NON_EVENT), 1.0},
                          {inst.event_var(pj, EventLabel::NON_EVENT), 1.0},
                          {none_var, -1.0}},
                         0.0});
  }

  if (include_transitivity) {
    inst.triples = enumerate_triples(candidates, index);
    for (const PairTriple& t : inst.triples) {
      for (RelationLabel r1 : kPositiveLabels)
        for (RelationLabel r2 : kPositiveLabels) {
          LinearRow row{LinearRow::Kind::TRANSITIVITY, LinearRow::Sense::LE, {}, 1.0};
          row.terms.push_back({inst.pair_var(t.q_ij, r1), 1.0});
          row.terms.push_back({inst.pair_var(t.q_jk, r2), 1.0});
          for (RelationLabel r3 : composition_table().compose(r1, r2))
            row.terms.push_back({inst.pair_var(t.q_ik, r3), -1.0});
          inst.rows.push_back(std::move(row));
        }
    }
  }
  return inst;
}

std::vector<double> to_variable_values(const ILPInstance& instance,
                                       const JointAssignment& assignment) {
  std::vector<double> values(instance.num_variables(), 0.0);
  for (int p = 0; p < instance.num_events(); ++p) {
    const int k = instance.candidates.event_candidates[p];
    values[instance.event_var(p, assignment.events.at(k))] = 1.0;
  }
  for (int q = 0; q < instance.num_pairs(); ++q) {
    const PairKey& key = instance.candidates.relation_candidates[q];
    values[instance.pair_var(q, assignment.relations.at(key))] = 1.0;
  }
  return values;
}

bool row_holds(const LinearRow& row, const std::vector<double>& values) {
  double lhs = 0.0;
  for (const auto& [var, coeff] : row.terms) lhs += coeff * values.at(var);
  switch (row.sense) {
    case LinearRow::Sense::EQ: return lhs == row.rhs;
    case LinearRow::Sense::LE: return lhs <= row.rhs;
    case LinearRow::Sense::GE: return lhs >= row.rhs;
  }
  return false;
}

double objective_value(const ILPInstance& instance, const JointAssignment& assignment) {
  double total = 0.0;
  for (int p = 0; p < instance.num_events(); ++p) {
    const int k = instance.candidates.event_candidates[p];
    const int var = instance.event_var(p, assignment.events.at(k));
    total += instance.objective_base[var] + instance.objective_bonus[var];
  }
  for (int q = 0; q < instance.num_pairs(); ++q) {
    const PairKey& key = instance.candidates.relation_candidates[q];
    const int var = instance.pair_var(q, assignment.relations.at(key));
    total += instance.objective_base[var] + instance.objective_bonus[var];
  }
  return total;
}

namespace {

// Depth-first branch and bound over candidates, events first. Branch values
// follow label-enumeration order and the incumbent is replaced only on a
// strictly larger objective, so the first optimum found in DFS preorder is
// the lexicographically smallest one.
class BranchAndBound {
 public:
  explicit BranchAndBound(const ILPInstance& inst)
      : inst_(inst),
        masks_(comp_masks()),
        n_events_(inst.num_events()),
        n_pairs_(inst.num_pairs()) {
    coeff_.resize(inst.num_variables());
    for (int v = 0; v < inst.num_variables(); ++v)
      coeff_[v] = inst.objective_base[v] + inst.objective_bonus[v];

    pair_endpoint_pos_.resize(n_pairs_);
    pairs_of_event_.assign(n_events_, {});
    std::map<int, int> event_pos;
    for (int p = 0; p < n_events_; ++p)
      event_pos[inst.candidates.event_candidates[p]] = p;
    for (int q = 0; q < n_pairs_; ++q) {
      const PairKey& key = inst.candidates.relation_candidates[q];
      const int pi = event_pos.at(key.first);
      const int pj = event_pos.at(key.second);
      pair_endpoint_pos_[q] = {pi, pj};
      pairs_of_event_[pi].push_back(q);
      pairs_of_event_[pj].push_back(q);
    }
    triples_by_last_.assign(n_pairs_, {});
    for (std::size_t t = 0; t < inst.triples.size(); ++t)
      triples_by_last_[inst.triples[t].q_jk].push_back(static_cast<int>(t));

    event_label_.assign(n_events_, kUnassigned);
    pair_label_.assign(n_pairs_, kUnassigned);

    ev_suffix_.assign(n_events_ + 1, 0.0);
    for (int p = n_events_ - 1; p >= 0; --p)
      ev_suffix_[p] = ev_suffix_[p + 1] +
                      std::max(coeff_[inst.event_var(p, EventLabel::NON_EVENT)],
                               coeff_[inst.event_var(p, EventLabel::EVENT)]);
    pair_max_.resize(n_pairs_);
    pair_bound_sum_ = 0.0;
    for (int q = 0; q < n_pairs_; ++q) {
      pair_max_[q] = max_over_labels(q, 0x7f);
      pair_bound_sum_ += pair_max_[q];
    }
    pair_suffix_.assign(n_pairs_ + 1, 0.0);
  }

  JointAssignment run() {
    best_value_ = -std::numeric_limits<double>::infinity();
    descend_event(0, 0.0);

    JointAssignment out;
    for (int p = 0; p < n_events_; ++p)
      out.events[inst_.candidates.event_candidates[p]] =
          static_cast<EventLabel>(best_event_[p]);
    for (int q = 0; q < n_pairs_; ++q)
      out.relations[inst_.candidates.relation_candidates[q]] =
          static_cast<RelationLabel>(best_pair_[q]);
    return out;
  }

 private:
  double max_over_labels(int q, unsigned mask) const {
    double best = -std::numeric_limits<double>::infinity();
    for (int r = 0; r < kNumRelationLabels; ++r)
      if (mask & (1u << r))
        best = std::max(best,
                        coeff_[inst_.pair_var(q, static_cast<RelationLabel>(r))]);
    return best;
  }

  // Feasible-label mask for a pair under the current event assignment:
  // an endpoint fixed NON_EVENT forces NONE; both fixed EVENT excludes NONE.
  unsigned endpoint_mask(int q) const {
    const auto [pi, pj] = pair_endpoint_pos_[q];
    const int ei = event_label_[pi];
    const int ej = event_label_[pj];
    if (ei == 0 || ej == 0) return 1u << kNone;
    if (ei == 1 && ej == 1) return 0x3f;  // the six positive labels
    return 0x7f;
  }

  void update_pair_bounds(int event_pos, std::vector<std::pair<int, double>>& trail) {
    for (int q : pairs_of_event_[event_pos]) {
      const double updated = max_over_labels(q, endpoint_mask(q));
      if (updated != pair_max_[q]) {
        trail.push_back({q, pair_max_[q]});
        pair_bound_sum_ += updated - pair_max_[q];
        pair_max_[q] = updated;
      }
    }
  }

  void undo_pair_bounds(const std::vector<std::pair<int, double>>& trail) {
    for (auto it = trail.rbegin(); it != trail.rend(); ++it) {
      pair_bound_sum_ += it->second - pair_max_[it->first];
      pair_max_[it->first] = it->second;
    }
  }

  void descend_event(int p, double partial) {
    if (p == n_events_) {
      // Entering the pair phase: rebuild the masked suffix bounds fresh so
      // incremental float drift does not accumulate into the deep phase.
      pair_suffix_[n_pairs_] = 0.0;
      for (int q = n_pairs_ - 1; q >= 0; --q)
        pair_suffix_[q] = pair_suffix_[q + 1] + pair_max_[q];
      descend_pair(0, partial);
      return;
    }
    for (int e = 0; e < kNumEventLabels; ++e) {
      const double next = partial + coeff_[inst_.event_var(p, static_cast<EventLabel>(e))];
      event_label_[p] = e;
      std::vector<std::pair<int, double>> trail;
      update_pair_bounds(p, trail);
      const double bound = next + ev_suffix_[p + 1] + pair_bound_sum_;
      if (bound > best_value_ - kBoundSlack) descend_event(p + 1, next);
      undo_pair_bounds(trail);
      event_label_[p] = kUnassigned;
    }
  }

  void descend_pair(int q, double partial) {
    if (q == n_pairs_) {
      finish_leaf();
      return;
    }
    const unsigned mask = endpoint_mask(q);
    for (int r = 0; r < kNumRelationLabels; ++r) {
      if (!(mask & (1u << r))) continue;
      if (r != kNone && !transitivity_allows(q, r)) continue;
      const double next = partial + coeff_[inst_.pair_var(q, static_cast<RelationLabel>(r))];
      const double bound = next + pair_suffix_[q + 1];
      if (bound > best_value_ - kBoundSlack) {
        pair_label_[q] = r;
        descend_pair(q + 1, next);
        pair_label_[q] = kUnassigned;
      }
    }
  }

  // q is the lexicographically last pair of each triple listed here, so both
  // other pairs already carry labels.
  bool transitivity_allows(int q, int r) const {
    for (int t : triples_by_last_[q]) {
      const PairTriple& triple = inst_.triples[t];
      const int r1 = pair_label_[triple.q_ij];
      if (r1 == kNone) continue;
      const int r3 = pair_label_[triple.q_ik];
      if (r3 == kNone || !(masks_[r1][r] & (1u << r3))) return false;
    }
    return true;
  }

  void finish_leaf() {
    // Canonical left-to-right objective, identical to objective_value.
    double value = 0.0;
    for (int p = 0; p < n_events_; ++p)
      value += coeff_[inst_.event_var(p, static_cast<EventLabel>(event_label_[p]))];
    for (int q = 0; q < n_pairs_; ++q)
      value += coeff_[inst_.pair_var(q, static_cast<RelationLabel>(pair_label_[q]))];
    if (value > best_value_) {
      best_value_ = value;
      best_event_ = event_label_;
      best_pair_ = pair_label_;
    }
  }

  const ILPInstance& inst_;
  const CompMasks& masks_;
  int n_events_, n_pairs_;
  std::vector<double> coeff_;
  std::vector<std::pair<int, int>> pair_endpoint_pos_;
  std::vector<std::vector<int>> pairs_of_event_;
  std::vector<std::vector<int>> triples_by_last_;
  std::vector<int> event_label_, pair_label_;
  std::vector<double> ev_suffix_, pair_max_, pair_suffix_;
  double pair_bound_sum_ = 0.0;
  double best_value_ = 0.0;
  std::vector<int> best_event_, best_pair_;
};

}  // namespace

JointAssignment solve_exact(const ILPInstance& instance) {
  return BranchAndBound(instance).run();
}

JointAssignment brute_force_map(const ScoreTable& scores, const CandidateSet& candidates,
                                double c_event,
                                const std::optional<JointAssignment>& loss_augment) {
  const int n_events = static_cast<int>(candidates.event_candidates.size());
  const int n_pairs = static_cast<int>(candidates.relation_candidates.size());
  if (n_events > 5 || n_pairs > 8)
    throw std::invalid_argument(
        "brute_force_map refuses instances beyond 5 events / 8 pairs");
  check_scores_cover(scores, candidates);
  if (loss_augment) check_gold_covers(*loss_augment, candidates);
  const CandidateIndex index = index_candidates(candidates);
  const std::vector<PairTriple> triples = enumerate_triples(candidates, index);
  const CompMasks& masks = comp_masks();

  // Per-key terms with the same arithmetic as the ILP coefficients:
  // one multiply by c_event, then the +1 margin.
  std::vector<std::array<double, kNumEventLabels>> ev_term(n_events);
  for (int p = 0; p < n_events; ++p) {
    const int k = candidates.event_candidates[p];
    for (int e = 0; e < kNumEventLabels; ++e) {
      ev_term[p][e] = c_event * scores.event_scores.at(k)[e];
      if (loss_augment && loss_augment->events.at(k) != static_cast<EventLabel>(e))
        ev_term[p][e] += 1.0;
    }
  }
  std::vector<std::array<double, kNumRelationLabels>> pair_term(n_pairs);
  std::vector<std::pair<int, int>> endpoint_pos(n_pairs);
  for (int q = 0; q < n_pairs; ++q) {
    const PairKey& key = candidates.relation_candidates[q];
    endpoint_pos[q] = {index.event_pos.at(key.first), index.event_pos.at(key.second)};
    for (int r = 0; r < kNumRelationLabels; ++r) {
      pair_term[q][r] = scores.relation_scores.at(key)[r];
      if (loss_augment &&
          loss_augment->relations.at(key) != static_cast<RelationLabel>(r))
        pair_term[q][r] += 1.0;
    }
  }

  const int n = n_events + n_pairs;
  std::vector<int> label(n, 0), base(n);
  for (int d = 0; d < n; ++d)
    base[d] = d < n_events ? kNumEventLabels : kNumRelationLabels;

  // The validity rules of check_validity, restated over the label arrays.
  auto feasible = [&]() {
    for (int q = 0; q < n_pairs; ++q) {
      const int r = label[n_events + q];
      const bool both_events =
          label[endpoint_pos[q].first] == 1 && label[endpoint_pos[q].second] == 1;
      if (r != kNone && !both_events) return false;
      if (r == kNone && both_events) return false;
    }
    for (const PairTriple& t : triples) {
      const int r1 = label[n_events + t.q_ij];
      const int r2 = label[n_events + t.q_jk];
      const int r3 = label[n_events + t.q_ik];
      if (r1 == kNone || r2 == kNone || r3 == kNone) continue;
      if (!(masks[r1][r2] & (1u << r3))) return false;
    }
    return true;
  };

  double best_value = -std::numeric_limits<double>::infinity();
  std::vector<int> best;
  // Odometer in lexicographic order (last key fastest); the strictly-greater
  // test keeps the first optimum found, i.e. the lexicographically smallest.
  while (true) {
    if (feasible()) {
      double value = 0.0;
      for (int p = 0; p < n_events; ++p) value += ev_term[p][label[p]];
      for (int q = 0; q < n_pairs; ++q) value += pair_term[q][label[n_events + q]];
      if (value > best_value) {
        best_value = value;
        best = label;
      }
    }
    int d = n - 1;
    while (d >= 0 && ++label[d] == base[d]) {
      label[d] = 0;
      --d;
    }
    if (d < 0) break;
  }

  JointAssignment out;
  for (int p = 0; p < n_events; ++p)
    out.events[candidates.event_candidates[p]] = static_cast<EventLabel>(best[p]);
  for (int q = 0; q < n_pairs; ++q)
    out.relations[candidates.relation_candidates[q]] =
        static_cast<RelationLabel>(best[n_events + q]);
  return out;
}

JointAssignment pipeline_map(const ScoreTable& scores, const CandidateSet& candidates) {
  check_scores_cover(scores, candidates);
  JointAssignment out;
  for (int k : candidates.event_candidates) {
    const auto& s = scores.event_scores.at(k);
    out.events[k] = s[1] > s[0] ? EventLabel::EVENT : EventLabel::NON_EVENT;
  }
  for (const PairKey& key : candidates.relation_candidates) {
    if (out.events.at(key.first) != EventLabel::EVENT ||
        out.events.at(key.second) != EventLabel::EVENT) {
      out.relations[key] = RelationLabel::NONE;
      continue;
    }
    const auto& s = scores.relation_scores.at(key);
    int best = 0;
    for (int r = 1; r < kNumRelationLabels; ++r)
      if (s[r] > s[best]) best = r;
    out.relations[key] = static_cast<RelationLabel>(best);
  }
  return out;
}

std::vector<Violation> check_validity(const JointAssignment& assignment,
                                      const CompositionTable& table) {
  std::vector<Violation> violations;
  auto event_label = [&](int k) {
    auto it = assignment.events.find(k);
    return it == assignment.events.end() ? EventLabel::NON_EVENT : it->second;
  };

  for (const auto& [key, r] : assignment.relations) {
    const auto [i, j] = key;
    const bool both_events =
        event_label(i) == EventLabel::EVENT && event_label(j) == EventLabel::EVENT;
    if (is_positive(r) && !both_events)
      violations.push_back({Violation::Kind::CONSISTENCY,
                            {i, j},
                            {key},
                            "pair (" + std::to_string(i) + ", " + std::to_string(j) +
                                ") is " + to_string(r) +
                                " but an endpoint is not an event"});
    if (!is_positive(r) && both_events)
      violations.push_back({Violation::Kind::CONSISTENCY,
                            {i, j},
                            {key},
                            "pair (" + std::to_string(i) + ", " + std::to_string(j) +
                                ") is NONE but both endpoints are events"});
  }

  std::map<int, std::vector<int>> starts;
  for (const auto& [key, r] : assignment.relations) starts[key.first].push_back(key.second);
  for (const auto& [key, r1] : assignment.relations) {
    if (!is_positive(r1)) continue;
    const auto [i, j] = key;
    auto it = starts.find(j);
    if (it == starts.end()) continue;
    for (int k : it->second) {
      auto jk = assignment.relations.find({j, k});
      auto ik = assignment.relations.find({i, k});
      if (ik == assignment.relations.end()) continue;
      const RelationLabel r2 = jk->second;
      const RelationLabel r3 = ik->second;
      if (!is_positive(r2) || !is_positive(r3)) continue;
      if (!table.contains(r1, r2, r3))
        violations.push_back(
            {Violation::Kind::TRANSITIVITY,
             {i, j, k},
             {key, {i, k}, {j, k}},
             "triple (" + std::to_string(i) + ", " + std::to_string(j) + ", " +
                 std::to_string(k) + "): " + to_string(r3) + " not in Trans(" +
                 to_string(r1) + ", " + to_string(r2) + ")"});
    }
  }
  return violations;
}

}  // namespace tempex
