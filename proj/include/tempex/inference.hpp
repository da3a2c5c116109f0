// Joint MAP inference: the 0-1 ILP of local scores under one-label,
// event-relation consistency, and transitivity constraints, solved exactly
// by depth-first branch and bound.
#ifndef TEMPEX_INFERENCE_HPP
#define TEMPEX_INFERENCE_HPP

#include <optional>
#include <string>
#include <vector>

#include "tempex/algebra.hpp"
#include "tempex/core.hpp"
#include "tempex/scorer.hpp"

namespace tempex {

/// A triple of candidate pairs (i,j), (i,k), (j,k) for i < j < k; the
/// transitivity rows couple exactly these.
struct PairTriple {
  int i, j, k;
  int q_ij, q_ik, q_jk;  // positions in relation_candidates
};

struct LinearRow {
  enum class Kind { ONE_LABEL, CONSISTENCY, TRANSITIVITY };
  enum class Sense { EQ, LE, GE };
  Kind kind;
  Sense sense;
  std::vector<std::pair<int, double>> terms;  // (variable, coefficient)
  double rhs;
};

/// Binary variables, linear objective, and constraint rows for one document's
/// joint assignment. Variables are laid out events first (two per candidate,
/// NON_EVENT then EVENT), then pairs (seven per candidate in label order).
struct ILPInstance {
  CandidateSet candidates;
  double c_event = 1.0;
  bool augmented = false;

  std::vector<double> objective_base;   ///< per-variable score coefficient
  std::vector<double> objective_bonus;  ///< +1 margin for off-gold variables
  std::vector<LinearRow> rows;
  std::vector<PairTriple> triples;

  int num_events() const { return static_cast<int>(candidates.event_candidates.size()); }
  int num_pairs() const { return static_cast<int>(candidates.relation_candidates.size()); }
  int num_variables() const { return 2 * num_events() + kNumRelationLabels * num_pairs(); }

  int event_var(int event_pos, EventLabel e) const {
    return 2 * event_pos + static_cast<int>(e);
  }
  int pair_var(int pair_pos, RelationLabel r) const {
    return 2 * num_events() + kNumRelationLabels * pair_pos + static_cast<int>(r);
  }
};

/// Builds the ILP for a score table. Event coefficients are c_event * score;
/// with a gold assignment the Hamming margin adds +1 to every variable whose
/// label disagrees with gold. `include_transitivity` exists for the
/// constraint-ablation mode; consistency rows are always emitted.
/// Throws std::invalid_argument when scores or gold do not cover the
/// candidates, or the candidate set is malformed.
ILPInstance build_ilp(const ScoreTable& scores, const CandidateSet& candidates,
                      double c_event,
                      const std::optional<JointAssignment>& loss_augment = std::nullopt,
                      bool include_transitivity = true);

/// Objective of a full assignment: left-to-right sum of the selected
/// variables' coefficients, events then pairs in candidate order. Both
/// solvers report values through this one function.
double objective_value(const ILPInstance& instance, const JointAssignment& assignment);

/// 0/1 vector over the instance's variables for a full assignment.
std::vector<double> to_variable_values(const ILPInstance& instance,
                                       const JointAssignment& assignment);
bool row_holds(const LinearRow& row, const std::vector<double>& values);

/// Exact MAP by branch and bound. Always feasible (all NON_EVENT / all NONE
/// satisfies every constraint). Ties are broken toward the lexicographically
/// smallest assignment: earlier variable index first, then label order.
JointAssignment solve_exact(const ILPInstance& instance);

/// Independent oracle: exhaustive enumeration over all label combinations,
/// keeping only assignments with zero validity violations, with the same
/// objective arithmetic and tie-breaking as solve_exact. Guarded to
/// |event candidates| <= 5 and |relation candidates| <= 8.
JointAssignment brute_force_map(const ScoreTable& scores, const CandidateSet& candidates,
                                double c_event,
                                const std::optional<JointAssignment>& loss_augment =
                                    std::nullopt);

/// Pipeline-style local decisions with no global constraints: argmax per
/// event, argmax per pair when both endpoints were predicted EVENT, NONE
/// otherwise. Output may violate transitivity.
JointAssignment pipeline_map(const ScoreTable& scores, const CandidateSet& candidates);

struct Violation {
  enum class Kind { ONE_LABEL, CONSISTENCY, TRANSITIVITY };
  Kind kind;
  std::vector<int> event_keys;
  std::vector<PairKey> pair_keys;
  std::string detail;
};

/// Empty iff the assignment satisfies event-relation consistency (a pair is
/// positive exactly when both endpoints are events) and transitivity (every
/// fully-present all-positive triple composes).
std::vector<Violation> check_validity(const JointAssignment& assignment,
                                      const CompositionTable& table);

}  // namespace tempex

#endif  // TEMPEX_INFERENCE_HPP
