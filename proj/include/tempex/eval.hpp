// Confusion matrices and the micro-averaged precision / recall / F1 metrics,
// with the NONE (and optionally VAGUE) exclusion conventions.
#ifndef TEMPEX_EVAL_HPP
#define TEMPEX_EVAL_HPP

#include <array>
#include <optional>
#include <set>
#include <string>

#include "tempex/core.hpp"

namespace tempex {

struct ConfusionMatrix {
  /// relation[gold][predicted] over the 7x7 label grid
  std::array<std::array<long, kNumRelationLabels>, kNumRelationLabels> relation{};
  /// event[gold][predicted] over {NON_EVENT, EVENT}
  std::array<std::array<long, kNumEventLabels>, kNumEventLabels> event{};

  long relation_total() const;
  ConfusionMatrix& operator+=(const ConfusionMatrix& other);
};

/// One increment per shared key. Throws std::invalid_argument when the two
/// assignments do not share exactly the same keys.
void accumulate(const JointAssignment& gold, const JointAssignment& pred,
                ConfusionMatrix& cm);

struct MicroScores {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  long correct = 0;
  long predicted = 0;  ///< S1: predictions with a non-excluded predicted label
  long gold = 0;       ///< S2: pairs with a non-excluded gold label
  bool undefined = false;  ///< some denominator was zero
};

/// Micro-average over the relation grid excluding the given labels from both
/// the prediction count S1 and the gold count S2. The excluded set must be
/// a subset of {NONE, VAGUE}.
MicroScores micro_prf(const ConfusionMatrix& cm, const std::set<RelationLabel>& excluded);

/// Event-side micro scores on the EVENT class.
MicroScores event_prf(const ConfusionMatrix& cm);

struct LabelScores {
  RelationLabel label;
  bool absent = false;  ///< no predictions were made for this label
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

/// Per-positive-label breakdown; labels never predicted are marked absent.
std::vector<LabelScores> per_label_report(const ConfusionMatrix& cm);

/// Human-readable report: per-label table plus the micro average.
std::string render_report(const ConfusionMatrix& cm,
                          const std::set<RelationLabel>& excluded);

}  // namespace tempex

#endif  // TEMPEX_EVAL_HPP
