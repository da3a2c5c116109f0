#include "tempex/eval.hpp"

#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace tempex {

long ConfusionMatrix::relation_total() const {
  long total = 0;
  for (const auto& row : relation)
    for (long c : row) total += c;
  return total;
}

ConfusionMatrix& ConfusionMatrix::operator+=(const ConfusionMatrix& other) {
  for (int g = 0; g < kNumRelationLabels; ++g)
    for (int p = 0; p < kNumRelationLabels; ++p) relation[g][p] += other.relation[g][p];
  for (int g = 0; g < kNumEventLabels; ++g)
    for (int p = 0; p < kNumEventLabels; ++p) event[g][p] += other.event[g][p];
  return *this;
}

void accumulate(const JointAssignment& gold, const JointAssignment& pred,
                ConfusionMatrix& cm) {
  if (gold.events.size() != pred.events.size() ||
      gold.relations.size() != pred.relations.size())
    throw std::invalid_argument("accumulate: assignments differ in key counts");
  auto pe = pred.events.begin();
  for (auto ge = gold.events.begin(); ge != gold.events.end(); ++ge, ++pe) {
    if (ge->first != pe->first)
      throw std::invalid_argument("accumulate: event keys differ");
    ++cm.event[static_cast<int>(ge->second)][static_cast<int>(pe->second)];
  }
  auto pr = pred.relations.begin();
  for (auto gr = gold.relations.begin(); gr != gold.relations.end(); ++gr, ++pr) {
    if (gr->first != pr->first)
      throw std::invalid_argument("accumulate: relation keys differ");
    ++cm.relation[static_cast<int>(gr->second)][static_cast<int>(pr->second)];
  }
}

namespace {

MicroScores from_counts(long correct, long predicted, long gold) {
  MicroScores s;
  s.correct = correct;
  s.predicted = predicted;
  s.gold = gold;
  s.undefined = predicted == 0 || gold == 0;
  s.precision = predicted == 0 ? 0.0 : static_cast<double>(correct) / predicted;
  s.recall = gold == 0 ? 0.0 : static_cast<double>(correct) / gold;
  s.f1 = (s.precision + s.recall) == 0.0
             ? 0.0
             : 2.0 * s.precision * s.recall / (s.precision + s.recall);
  return s;
}

}  // namespace

MicroScores micro_prf(const ConfusionMatrix& cm,
                      const std::set<RelationLabel>& excluded) {
  for (RelationLabel r : excluded)
    if (r != RelationLabel::NONE && r != RelationLabel::VAGUE)
      throw std::invalid_argument("excluded labels must be within {NONE, VAGUE}");
  long correct = 0, predicted = 0, gold = 0;
  for (int g = 0; g < kNumRelationLabels; ++g) {
    const bool gold_in = !excluded.count(static_cast<RelationLabel>(g));
    for (int p = 0; p < kNumRelationLabels; ++p) {
      const bool pred_in = !excluded.count(static_cast<RelationLabel>(p));
      const long n = cm.relation[g][p];
      if (pred_in) predicted += n;
      if (gold_in) gold += n;
      if (g == p && gold_in) correct += n;
    }
  }
  return from_counts(correct, predicted, gold);
}

MicroScores event_prf(const ConfusionMatrix& cm) {
  const long tp = cm.event[1][1];
  const long fp = cm.event[0][1];
  const long fn = cm.event[1][0];
  return from_counts(tp, tp + fp, tp + fn);
}

std::vector<LabelScores> per_label_report(const ConfusionMatrix& cm) {
  std::vector<LabelScores> report;
  for (RelationLabel label : kPositiveLabels) {
    const int l = static_cast<int>(label);
    long col = 0, row = 0;
    for (int g = 0; g < kNumRelationLabels; ++g) col += cm.relation[g][l];
    for (int p = 0; p < kNumRelationLabels; ++p) row += cm.relation[l][p];
    LabelScores s;
    s.label = label;
    if (col == 0) {
      s.absent = true;
    } else {
      const MicroScores m = from_counts(cm.relation[l][l], col, row);
      s.precision = m.precision;
      s.recall = m.recall;
      s.f1 = m.f1;
    }
    report.push_back(s);
  }
  return report;
}

std::string render_report(const ConfusionMatrix& cm,
                          const std::set<RelationLabel>& excluded) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(3);
  os << std::left << std::setw(14) << "label" << std::right << std::setw(8) << "P"
     << std::setw(8) << "R" << std::setw(8) << "F1" << '\n';
  for (const LabelScores& s : per_label_report(cm)) {
    os << std::left << std::setw(14) << to_string(s.label);
    if (s.absent)
      os << std::right << std::setw(8) << "-" << std::setw(8) << "-" << std::setw(8)
         << "-" << '\n';
    else
      os << std::right << std::setw(8) << s.precision << std::setw(8) << s.recall
         << std::setw(8) << s.f1 << '\n';
  }
  const MicroScores rel = micro_prf(cm, excluded);
  os << std::left << std::setw(14) << "micro-avg" << std::right << std::setw(8)
     << rel.precision << std::setw(8) << rel.recall << std::setw(8) << rel.f1;
  if (rel.undefined) os << "  (undefined: zero denominator)";
  os << '\n';
  const MicroScores ev = event_prf(cm);
  os << std::left << std::setw(14) << "event" << std::right << std::setw(8)
     << ev.precision << std::setw(8) << ev.recall << std::setw(8) << ev.f1;
  if (ev.undefined) os << "  (undefined: zero denominator)";
  os << '\n';
  return os.str();
}

}  // namespace tempex
