#include "tempex/algebra.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace tempex {

RelationLabel inverse(RelationLabel r) {
  switch (r) {
    case RelationLabel::BEFORE: return RelationLabel::AFTER;
    case RelationLabel::AFTER: return RelationLabel::BEFORE;
    case RelationLabel::INCLUDES: return RelationLabel::IS_INCLUDED;
    case RelationLabel::IS_INCLUDED: return RelationLabel::INCLUDES;
    default: return r;  // SIMULTANEOUS, VAGUE, NONE are self-inverse
  }
}

namespace {

using RL = RelationLabel;

const RelationSet kAllPositive = {RL::BEFORE,      RL::AFTER, RL::INCLUDES,
                                  RL::IS_INCLUDED, RL::SIMULTANEOUS, RL::VAGUE};

// Frozen from the endpoint-enumeration oracle; oracle_compose re-derives it
// and the test suite diffs the two on every build.
struct TableRow {
  RL r1, r2;
  RelationSet out;
};

const std::vector<TableRow> kFrozenTable = {
    {RL::BEFORE, RL::BEFORE, {RL::BEFORE}},
    {RL::BEFORE, RL::AFTER, kAllPositive},
    {RL::BEFORE, RL::INCLUDES, {RL::BEFORE}},
    {RL::BEFORE, RL::IS_INCLUDED, {RL::BEFORE, RL::IS_INCLUDED, RL::VAGUE}},
    {RL::BEFORE, RL::SIMULTANEOUS, {RL::BEFORE}},
    {RL::BEFORE, RL::VAGUE, kAllPositive},
    {RL::AFTER, RL::BEFORE, kAllPositive},
    {RL::AFTER, RL::AFTER, {RL::AFTER}},
    {RL::AFTER, RL::INCLUDES, {RL::AFTER}},
    {RL::AFTER, RL::IS_INCLUDED, {RL::AFTER, RL::IS_INCLUDED, RL::VAGUE}},
    {RL::AFTER, RL::SIMULTANEOUS, {RL::AFTER}},
    {RL::AFTER, RL::VAGUE, kAllPositive},
    {RL::INCLUDES, RL::BEFORE, {RL::BEFORE, RL::INCLUDES, RL::VAGUE}},
    {RL::INCLUDES, RL::AFTER, {RL::AFTER, RL::INCLUDES, RL::VAGUE}},
    {RL::INCLUDES, RL::INCLUDES, {RL::INCLUDES}},
    {RL::INCLUDES, RL::IS_INCLUDED,
     {RL::INCLUDES, RL::IS_INCLUDED, RL::SIMULTANEOUS, RL::VAGUE}},
    {RL::INCLUDES, RL::SIMULTANEOUS, {RL::INCLUDES}},
    {RL::INCLUDES, RL::VAGUE, kAllPositive},
    {RL::IS_INCLUDED, RL::BEFORE, {RL::BEFORE}},
    {RL::IS_INCLUDED, RL::AFTER, {RL::AFTER}},
    {RL::IS_INCLUDED, RL::INCLUDES, kAllPositive},
    {RL::IS_INCLUDED, RL::IS_INCLUDED, {RL::IS_INCLUDED}},
    {RL::IS_INCLUDED, RL::SIMULTANEOUS, {RL::IS_INCLUDED}},
    {RL::IS_INCLUDED, RL::VAGUE, kAllPositive},
    {RL::SIMULTANEOUS, RL::BEFORE, {RL::BEFORE}},
    {RL::SIMULTANEOUS, RL::AFTER, {RL::AFTER}},
    {RL::SIMULTANEOUS, RL::INCLUDES, {RL::INCLUDES}},
    {RL::SIMULTANEOUS, RL::IS_INCLUDED, {RL::IS_INCLUDED}},
    {RL::SIMULTANEOUS, RL::SIMULTANEOUS, {RL::SIMULTANEOUS}},
    {RL::SIMULTANEOUS, RL::VAGUE, kAllPositive},
    {RL::VAGUE, RL::BEFORE, kAllPositive},
    {RL::VAGUE, RL::AFTER, kAllPositive},
    {RL::VAGUE, RL::INCLUDES, kAllPositive},
    {RL::VAGUE, RL::IS_INCLUDED, kAllPositive},
    {RL::VAGUE, RL::SIMULTANEOUS, kAllPositive},
    {RL::VAGUE, RL::VAGUE, kAllPositive},
};

// Interval semantics of the definite labels; VAGUE holds vacuously.
bool holds(RL r, int a1, int b1, int a2, int b2) {
  switch (r) {
    case RL::BEFORE: return b1 < a2;
    case RL::AFTER: return b2 < a1;
    case RL::INCLUDES: return a1 < a2 && b2 < b1;
    case RL::IS_INCLUDED: return a2 < a1 && b1 < b2;
    case RL::SIMULTANEOUS: return a1 == a2 && b1 == b2;
    case RL::VAGUE: return true;
    default: return false;
  }
}

void require_positive(RL r1, RL r2, const char* who) {
  if (!is_positive(r1) || !is_positive(r2))
    throw std::invalid_argument(std::string(who) + ": NONE is not composable");
}

}  // namespace

CompositionTable::CompositionTable() {
  for (const TableRow& row : kFrozenTable) entries_[{row.r1, row.r2}] = row.out;
}

const RelationSet& CompositionTable::compose(RelationLabel r1, RelationLabel r2) const {
  require_positive(r1, r2, "compose");
  return entries_.at({r1, r2});
}

void CompositionTable::write_golden(std::ostream& os) const {
  os << render_composition(entries_);
}

const CompositionTable& composition_table() {
  static const CompositionTable table;
  return table;
}

RelationSet oracle_compose(RelationLabel r1, RelationLabel r2) {
  require_positive(r1, r2, "oracle_compose");
  // Three intervals use at most six distinct endpoints; a grid of eight
  // realizes every strict/equal ordering among them.
  constexpr int kGrid = 8;
  RelationSet definite;
  for (int a1 = 0; a1 < kGrid; ++a1)
    for (int b1 = a1 + 1; b1 < kGrid; ++b1)
      for (int a2 = 0; a2 < kGrid; ++a2)
        for (int b2 = a2 + 1; b2 < kGrid; ++b2) {
          if (!holds(r1, a1, b1, a2, b2)) continue;
          for (int a3 = 0; a3 < kGrid; ++a3)
            for (int b3 = a3 + 1; b3 < kGrid; ++b3) {
              if (!holds(r2, a2, b2, a3, b3)) continue;
              for (RL r3 : {RL::BEFORE, RL::AFTER, RL::INCLUDES,
                            RL::IS_INCLUDED, RL::SIMULTANEOUS})
                if (holds(r3, a1, b1, a3, b3)) definite.insert(r3);
            }
        }
  RelationSet out = definite;
  if (definite.size() > 1 || r1 == RL::VAGUE || r2 == RL::VAGUE)
    out.insert(RL::VAGUE);
  return out;
}

std::string render_composition(
    const std::map<std::pair<RelationLabel, RelationLabel>, RelationSet>& entries) {
  // Rows sorted lexicographically by (r1 name, r2 name); set members sorted
  // by name as well so the rendering is canonical.
  std::vector<std::pair<std::pair<std::string, std::string>, const RelationSet*>> rows;
  rows.reserve(entries.size());
  for (const auto& [key, set] : entries)
    rows.push_back({{to_string(key.first), to_string(key.second)}, &set});
  std::sort(rows.begin(), rows.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });

  std::ostringstream os;
  os << "# Transitivity composition sets derived from interval-endpoint\n"
        "# enumeration (grid {0..7}). VAGUE is read as `no endpoint\n"
        "# constraint`; published tables that treat VAGUE differently may\n"
        "# disagree on rows whose set is not a single definite relation.\n";
  for (const auto& [names, set] : rows) {
    std::vector<std::string> members;
    members.reserve(set->size());
    for (RelationLabel r : *set) members.push_back(to_string(r));
    std::sort(members.begin(), members.end());
    os << names.first << '\t' << names.second << '\t';
    for (std::size_t i = 0; i < members.size(); ++i)
      os << (i ? "," : "") << members[i];
    os << '\n';
  }
  return os.str();
}

}  // namespace tempex
