// Label inverse and the transitivity composition sets Trans(r1, r2).
// The table is grounded in interval-endpoint semantics: BEFORE means the
// first interval ends strictly before the second starts, INCLUDES means
// strict containment, SIMULTANEOUS means identical endpoints, and VAGUE
// carries no endpoint constraint.
#ifndef TEMPEX_ALGEBRA_HPP
#define TEMPEX_ALGEBRA_HPP

#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <utility>

#include "tempex/core.hpp"

namespace tempex {

using RelationSet = std::set<RelationLabel>;

/// BEFORE<->AFTER, INCLUDES<->IS_INCLUDED; the rest are self-inverse.
RelationLabel inverse(RelationLabel r);

/// Composition sets for all 36 ordered pairs of positive labels.
class CompositionTable {
 public:
  CompositionTable();

  /// Labels admissible for (i,k) given r1 on (i,j) and r2 on (j,k).
  /// Throws std::invalid_argument if either label is NONE.
  const RelationSet& compose(RelationLabel r1, RelationLabel r2) const;

  bool contains(RelationLabel r1, RelationLabel r2, RelationLabel r3) const {
    return compose(r1, r2).count(r3) > 0;
  }

  /// Plain-text table: `r1 <TAB> r2 <TAB> comma-separated set`, rows sorted
  /// lexicographically by label name. Lines starting with '#' are header.
  void write_golden(std::ostream& os) const;

 private:
  std::map<std::pair<RelationLabel, RelationLabel>, RelationSet> entries_;
};

const CompositionTable& composition_table();

/// Independent oracle: enumerates all placements of three integer intervals
/// with endpoints in {0..7} (start < end within each interval), collects
/// every definite relation realizable between the outer pair alongside
/// r1(i,j) and r2(j,k), and adds VAGUE when more than one definite relation
/// is consistent or either input is VAGUE.
RelationSet oracle_compose(RelationLabel r1, RelationLabel r2);

/// The golden-file rendering of an arbitrary composition function, in the
/// same format as CompositionTable::write_golden.
std::string render_composition(
    const std::map<std::pair<RelationLabel, RelationLabel>, RelationSet>& entries);

}  // namespace tempex

#endif  // TEMPEX_ALGEBRA_HPP
