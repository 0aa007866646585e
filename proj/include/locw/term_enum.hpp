#ifndef LOCW_TERM_ENUM_HPP
#define LOCW_TERM_ENUM_HPP

#include <vector>

#include "locw/signature.hpp"
#include "locw/term.hpp"

namespace locw {

// Two ways to grade terms by depth. Complexity counts function
// applications only; ClosureRank also charges one step for a constant,
// matching cl^1, which adds constant values. Terms of closure rank <= r
// over X are exactly the terms whose values make up cl^r(X).
enum class RankMeasure { Complexity, ClosureRank };

int term_rank(const Term& t, RankMeasure measure);

// Every term (all variable-usage patterns) over variables 0..num_vars-1
// with rank <= max_rank, in ascending Term order. Throws InvalidInput when
// the enumeration exceeds `limit` terms.
std::vector<Term> terms_over_variables(const Signature& sig, int num_vars,
                                       int max_rank, RankMeasure measure,
                                       size_t limit = 500000);

// Canonical term patterns: variables numbered by first occurrence, left to
// right, starting at 0. One representative per alpha-equivalence class.
std::vector<Term> canonical_terms(const Signature& sig, int max_rank,
                                  RankMeasure measure, size_t limit = 500000);

}  // namespace locw

#endif  // LOCW_TERM_ENUM_HPP
