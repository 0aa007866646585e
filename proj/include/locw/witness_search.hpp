#ifndef LOCW_WITNESS_SEARCH_HPP
#define LOCW_WITNESS_SEARCH_HPP

#include <optional>

#include "locw/certificate.hpp"
#include "locw/indiscernibles.hpp"

namespace locw {

struct FinderOptions {
  long long budget = 2'000'000;  // node attempts per search task
  int workers = 1;
  std::optional<long long> size_cap;  // overrides the closure growth bound
};

struct FinderStats {
  long long nodes = 0;
  long long prunes = 0;
  long long budget_used = 0;
};

enum class FinderOutcome { Found, Exhausted, BudgetExceeded };

struct FinderResult {
  FinderOutcome outcome = FinderOutcome::Exhausted;
  std::optional<IndiscernibleWitness> witness;
  FinderStats stats;
};

// Deterministic backtracking over the structures generated by
// `witness_count` strictly increasing elements within cert.steps closure
// steps. The term universe grows layer by layer: each undefined function
// or constant entry is either merged into an existing element or becomes a
// new element at a chosen order position (only while its closure rank
// stays within the step bound); relation bits are filled afterwards.
// Branches die on matrix violations (three-valued, propagated), on
// indiscernibility violations of the requested kind, and on order
// inconsistencies. The least witness under (domain size, function tables,
// relation sets, constants) is returned; a "no" means the space was
// exhausted, which is reported separately from running out of budget.
FinderResult find_witness(const LocalCertificate& cert, int witness_count,
                          IndiscernibleKind kind, const FinderOptions& opts);

}  // namespace locw

#endif  // LOCW_WITNESS_SEARCH_HPP
