#ifndef LOCW_VERIFY_LOCAL_HPP
#define LOCW_VERIFY_LOCAL_HPP

#include <optional>
#include <set>

#include "locw/enumerate.hpp"
#include "locw/sentence.hpp"

namespace locw {

// A model of the sentence together with a seed set witnessing that the
// sentence is not local at the claimed bound.
struct LocalityViolation {
  enum class Kind { SubstructureFails, StabilizationTooSlow };
  Kind kind;
  FiniteStructure model;
  std::set<int> seed;
  int observed_steps = 0;
};

struct LocalityReport {
  enum class Status { Pass, Fail, BudgetExceeded };
  Status status = Status::Pass;
  // Max stabilization step seen over all (model, seed) pairs: the least
  // bound the checked scale supports.
  int max_observed_stabilization = 0;
  long long models_checked = 0;
  long long nodes = 0;
  std::optional<LocalityViolation> violation;
};

// Checks, over every model of `s` of size <= max_size (order-canonical
// enumeration), that each generated substructure again satisfies `s` and
// that closure stabilizes within `steps` steps, for every seed subset
// including the empty one. The budget applies per domain size, which keeps
// results independent of the worker count.
LocalityReport verify_local_on_bounded_models(const Sentence& s, int steps,
                                              int max_size,
                                              long long budget_per_size,
                                              int workers = 1);

// Size that closure from `seeds` elements can reach in `steps` steps,
// from the signature's branching alone; clamped to `cap`.
long long closure_growth_bound(const Signature& sig, long long seeds,
                               int steps, long long cap = 1'000'000'000);

}  // namespace locw

#endif  // LOCW_VERIFY_LOCAL_HPP
