#ifndef LOCW_CLOSURE_HPP
#define LOCW_CLOSURE_HPP

#include <optional>
#include <set>

#include "locw/structure.hpp"

namespace locw {

// The chain cl^1(X,M) ⊆ cl^2(X,M) ⊆ ... recorded until it stops growing.
// stabilization_step is the least s >= 1 with cl^{s+1} = cl^s.
struct ClosureTrace {
  std::vector<std::set<int>> stages;  // stages[i] = cl^{i+1}(X, M)
  int stabilization_step = 1;

  const std::set<int>& closure() const { return stages.back(); }
};

ClosureTrace closure(const FiniteStructure& m, const std::set<int>& x);

// The restriction of M to cl(X, M), elements re-indexed in order. The
// optional out-parameter receives new-index -> old-element. Closure of the
// empty set in a constant-free signature is empty; that degenerate case is
// rejected (domains have size >= 1).
FiniteStructure generated_substructure(const FiniteStructure& m,
                                       const std::set<int>& x,
                                       std::vector<int>* elements = nullptr);

// Restriction of M to a subset and a sub-signature. The subset must be
// closed under the sub-signature's functions and contain its constants.
FiniteStructure restrict_structure(const FiniteStructure& m,
                                   const std::set<int>& elements,
                                   const Signature& subsig);

}  // namespace locw

#endif  // LOCW_CLOSURE_HPP
