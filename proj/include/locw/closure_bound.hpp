#ifndef LOCW_CLOSURE_BOUND_HPP
#define LOCW_CLOSURE_BOUND_HPP

#include "locw/sentence.hpp"

namespace locw {

// The universal sentence whose finite models are exactly the structures in
// which closure stabilizes within n steps: cl^{n+1}(X, M) = cl^n(X, M) for
// every X, the empty set included. For each canonical term t one
// application layer past the bound, the conjunct
//
//   forall vars(t) .  OR_{t' within the bound, vars(t') ⊆ vars(t)}  t = t'
//
// pins the value of t to an already reachable one. Terms are graded by
// closure rank (a constant costs the step that introduces it); without
// that, sentences with constants admit models whose closure from the empty
// set takes an extra step. Signatures without function symbols yield the
// trivially true sentence. Requires n >= 1.
Sentence generate_Cn(const Signature& sig, int n);

}  // namespace locw

#endif  // LOCW_CLOSURE_BOUND_HPP
