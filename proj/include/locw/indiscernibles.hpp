#ifndef LOCW_INDISCERNIBLES_HPP
#define LOCW_INDISCERNIBLES_HPP

#include <vector>

#include "locw/sentence.hpp"
#include "locw/structure.hpp"

namespace locw {

enum class IndiscernibleKind { Plain, Special };

// True iff every pair of equal-length strictly increasing tuples from
// `gens` satisfies the same atomic formulas over terms of complexity
// <= atom_complexity_cap. Checking tuples up to the widest atom's variable
// count suffices; longer tuples add no new atoms.
bool check_plain_indiscernibles(const FiniteStructure& m,
                                const std::vector<int>& gens,
                                int atom_complexity_cap);

// The unary-signature conditions on top of plainness, for every term t of
// complexity <= term_complexity_cap built from unary function symbols
// over one variable or over constants (closed terms count: a constant
// value sitting past the second generator breaks condition (i) just as a
// function value would):
//   (i)  x < y in X implies t(x) < y,
//   (ii) x < y in X and t(y) < x imply t is constant on {z in X : z > x}.
// Throws PreconditionError when a function symbol has arity > 1.
bool check_special_indiscernibles(const FiniteStructure& m,
                                  const std::vector<int>& gens,
                                  int term_complexity_cap,
                                  int atom_complexity_cap);

// A finite model generated by `generators` within `steps` closure steps,
// whose generator sequence passed the indiscernibility check of `kind`.
struct IndiscernibleWitness {
  FiniteStructure model;
  std::vector<int> generators;
  IndiscernibleKind kind = IndiscernibleKind::Plain;
  int steps = 1;
};

// Full from-scratch re-check: the model satisfies the sentence, the
// generators generate the whole domain within `steps` steps, and the
// indiscernibility property of the witness kind holds.
bool reverify_witness(const IndiscernibleWitness& w, const Sentence& s);

}  // namespace locw

#endif  // LOCW_INDISCERNIBLES_HPP
