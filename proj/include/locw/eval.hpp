#ifndef LOCW_EVAL_HPP
#define LOCW_EVAL_HPP

#include "locw/sentence.hpp"
#include "locw/structure.hpp"

namespace locw {

int eval_term(const FiniteStructure& m, const Term& t,
              std::span<const int> assignment);

bool eval_formula(const FiniteStructure& m, const Formula& f,
                  std::span<const int> assignment);

// True iff the matrix holds under every assignment of the q universally
// quantified variables (exhaustive). Throws InvalidInput on signature
// mismatch.
bool eval_sentence(const FiniteStructure& m, const Sentence& s);

}  // namespace locw

#endif  // LOCW_EVAL_HPP
