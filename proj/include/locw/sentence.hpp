#ifndef LOCW_SENTENCE_HPP
#define LOCW_SENTENCE_HPP

#include "locw/formula.hpp"
#include "locw/signature.hpp"

namespace locw {

// A universal prenex sentence: forall x1 ... xq . matrix. Every sentence
// in the workbench has this shape by construction.
struct Sentence {
  Signature signature;
  int quantifiers = 0;
  Formula matrix = Formula::truth();

  bool operator==(const Sentence&) const = default;
};

// Arity-checks the matrix and verifies all variable indices are < q.
void validate_sentence(const Sentence& s);

// forall-merge: conjunction of universal sentences over one signature is
// again universal, with q = max over the parts (domains are nonempty, so
// unused leading universals are harmless).
Sentence conjoin_sentences(const Signature& sig,
                           std::vector<Sentence> parts);

}  // namespace locw

#endif  // LOCW_SENTENCE_HPP
