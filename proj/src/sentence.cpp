#include "locw/sentence.hpp"

#include <algorithm>

#include "locw/errors.hpp"

namespace locw {

void validate_sentence(const Sentence& s) {
  if (s.quantifiers < 0) {
    throw InvalidInput("negative quantifier count");
  }
  validate_formula(s.matrix, s.signature, s.quantifiers);
}

Sentence conjoin_sentences(const Signature& sig, std::vector<Sentence> parts) {
  Sentence out;
  out.signature = sig;
  std::vector<Formula> matrices;
  matrices.reserve(parts.size());
  for (Sentence& p : parts) {
    out.quantifiers = std::max(out.quantifiers, p.quantifiers);
    matrices.push_back(std::move(p.matrix));
  }
  out.matrix = Formula::conjunction_of(std::move(matrices));
  validate_sentence(out);
  return out;
}

}  // namespace locw
