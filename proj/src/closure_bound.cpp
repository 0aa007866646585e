#include "locw/closure_bound.hpp"

#include <algorithm>

#include "locw/errors.hpp"
#include "locw/term_enum.hpp"

namespace locw {

Sentence generate_Cn(const Signature& sig, int n) {
  if (n < 1) throw InvalidInput("closure bound must be >= 1");
  Sentence out;
  out.signature = sig;
  out.quantifiers = 0;
  out.matrix = Formula::truth();
  if (sig.functions().empty()) return out;  // closure adds constants once

  std::vector<Term> frontier;
  for (const Term& t :
       canonical_terms(sig, n + 1, RankMeasure::ClosureRank)) {
    if (closure_rank(t) == n + 1) frontier.push_back(t);
  }
  if (frontier.empty()) return out;

  std::vector<Formula> conjuncts;
  int max_vars = 0;
  for (const Term& t : frontier) {
    int vars = distinct_variable_count(t);
    max_vars = std::max(max_vars, vars);
    std::vector<Formula> options;
    for (const Term& reachable :
         terms_over_variables(sig, vars, n, RankMeasure::ClosureRank)) {
      options.push_back(Formula::eq(t, reachable));
    }
    conjuncts.push_back(Formula::disjunction_of(std::move(options)));
  }

  out.quantifiers = max_vars;
  out.matrix = Formula::conjunction_of(std::move(conjuncts));
  validate_sentence(out);
  return out;
}

}  // namespace locw
