#ifndef LOCW_DECIDE_HPP
#define LOCW_DECIDE_HPP

#include "locw/witness_search.hpp"

namespace locw {

// The decidable questions at the workbench's scale. The two plain-kind
// questions are equivalent to each other and to the existence of a plain
// witness; the omega question reduces to a special witness on unary
// signatures, and a regular-cardinal model exists iff an omega-model does.
enum class Question {
  ArbitrarilyLargeFinite,
  Infinite,
  OmegaModel,
  RegularCardinalModel
};

const char* question_name(Question q);

struct DecisionReport {
  Question question = Question::Infinite;
  enum class Answer { Yes, No, BudgetExceeded };
  Answer answer = Answer::No;
  int witness_count = 0;  // the N used for the search
  std::optional<IndiscernibleWitness> witness;
  FinderStats stats;
};

// Routes the question to find_witness with the right indiscernible kind
// and N = cert.metrics.witness (overridable downward for experiments; a
// found witness stays sound, only exhaustive "no"s need the full N).
// Unary-only questions refuse non-unary signatures.
DecisionReport decide(const LocalCertificate& cert, Question question,
                      const FinderOptions& opts,
                      std::optional<int> witness_count_override = {});

}  // namespace locw

#endif  // LOCW_DECIDE_HPP
