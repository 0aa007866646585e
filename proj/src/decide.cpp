#include "locw/decide.hpp"

#include "locw/errors.hpp"

namespace locw {

const char* question_name(Question q) {
  switch (q) {
    case Question::ArbitrarilyLargeFinite: return "arbitrarily-large-finite";
    case Question::Infinite: return "infinite";
    case Question::OmegaModel: return "omega-model";
    case Question::RegularCardinalModel: return "regular-cardinal-model";
  }
  return "?";
}

DecisionReport decide(const LocalCertificate& cert, Question question,
                      const FinderOptions& opts,
                      std::optional<int> witness_count_override) {
  bool unary_only = question == Question::OmegaModel ||
                    question == Question::RegularCardinalModel;
  if (unary_only && !cert.sentence.signature.all_functions_unary()) {
    throw PreconditionError(std::string("question '") +
                            question_name(question) +
                            "' requires all function symbols unary");
  }
  IndiscernibleKind kind =
      unary_only ? IndiscernibleKind::Special : IndiscernibleKind::Plain;

  long long n = cert.metrics.witness;
  if (witness_count_override) {
    if (*witness_count_override > n) {
      throw InvalidInput(
          "witness count above the computed bound is never needed");
    }
    n = *witness_count_override;
  }
  if (n < 1) n = 1;

  DecisionReport report;
  report.question = question;
  report.witness_count = int(n);
  FinderResult result = find_witness(cert, int(n), kind, opts);
  report.stats = result.stats;
  switch (result.outcome) {
    case FinderOutcome::Found:
      report.answer = DecisionReport::Answer::Yes;
      report.witness = result.witness;
      break;
    case FinderOutcome::Exhausted:
      report.answer = DecisionReport::Answer::No;
      break;
    case FinderOutcome::BudgetExceeded:
      report.answer = DecisionReport::Answer::BudgetExceeded;
      break;
  }
  return report;
}

}  // namespace locw
