#include "locw/certificate.hpp"

namespace locw {

CertifyOutcome certify(const Sentence& s, int steps, int max_size,
                       long long budget_per_size, int workers) {
  CertifyOutcome out;
  Metrics metrics = compute_metrics(s, steps);
  out.report =
      verify_local_on_bounded_models(s, steps, max_size, budget_per_size,
                                     workers);
  switch (out.report.status) {
    case LocalityReport::Status::Pass: {
      out.status = CertifyOutcome::Status::Certified;
      LocalCertificate cert;
      cert.sentence = s;
      cert.steps = steps;
      cert.metrics = metrics;
      cert.verified_max_size = max_size;
      cert.model_size_bound =
          closure_growth_bound(s.signature, s.quantifiers, steps + 1);
      cert.witness_size_bound =
          closure_growth_bound(s.signature, metrics.witness, steps);
      out.certificate = std::move(cert);
      break;
    }
    case LocalityReport::Status::Fail:
      out.status = CertifyOutcome::Status::Refused;
      break;
    case LocalityReport::Status::BudgetExceeded:
      out.status = CertifyOutcome::Status::BudgetExceeded;
      break;
  }
  return out;
}

}  // namespace locw
