#ifndef LOCW_CERTIFICATE_HPP
#define LOCW_CERTIFICATE_HPP

#include "locw/metrics.hpp"
#include "locw/verify_local.hpp"

namespace locw {

// A sentence paired with the closure bound it was checked at, plus the
// derived size data. Certification is empirical at bounded scale: all
// models up to verified_max_size were enumerated.
struct LocalCertificate {
  Sentence sentence;
  int steps = 1;
  Metrics metrics;
  int verified_max_size = 0;
  // Default bounded-model size for re-checking (closure growth from q
  // elements in steps+1 steps), and the reachable-size bound for witness
  // search from N generators in `steps` steps. Both clamped.
  long long model_size_bound = 0;
  long long witness_size_bound = 0;
};

struct CertifyOutcome {
  enum class Status { Certified, Refused, BudgetExceeded };
  Status status = Status::Refused;
  std::optional<LocalCertificate> certificate;
  LocalityReport report;
};

CertifyOutcome certify(const Sentence& s, int steps, int max_size,
                       long long budget_per_size, int workers = 1);

}  // namespace locw

#endif  // LOCW_CERTIFICATE_HPP
