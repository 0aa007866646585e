#ifndef LOCW_METRICS_HPP
#define LOCW_METRICS_HPP

#include "locw/sentence.hpp"

namespace locw {

// Syntactic size data for a sentence at a given closure bound n:
//   term_vars (v)    max distinct variables in a function-application term
//                    of complexity <= n+1; 0 when no function symbols
//   atom_vars (v')   max distinct variables in a single atomic formula over
//                    terms of complexity <= n+1 (equality and < count)
//   quantifiers (q)  the universal prefix length
//   witness (N)      max{ 3v ; v' + v ; q * v' }
struct Metrics {
  int steps = 1;
  long long term_vars = 0;
  long long atom_vars = 0;
  int quantifiers = 0;
  long long witness = 0;

  bool operator==(const Metrics&) const = default;
};

// Closed form over the signature's arities; equivalent to exhausting all
// canonical term/atom shapes up to complexity steps+1 (the shape count is
// exponential, the maxima are not). Requires steps >= 1.
Metrics compute_metrics(const Sentence& s, int steps);

}  // namespace locw

#endif  // LOCW_METRICS_HPP
