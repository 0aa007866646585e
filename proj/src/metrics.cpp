#include "locw/metrics.hpp"

#include <algorithm>

#include "locw/errors.hpp"

namespace locw {

Metrics compute_metrics(const Sentence& s, int steps) {
  if (steps < 1) throw InvalidInput("steps must be >= 1");
  const Signature& sig = s.signature;

  // A term of complexity <= d maximizes distinct variables by applying the
  // widest function to disjoint copies of the previous layer's best.
  long long max_fn_arity = sig.max_function_arity();
  long long v = 0;
  if (max_fn_arity > 0) {
    v = 1;
    for (int d = 0; d < steps + 1; ++d) {
      v *= max_fn_arity;
      if (v > (1LL << 40)) break;  // clamp; only ever hit by huge inputs
    }
  }

  // Widest atom: a k-ary relation (k >= 2 via built-in = and <) applied to
  // disjoint maximal terms. A bare variable is the best term when there are
  // no function symbols.
  long long term_slot = std::max<long long>(1, v);
  long long atom_arity = std::max(2, sig.max_relation_arity());
  long long v_prime = atom_arity * term_slot;

  Metrics m;
  m.steps = steps;
  m.term_vars = v;
  m.atom_vars = v_prime;
  m.quantifiers = s.quantifiers;
  m.witness = std::max({3 * v, v_prime + v,
                        static_cast<long long>(s.quantifiers) * v_prime});
  return m;
}

}  // namespace locw
