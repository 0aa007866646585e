#ifndef LOCW_ENUMERATE_HPP
#define LOCW_ENUMERATE_HPP

#include <functional>

#include "locw/sentence.hpp"
#include "locw/structure.hpp"

namespace locw {

// Node-count budget shared by the bounded searches. Charged once per
// candidate value tried; node counts are what make re-runs reproducible.
struct SearchBudget {
  long long limit = 50'000'000;
  long long used = 0;

  bool charge() { return ++used <= limit; }
  bool exceeded() const { return used > limit; }
};

enum class SearchOutcome { Exhausted, BudgetExceeded, Stopped };

// Enumerates every model of `s` with domain 0..size-1 (order-canonical, so
// this is enumeration up to order isomorphism), in a fixed deterministic
// order: constants first, then declared symbols in declaration order with
// argument tuples ascending; candidate values ascending, relation bits
// false before true. Ground instances of the matrix are checked
// three-valued as cells fill in, with forced values propagated.
//
// The visitor returns false to stop early (outcome Stopped). Exhausted
// means the whole space was covered.
SearchOutcome for_each_model(const Sentence& s, int size,
                             SearchBudget& budget,
                             const std::function<bool(const FiniteStructure&)>& visit);

}  // namespace locw

#endif  // LOCW_ENUMERATE_HPP
