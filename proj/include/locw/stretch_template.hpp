#ifndef LOCW_STRETCH_TEMPLATE_HPP
#define LOCW_STRETCH_TEMPLATE_HPP

#include <map>

#include "locw/indiscernibles.hpp"

namespace locw {

// How a unary term behaves along the generators of a special witness:
// either its value is one fixed element (the same for every generator), or
// it stays strictly between the neighbouring generators.
enum class TermBehavior { ConstantOnTail, Interleaved };

// Everything needed to rebuild the generated model over any number of
// generators, read off a special witness. `const_elements` are the values
// shared by the closures of two distinct generators; `block_pattern` is
// the closure of the sample generator minus those, in base order. Blocks
// of distinct generators never share elements, and all cross-generator
// data is order-isomorphism invariant, so one sample pair determines the
// whole stretched structure.
struct StretchTemplate {
  IndiscernibleWitness base;
  std::vector<int> const_elements;   // ascending, elements of base.model
  std::vector<int> block_pattern;    // ascending, sampled at generator #2
  std::vector<int> block_pattern_b;  // matching elements at generator #3
  int generator_slot = 0;            // index of generator #2 in the block
};

// Requires: special witness that re-verifies, unary function symbols,
// relations of arity <= 2, at least three generators.
StretchTemplate build_template(const IndiscernibleWitness& w);

// Classification of every unary function-application shape of complexity
// <= steps, in ascending term order.
std::vector<std::pair<Term, TermBehavior>> classify_terms(
    const StretchTemplate& tpl);

}  // namespace locw

#endif  // LOCW_STRETCH_TEMPLATE_HPP
