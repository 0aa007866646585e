#ifndef LOCW_STRETCHING_HPP
#define LOCW_STRETCHING_HPP

#include "locw/stretch_template.hpp"

namespace locw {

// A finite linear order of the given size, or the first p generators of an
// omega-stretch. The two build the same structure; the spec kind matters
// for order-type reporting and word extraction.
struct OrderSpec {
  enum class Kind { Finite, OmegaPrefix };
  Kind kind = Kind::Finite;
  int count = 1;

  static OrderSpec finite(int k) { return {Kind::Finite, k}; }
  static OrderSpec omega_prefix(int p) { return {Kind::OmegaPrefix, p}; }
};

struct StretchResult {
  FiniteStructure model;
  std::vector<int> generator_positions;  // ascending
  int const_count = 0;
  int block_size = 0;
  OrderSpec spec;
};

// The structure generated by |Y| indiscernibles arranged per the template:
// the shared constant part plus one block per generator, elements ordered
// and valued exactly as sampled on the base witness. For omega prefixes the
// result is initial-segment faithful: order and term values among the
// first p blocks agree with the full omega stretch.
StretchResult stretch(const StretchTemplate& tpl, OrderSpec spec);

struct OrderTypeInfo {
  bool is_omega = false;
  long long finite_type = 0;  // exact order type for finite specs
  long long prefix_length = 0;  // constant part preceding the blocks
  long long block = 0;          // elements contributed per generator
};

OrderTypeInfo order_type_of_stretch(const StretchTemplate& tpl,
                                    OrderSpec spec);

// The canonical embedding M(Y) -> M(Z) induced by an inclusion of Y into
// Z; `positions_in_z` lists, for each generator of Y in order, its index
// among Z's generators. Returns element index map (M(Y) index -> M(Z)
// index).
std::vector<int> stretch_embedding(const StretchTemplate& tpl,
                                   const std::vector<int>& positions_in_z,
                                   int z_size);

}  // namespace locw

#endif  // LOCW_STRETCHING_HPP
