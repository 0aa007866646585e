#ifndef LOCW_STRUCTURE_HPP
#define LOCW_STRUCTURE_HPP

#include <set>
#include <span>
#include <vector>

#include "locw/signature.hpp"
#include "locw/term.hpp"

namespace locw {

// A finite ordered structure. The domain is 0..size-1 and `<` is the
// natural order on it, so enumeration up to order isomorphism is just
// enumeration of interpretations. Function tables are total; immutable
// once built.
class FiniteStructure {
 public:
  FiniteStructure(Signature sig, int size);

  const Signature& signature() const { return sig_; }
  int size() const { return size_; }

  // Function tables are flat, row-major in the argument tuple.
  int fn_value(int fn_index, std::span<const int> args) const;
  void set_fn_value(int fn_index, std::span<const int> args, int value);
  const std::vector<int>& fn_table(int fn_index) const {
    return fn_tables_[size_t(fn_index)];
  }
  std::vector<int>& mutable_fn_table(int fn_index) {
    return fn_tables_[size_t(fn_index)];
  }

  bool rel_holds(int rel_index, std::span<const int> args) const;
  void set_rel(int rel_index, std::vector<int> tuple, bool member = true);
  const std::set<std::vector<int>>& rel_tuples(int rel_index) const {
    return relations_[size_t(rel_index)];
  }

  int constant_value(int const_index) const {
    return constants_[size_t(const_index)];
  }
  void set_constant(int const_index, int value);

  // Throws InvalidInput when a table slot is unset (-1) or out of range.
  void check_complete() const;

  long long table_size(int arity) const;  // size^arity

  bool operator==(const FiniteStructure&) const = default;

 private:
  void check_element(int value) const;

  Signature sig_;
  int size_;
  std::vector<std::vector<int>> fn_tables_;
  std::vector<std::set<std::vector<int>>> relations_;
  std::vector<int> constants_;
};

// Row-major index of an argument tuple in a flat table over 0..size-1.
long long tuple_index(std::span<const int> args, int size);

}  // namespace locw

#endif  // LOCW_STRUCTURE_HPP
