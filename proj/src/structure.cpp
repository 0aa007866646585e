#include "locw/structure.hpp"

#include "locw/errors.hpp"

namespace locw {

long long tuple_index(std::span<const int> args, int size) {
  long long idx = 0;
  for (int a : args) idx = idx * size + a;
  return idx;
}

FiniteStructure::FiniteStructure(Signature sig, int size)
    : sig_(std::move(sig)), size_(size) {
  if (size < 1) throw InvalidInput("structures have at least one element");
  fn_tables_.reserve(sig_.functions().size());
  for (const FunctionSymbol& f : sig_.functions()) {
    fn_tables_.emplace_back(size_t(table_size(f.arity)), -1);
  }
  relations_.resize(sig_.relations().size());
  constants_.assign(sig_.constants().size(), -1);
}

long long FiniteStructure::table_size(int arity) const {
  long long n = 1;
  for (int i = 0; i < arity; ++i) n *= size_;
  return n;
}

void FiniteStructure::check_element(int value) const {
  if (value < 0 || value >= size_) {
    throw InvalidInput("element " + std::to_string(value) +
                       " outside domain of size " + std::to_string(size_));
  }
}

int FiniteStructure::fn_value(int fn_index, std::span<const int> args) const {
  return fn_tables_[size_t(fn_index)][size_t(tuple_index(args, size_))];
}

void FiniteStructure::set_fn_value(int fn_index, std::span<const int> args,
                                   int value) {
  check_element(value);
  fn_tables_[size_t(fn_index)][size_t(tuple_index(args, size_))] = value;
}

bool FiniteStructure::rel_holds(int rel_index,
                                std::span<const int> args) const {
  const auto& tuples = relations_[size_t(rel_index)];
  return tuples.find(std::vector<int>(args.begin(), args.end())) !=
         tuples.end();
}

void FiniteStructure::set_rel(int rel_index, std::vector<int> tuple,
                              bool member) {
  for (int a : tuple) check_element(a);
  if (int(tuple.size()) != sig_.relations()[size_t(rel_index)].arity) {
    throw InvalidInput("relation tuple arity mismatch");
  }
  if (member) {
    relations_[size_t(rel_index)].insert(std::move(tuple));
  } else {
    relations_[size_t(rel_index)].erase(tuple);
  }
}

void FiniteStructure::set_constant(int const_index, int value) {
  check_element(value);
  constants_[size_t(const_index)] = value;
}

void FiniteStructure::check_complete() const {
  for (size_t i = 0; i < fn_tables_.size(); ++i) {
    for (int v : fn_tables_[i]) {
      if (v < 0 || v >= size_) {
        throw InvalidInput("function '" + sig_.functions()[i].name +
                           "' has an unset or invalid table entry");
      }
    }
  }
  for (size_t i = 0; i < constants_.size(); ++i) {
    if (constants_[i] < 0 || constants_[i] >= size_) {
      throw InvalidInput("constant '" + sig_.constants()[i] +
                         "' has no value");
    }
  }
}

}  // namespace locw
