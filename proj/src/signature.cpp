#include "locw/signature.hpp"

#include <algorithm>

#include "locw/errors.hpp"

namespace locw {

void Signature::check_fresh(const std::string& name) const {
  if (name == "<" || name == "=") {
    throw InvalidInput("symbol '" + name + "' is reserved");
  }
  if (name.empty()) {
    throw InvalidInput("empty symbol name");
  }
  if (has_symbol(name)) {
    throw InvalidInput("duplicate symbol '" + name + "'");
  }
}

void Signature::add_function(std::string name, int arity) {
  check_fresh(name);
  if (arity < 1) {
    throw InvalidInput("function '" + name + "' must have positive arity");
  }
  functions_.push_back({std::move(name), arity});
  decls_.push_back({SymbolKind::Function, int(functions_.size()) - 1});
}

void Signature::add_relation(std::string name, int arity) {
  check_fresh(name);
  if (arity < 1) {
    throw InvalidInput("relation '" + name + "' must have positive arity");
  }
  relations_.push_back({std::move(name), arity});
  decls_.push_back({SymbolKind::Relation, int(relations_.size()) - 1});
}

void Signature::add_constant(std::string name) {
  check_fresh(name);
  constants_.push_back(std::move(name));
  decls_.push_back({SymbolKind::Constant, int(constants_.size()) - 1});
}

std::optional<int> Signature::function_index(std::string_view name) const {
  for (size_t i = 0; i < functions_.size(); ++i) {
    if (functions_[i].name == name) return int(i);
  }
  return std::nullopt;
}

std::optional<int> Signature::relation_index(std::string_view name) const {
  for (size_t i = 0; i < relations_.size(); ++i) {
    if (relations_[i].name == name) return int(i);
  }
  return std::nullopt;
}

std::optional<int> Signature::constant_index(std::string_view name) const {
  for (size_t i = 0; i < constants_.size(); ++i) {
    if (constants_[i] == name) return int(i);
  }
  return std::nullopt;
}

bool Signature::has_symbol(std::string_view name) const {
  return function_index(name) || relation_index(name) ||
         constant_index(name);
}

int Signature::max_function_arity() const {
  int m = 0;
  for (const auto& f : functions_) m = std::max(m, f.arity);
  return m;
}

int Signature::max_relation_arity() const {
  int m = 0;
  for (const auto& r : relations_) m = std::max(m, r.arity);
  return m;
}

bool Signature::all_functions_unary() const {
  return std::all_of(functions_.begin(), functions_.end(),
                     [](const FunctionSymbol& f) { return f.arity == 1; });
}

std::vector<std::string> Signature::symbol_names() const {
  std::vector<std::string> out;
  out.reserve(decls_.size());
  for (const auto& d : decls_) {
    switch (d.kind) {
      case SymbolKind::Function: out.push_back(functions_[d.index].name); break;
      case SymbolKind::Relation: out.push_back(relations_[d.index].name); break;
      case SymbolKind::Constant: out.push_back(constants_[d.index]); break;
    }
  }
  return out;
}

}  // namespace locw
