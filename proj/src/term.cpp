#include "locw/term.hpp"

#include <algorithm>
#include <tuple>

#include "locw/errors.hpp"
#include "locw/signature.hpp"

namespace locw {

Term Term::variable(int index) {
  Term t;
  t.kind_ = Kind::Variable;
  t.var_ = index;
  return t;
}

Term Term::constant(std::string name) {
  Term t;
  t.kind_ = Kind::Constant;
  t.symbol_ = std::move(name);
  return t;
}

Term Term::apply(std::string function, std::vector<Term> args) {
  Term t;
  t.kind_ = Kind::Apply;
  t.symbol_ = std::move(function);
  t.args_ = std::move(args);
  return t;
}

bool Term::operator==(const Term& other) const {
  return kind_ == other.kind_ && var_ == other.var_ &&
         symbol_ == other.symbol_ && args_ == other.args_;
}

bool Term::operator<(const Term& other) const {
  if (kind_ != other.kind_) return kind_ < other.kind_;
  switch (kind_) {
    case Kind::Variable: return var_ < other.var_;
    case Kind::Constant: return symbol_ < other.symbol_;
    case Kind::Apply:
      return std::tie(symbol_, args_) < std::tie(other.symbol_, other.args_);
  }
  return false;
}

int term_complexity(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Variable:
    case Term::Kind::Constant: return 0;
    case Term::Kind::Apply: {
      int deepest = 0;
      for (const Term& a : t.args()) {
        deepest = std::max(deepest, term_complexity(a));
      }
      return 1 + deepest;
    }
  }
  return 0;
}

int closure_rank(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Variable: return 0;
    case Term::Kind::Constant: return 1;
    case Term::Kind::Apply: {
      int deepest = 0;
      for (const Term& a : t.args()) {
        deepest = std::max(deepest, closure_rank(a));
      }
      return 1 + deepest;
    }
  }
  return 0;
}

void collect_variables(const Term& t, std::set<int>& out) {
  switch (t.kind()) {
    case Term::Kind::Variable: out.insert(t.var_index()); break;
    case Term::Kind::Constant: break;
    case Term::Kind::Apply:
      for (const Term& a : t.args()) collect_variables(a, out);
      break;
  }
}

int distinct_variable_count(const Term& t) {
  std::set<int> vars;
  collect_variables(t, vars);
  return int(vars.size());
}

void validate_term(const Term& t, const Signature& sig, int num_variables) {
  switch (t.kind()) {
    case Term::Kind::Variable:
      if (t.var_index() < 0 || t.var_index() >= num_variables) {
        throw InvalidInput("variable index " + std::to_string(t.var_index()) +
                           " out of range");
      }
      break;
    case Term::Kind::Constant:
      if (!sig.constant_index(t.symbol())) {
        throw InvalidInput("unknown constant '" + t.symbol() + "'");
      }
      break;
    case Term::Kind::Apply: {
      auto idx = sig.function_index(t.symbol());
      if (!idx) {
        throw InvalidInput("unknown function '" + t.symbol() + "'");
      }
      int arity = sig.functions()[*idx].arity;
      if (int(t.args().size()) != arity) {
        throw InvalidInput("function '" + t.symbol() + "' expects " +
                           std::to_string(arity) + " arguments, got " +
                           std::to_string(t.args().size()));
      }
      for (const Term& a : t.args()) validate_term(a, sig, num_variables);
      break;
    }
  }
}

}  // namespace locw
