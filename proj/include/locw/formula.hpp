#ifndef LOCW_FORMULA_HPP
#define LOCW_FORMULA_HPP

#include <memory>
#include <string>
#include <vector>

#include "locw/term.hpp"

namespace locw {

class Signature;

// A quantifier-free formula over atoms t1 = t2, t1 < t2, R(t1..tk), with
// negation, conjunction, disjunction and implication, plus the truth
// constants. Sentences pair one of these with a universal prefix.
class Formula {
 public:
  enum class Kind { True, False, Eq, Less, Rel, Not, And, Or, Implies };

  static Formula truth();
  static Formula falsity();
  static Formula eq(Term lhs, Term rhs);
  static Formula less(Term lhs, Term rhs);
  static Formula rel(std::string name, std::vector<Term> args);
  static Formula negation(Formula f);
  static Formula conjunction(Formula lhs, Formula rhs);
  static Formula disjunction(Formula lhs, Formula rhs);
  static Formula implication(Formula lhs, Formula rhs);

  // Folds a list into a right-nested chain; empty list gives the neutral
  // element (True for `and`, False for `or`).
  static Formula conjunction_of(std::vector<Formula> fs);
  static Formula disjunction_of(std::vector<Formula> fs);

  // Convenience sugar used heavily by the combinators.
  static Formula leq(Term lhs, Term rhs);  // lhs < rhs | lhs = rhs
  static Formula neq(Term lhs, Term rhs);  // !(lhs = rhs)
  static Formula iff(Formula lhs, Formula rhs);

  Kind kind() const { return kind_; }
  const Term& lhs_term() const { return terms_[0]; }
  const Term& rhs_term() const { return terms_[1]; }
  const std::string& rel_name() const { return symbol_; }
  const std::vector<Term>& rel_args() const { return terms_; }
  const Formula& child(size_t i) const { return children_[i]; }
  size_t child_count() const { return children_.size(); }

  bool operator==(const Formula& other) const;

  // Flattens nested conjunctions at the top into a unit list.
  std::vector<const Formula*> conjuncts() const;

  void collect_variables(std::set<int>& out) const;
  int max_variable_index() const;  // -1 when no variables occur

 private:
  Kind kind_ = Kind::True;
  std::string symbol_;
  std::vector<Term> terms_;
  std::vector<Formula> children_;
};

void validate_formula(const Formula& f, const Signature& sig,
                      int num_variables);

}  // namespace locw

#endif  // LOCW_FORMULA_HPP
