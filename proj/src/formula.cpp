#include "locw/formula.hpp"

#include <algorithm>

#include "locw/errors.hpp"
#include "locw/signature.hpp"

namespace locw {

Formula Formula::truth() {
  Formula f;
  f.kind_ = Kind::True;
  return f;
}

Formula Formula::falsity() {
  Formula f;
  f.kind_ = Kind::False;
  return f;
}

Formula Formula::eq(Term lhs, Term rhs) {
  Formula f;
  f.kind_ = Kind::Eq;
  f.terms_ = {std::move(lhs), std::move(rhs)};
  return f;
}

Formula Formula::less(Term lhs, Term rhs) {
  Formula f;
  f.kind_ = Kind::Less;
  f.terms_ = {std::move(lhs), std::move(rhs)};
  return f;
}

Formula Formula::rel(std::string name, std::vector<Term> args) {
  Formula f;
  f.kind_ = Kind::Rel;
  f.symbol_ = std::move(name);
  f.terms_ = std::move(args);
  return f;
}

Formula Formula::negation(Formula inner) {
  Formula f;
  f.kind_ = Kind::Not;
  f.children_.push_back(std::move(inner));
  return f;
}

Formula Formula::conjunction(Formula lhs, Formula rhs) {
  Formula f;
  f.kind_ = Kind::And;
  f.children_.push_back(std::move(lhs));
  f.children_.push_back(std::move(rhs));
  return f;
}

Formula Formula::disjunction(Formula lhs, Formula rhs) {
  Formula f;
  f.kind_ = Kind::Or;
  f.children_.push_back(std::move(lhs));
  f.children_.push_back(std::move(rhs));
  return f;
}

Formula Formula::implication(Formula lhs, Formula rhs) {
  Formula f;
  f.kind_ = Kind::Implies;
  f.children_.push_back(std::move(lhs));
  f.children_.push_back(std::move(rhs));
  return f;
}

Formula Formula::conjunction_of(std::vector<Formula> fs) {
  if (fs.empty()) return truth();
  Formula out = std::move(fs.back());
  fs.pop_back();
  while (!fs.empty()) {
    out = conjunction(std::move(fs.back()), std::move(out));
    fs.pop_back();
  }
  return out;
}

Formula Formula::disjunction_of(std::vector<Formula> fs) {
  if (fs.empty()) return falsity();
  Formula out = std::move(fs.back());
  fs.pop_back();
  while (!fs.empty()) {
    out = disjunction(std::move(fs.back()), std::move(out));
    fs.pop_back();
  }
  return out;
}

Formula Formula::leq(Term lhs, Term rhs) {
  return disjunction(less(lhs, rhs), eq(lhs, rhs));
}

Formula Formula::neq(Term lhs, Term rhs) {
  return negation(eq(std::move(lhs), std::move(rhs)));
}

Formula Formula::iff(Formula lhs, Formula rhs) {
  return conjunction(implication(lhs, rhs), implication(rhs, lhs));
}

bool Formula::operator==(const Formula& other) const {
  return kind_ == other.kind_ && symbol_ == other.symbol_ &&
         terms_ == other.terms_ && children_ == other.children_;
}

std::vector<const Formula*> Formula::conjuncts() const {
  std::vector<const Formula*> out;
  std::vector<const Formula*> stack = {this};
  while (!stack.empty()) {
    const Formula* f = stack.back();
    stack.pop_back();
    if (f->kind_ == Kind::And) {
      // Push right first so left units come out first.
      stack.push_back(&f->children_[1]);
      stack.push_back(&f->children_[0]);
    } else {
      out.push_back(f);
    }
  }
  return out;
}

void Formula::collect_variables(std::set<int>& out) const {
  for (const Term& t : terms_) locw::collect_variables(t, out);
  for (const Formula& c : children_) c.collect_variables(out);
}

int Formula::max_variable_index() const {
  std::set<int> vars;
  collect_variables(vars);
  return vars.empty() ? -1 : *vars.rbegin();
}

void validate_formula(const Formula& f, const Signature& sig,
                      int num_variables) {
  switch (f.kind()) {
    case Formula::Kind::True:
    case Formula::Kind::False: return;
    case Formula::Kind::Eq:
    case Formula::Kind::Less:
      validate_term(f.lhs_term(), sig, num_variables);
      validate_term(f.rhs_term(), sig, num_variables);
      return;
    case Formula::Kind::Rel: {
      auto idx = sig.relation_index(f.rel_name());
      if (!idx) {
        throw InvalidInput("unknown relation '" + f.rel_name() + "'");
      }
      int arity = sig.relations()[*idx].arity;
      if (int(f.rel_args().size()) != arity) {
        throw InvalidInput("relation '" + f.rel_name() + "' expects " +
                           std::to_string(arity) + " arguments, got " +
                           std::to_string(f.rel_args().size()));
      }
      for (const Term& t : f.rel_args()) {
        validate_term(t, sig, num_variables);
      }
      return;
    }
    case Formula::Kind::Not:
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Implies:
      for (size_t i = 0; i < f.child_count(); ++i) {
        validate_formula(f.child(i), sig, num_variables);
      }
      return;
  }
}

}  // namespace locw
