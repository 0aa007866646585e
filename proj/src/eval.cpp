#include "locw/eval.hpp"

#include "locw/errors.hpp"

namespace locw {

int eval_term(const FiniteStructure& m, const Term& t,
              std::span<const int> assignment) {
  switch (t.kind()) {
    case Term::Kind::Variable:
      return assignment[size_t(t.var_index())];
    case Term::Kind::Constant:
      return m.constant_value(*m.signature().constant_index(t.symbol()));
    case Term::Kind::Apply: {
      std::vector<int> args;
      args.reserve(t.args().size());
      for (const Term& a : t.args()) {
        args.push_back(eval_term(m, a, assignment));
      }
      return m.fn_value(*m.signature().function_index(t.symbol()), args);
    }
  }
  return 0;
}

bool eval_formula(const FiniteStructure& m, const Formula& f,
                  std::span<const int> assignment) {
  switch (f.kind()) {
    case Formula::Kind::True: return true;
    case Formula::Kind::False: return false;
    case Formula::Kind::Eq:
      return eval_term(m, f.lhs_term(), assignment) ==
             eval_term(m, f.rhs_term(), assignment);
    case Formula::Kind::Less:
      return eval_term(m, f.lhs_term(), assignment) <
             eval_term(m, f.rhs_term(), assignment);
    case Formula::Kind::Rel: {
      std::vector<int> args;
      args.reserve(f.rel_args().size());
      for (const Term& t : f.rel_args()) {
        args.push_back(eval_term(m, t, assignment));
      }
      return m.rel_holds(*m.signature().relation_index(f.rel_name()), args);
    }
    case Formula::Kind::Not:
      return !eval_formula(m, f.child(0), assignment);
    case Formula::Kind::And:
      return eval_formula(m, f.child(0), assignment) &&
             eval_formula(m, f.child(1), assignment);
    case Formula::Kind::Or:
      return eval_formula(m, f.child(0), assignment) ||
             eval_formula(m, f.child(1), assignment);
    case Formula::Kind::Implies:
      return !eval_formula(m, f.child(0), assignment) ||
             eval_formula(m, f.child(1), assignment);
  }
  return false;
}

bool eval_sentence(const FiniteStructure& m, const Sentence& s) {
  if (!(m.signature() == s.signature)) {
    throw InvalidInput("structure and sentence signatures differ");
  }
  m.check_complete();
  std::vector<int> assignment(size_t(std::max(1, s.quantifiers)), 0);
  if (s.quantifiers == 0) {
    return eval_formula(m, s.matrix, assignment);
  }
  while (true) {
    if (!eval_formula(m, s.matrix, assignment)) return false;
    int pos = s.quantifiers - 1;
    while (pos >= 0 && ++assignment[size_t(pos)] == m.size()) {
      assignment[size_t(pos)] = 0;
      --pos;
    }
    if (pos < 0) return true;
  }
}

}  // namespace locw
