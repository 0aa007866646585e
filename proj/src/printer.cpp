#include "locw/printer.hpp"

#include <sstream>

namespace locw {

namespace {

std::string var_name(int index) { return "x" + std::to_string(index + 1); }

void print_term_to(const Term& t, std::ostream& os) {
  switch (t.kind()) {
    case Term::Kind::Variable:
      os << var_name(t.var_index());
      break;
    case Term::Kind::Constant:
      os << t.symbol();
      break;
    case Term::Kind::Apply: {
      os << t.symbol() << '(';
      bool first = true;
      for (const Term& a : t.args()) {
        if (!first) os << ',';
        first = false;
        print_term_to(a, os);
      }
      os << ')';
      break;
    }
  }
}

// Precedence: -> lowest, then |, &, !, atoms.
int precedence(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Implies: return 1;
    case Formula::Kind::Or: return 2;
    case Formula::Kind::And: return 3;
    case Formula::Kind::Not:
      // !(a = b) prints as the atom-level a != b
      return f.child(0).kind() == Formula::Kind::Eq ? 5 : 4;
    default: return 5;
  }
}

void print_formula_to(const Formula& f, std::ostream& os, int min_prec) {
  int prec = precedence(f);
  bool parens = prec < min_prec;
  if (parens) os << '(';
  switch (f.kind()) {
    case Formula::Kind::True: os << "true"; break;
    case Formula::Kind::False: os << "false"; break;
    case Formula::Kind::Eq:
      print_term_to(f.lhs_term(), os);
      os << " = ";
      print_term_to(f.rhs_term(), os);
      break;
    case Formula::Kind::Less:
      print_term_to(f.lhs_term(), os);
      os << " < ";
      print_term_to(f.rhs_term(), os);
      break;
    case Formula::Kind::Rel: {
      os << f.rel_name() << '(';
      bool first = true;
      for (const Term& a : f.rel_args()) {
        if (!first) os << ',';
        first = false;
        print_term_to(a, os);
      }
      os << ')';
      break;
    }
    case Formula::Kind::Not:
      if (f.child(0).kind() == Formula::Kind::Eq) {
        const Formula& eq = f.child(0);
        print_term_to(eq.lhs_term(), os);
        os << " != ";
        print_term_to(eq.rhs_term(), os);
      } else {
        os << '!';
        print_formula_to(f.child(0), os, 4);
      }
      break;
    case Formula::Kind::And:
      print_formula_to(f.child(0), os, prec + 1);
      os << " & ";
      print_formula_to(f.child(1), os, prec);
      break;
    case Formula::Kind::Or:
      print_formula_to(f.child(0), os, prec + 1);
      os << " | ";
      print_formula_to(f.child(1), os, prec);
      break;
    case Formula::Kind::Implies:
      print_formula_to(f.child(0), os, prec + 1);
      os << " -> ";
      print_formula_to(f.child(1), os, prec);
      break;
  }
  if (parens) os << ')';
}

}  // namespace

std::string print_term(const Term& t) {
  std::ostringstream os;
  print_term_to(t, os);
  return os.str();
}

std::string print_formula(const Formula& f) {
  std::ostringstream os;
  print_formula_to(f, os, 0);
  return os.str();
}

std::string print_signature(const Signature& sig) {
  std::ostringstream os;
  os << "sig {";
  for (const DeclRef& d : sig.declarations()) {
    os << ' ';
    switch (d.kind) {
      case SymbolKind::Function: {
        const auto& f = sig.functions()[d.index];
        os << "fn " << f.name << '/' << f.arity << ';';
        break;
      }
      case SymbolKind::Relation: {
        const auto& r = sig.relations()[d.index];
        os << "rel " << r.name << '/' << r.arity << ';';
        break;
      }
      case SymbolKind::Constant:
        os << "const " << sig.constants()[d.index] << ';';
        break;
    }
  }
  os << " }";
  return os.str();
}

std::string print_sentence(const Sentence& s) {
  std::ostringstream os;
  os << print_signature(s.signature) << '\n';
  if (s.quantifiers > 0) {
    os << "forall";
    for (int i = 0; i < s.quantifiers; ++i) os << ' ' << var_name(i);
    os << " . ";
  }
  os << print_formula(s.matrix) << '\n';
  return os.str();
}

}  // namespace locw
