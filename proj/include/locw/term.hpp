#ifndef LOCW_TERM_HPP
#define LOCW_TERM_HPP

#include <set>
#include <string>
#include <vector>

namespace locw {

class Signature;

// A first-order term: a variable (by index into the quantifier block),
// a constant, or a function application. Value semantics throughout.
class Term {
 public:
  enum class Kind { Variable, Constant, Apply };

  static Term variable(int index);
  static Term constant(std::string name);
  static Term apply(std::string function, std::vector<Term> args);

  Kind kind() const { return kind_; }
  int var_index() const { return var_; }
  const std::string& symbol() const { return symbol_; }
  const std::vector<Term>& args() const { return args_; }

  bool operator==(const Term& other) const;
  // Total order used for canonical/deterministic enumeration output.
  bool operator<(const Term& other) const;

 private:
  Kind kind_ = Kind::Variable;
  int var_ = 0;
  std::string symbol_;
  std::vector<Term> args_;
};

// Number of function applications along the deepest path. Variables and
// constants have complexity 0.
int term_complexity(const Term& t);

// Like complexity, except constants count as one application: this mirrors
// the closure operator, which adds constant values at the first step. The
// rank-r terms over X are exactly the terms whose values populate cl^r(X).
int closure_rank(const Term& t);

void collect_variables(const Term& t, std::set<int>& out);
int distinct_variable_count(const Term& t);

// Arity-checks the term against the signature; throws InvalidInput.
void validate_term(const Term& t, const Signature& sig, int num_variables);

}  // namespace locw

#endif  // LOCW_TERM_HPP
