#include "locw/stretch_template.hpp"

#include <algorithm>

#include "locw/closure.hpp"
#include "locw/errors.hpp"
#include "locw/eval.hpp"
#include "locw/term_enum.hpp"

namespace locw {

StretchTemplate build_template(const IndiscernibleWitness& w) {
  const Signature& sig = w.model.signature();
  if (w.kind != IndiscernibleKind::Special) {
    throw PreconditionError("stretch templates require a special witness");
  }
  if (!sig.all_functions_unary()) {
    throw PreconditionError("stretching requires a unary signature");
  }
  if (sig.max_relation_arity() > 2) {
    throw PreconditionError(
        "stretching supports relations of arity <= 2 only");
  }
  if (w.generators.size() < 3) {
    throw PreconditionError("stretch templates need at least 3 generators");
  }
  if (!check_special_indiscernibles(w.model, w.generators, w.steps,
                                    w.steps + 1)) {
    throw PreconditionError("witness fails special re-verification");
  }

  int g2 = w.generators[1];
  int g3 = w.generators[2];
  std::set<int> cl2 = closure(w.model, {g2}).closure();
  std::set<int> cl3 = closure(w.model, {g3}).closure();

  StretchTemplate tpl;
  tpl.base = w;
  for (int e : cl2) {
    if (cl3.count(e)) {
      tpl.const_elements.push_back(e);
    } else {
      tpl.block_pattern.push_back(e);
    }
  }
  for (int e : cl3) {
    if (!cl2.count(e)) tpl.block_pattern_b.push_back(e);
  }
  if (tpl.block_pattern.size() != tpl.block_pattern_b.size()) {
    throw InvalidInput("witness blocks have mismatched sizes");
  }
  auto slot = std::find(tpl.block_pattern.begin(), tpl.block_pattern.end(),
                        g2);
  if (slot == tpl.block_pattern.end()) {
    throw InvalidInput("sample generator escaped its own block");
  }
  tpl.generator_slot = int(slot - tpl.block_pattern.begin());
  return tpl;
}

std::vector<std::pair<Term, TermBehavior>> classify_terms(
    const StretchTemplate& tpl) {
  const Signature& sig = tpl.base.model.signature();
  std::vector<std::pair<Term, TermBehavior>> out;
  std::vector<int> assignment(1, 0);
  for (const Term& t : terms_over_variables(sig, 1, tpl.base.steps,
                                            RankMeasure::Complexity)) {
    if (t.kind() != Term::Kind::Apply) continue;
    std::set<int> vars;
    collect_variables(t, vars);
    if (vars.empty()) continue;  // closed terms live in the constant part
    assignment[0] = tpl.base.generators[1];
    int at_g2 = eval_term(tpl.base.model, t, assignment);
    assignment[0] = tpl.base.generators[2];
    int at_g3 = eval_term(tpl.base.model, t, assignment);
    out.emplace_back(t, at_g2 == at_g3 ? TermBehavior::ConstantOnTail
                                       : TermBehavior::Interleaved);
  }
  return out;
}

}  // namespace locw
