#include "locw/indiscernibles.hpp"

#include <algorithm>

#include "locw/closure.hpp"
#include "locw/errors.hpp"
#include "locw/eval.hpp"
#include "locw/term_enum.hpp"

namespace locw {

namespace {

void check_increasing(const std::vector<int>& gens) {
  if (gens.empty()) throw InvalidInput("empty generator sequence");
  for (size_t i = 1; i < gens.size(); ++i) {
    if (gens[i - 1] >= gens[i]) {
      throw InvalidInput("generators must be strictly increasing");
    }
  }
}

// All atoms over terms with variables 0..vars-1; eq unordered, < ordered,
// relation atoms over every argument tuple.
struct AtomTable {
  std::vector<Formula> atoms;

  AtomTable(const Signature& sig, int vars, int cap) {
    std::vector<Term> terms =
        terms_over_variables(sig, vars, cap, RankMeasure::Complexity);
    for (size_t i = 0; i < terms.size(); ++i) {
      for (size_t j = i + 1; j < terms.size(); ++j) {
        atoms.push_back(Formula::eq(terms[i], terms[j]));
      }
      for (size_t j = 0; j < terms.size(); ++j) {
        if (i != j) atoms.push_back(Formula::less(terms[i], terms[j]));
      }
    }
    for (const RelationSymbol& r : sig.relations()) {
      std::vector<size_t> pick(size_t(r.arity), 0);
      if (terms.empty()) continue;
      while (true) {
        std::vector<Term> args;
        for (size_t p : pick) args.push_back(terms[p]);
        atoms.push_back(Formula::rel(r.name, std::move(args)));
        int pos = r.arity - 1;
        while (pos >= 0 && ++pick[size_t(pos)] == terms.size()) {
          pick[size_t(pos)] = 0;
          --pos;
        }
        if (pos < 0) break;
      }
    }
  }
};

// Evaluate every atom on one tuple; two order-isomorphic tuples are
// equivalent iff their bit vectors agree.
std::vector<char> atom_signature(const FiniteStructure& m,
                                 const AtomTable& table,
                                 const std::vector<int>& tuple) {
  std::vector<char> bits;
  bits.reserve(table.atoms.size());
  for (const Formula& atom : table.atoms) {
    bits.push_back(eval_formula(m, atom, tuple) ? 1 : 0);
  }
  return bits;
}

void increasing_tuples(const std::vector<int>& gens, int len,
                       std::vector<std::vector<int>>& out) {
  std::vector<int> idx(size_t(len));
  for (int i = 0; i < len; ++i) idx[size_t(i)] = i;
  while (true) {
    std::vector<int> tuple;
    tuple.reserve(size_t(len));
    for (int i : idx) tuple.push_back(gens[size_t(i)]);
    out.push_back(std::move(tuple));
    int pos = len - 1;
    while (pos >= 0 && idx[size_t(pos)] == int(gens.size()) - len + pos) {
      --pos;
    }
    if (pos < 0) break;
    ++idx[size_t(pos)];
    for (int i = pos + 1; i < len; ++i) {
      idx[size_t(i)] = idx[size_t(i - 1)] + 1;
    }
  }
}

}  // namespace

bool check_plain_indiscernibles(const FiniteStructure& m,
                                const std::vector<int>& gens,
                                int atom_complexity_cap) {
  check_increasing(gens);
  m.check_complete();
  const Signature& sig = m.signature();

  long long term_width = 1;
  for (int d = 0; d < atom_complexity_cap && sig.max_function_arity() > 1;
       ++d) {
    term_width *= sig.max_function_arity();
  }
  long long atom_width =
      std::max<long long>(2, sig.max_relation_arity()) * term_width;
  int max_len = int(std::min<long long>(long long(gens.size()), atom_width));

  for (int len = 1; len <= max_len; ++len) {
    AtomTable table(sig, len, atom_complexity_cap);
    std::vector<std::vector<int>> tuples;
    increasing_tuples(gens, len, tuples);
    std::vector<char> reference;
    for (const auto& tuple : tuples) {
      std::vector<char> bits = atom_signature(m, table, tuple);
      if (reference.empty()) {
        reference = std::move(bits);
      } else if (bits != reference) {
        return false;
      }
    }
  }
  return true;
}

bool check_special_indiscernibles(const FiniteStructure& m,
                                  const std::vector<int>& gens,
                                  int term_complexity_cap,
                                  int atom_complexity_cap) {
  check_increasing(gens);
  const Signature& sig = m.signature();
  if (!sig.all_functions_unary()) {
    throw PreconditionError(
        "special indiscernibles are defined for unary signatures only");
  }
  if (!check_plain_indiscernibles(m, gens, atom_complexity_cap)) return false;

  // Unary-valued terms t(x): shapes over one variable plus closed terms.
  std::vector<Term> terms = terms_over_variables(
      sig, 1, term_complexity_cap, RankMeasure::Complexity);

  const int n = int(gens.size());
  std::vector<int> assignment(1, 0);
  auto value_at = [&](const Term& t, int gen) {
    assignment[0] = gen;
    return eval_term(m, t, assignment);
  };

  for (const Term& t : terms) {
    // (i): t(x) < y for every x < y from X.
    for (int xi = 0; xi + 1 < n; ++xi) {
      if (value_at(t, gens[size_t(xi)]) >= gens[size_t(xi) + 1]) return false;
    }
    // (ii): t(y) < x forces t constant past x.
    for (int xi = 0; xi < n; ++xi) {
      for (int yi = xi + 1; yi < n; ++yi) {
        if (value_at(t, gens[size_t(yi)]) < gens[size_t(xi)]) {
          int fixed = value_at(t, gens[size_t(yi)]);
          for (int zi = xi + 1; zi < n; ++zi) {
            if (value_at(t, gens[size_t(zi)]) != fixed) return false;
          }
        }
      }
    }
  }
  return true;
}

bool reverify_witness(const IndiscernibleWitness& w, const Sentence& s) {
  if (!eval_sentence(w.model, s)) return false;
  std::set<int> seed(w.generators.begin(), w.generators.end());
  ClosureTrace trace = closure(w.model, seed);
  if (trace.stabilization_step > w.steps) return false;
  if (int(trace.closure().size()) != w.model.size()) return false;
  if (w.kind == IndiscernibleKind::Plain) {
    return check_plain_indiscernibles(w.model, w.generators, w.steps + 1);
  }
  return check_special_indiscernibles(w.model, w.generators, w.steps,
                                      w.steps + 1);
}

}  // namespace locw
