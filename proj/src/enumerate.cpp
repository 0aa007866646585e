#include "locw/enumerate.hpp"

#include <algorithm>
#include <set>

#include "locw/errors.hpp"

namespace locw {

namespace {

enum class TV : uint8_t { False, True, Unknown };

TV tv_not(TV a) {
  if (a == TV::Unknown) return TV::Unknown;
  return a == TV::True ? TV::False : TV::True;
}

struct CellKey {
  SymbolKind kind;
  int symbol;       // index within its kind
  long long tuple;  // row-major argument index; 0 for constants
};

class ModelSearch {
 public:
  ModelSearch(const Sentence& s, int size, SearchBudget& budget,
              const std::function<bool(const FiniteStructure&)>& visit)
      : sentence_(s), sig_(s.signature), size_(size), budget_(budget),
        visit_(visit) {
    build_cells();
    build_instances();
  }

  SearchOutcome run() {
    // Units with no cells at all (e.g. pure order formulas over variables)
    // are decided up front.
    for (size_t i = 0; i < instances_.size(); ++i) {
      if (!instance_decided_[i] && instance_deps_[i].empty()) {
        TV v = eval3_formula(*instances_[i].unit, instances_[i].binding);
        if (v == TV::False) return SearchOutcome::Exhausted;
        if (v == TV::True) instance_decided_[i] = 1;
      }
    }
    return descend(0);
  }

 private:
  struct Instance {
    const Formula* unit;
    std::vector<int> binding;  // full q-vector; unused slots 0
  };

  // ---- cell layout ----------------------------------------------------

  void build_cells() {
    for (size_t ci = 0; ci < sig_.constants().size(); ++ci) {
      const_cell_.push_back(int(cells_.size()));
      cells_.push_back({SymbolKind::Constant, int(ci), 0});
      domains_.push_back(size_);
    }
    fn_cell_base_.assign(sig_.functions().size(), -1);
    rel_cell_base_.assign(sig_.relations().size(), -1);
    for (const DeclRef& d : sig_.declarations()) {
      if (d.kind == SymbolKind::Function) {
        const auto& f = sig_.functions()[size_t(d.index)];
        fn_cell_base_[size_t(d.index)] = int(cells_.size());
        long long count = power(size_, f.arity);
        for (long long t = 0; t < count; ++t) {
          cells_.push_back({SymbolKind::Function, d.index, t});
          domains_.push_back(size_);
        }
      } else if (d.kind == SymbolKind::Relation) {
        const auto& r = sig_.relations()[size_t(d.index)];
        rel_cell_base_[size_t(d.index)] = int(cells_.size());
        long long count = power(size_, r.arity);
        for (long long t = 0; t < count; ++t) {
          cells_.push_back({SymbolKind::Relation, d.index, t});
          domains_.push_back(2);
        }
      }
    }
    values_.assign(cells_.size(), -1);
    cell_instances_.resize(cells_.size());
  }

  long long power(int base, int exp) const {
    long long v = 1;
    for (int i = 0; i < exp; ++i) v *= base;
    return v;
  }

  int fn_cell(int fn, long long tuple) const {
    return fn_cell_base_[size_t(fn)] + int(tuple);
  }
  int rel_cell(int rel, long long tuple) const {
    return rel_cell_base_[size_t(rel)] + int(tuple);
  }

  // ---- ground instances ------------------------------------------------

  void build_instances() {
    std::vector<const Formula*> units = sentence_.matrix.conjuncts();
    for (const Formula* unit : units) {
      std::set<int> vars;
      unit->collect_variables(vars);
      std::vector<int> var_list(vars.begin(), vars.end());
      std::vector<int> binding(size_t(std::max(1, sentence_.quantifiers)), 0);
      instantiate(unit, var_list, 0, binding);
    }
    instance_decided_.assign(instances_.size(), 0);
    instance_deps_.resize(instances_.size());
    for (size_t i = 0; i < instances_.size(); ++i) {
      std::set<int> deps;
      formula_deps(*instances_[i].unit, instances_[i].binding, deps);
      instance_deps_[i].assign(deps.begin(), deps.end());
      for (int c : instance_deps_[i]) {
        cell_instances_[size_t(c)].push_back(int(i));
      }
    }
  }

  void instantiate(const Formula* unit, const std::vector<int>& var_list,
                   size_t pos, std::vector<int>& binding) {
    if (pos == var_list.size()) {
      instances_.push_back({unit, binding});
      return;
    }
    for (int v = 0; v < size_; ++v) {
      binding[size_t(var_list[pos])] = v;
      instantiate(unit, var_list, pos + 1, binding);
    }
    binding[size_t(var_list[pos])] = 0;
  }

  // Static argument tuples (all-variable argument lists) give exact cell
  // dependencies; anything nested falls back to the symbol's full range.
  bool static_tuple(const std::vector<Term>& args,
                    const std::vector<int>& binding, long long& tuple) const {
    tuple = 0;
    for (const Term& a : args) {
      if (a.kind() != Term::Kind::Variable) return false;
      tuple = tuple * size_ + binding[size_t(a.var_index())];
    }
    return true;
  }

  void term_deps(const Term& t, const std::vector<int>& binding,
                 std::set<int>& out) const {
    switch (t.kind()) {
      case Term::Kind::Variable: return;
      case Term::Kind::Constant:
        out.insert(const_cell_[size_t(*sig_.constant_index(t.symbol()))]);
        return;
      case Term::Kind::Apply: {
        for (const Term& a : t.args()) term_deps(a, binding, out);
        int fn = *sig_.function_index(t.symbol());
        long long tuple = 0;
        if (static_tuple(t.args(), binding, tuple)) {
          out.insert(fn_cell(fn, tuple));
        } else {
          long long count = power(size_, sig_.functions()[size_t(fn)].arity);
          for (long long i = 0; i < count; ++i) out.insert(fn_cell(fn, i));
        }
        return;
      }
    }
  }

  void formula_deps(const Formula& f, const std::vector<int>& binding,
                    std::set<int>& out) const {
    switch (f.kind()) {
      case Formula::Kind::True:
      case Formula::Kind::False: return;
      case Formula::Kind::Eq:
      case Formula::Kind::Less:
        term_deps(f.lhs_term(), binding, out);
        term_deps(f.rhs_term(), binding, out);
        return;
      case Formula::Kind::Rel: {
        for (const Term& t : f.rel_args()) term_deps(t, binding, out);
        int rel = *sig_.relation_index(f.rel_name());
        long long tuple = 0;
        if (static_tuple(f.rel_args(), binding, tuple)) {
          out.insert(rel_cell(rel, tuple));
        } else {
          long long count = power(size_, sig_.relations()[size_t(rel)].arity);
          for (long long i = 0; i < count; ++i) out.insert(rel_cell(rel, i));
        }
        return;
      }
      default:
        for (size_t i = 0; i < f.child_count(); ++i) {
          formula_deps(f.child(i), binding, out);
        }
        return;
    }
  }

  // ---- three-valued evaluation -----------------------------------------

  int eval_term3(const Term& t, const std::vector<int>& binding) const {
    switch (t.kind()) {
      case Term::Kind::Variable: return binding[size_t(t.var_index())];
      case Term::Kind::Constant:
        return values_[size_t(
            const_cell_[size_t(*sig_.constant_index(t.symbol()))])];
      case Term::Kind::Apply: {
        long long tuple = 0;
        for (const Term& a : t.args()) {
          int v = eval_term3(a, binding);
          if (v < 0) return -1;
          tuple = tuple * size_ + v;
        }
        int fn = *sig_.function_index(t.symbol());
        return values_[size_t(fn_cell(fn, tuple))];
      }
    }
    return -1;
  }

  TV eval3_formula(const Formula& f, const std::vector<int>& binding) const {
    switch (f.kind()) {
      case Formula::Kind::True: return TV::True;
      case Formula::Kind::False: return TV::False;
      case Formula::Kind::Eq: {
        int a = eval_term3(f.lhs_term(), binding);
        if (a < 0) return TV::Unknown;
        int b = eval_term3(f.rhs_term(), binding);
        if (b < 0) return TV::Unknown;
        return a == b ? TV::True : TV::False;
      }
      case Formula::Kind::Less: {
        int a = eval_term3(f.lhs_term(), binding);
        if (a < 0) return TV::Unknown;
        int b = eval_term3(f.rhs_term(), binding);
        if (b < 0) return TV::Unknown;
        return a < b ? TV::True : TV::False;
      }
      case Formula::Kind::Rel: {
        long long tuple = 0;
        for (const Term& t : f.rel_args()) {
          int v = eval_term3(t, binding);
          if (v < 0) return TV::Unknown;
          tuple = tuple * size_ + v;
        }
        int rel = *sig_.relation_index(f.rel_name());
        int bit = values_[size_t(rel_cell(rel, tuple))];
        if (bit < 0) return TV::Unknown;
        return bit ? TV::True : TV::False;
      }
      case Formula::Kind::Not:
        return tv_not(eval3_formula(f.child(0), binding));
      case Formula::Kind::And: {
        TV a = eval3_formula(f.child(0), binding);
        if (a == TV::False) return TV::False;
        TV b = eval3_formula(f.child(1), binding);
        if (b == TV::False) return TV::False;
        if (a == TV::True && b == TV::True) return TV::True;
        return TV::Unknown;
      }
      case Formula::Kind::Or: {
        TV a = eval3_formula(f.child(0), binding);
        if (a == TV::True) return TV::True;
        TV b = eval3_formula(f.child(1), binding);
        if (b == TV::True) return TV::True;
        if (a == TV::False && b == TV::False) return TV::False;
        return TV::Unknown;
      }
      case Formula::Kind::Implies: {
        TV a = eval3_formula(f.child(0), binding);
        if (a == TV::False) return TV::True;
        TV b = eval3_formula(f.child(1), binding);
        if (b == TV::True) return TV::True;
        if (a == TV::True && b == TV::False) return TV::False;
        return TV::Unknown;
      }
    }
    return TV::Unknown;
  }

  // ---- forced-value extraction ------------------------------------------
  // When an instance must come out true and only one atom is still open,
  // the open cell's value may be determined. Forcings are collected and
  // applied through the propagation queue.

  struct Forcing {
    int cell;
    int value;
  };

  // If `t` is directly cell-addressable under current knowledge (constant,
  // or application whose arguments all evaluate), return that cell.
  int addressable_cell(const Term& t, const std::vector<int>& binding) const {
    switch (t.kind()) {
      case Term::Kind::Variable: return -1;
      case Term::Kind::Constant:
        return const_cell_[size_t(*sig_.constant_index(t.symbol()))];
      case Term::Kind::Apply: {
        long long tuple = 0;
        for (const Term& a : t.args()) {
          int v = eval_term3(a, binding);
          if (v < 0) return -1;
          tuple = tuple * size_ + v;
        }
        return fn_cell(*sig_.function_index(t.symbol()), tuple);
      }
    }
    return -1;
  }

  void require_true(const Formula& f, const std::vector<int>& binding,
                    std::vector<Forcing>& out) const {
    switch (f.kind()) {
      case Formula::Kind::And:
        require_true(f.child(0), binding, out);
        require_true(f.child(1), binding, out);
        return;
      case Formula::Kind::Or: {
        TV a = eval3_formula(f.child(0), binding);
        TV b = eval3_formula(f.child(1), binding);
        if (a == TV::False && b == TV::Unknown) {
          require_true(f.child(1), binding, out);
        } else if (b == TV::False && a == TV::Unknown) {
          require_true(f.child(0), binding, out);
        }
        return;
      }
      case Formula::Kind::Implies: {
        TV a = eval3_formula(f.child(0), binding);
        if (a == TV::True) {
          require_true(f.child(1), binding, out);
        } else if (a == TV::Unknown &&
                   eval3_formula(f.child(1), binding) == TV::False) {
          require_false(f.child(0), binding, out);
        }
        return;
      }
      case Formula::Kind::Not:
        require_false(f.child(0), binding, out);
        return;
      case Formula::Kind::Eq: {
        int a = eval_term3(f.lhs_term(), binding);
        int b = eval_term3(f.rhs_term(), binding);
        if (a >= 0 && b < 0) {
          int cell = addressable_cell(f.rhs_term(), binding);
          if (cell >= 0) out.push_back({cell, a});
        } else if (b >= 0 && a < 0) {
          int cell = addressable_cell(f.lhs_term(), binding);
          if (cell >= 0) out.push_back({cell, b});
        }
        return;
      }
      case Formula::Kind::Rel: {
        long long tuple = 0;
        for (const Term& t : f.rel_args()) {
          int v = eval_term3(t, binding);
          if (v < 0) return;
          tuple = tuple * size_ + v;
        }
        int cell = rel_cell(*sig_.relation_index(f.rel_name()), tuple);
        if (values_[size_t(cell)] < 0) out.push_back({cell, 1});
        return;
      }
      default: return;
    }
  }

  void require_false(const Formula& f, const std::vector<int>& binding,
                     std::vector<Forcing>& out) const {
    switch (f.kind()) {
      case Formula::Kind::Or:
        require_false(f.child(0), binding, out);
        require_false(f.child(1), binding, out);
        return;
      case Formula::Kind::And: {
        TV a = eval3_formula(f.child(0), binding);
        TV b = eval3_formula(f.child(1), binding);
        if (a == TV::True && b == TV::Unknown) {
          require_false(f.child(1), binding, out);
        } else if (b == TV::True && a == TV::Unknown) {
          require_false(f.child(0), binding, out);
        }
        return;
      }
      case Formula::Kind::Implies:
        require_true(f.child(0), binding, out);
        require_false(f.child(1), binding, out);
        return;
      case Formula::Kind::Not:
        require_true(f.child(0), binding, out);
        return;
      case Formula::Kind::Rel: {
        long long tuple = 0;
        for (const Term& t : f.rel_args()) {
          int v = eval_term3(t, binding);
          if (v < 0) return;
          tuple = tuple * size_ + v;
        }
        int cell = rel_cell(*sig_.relation_index(f.rel_name()), tuple);
        if (values_[size_t(cell)] < 0) out.push_back({cell, 0});
        return;
      }
      default: return;  // equalities/orders force no single value
    }
  }

  // ---- search ------------------------------------------------------------

  struct Trail {
    std::vector<int> cells;
    std::vector<int> instances;
  };

  void undo(const Trail& trail) {
    for (int c : trail.cells) values_[size_t(c)] = -1;
    for (int i : trail.instances) instance_decided_[size_t(i)] = 0;
  }

  // Assigns cell := value and runs propagation to a fixed point.
  bool assign_and_propagate(int cell, int value, Trail& trail) {
    values_[size_t(cell)] = value;
    trail.cells.push_back(cell);
    std::vector<int> queue = {cell};
    while (!queue.empty()) {
      int c = queue.back();
      queue.pop_back();
      for (int ii : cell_instances_[size_t(c)]) {
        if (instance_decided_[size_t(ii)]) continue;
        const Instance& inst = instances_[size_t(ii)];
        TV v = eval3_formula(*inst.unit, inst.binding);
        if (v == TV::False) return false;
        if (v == TV::True) {
          instance_decided_[size_t(ii)] = 1;
          trail.instances.push_back(ii);
          continue;
        }
        std::vector<Forcing> forcings;
        require_true(*inst.unit, inst.binding, forcings);
        for (const Forcing& f : forcings) {
          int cur = values_[size_t(f.cell)];
          if (cur == f.value) continue;
          if (cur >= 0) return false;
          values_[size_t(f.cell)] = f.value;
          trail.cells.push_back(f.cell);
          queue.push_back(f.cell);
        }
      }
    }
    return true;
  }

  SearchOutcome descend(size_t from) {
    size_t cell = from;
    while (cell < cells_.size() && values_[cell] >= 0) ++cell;
    if (cell == cells_.size()) return emit();
    for (int v = 0; v < domains_[cell]; ++v) {
      if (!budget_.charge()) return SearchOutcome::BudgetExceeded;
      Trail trail;
      if (assign_and_propagate(int(cell), v, trail)) {
        SearchOutcome rc = descend(cell + 1);
        if (rc != SearchOutcome::Exhausted) {
          undo(trail);
          return rc;
        }
      }
      undo(trail);
    }
    return SearchOutcome::Exhausted;
  }

  SearchOutcome emit() {
    for (size_t i = 0; i < instances_.size(); ++i) {
      if (instance_decided_[i]) continue;
      TV v = eval3_formula(*instances_[i].unit, instances_[i].binding);
      if (v != TV::True) return SearchOutcome::Exhausted;
    }
    FiniteStructure m(sig_, size_);
    for (size_t c = 0; c < cells_.size(); ++c) {
      const CellKey& key = cells_[c];
      switch (key.kind) {
        case SymbolKind::Constant:
          m.set_constant(key.symbol, values_[c]);
          break;
        case SymbolKind::Function:
          m.mutable_fn_table(key.symbol)[size_t(key.tuple)] = values_[c];
          break;
        case SymbolKind::Relation:
          if (values_[c] == 1) {
            m.set_rel(key.symbol, untuple(key.tuple,
                                          sig_.relations()[size_t(key.symbol)]
                                              .arity));
          }
          break;
      }
    }
    return visit_(m) ? SearchOutcome::Exhausted : SearchOutcome::Stopped;
  }

  std::vector<int> untuple(long long tuple, int arity) const {
    std::vector<int> out(size_t(arity), 0);
    for (int i = arity - 1; i >= 0; --i) {
      out[size_t(i)] = int(tuple % size_);
      tuple /= size_;
    }
    return out;
  }

  const Sentence& sentence_;
  const Signature& sig_;
  int size_;
  SearchBudget& budget_;
  const std::function<bool(const FiniteStructure&)>& visit_;

  std::vector<CellKey> cells_;
  std::vector<int> domains_;
  std::vector<int> values_;
  std::vector<int> const_cell_;
  std::vector<int> fn_cell_base_;
  std::vector<int> rel_cell_base_;

  std::vector<Instance> instances_;
  std::vector<uint8_t> instance_decided_;
  std::vector<std::vector<int>> instance_deps_;
  std::vector<std::vector<int>> cell_instances_;
};

}  // namespace

SearchOutcome for_each_model(
    const Sentence& s, int size, SearchBudget& budget,
    const std::function<bool(const FiniteStructure&)>& visit) {
  if (size < 1) throw InvalidInput("model size must be >= 1");
  validate_sentence(s);
  ModelSearch search(s, size, budget, visit);
  return search.run();
}

}  // namespace locw
