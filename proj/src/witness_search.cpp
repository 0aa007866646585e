#include "locw/witness_search.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <thread>

#include "locw/errors.hpp"
#include "locw/eval.hpp"
#include "locw/term_enum.hpp"

namespace locw {

namespace {

enum class TV : uint8_t { False, True, Unknown };

struct Frame {
  std::vector<int> const_sets;
  std::vector<std::pair<int, std::vector<int>>> fn_sets;
  std::vector<std::pair<int, std::vector<int>>> rel_sets;
  std::vector<int> decided;
  int created_element = -1;
  size_t instances_before = 0;
};

struct CellRef {
  SymbolKind kind;
  int symbol;
  std::vector<int> args;  // element ids; empty for constants
};

class WitnessSearch {
 public:
  WitnessSearch(const LocalCertificate& cert, int witness_count,
                IndiscernibleKind kind, long long budget,
                long long size_cap)
      : sentence_(cert.sentence), sig_(cert.sentence.signature),
        steps_(cert.steps), kind_(kind), n_gens_(witness_count),
        budget_limit_(budget), size_cap_(size_cap) {
    units_ = sentence_.matrix.conjuncts();
    for (const Formula* unit : units_) {
      std::set<int> vars;
      unit->collect_variables(vars);
      unit_vars_.emplace_back(vars.begin(), vars.end());
    }
    consts_.assign(sig_.constants().size(), -1);
    fn_vals_.resize(sig_.functions().size());
    rel_vals_.resize(sig_.relations().size());
    special_terms_ = terms_over_variables(sig_, 1, steps_,
                                          RankMeasure::Complexity);
    build_uniformity_atoms();
  }

  // Applies a fixed first decision (used to split work across tasks);
  // candidate index refers to candidates_of(first undefined cell).
  FinderResult run(std::optional<int> first_candidate) {
    setup_generators();
    FinderResult result;
    if (root_conflict_) {
      result.outcome = FinderOutcome::Exhausted;
      result.stats = stats_;
      return result;
    }
    bool budget_hit = false;
    if (first_candidate) {
      CellRef cell;
      if (next_undefined_cell(cell)) {
        std::vector<Candidate> cands = candidates_of(cell);
        if (*first_candidate < int(cands.size())) {
          budget_hit = !try_candidate(cell, cands[size_t(*first_candidate)]);
        }
      } else if (*first_candidate == 0) {
        budget_hit = !descend();
      }
    } else {
      budget_hit = !descend();
    }
    result.stats = stats_;
    result.stats.budget_used = stats_.nodes;
    if (best_) {
      result.outcome = FinderOutcome::Found;
      result.witness = materialize_witness();
    } else {
      result.outcome = budget_hit ? FinderOutcome::BudgetExceeded
                                  : FinderOutcome::Exhausted;
    }
    return result;
  }

  // First-level candidate count, for task splitting.
  int first_branch_width() {
    setup_generators();
    if (root_conflict_) return 0;
    CellRef cell;
    if (!next_undefined_cell(cell)) return 1;  // leaf-only search
    return int(candidates_of(cell).size());
  }

 private:
  struct Candidate {
    bool create;
    int value;  // element id for merges, insertion gap for creations
    int rank;   // creation rank (unused for merges)
  };

  // ---- setup -------------------------------------------------------------

  void setup_generators() {
    if (!elems_rank_.empty()) return;
    Frame frame;
    frame.instances_before = 0;
    for (int i = 0; i < n_gens_; ++i) {
      int id = int(elems_rank_.size());
      elems_rank_.push_back(0);
      order_.push_back(id);
      add_instances_for(id, frame);
    }
    rebuild_positions();
    gen_ids_.assign(n_gens_, 0);
    for (int i = 0; i < n_gens_; ++i) gen_ids_[size_t(i)] = i;
    if (!propagate(frame)) root_conflict_ = true;
    // The base frame is never undone.
  }

  void build_uniformity_atoms() {
    int cap = std::min(2, steps_ + 1);
    std::vector<Term> terms =
        terms_over_variables(sig_, 2, cap, RankMeasure::Complexity);
    for (size_t i = 0; i < terms.size(); ++i) {
      for (size_t j = i + 1; j < terms.size(); ++j) {
        uniformity_atoms_.push_back(Formula::eq(terms[i], terms[j]));
      }
      for (size_t j = 0; j < terms.size(); ++j) {
        if (i != j) {
          uniformity_atoms_.push_back(Formula::less(terms[i], terms[j]));
        }
      }
    }
    for (const RelationSymbol& r : sig_.relations()) {
      if (r.arity > 2 || terms.empty()) continue;
      std::vector<size_t> pick(size_t(r.arity), 0);
      while (true) {
        std::vector<Term> args;
        for (size_t p : pick) args.push_back(terms[p]);
        uniformity_atoms_.push_back(Formula::rel(r.name, std::move(args)));
        int pos = r.arity - 1;
        while (pos >= 0 && ++pick[size_t(pos)] == terms.size()) {
          pick[size_t(pos)] = 0;
          --pos;
        }
        if (pos < 0) break;
      }
    }
  }

  // ---- element bookkeeping -------------------------------------------------

  void rebuild_positions() {
    pos_of_.assign(elems_rank_.size(), -1);
    for (size_t p = 0; p < order_.size(); ++p) {
      pos_of_[size_t(order_[p])] = int(p);
    }
  }

  int create_element(int rank, int gap, Frame& frame) {
    int id = int(elems_rank_.size());
    elems_rank_.push_back(rank);
    order_.insert(order_.begin() + gap, id);
    rebuild_positions();
    frame.created_element = id;
    add_instances_for(id, frame);
    return id;
  }

  void add_instances_for(int new_id, Frame&) {
    // All bindings of each unit that mention the new element.
    for (size_t u = 0; u < units_.size(); ++u) {
      const std::vector<int>& vars = unit_vars_[u];
      if (vars.empty()) {
        if (new_id == 0) push_instance(int(u), {});
        continue;
      }
      std::vector<int> binding(vars.size(), 0);
      enumerate_bindings(int(u), vars, 0, false, new_id, binding);
    }
  }

  void enumerate_bindings(int unit, const std::vector<int>& vars, size_t pos,
                          bool used_new, int new_id,
                          std::vector<int>& binding) {
    if (pos == vars.size()) {
      if (used_new) push_instance(unit, binding);
      return;
    }
    for (int id = 0; id <= new_id; ++id) {
      binding[pos] = id;
      enumerate_bindings(unit, vars, pos + 1, used_new || id == new_id,
                         new_id, binding);
    }
  }

  void push_instance(int unit, const std::vector<int>& packed) {
    Instance inst;
    inst.unit = unit;
    inst.binding.assign(size_t(std::max(1, sentence_.quantifiers)), 0);
    for (size_t i = 0; i < unit_vars_[size_t(unit)].size(); ++i) {
      inst.binding[size_t(unit_vars_[size_t(unit)][i])] = packed[i];
    }
    instances_.push_back(std::move(inst));
    decided_.push_back(0);
  }

  // ---- partial evaluation --------------------------------------------------

  int eval_term3(const Term& t, const std::vector<int>& binding) const {
    switch (t.kind()) {
      case Term::Kind::Variable: return binding[size_t(t.var_index())];
      case Term::Kind::Constant:
        return consts_[size_t(*sig_.constant_index(t.symbol()))];
      case Term::Kind::Apply: {
        std::vector<int> args;
        args.reserve(t.args().size());
        for (const Term& a : t.args()) {
          int v = eval_term3(a, binding);
          if (v < 0) return -1;
          args.push_back(v);
        }
        const auto& table = fn_vals_[size_t(*sig_.function_index(t.symbol()))];
        auto it = table.find(args);
        return it == table.end() ? -1 : it->second;
      }
    }
    return -1;
  }

  TV eval3(const Formula& f, const std::vector<int>& binding) const {
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
        return pos_of_[size_t(a)] < pos_of_[size_t(b)] ? TV::True : TV::False;
      }
      case Formula::Kind::Rel: {
        std::vector<int> args;
        for (const Term& t : f.rel_args()) {
          int v = eval_term3(t, binding);
          if (v < 0) return TV::Unknown;
          args.push_back(v);
        }
        const auto& table = rel_vals_[size_t(*sig_.relation_index(f.rel_name()))];
        auto it = table.find(args);
        if (it == table.end()) return TV::Unknown;
        return it->second ? TV::True : TV::False;
      }
      case Formula::Kind::Not: {
        TV v = eval3(f.child(0), binding);
        if (v == TV::Unknown) return TV::Unknown;
        return v == TV::True ? TV::False : TV::True;
      }
      case Formula::Kind::And: {
        TV a = eval3(f.child(0), binding);
        if (a == TV::False) return TV::False;
        TV b = eval3(f.child(1), binding);
        if (b == TV::False) return TV::False;
        if (a == TV::True && b == TV::True) return TV::True;
        return TV::Unknown;
      }
      case Formula::Kind::Or: {
        TV a = eval3(f.child(0), binding);
        if (a == TV::True) return TV::True;
        TV b = eval3(f.child(1), binding);
        if (b == TV::True) return TV::True;
        if (a == TV::False && b == TV::False) return TV::False;
        return TV::Unknown;
      }
      case Formula::Kind::Implies: {
        TV a = eval3(f.child(0), binding);
        if (a == TV::False) return TV::True;
        TV b = eval3(f.child(1), binding);
        if (b == TV::True) return TV::True;
        if (a == TV::True && b == TV::False) return TV::False;
        return TV::Unknown;
      }
    }
    return TV::Unknown;
  }

  // ---- forcing -------------------------------------------------------------

  struct Forcing {
    CellRef cell;
    int value;
  };

  bool addressable(const Term& t, const std::vector<int>& binding,
                   CellRef& out) const {
    if (t.kind() == Term::Kind::Constant) {
      out = {SymbolKind::Constant, *sig_.constant_index(t.symbol()), {}};
      return true;
    }
    if (t.kind() == Term::Kind::Apply) {
      std::vector<int> args;
      for (const Term& a : t.args()) {
        int v = eval_term3(a, binding);
        if (v < 0) return false;
        args.push_back(v);
      }
      out = {SymbolKind::Function, *sig_.function_index(t.symbol()),
             std::move(args)};
      return true;
    }
    return false;
  }

  void require_true(const Formula& f, const std::vector<int>& binding,
                    std::vector<Forcing>& out) const {
    switch (f.kind()) {
      case Formula::Kind::And:
        require_true(f.child(0), binding, out);
        require_true(f.child(1), binding, out);
        return;
      case Formula::Kind::Or: {
        TV a = eval3(f.child(0), binding);
        TV b = eval3(f.child(1), binding);
        if (a == TV::False && b == TV::Unknown) {
          require_true(f.child(1), binding, out);
        } else if (b == TV::False && a == TV::Unknown) {
          require_true(f.child(0), binding, out);
        }
        return;
      }
      case Formula::Kind::Implies: {
        TV a = eval3(f.child(0), binding);
        if (a == TV::True) {
          require_true(f.child(1), binding, out);
        } else if (a == TV::Unknown &&
                   eval3(f.child(1), binding) == TV::False) {
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
        CellRef cell;
        if (a >= 0 && b < 0 && addressable(f.rhs_term(), binding, cell)) {
          out.push_back({std::move(cell), a});
        } else if (b >= 0 && a < 0 &&
                   addressable(f.lhs_term(), binding, cell)) {
          out.push_back({std::move(cell), b});
        }
        return;
      }
      case Formula::Kind::Rel: {
        std::vector<int> args;
        for (const Term& t : f.rel_args()) {
          int v = eval_term3(t, binding);
          if (v < 0) return;
          args.push_back(v);
        }
        out.push_back(
            {{SymbolKind::Relation, *sig_.relation_index(f.rel_name()),
              std::move(args)},
             1});
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
        TV a = eval3(f.child(0), binding);
        TV b = eval3(f.child(1), binding);
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
        std::vector<int> args;
        for (const Term& t : f.rel_args()) {
          int v = eval_term3(t, binding);
          if (v < 0) return;
          args.push_back(v);
        }
        out.push_back(
            {{SymbolKind::Relation, *sig_.relation_index(f.rel_name()),
              std::move(args)},
             0});
        return;
      }
      default: return;
    }
  }

  // ---- cell assignment & propagation ----------------------------------------

  bool cell_defined(const CellRef& cell) const {
    switch (cell.kind) {
      case SymbolKind::Constant: return consts_[size_t(cell.symbol)] >= 0;
      case SymbolKind::Function:
        return fn_vals_[size_t(cell.symbol)].count(cell.args) > 0;
      case SymbolKind::Relation:
        return rel_vals_[size_t(cell.symbol)].count(cell.args) > 0;
    }
    return false;
  }

  int cell_value(const CellRef& cell) const {
    switch (cell.kind) {
      case SymbolKind::Constant: return consts_[size_t(cell.symbol)];
      case SymbolKind::Function: {
        auto it = fn_vals_[size_t(cell.symbol)].find(cell.args);
        return it == fn_vals_[size_t(cell.symbol)].end() ? -1 : it->second;
      }
      case SymbolKind::Relation: {
        auto it = rel_vals_[size_t(cell.symbol)].find(cell.args);
        return it == rel_vals_[size_t(cell.symbol)].end() ? -1 : it->second;
      }
    }
    return -1;
  }

  void set_cell(const CellRef& cell, int value, Frame& frame) {
    switch (cell.kind) {
      case SymbolKind::Constant:
        consts_[size_t(cell.symbol)] = value;
        frame.const_sets.push_back(cell.symbol);
        break;
      case SymbolKind::Function:
        fn_vals_[size_t(cell.symbol)][cell.args] = value;
        frame.fn_sets.emplace_back(cell.symbol, cell.args);
        break;
      case SymbolKind::Relation:
        rel_vals_[size_t(cell.symbol)][cell.args] = value;
        frame.rel_sets.emplace_back(cell.symbol, cell.args);
        break;
    }
  }

  bool propagate(Frame& frame) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (size_t i = 0; i < instances_.size(); ++i) {
        if (decided_[i]) continue;
        const Instance& inst = instances_[i];
        TV v = eval3(*units_[size_t(inst.unit)], inst.binding);
        if (v == TV::False) return false;
        if (v == TV::True) {
          decided_[i] = 1;
          frame.decided.push_back(int(i));
          continue;
        }
        std::vector<Forcing> forcings;
        require_true(*units_[size_t(inst.unit)], inst.binding, forcings);
        for (const Forcing& fc : forcings) {
          int cur = cell_value(fc.cell);
          if (cur == fc.value) continue;
          if (cur >= 0) return false;
          set_cell(fc.cell, fc.value, frame);
          changed = true;
        }
      }
    }
    return indiscernibility_prune();
  }

  void undo(const Frame& frame) {
    for (int c : frame.const_sets) consts_[size_t(c)] = -1;
    for (const auto& [f, args] : frame.fn_sets) {
      fn_vals_[size_t(f)].erase(args);
    }
    for (const auto& [r, args] : frame.rel_sets) {
      rel_vals_[size_t(r)].erase(args);
    }
    for (int i : frame.decided) decided_[size_t(i)] = 0;
    if (frame.created_element >= 0) {
      instances_.resize(frame.instances_before);
      decided_.resize(frame.instances_before);
      order_.erase(std::find(order_.begin(), order_.end(),
                             frame.created_element));
      elems_rank_.pop_back();
      rebuild_positions();
    }
  }

  // ---- indiscernibility pruning ---------------------------------------------

  bool indiscernibility_prune() const {
    if (kind_ == IndiscernibleKind::Special && !special_conditions_hold()) {
      return false;
    }
    return uniformity_holds();
  }

  bool special_conditions_hold() const {
    std::vector<int> binding(size_t(std::max(1, sentence_.quantifiers)), 0);
    for (const Term& t : special_terms_) {
      // determined values of t at each generator; -1 when still open
      std::vector<int> vals(size_t(n_gens_), -1);
      for (int i = 0; i < n_gens_; ++i) {
        binding[0] = gen_ids_[size_t(i)];
        vals[size_t(i)] = eval_term3(t, binding);
      }
      for (int i = 0; i + 1 < n_gens_; ++i) {
        if (vals[size_t(i)] >= 0 &&
            pos_of_[size_t(vals[size_t(i)])] >=
                pos_of_[size_t(gen_ids_[size_t(i) + 1])]) {
          return false;  // (i) t(x) < y fails
        }
      }
      for (int xi = 0; xi < n_gens_; ++xi) {
        for (int yi = xi + 1; yi < n_gens_; ++yi) {
          int v = vals[size_t(yi)];
          if (v < 0) continue;
          if (pos_of_[size_t(v)] < pos_of_[size_t(gen_ids_[size_t(xi)])]) {
            for (int zi = xi + 1; zi < n_gens_; ++zi) {
              int w = vals[size_t(zi)];
              if (w >= 0 && w != v) return false;  // (ii) tail not constant
            }
          }
        }
      }
    }
    return true;
  }

  // Shallow-atom uniformity over generator pairs: any two increasing pairs
  // must agree on every atom both have determined.
  bool uniformity_holds() const {
    if (n_gens_ < 2 || uniformity_atoms_.empty()) return true;
    std::vector<int> binding(size_t(std::max(2, sentence_.quantifiers)), 0);
    std::vector<int> reference(uniformity_atoms_.size(), -1);
    binding[0] = gen_ids_[0];
    binding[1] = gen_ids_[1];
    for (size_t a = 0; a < uniformity_atoms_.size(); ++a) {
      TV v = eval3(uniformity_atoms_[a], binding);
      reference[a] = v == TV::Unknown ? -1 : (v == TV::True ? 1 : 0);
    }
    for (int i = 0; i < n_gens_; ++i) {
      for (int j = i + 1; j < n_gens_; ++j) {
        if (i == 0 && j == 1) continue;
        binding[0] = gen_ids_[size_t(i)];
        binding[1] = gen_ids_[size_t(j)];
        for (size_t a = 0; a < uniformity_atoms_.size(); ++a) {
          if (reference[a] < 0) continue;
          TV v = eval3(uniformity_atoms_[a], binding);
          if (v == TV::Unknown) continue;
          if ((v == TV::True ? 1 : 0) != reference[a]) return false;
        }
      }
    }
    return true;
  }

  // ---- search ----------------------------------------------------------------

  bool next_undefined_cell(CellRef& out) const {
    for (size_t c = 0; c < consts_.size(); ++c) {
      if (consts_[c] < 0) {
        out = {SymbolKind::Constant, int(c), {}};
        return true;
      }
    }
    for (const DeclRef& d : sig_.declarations()) {
      if (d.kind == SymbolKind::Function) {
        int arity = sig_.functions()[size_t(d.index)].arity;
        if (find_missing_tuple(fn_vals_[size_t(d.index)], arity, d.index,
                               SymbolKind::Function, out)) {
          return true;
        }
      }
    }
    for (const DeclRef& d : sig_.declarations()) {
      if (d.kind == SymbolKind::Relation) {
        int arity = sig_.relations()[size_t(d.index)].arity;
        if (find_missing_tuple(rel_vals_[size_t(d.index)], arity, d.index,
                               SymbolKind::Relation, out)) {
          return true;
        }
      }
    }
    return false;
  }

  bool find_missing_tuple(const std::map<std::vector<int>, int>& table,
                          int arity, int symbol, SymbolKind kind,
                          CellRef& out) const {
    // Position-lexicographic enumeration of argument tuples.
    std::vector<size_t> pick(size_t(arity), 0);
    std::vector<int> args(size_t(arity), 0);
    while (true) {
      for (size_t i = 0; i < pick.size(); ++i) {
        args[i] = order_[pick[i]];
      }
      if (table.find(args) == table.end()) {
        out = {kind, symbol, args};
        return true;
      }
      int pos = arity - 1;
      while (pos >= 0 && ++pick[size_t(pos)] == order_.size()) {
        pick[size_t(pos)] = 0;
        --pos;
      }
      if (pos < 0) return false;
    }
  }

  std::vector<Candidate> candidates_of(const CellRef& cell) const {
    std::vector<Candidate> out;
    if (cell.kind == SymbolKind::Relation) {
      out.push_back({false, 0, 0});
      out.push_back({false, 1, 0});
      return out;
    }
    // Merge candidates in order position.
    for (int id : order_) out.push_back({false, id, 0});
    int rank = 1;
    for (int arg : cell.args) {
      rank = std::max(rank, elems_rank_[size_t(arg)] + 1);
    }
    if (rank <= steps_ && long long(order_.size()) < size_cap_ &&
        (!best_ || int(order_.size()) < best_size_)) {
      for (int gap = 0; gap <= int(order_.size()); ++gap) {
        out.push_back({true, gap, rank});
      }
    }
    return out;
  }

  // Returns false when the budget ran out (hard stop).
  bool try_candidate(const CellRef& cell, const Candidate& cand) {
    if (++stats_.nodes > budget_limit_) return false;
    Frame frame;
    frame.instances_before = instances_.size();
    bool ok = true;
    if (cell.kind != SymbolKind::Relation && cand.create) {
      int id = create_element(cand.rank, cand.value, frame);
      set_cell(cell, id, frame);
    } else {
      set_cell(cell, cand.value, frame);
    }
    ok = propagate(frame);
    if (!ok) ++stats_.prunes;
    if (ok && !descend()) {
      undo(frame);
      return false;
    }
    undo(frame);
    return true;
  }

  bool descend() {
    if (best_ && int(order_.size()) > best_size_) {
      ++stats_.prunes;
      return true;
    }
    CellRef cell;
    if (!next_undefined_cell(cell)) {
      consider_leaf();
      return true;
    }
    for (const Candidate& cand : candidates_of(cell)) {
      if (!try_candidate(cell, cand)) return false;
    }
    return true;
  }

  // ---- leaves ------------------------------------------------------------------

  std::vector<long long> structure_key(const FiniteStructure& m) const {
    std::vector<long long> key;
    key.push_back(m.size());
    for (size_t f = 0; f < sig_.functions().size(); ++f) {
      for (int v : m.fn_table(int(f))) key.push_back(v);
    }
    for (size_t r = 0; r < sig_.relations().size(); ++r) {
      const RelationSymbol& rel = sig_.relations()[r];
      long long count = 1;
      for (int i = 0; i < rel.arity; ++i) count *= m.size();
      std::vector<char> bits(size_t(count), 0);
      for (const auto& tuple : m.rel_tuples(int(r))) {
        bits[size_t(tuple_index(tuple, m.size()))] = 1;
      }
      for (char b : bits) key.push_back(b);
    }
    for (size_t c = 0; c < sig_.constants().size(); ++c) {
      key.push_back(m.constant_value(int(c)));
    }
    return key;
  }

  FiniteStructure materialize() const {
    FiniteStructure m(sig_, int(order_.size()));
    std::vector<int> args;
    for (size_t f = 0; f < sig_.functions().size(); ++f) {
      for (const auto& [ids, value] : fn_vals_[f]) {
        args.clear();
        for (int id : ids) args.push_back(pos_of_[size_t(id)]);
        m.set_fn_value(int(f), args, pos_of_[size_t(value)]);
      }
    }
    for (size_t r = 0; r < sig_.relations().size(); ++r) {
      for (const auto& [ids, bit] : rel_vals_[r]) {
        if (!bit) continue;
        args.clear();
        for (int id : ids) args.push_back(pos_of_[size_t(id)]);
        m.set_rel(int(r), args);
      }
    }
    for (size_t c = 0; c < consts_.size(); ++c) {
      m.set_constant(int(c), pos_of_[size_t(consts_[c])]);
    }
    return m;
  }

  void consider_leaf() {
    for (size_t i = 0; i < instances_.size(); ++i) {
      if (decided_[i]) continue;
      if (eval3(*units_[size_t(instances_[i].unit)], instances_[i].binding) !=
          TV::True) {
        ++stats_.prunes;
        return;
      }
    }
    FiniteStructure m = materialize();
    std::vector<int> gens;
    for (int id : gen_ids_) gens.push_back(pos_of_[size_t(id)]);
    bool kind_ok =
        kind_ == IndiscernibleKind::Plain
            ? check_plain_indiscernibles(m, gens, steps_ + 1)
            : check_special_indiscernibles(m, gens, steps_, steps_ + 1);
    if (!kind_ok) {
      ++stats_.prunes;
      return;
    }
    std::vector<long long> key = structure_key(m);
    if (!best_ || key < best_key_) {
      best_ = m;
      best_key_ = std::move(key);
      best_size_ = m.size();
      best_gens_ = gens;
    }
  }

  IndiscernibleWitness materialize_witness() const {
    IndiscernibleWitness w{*best_, best_gens_, kind_, steps_};
    return w;
  }

  struct Instance {
    int unit;
    std::vector<int> binding;  // element ids per quantifier slot
  };

  const Sentence& sentence_;
  const Signature& sig_;
  int steps_;
  IndiscernibleKind kind_;
  int n_gens_;
  long long budget_limit_;
  long long size_cap_;

  std::vector<const Formula*> units_;
  std::vector<std::vector<int>> unit_vars_;
  std::vector<Term> special_terms_;
  std::vector<Formula> uniformity_atoms_;

  std::vector<int> elems_rank_;
  std::vector<int> order_;
  std::vector<int> pos_of_;
  std::vector<int> gen_ids_;

  std::vector<int> consts_;
  std::vector<std::map<std::vector<int>, int>> fn_vals_;
  std::vector<std::map<std::vector<int>, int>> rel_vals_;

  std::vector<Instance> instances_;
  std::vector<uint8_t> decided_;

  bool root_conflict_ = false;
  FinderStats stats_;
  std::optional<FiniteStructure> best_;
  std::vector<long long> best_key_;
  int best_size_ = 0;
  std::vector<int> best_gens_;
};

}  // namespace

FinderResult find_witness(const LocalCertificate& cert, int witness_count,
                          IndiscernibleKind kind, const FinderOptions& opts) {
  if (witness_count < 1) {
    throw InvalidInput("witness count must be >= 1");
  }
  if (kind == IndiscernibleKind::Special &&
      !cert.sentence.signature.all_functions_unary()) {
    throw PreconditionError(
        "special-indiscernible search requires a unary signature");
  }
  long long bound = closure_growth_bound(cert.sentence.signature,
                                         witness_count, cert.steps);
  long long size_cap = opts.size_cap ? std::min(*opts.size_cap, bound) : bound;

  int width = 0;
  {
    WitnessSearch probe(cert, witness_count, kind, opts.budget, size_cap);
    width = probe.first_branch_width();
  }
  if (width == 0) {
    // Root conflict: the generators alone already violate the matrix.
    FinderResult r;
    r.outcome = FinderOutcome::Exhausted;
    return r;
  }

  std::vector<FinderResult> results(size_t(width));
  std::atomic<int> next{0};
  auto work = [&] {
    while (true) {
      int task = next.fetch_add(1);
      if (task >= width) break;
      WitnessSearch search(cert, witness_count, kind, opts.budget, size_cap);
      results[size_t(task)] = search.run(task);
    }
  };
  int workers = std::max(1, opts.workers);
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }

  // Deterministic fold across tasks, independent of scheduling.
  FinderResult merged;
  merged.outcome = FinderOutcome::Exhausted;
  bool budget_hit = false;
  for (const FinderResult& r : results) {
    merged.stats.nodes += r.stats.nodes;
    merged.stats.prunes += r.stats.prunes;
    merged.stats.budget_used += r.stats.budget_used;
    if (r.outcome == FinderOutcome::BudgetExceeded) budget_hit = true;
  }
  std::optional<std::pair<std::vector<long long>, size_t>> best;
  for (size_t t = 0; t < results.size(); ++t) {
    if (!results[t].witness) continue;
    std::vector<long long> key;
    const IndiscernibleWitness& w = *results[t].witness;
    key.push_back(w.model.size());
    for (size_t f = 0; f < w.model.signature().functions().size(); ++f) {
      for (int v : w.model.fn_table(int(f))) key.push_back(v);
    }
    for (size_t rl = 0; rl < w.model.signature().relations().size(); ++rl) {
      const RelationSymbol& rel = w.model.signature().relations()[rl];
      long long count = 1;
      for (int i = 0; i < rel.arity; ++i) count *= w.model.size();
      std::vector<char> bits(size_t(count), 0);
      for (const auto& tuple : w.model.rel_tuples(int(rl))) {
        bits[size_t(tuple_index(tuple, w.model.size()))] = 1;
      }
      for (char b : bits) key.push_back(b);
    }
    for (size_t c = 0; c < w.model.signature().constants().size(); ++c) {
      key.push_back(w.model.constant_value(int(c)));
    }
    if (!best || key < best->first) best = {std::move(key), t};
  }
  if (best) {
    merged.outcome = FinderOutcome::Found;
    merged.witness = results[best->second].witness;
  } else if (budget_hit) {
    merged.outcome = FinderOutcome::BudgetExceeded;
  }
  return merged;
}

}  // namespace locw
