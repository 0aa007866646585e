#include "locw/closure.hpp"

#include <algorithm>

#include "locw/errors.hpp"

namespace locw {

namespace {

// X ∪ f(X^n) for every function ∪ every constant value.
std::set<int> one_step(const FiniteStructure& m, const std::set<int>& x) {
  std::set<int> out = x;
  for (size_t ci = 0; ci < m.signature().constants().size(); ++ci) {
    out.insert(m.constant_value(int(ci)));
  }
  std::vector<int> pool(x.begin(), x.end());
  const auto& fns = m.signature().functions();
  for (size_t fi = 0; fi < fns.size(); ++fi) {
    int arity = fns[fi].arity;
    if (pool.empty()) continue;
    std::vector<size_t> pick(size_t(arity), 0);
    while (true) {
      std::vector<int> args;
      args.reserve(size_t(arity));
      for (size_t p : pick) args.push_back(pool[p]);
      out.insert(m.fn_value(int(fi), args));
      int pos = arity - 1;
      while (pos >= 0 && ++pick[size_t(pos)] == pool.size()) {
        pick[size_t(pos)] = 0;
        --pos;
      }
      if (pos < 0) break;
    }
  }
  return out;
}

}  // namespace

ClosureTrace closure(const FiniteStructure& m, const std::set<int>& x) {
  for (int e : x) {
    if (e < 0 || e >= m.size()) {
      throw InvalidInput("closure seed outside the domain");
    }
  }
  m.check_complete();
  ClosureTrace trace;
  trace.stages.push_back(one_step(m, x));
  while (true) {
    std::set<int> next = one_step(m, trace.stages.back());
    if (next == trace.stages.back()) break;
    trace.stages.push_back(std::move(next));
  }
  trace.stabilization_step = int(trace.stages.size());
  return trace;
}

FiniteStructure generated_substructure(const FiniteStructure& m,
                                       const std::set<int>& x,
                                       std::vector<int>* elements) {
  std::set<int> domain = closure(m, x).closure();
  if (elements) elements->assign(domain.begin(), domain.end());
  return restrict_structure(m, domain, m.signature());
}

FiniteStructure restrict_structure(const FiniteStructure& m,
                                   const std::set<int>& elements,
                                   const Signature& subsig) {
  if (elements.empty()) {
    throw InvalidInput("cannot restrict to an empty domain");
  }
  std::vector<int> order(elements.begin(), elements.end());
  std::vector<int> to_new(size_t(m.size()), -1);
  for (size_t i = 0; i < order.size(); ++i) to_new[size_t(order[i])] = int(i);

  FiniteStructure out(subsig, int(order.size()));
  const Signature& big = m.signature();

  for (size_t fi = 0; fi < subsig.functions().size(); ++fi) {
    const FunctionSymbol& f = subsig.functions()[fi];
    auto big_fi = big.function_index(f.name);
    if (!big_fi || big.functions()[size_t(*big_fi)].arity != f.arity) {
      throw InvalidInput("function '" + f.name + "' missing in structure");
    }
    std::vector<int> args(size_t(f.arity), 0);
    while (true) {
      std::vector<int> old_args;
      old_args.reserve(args.size());
      for (int a : args) old_args.push_back(order[size_t(a)]);
      int value = m.fn_value(*big_fi, old_args);
      if (value < 0 || to_new[size_t(value)] < 0) {
        throw InvalidInput("subset not closed under function '" + f.name +
                           "'");
      }
      out.set_fn_value(int(fi), args, to_new[size_t(value)]);
      int pos = f.arity - 1;
      while (pos >= 0 && ++args[size_t(pos)] == int(order.size())) {
        args[size_t(pos)] = 0;
        --pos;
      }
      if (pos < 0) break;
    }
  }

  for (size_t ri = 0; ri < subsig.relations().size(); ++ri) {
    const RelationSymbol& r = subsig.relations()[ri];
    auto big_ri = big.relation_index(r.name);
    if (!big_ri || big.relations()[size_t(*big_ri)].arity != r.arity) {
      throw InvalidInput("relation '" + r.name + "' missing in structure");
    }
    for (const std::vector<int>& tuple : m.rel_tuples(*big_ri)) {
      std::vector<int> mapped;
      mapped.reserve(tuple.size());
      bool inside = true;
      for (int e : tuple) {
        if (to_new[size_t(e)] < 0) {
          inside = false;
          break;
        }
        mapped.push_back(to_new[size_t(e)]);
      }
      if (inside) out.set_rel(int(ri), std::move(mapped));
    }
  }

  for (size_t ci = 0; ci < subsig.constants().size(); ++ci) {
    auto big_ci = big.constant_index(subsig.constants()[ci]);
    if (!big_ci) {
      throw InvalidInput("constant '" + subsig.constants()[ci] +
                         "' missing in structure");
    }
    int value = m.constant_value(*big_ci);
    if (to_new[size_t(value)] < 0) {
      throw InvalidInput("subset does not contain constant '" +
                         subsig.constants()[ci] + "'");
    }
    out.set_constant(int(ci), to_new[size_t(value)]);
  }

  return out;
}

}  // namespace locw
