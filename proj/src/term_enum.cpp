#include "locw/term_enum.hpp"

#include <algorithm>

#include "locw/errors.hpp"

namespace locw {

int term_rank(const Term& t, RankMeasure measure) {
  return measure == RankMeasure::Complexity ? term_complexity(t)
                                            : closure_rank(t);
}

namespace {

void check_limit(size_t count, size_t limit) {
  if (count > limit) {
    throw InvalidInput("term enumeration limit exceeded (" +
                       std::to_string(limit) + " terms)");
  }
}

}  // namespace

std::vector<Term> terms_over_variables(const Signature& sig, int num_vars,
                                       int max_rank, RankMeasure measure,
                                       size_t limit) {
  // by_rank[r] holds the terms of rank exactly r.
  std::vector<std::vector<Term>> by_rank(size_t(std::max(0, max_rank)) + 1);
  size_t total = 0;
  for (int v = 0; v < num_vars; ++v) {
    by_rank[0].push_back(Term::variable(v));
    ++total;
  }
  int const_rank = measure == RankMeasure::Complexity ? 0 : 1;
  if (const_rank <= max_rank) {
    for (const std::string& c : sig.constants()) {
      by_rank[const_rank].push_back(Term::constant(c));
      ++total;
    }
  }
  check_limit(total, limit);

  std::vector<Term> cumulative;  // terms of rank <= r-1 while building r
  for (int r = 1; r <= max_rank; ++r) {
    for (const Term& t : by_rank[r - 1]) cumulative.push_back(t);
    size_t prev_count = cumulative.size();
    for (const FunctionSymbol& f : sig.functions()) {
      // All argument tuples from rank <= r-1 with at least one argument of
      // rank exactly r-1.
      std::vector<size_t> pick(size_t(f.arity), 0);
      while (true) {
        bool fresh = false;
        for (size_t p : pick) {
          if (term_rank(cumulative[p], measure) == r - 1) fresh = true;
        }
        if (fresh) {
          std::vector<Term> args;
          args.reserve(f.arity);
          for (size_t p : pick) args.push_back(cumulative[p]);
          by_rank[r].push_back(Term::apply(f.name, std::move(args)));
          check_limit(++total, limit);
        }
        int pos = f.arity - 1;
        while (pos >= 0 && ++pick[size_t(pos)] == prev_count) {
          pick[size_t(pos)] = 0;
          --pos;
        }
        if (pos < 0) break;
      }
    }
  }

  std::vector<Term> out;
  out.reserve(total);
  for (auto& level : by_rank) {
    for (Term& t : level) out.push_back(std::move(t));
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Enumerates terms with canonical variable numbering. `avail` is the count
// of variables already introduced to the left; a leaf may reuse any of
// them or introduce variable #avail. Yields (term, new avail).
void gen_canonical(const Signature& sig, int max_rank, RankMeasure measure,
                   int avail, size_t limit, size_t& total,
                   std::vector<std::pair<Term, int>>& out) {
  for (int v = 0; v <= avail; ++v) {
    out.emplace_back(Term::variable(v), std::max(avail, v + 1));
    check_limit(++total, limit);
  }
  int const_rank = measure == RankMeasure::Complexity ? 0 : 1;
  if (const_rank <= max_rank) {
    for (const std::string& c : sig.constants()) {
      out.emplace_back(Term::constant(c), avail);
      check_limit(++total, limit);
    }
  }
  if (max_rank < 1) return;
  for (const FunctionSymbol& f : sig.functions()) {
    // Build argument sequences left to right, threading `avail`.
    std::vector<std::pair<std::vector<Term>, int>> partial = {{{}, avail}};
    for (int i = 0; i < f.arity; ++i) {
      std::vector<std::pair<std::vector<Term>, int>> next;
      for (auto& [args, used] : partial) {
        std::vector<std::pair<Term, int>> sub;
        gen_canonical(sig, max_rank - 1, measure, used, limit, total, sub);
        for (auto& [t, used2] : sub) {
          auto extended = args;
          extended.push_back(t);
          next.emplace_back(std::move(extended), used2);
        }
      }
      partial = std::move(next);
      check_limit(partial.size(), limit);
    }
    for (auto& [args, used] : partial) {
      out.emplace_back(Term::apply(f.name, std::move(args)), used);
      check_limit(++total, limit);
    }
  }
}

}  // namespace

std::vector<Term> canonical_terms(const Signature& sig, int max_rank,
                                  RankMeasure measure, size_t limit) {
  std::vector<std::pair<Term, int>> raw;
  size_t total = 0;
  gen_canonical(sig, max_rank, measure, 0, limit, total, raw);
  std::vector<Term> out;
  out.reserve(raw.size());
  for (auto& [t, used] : raw) out.push_back(std::move(t));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace locw
