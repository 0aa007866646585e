#include "locw/verify_local.hpp"

#include <atomic>
#include <thread>

#include "locw/closure.hpp"
#include "locw/errors.hpp"
#include "locw/eval.hpp"

namespace locw {

long long closure_growth_bound(const Signature& sig, long long seeds,
                               int steps, long long cap) {
  long long size = seeds;
  long long consts = long long(sig.constants().size());
  for (int s = 0; s < steps; ++s) {
    long long next = size + consts;
    for (const FunctionSymbol& f : sig.functions()) {
      long long images = 1;
      for (int i = 0; i < f.arity; ++i) {
        if (images > cap / std::max<long long>(size, 1)) {
          images = cap;
          break;
        }
        images *= size;
      }
      next = std::min(cap, next + images);
    }
    size = std::min(cap, next);
    if (size == cap) break;
  }
  return size;
}

namespace {

// Every subset of 0..size-1, the empty set included.
void for_each_subset(int size, const std::function<bool(const std::set<int>&)>& f) {
  for (unsigned mask = 0; mask < (1u << size); ++mask) {
    std::set<int> subset;
    for (int i = 0; i < size; ++i) {
      if (mask & (1u << i)) subset.insert(i);
    }
    if (!f(subset)) return;
  }
}

struct SizeResult {
  LocalityReport::Status status = LocalityReport::Status::Pass;
  int max_stabilization = 0;
  long long models = 0;
  long long nodes = 0;
  std::optional<LocalityViolation> violation;
};

SizeResult check_size(const Sentence& s, int steps, int size,
                      long long budget_limit) {
  SizeResult result;
  SearchBudget budget{budget_limit, 0};
  SearchOutcome outcome = for_each_model(
      s, size, budget, [&](const FiniteStructure& m) {
        ++result.models;
        bool keep_going = true;
        for_each_subset(size, [&](const std::set<int>& seed) {
          ClosureTrace trace = closure(m, seed);
          result.max_stabilization =
              std::max(result.max_stabilization, trace.stabilization_step);
          if (trace.stabilization_step > steps) {
            result.violation = {LocalityViolation::Kind::StabilizationTooSlow,
                                m, seed, trace.stabilization_step};
            keep_going = false;
            return false;
          }
          if (!trace.closure().empty()) {
            FiniteStructure sub = restrict_structure(m, trace.closure(),
                                                     m.signature());
            if (!eval_sentence(sub, s)) {
              result.violation = {LocalityViolation::Kind::SubstructureFails,
                                  m, seed, trace.stabilization_step};
              keep_going = false;
              return false;
            }
          }
          return true;
        });
        return keep_going;
      });
  result.nodes = budget.used;
  if (result.violation) {
    result.status = LocalityReport::Status::Fail;
  } else if (outcome == SearchOutcome::BudgetExceeded) {
    result.status = LocalityReport::Status::BudgetExceeded;
  }
  return result;
}

}  // namespace

LocalityReport verify_local_on_bounded_models(const Sentence& s, int steps,
                                              int max_size,
                                              long long budget_per_size,
                                              int workers) {
  if (steps < 1) throw InvalidInput("steps must be >= 1");
  if (max_size < 1) throw InvalidInput("max size must be >= 1");
  if (max_size > 20) throw InvalidInput("max size larger than supported");
  if (workers < 1) throw InvalidInput("workers must be >= 1");

  std::vector<SizeResult> results(size_t(max_size));
  std::atomic<int> next{1};
  auto work = [&] {
    while (true) {
      int size = next.fetch_add(1);
      if (size > max_size) break;
      results[size_t(size - 1)] = check_size(s, steps, size, budget_per_size);
    }
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }

  // Deterministic fold in size order, independent of scheduling.
  LocalityReport report;
  for (const SizeResult& r : results) {
    report.models_checked += r.models;
    report.nodes += r.nodes;
    report.max_observed_stabilization =
        std::max(report.max_observed_stabilization, r.max_stabilization);
    if (report.status == LocalityReport::Status::Pass &&
        r.status != LocalityReport::Status::Pass) {
      report.status = r.status;
      report.violation = r.violation;
    }
  }
  return report;
}

}  // namespace locw
