#include "hpcc/batch.hpp"

#include <omp.h>

#include <exception>

#include "hpcc/dp_solver.hpp"

namespace hpcc {

namespace {

CompareResult compare_one(std::size_t index, const GeneratorParams& params,
                          std::size_t max_oracle) {
  const OuterplanarStDigraph g = generate(params);
  CompareResult r;
  r.index = index;
  r.params = params;
  r.vertices = static_cast<std::uint32_t>(g.vertex_count());
  const CompletionSolution sol = solve(g);
  r.solved = sol.total_crossings;
  r.verified = verify_solution(g, sol).valid;
  r.reference = reference_optimal(g);
  if (g.vertex_count() <= max_oracle) r.oracle = brute_force_optimal(g, max_oracle).crossings;
  return r;
}

}  // namespace

std::vector<CompareResult> compare_batch(std::span<const GeneratorParams> cases, Execution exec,
                                         std::size_t max_oracle) {
  std::vector<CompareResult> results(cases.size());
  // Exceptions cannot leave an OpenMP region; the lowest failing index is rethrown.
  std::vector<std::exception_ptr> errors(cases.size());
  const auto count = static_cast<std::int64_t>(cases.size());
  auto one = [&](std::int64_t i) {
    try {
      results[i] = compare_one(static_cast<std::size_t>(i), cases[i], max_oracle);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  };
  if (exec == Execution::Serial) {
    for (std::int64_t i = 0; i < count; ++i) one(i);
  } else {
#pragma omp parallel for schedule(dynamic, 4)
    for (std::int64_t i = 0; i < count; ++i) one(i);
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

std::vector<GeneratorParams> compare_corpus(std::size_t count, std::uint32_t min_n,
                                            std::uint32_t max_n, double left_fraction,
                                            std::uint64_t base_seed) {
  static constexpr double kDensities[] = {0.0, 0.3, 0.7, 1.0};
  if (min_n < 2 || max_n < min_n) {
    throw Error(ErrorCode::InfeasibleParams, "need 2 <= min_n <= max_n");
  }
  std::vector<GeneratorParams> cases(count);
  const std::uint32_t span = max_n - min_n + 1;
  for (std::size_t i = 0; i < count; ++i) {
    cases[i] = {min_n + static_cast<std::uint32_t>(i % span), left_fraction,
                kDensities[(i / span) % 4], base_seed + i};
  }
  return cases;
}

}  // namespace hpcc
