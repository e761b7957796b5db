#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "hpcc/oracle.hpp"

namespace hpcc {

enum class Execution : std::uint8_t { Serial, Parallel };

struct CompareResult {
  std::size_t index = 0;
  GeneratorParams params;
  std::uint32_t vertices = 0;
  std::uint64_t solved = 0;
  std::uint64_t reference = 0;            // grid program, any size
  std::optional<std::uint64_t> oracle;    // brute force, when within the bound
  bool verified = false;                  // verify_solution on the solve output

  bool agrees() const {
    return verified && solved == reference && (!oracle || *oracle == solved);
  }
};

// Generates each instance, solves it and checks the result against the
// reference program and, up to max_oracle vertices, the brute-force oracle.
// Results come back in input order whichever execution is used; the
// parallel path runs instances on OpenMP threads.
std::vector<CompareResult> compare_batch(std::span<const GeneratorParams> cases, Execution exec,
                                         std::size_t max_oracle = kDefaultMaxOracle);

// The instance list used by `hpcc compare`: count instances with sizes
// cycling through [min_n, max_n] and densities through {0, 0.3, 0.7, 1},
// seeded from base_seed.
std::vector<GeneratorParams> compare_corpus(std::size_t count, std::uint32_t min_n,
                                            std::uint32_t max_n, double left_fraction,
                                            std::uint64_t base_seed);

}  // namespace hpcc
