#pragma once

#include <cstddef>
#include <cstdint>
#include <thread>

namespace curveaut {

/// Size limits and work budgets. These are configuration; the defaults cover
/// every group of order at most 504.
struct Caps {
  std::size_t element_cap = 2048;
  std::size_t lattice_cap = 512;
  std::size_t aut_cap = 1024;
  std::size_t automorphism_count_cap = 200000;
  std::uint64_t tuple_budget = 10'000'000;
  std::uint64_t node_budget = 100'000'000;
  unsigned workers = default_workers();

  static unsigned default_workers() {
    unsigned n = std::thread::hardware_concurrency();
    return n == 0 ? 1 : n;
  }
};

} // namespace curveaut
