#include <doctest.h>

#include "afspec/bdg_format.hpp"
#include "afspec/ideal_lattice.hpp"
#include "afspec/kernels.hpp"
#include "oracle.hpp"

#include <omp.h>

using namespace afspec;

TEST_CASE("parallel classification equals the serial reference") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const auto host = build_skeleton(oracle::random_diagram(seed));
    std::vector<NodeSet> sets;
    for (const auto& e : enumerate_ideals(host)) sets.push_back(e.members());
    CHECK(kernels::classify_serial(*host, sets) == kernels::classify_parallel(*host, sets));
  }
  const auto host = build_skeleton(load_diagram(AFSPEC_DATA_DIR "/example2.bdg"), 5);
  std::vector<NodeSet> sets;
  for (const auto& e : enumerate_ideals(host)) sets.push_back(e.members());
  CHECK(kernels::classify_serial(*host, sets) == kernels::classify_parallel(*host, sets));
}

TEST_CASE("first failure is the smallest failing index under any thread count") {
  const int saved = omp_get_max_threads();
  for (int threads : {1, 2, 4}) {
    omp_set_num_threads(threads);
    for (std::size_t bad : {std::size_t{0}, std::size_t{17}, std::size_t{999}}) {
      auto pred = [bad](std::size_t i) { return i < bad || i % 7 != bad % 7; };
      CHECK(kernels::first_failure_parallel(1000, pred) == kernels::first_failure_serial(1000, pred));
      CHECK(kernels::first_failure_serial(1000, pred) == std::optional<std::size_t>(bad));
    }
    CHECK_FALSE(kernels::first_failure_parallel(500, [](std::size_t) { return true; }));
    CHECK_FALSE(kernels::first_failure_parallel(0, [](std::size_t) { return false; }));
  }
  omp_set_num_threads(saved);
}
