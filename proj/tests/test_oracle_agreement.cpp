#include <doctest.h>

#include "afspec/ftp_format.hpp"
#include "afspec/ideal_lattice.hpp"
#include "afspec/spectrum.hpp"
#include "oracle.hpp"

#include <algorithm>

using namespace afspec;

namespace {

constexpr std::uint64_t kDiagramSeedBase = 0x5eed0000;
constexpr std::uint64_t kSpaceSeedBase = 0x70b00000;

oracle::NameSet names_of(const IdealDiagram& e) {
  const auto v = e.vertices();
  return {v.begin(), v.end()};
}

// Same partition, regardless of class numbering.
bool same_partition(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      if ((a[i] == a[j]) != (b[i] == b[j])) return false;
  return true;
}

}  // namespace

TEST_CASE("continuous-function oracle on small spaces") {
  const auto two = parse_space("point a\npoint b\nminopen a = {a}\nminopen b = {b}\n");
  CHECK(oracle::brute_continuous_functions(two, {0, 1}).size() == 4);
  const auto sierpinski = parse_space("point a\npoint b\nminopen a = {a}\nminopen b = {a,b}\n");
  CHECK(oracle::brute_continuous_functions(sierpinski, {0, 1}).size() == 2);
  const auto chain = parse_space("point a\npoint b\npoint c\nminopen a = {a}\nminopen b = {a,b}\nminopen c = {a,b,c}\n");
  CHECK(oracle::brute_continuous_functions(chain, {0, 1, 2}).size() == 3);
}

TEST_CASE("ideal lattice, primality and primitivity agree with the oracle on 200 diagrams") {
  int mismatches = 0, implication_failures = 0;
  for (std::uint64_t i = 0; i < 200; ++i) {
    const std::uint64_t seed = kDiagramSeedBase + i;
    CAPTURE(seed);
    const auto d = oracle::random_diagram(seed);
    REQUIRE(d.size() <= 12);
    const auto host = build_skeleton(d);

    const auto ideals = enumerate_ideals(host);
    std::vector<oracle::NameSet> mine;
    for (const auto& e : ideals) mine.push_back(names_of(e));
    auto brute = oracle::brute_ideals(d);
    std::sort(mine.begin(), mine.end());
    std::sort(brute.begin(), brute.end());
    if (mine != brute) ++mismatches;
    CHECK(mine == brute);

    std::vector<oracle::NameSet> primal_sets;
    for (const auto& e : ideals) {
      const auto names = names_of(e);
      const bool primal = is_primal(e);
      CHECK(primal == oracle::brute_primal(d, names));
      if (primal) primal_sets.push_back(names);
      if (!e.is_full()) {
        const bool primitive = is_primitive(e);
        CHECK(primitive == oracle::brute_prime(d, names));
        if (primitive && !primal) ++implication_failures;
      }
    }

    // Minimal elements of the oracle's primal ideals.
    std::vector<oracle::NameSet> minimal;
    for (const auto& a : primal_sets) {
      const bool is_min = std::none_of(primal_sets.begin(), primal_sets.end(), [&](const oracle::NameSet& b) {
        return b != a && std::includes(a.begin(), a.end(), b.begin(), b.end());
      });
      if (is_min) minimal.push_back(a);
    }
    std::vector<oracle::NameSet> direct;
    for (const auto& e : minimal_primals(host)) direct.push_back(names_of(e));
    std::sort(minimal.begin(), minimal.end());
    std::sort(direct.begin(), direct.end());
    CHECK(direct == minimal);
  }
  CHECK(mismatches == 0);
  CHECK(implication_failures == 0);
}

TEST_CASE("topological checks agree with the oracle on 200 spaces") {
  int implication_failures = 0;
  for (std::uint64_t i = 0; i < 200; ++i) {
    const std::uint64_t seed = kSpaceSeedBase + i;
    CAPTURE(seed);
    const auto x = oracle::random_space(seed);
    CHECK(same_partition(x.component_index(), oracle::constancy_classes(x)));

    const bool qcr = is_quasi_completely_regular(x).value;
    const bool ci = every_open_has_closed_with_interior(x).value;
    CHECK(qcr == oracle::brute_qcr(x));
    CHECK(ci == oracle::brute_closed_interior(x));
    if (qcr && !ci) ++implication_failures;

    const auto reg = complete_regularization(x);
    CHECK(is_map_open(x, reg.quotient, reg.phi).value == oracle::brute_phi_open(x));
    CHECK(exhaustive::quasi_completely_regular(x).value == qcr);
    CHECK(exhaustive::closed_with_interior(x).value == ci);
  }
  CHECK(implication_failures == 0);
}
