#include <doctest.h>

#include "afspec/bdg_format.hpp"
#include "afspec/error.hpp"
#include "afspec/ideal_lattice.hpp"

using namespace afspec;

namespace {

// a@1 splits into two persistent blocks.
const char* kFork = R"(
levels 2
vertex a@1 dim=1
vertex x@2 dim=1
vertex y@2 dim=1
edge a@1 -> x@2 mult=1
edge a@1 -> y@2 mult=1
)";

// Three levels of one block each: 1 -> 1 -> 1.
const char* kLadder3 = R"(
levels 3
vertex a@1 dim=1
vertex a@2 dim=1
vertex a@3 dim=1
edge a@1 -> a@2 mult=1
edge a@2 -> a@3 mult=1
)";

std::vector<std::vector<std::string>> vertex_lists(const std::vector<IdealDiagram>& v) {
  std::vector<std::vector<std::string>> out;
  for (const auto& e : v) out.push_back(e.vertices());
  return out;
}

}  // namespace

TEST_CASE("ideal subdiagram conditions") {
  const auto host = build_skeleton(parse_diagram(kFork));
  CHECK(is_ideal_subdiagram(*host, std::vector<std::string>{}));
  CHECK(is_ideal_subdiagram(*host, std::vector<std::string>{"x@2"}));
  CHECK(is_ideal_subdiagram(*host, std::vector<std::string>{"a@1", "x@2", "y@2"}));

  const auto not_closed = is_ideal_subdiagram(*host, std::vector<std::string>{"a@1", "x@2"});
  CHECK_FALSE(not_closed);
  CHECK(not_closed.violation.find("descendant") != std::string::npos);

  const auto not_saturated = is_ideal_subdiagram(*host, std::vector<std::string>{"x@2", "y@2"});
  CHECK_FALSE(not_saturated);
  CHECK(not_saturated.violation.find("saturated") != std::string::npos);

  CHECK_FALSE(is_ideal_subdiagram(*host, std::vector<std::string>{"z@2"}));
  CHECK_THROWS_AS(make_ideal(host, std::vector<std::string>{"x@2", "y@2"}), ModelError);
}

TEST_CASE("enumeration of the fork") {
  const auto host = build_skeleton(parse_diagram(kFork));
  const auto ideals = enumerate_ideals(host);
  const std::vector<std::vector<std::string>> expected{
      {}, {"x@2"}, {"y@2"}, {"a@1", "x@2", "y@2"}};
  CHECK(vertex_lists(ideals) == expected);
  CHECK_THROWS_AS(enumerate_ideals(host, 3), SizeLimitError);
}

TEST_CASE("a finite ladder has only the trivial ideals") {
  // Saturation pulls every upper vertex in as soon as the bottom one is in.
  const auto host = build_skeleton(parse_diagram(kLadder3));
  const auto ideals = enumerate_ideals(host);
  REQUIRE(ideals.size() == 2);
  CHECK(ideals[0].size() == 0);
  CHECK(ideals[1].is_full());
}

TEST_CASE("closure, containment and intersection") {
  const auto host = build_skeleton(parse_diagram(kFork));
  const auto x = ideal_closure(host, host->from_names({"x@2"}));
  CHECK(x.vertices() == std::vector<std::string>{"x@2"});
  const auto y = make_ideal(host, std::vector<std::string>{"y@2"});
  const auto both = ideal_closure(host, host->from_names({"x@2", "y@2"}));
  CHECK(both.is_full());
  CHECK(contains(both, x));
  CHECK_FALSE(contains(x, y));
  CHECK(intersect(x, y) == zero_ideal(host));
  CHECK(glimm_ideal_of_class({x, y, both}) == zero_ideal(host));

  const auto other = build_skeleton(parse_diagram(kFork));
  CHECK_THROWS_AS(intersect(x, make_ideal(other, std::vector<std::string>{"x@2"})), ModelError);
}

TEST_CASE("finite quotient diagram is the induced subdiagram") {
  const auto d = parse_diagram(kFork);
  const auto host = build_skeleton(d);
  const auto q = std::get<FiniteDiagram>(quotient_diagram(d, make_ideal(host, std::vector<std::string>{"x@2"})));
  REQUIRE(q.size() == 2);
  CHECK(q.vertex(0).id.str() == "a@1");
  CHECK(q.vertex(1).id.str() == "y@2");
  CHECK(q.edges().size() == 1);
}

TEST_CASE("periodic ideals are unions of column instances") {
  const auto d = load_diagram(AFSPEC_DATA_DIR "/example2.bdg");
  const auto host = build_skeleton(d);
  // The ideal killing everything but {a_1, b_1}.
  const auto e = ideal_closure(host, host->inner - host->from_names({"a_1", "b_1"}));
  CHECK(e.quotient_vertices() == std::vector<std::string>{"a_1", "b_1"});

  const auto q = std::get<PeriodicDiagram>(quotient_diagram(d, e));
  CHECK(q.columns().size() == 2);
  CHECK(q.links().size() == 1);
  CHECK(std::holds_alternative<FiniteDiagram>(quotient_diagram(d, full_ideal(host))));

  // b_1 alone is not descendant-closed away from a_1's quotient.
  CHECK_FALSE(is_ideal_subdiagram(*host, std::vector<std::string>{"a_1"}));
}

TEST_CASE("semi-Glimm ideals contain a Glimm ideal") {
  const auto host = build_skeleton(parse_diagram(kFork));
  const auto x = make_ideal(host, std::vector<std::string>{"x@2"});
  const auto y = make_ideal(host, std::vector<std::string>{"y@2"});
  const std::vector<IdealDiagram> glimm{x, y};
  CHECK(semi_glimm_witness(x, glimm) == std::optional<std::size_t>(0));
  CHECK_FALSE(is_semi_glimm(zero_ideal(host), glimm));
  CHECK(is_semi_glimm(full_ideal(host), glimm));
}
