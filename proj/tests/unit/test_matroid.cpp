#include <doctest.h>

#include "data/fp_fixtures.hpp"
#include "mjac/corpus.hpp"
#include "mjac/error.hpp"
#include "mjac/matroid.hpp"
#include "unit/helpers.hpp"

using namespace mjac;
using testing::rows_of;

namespace {

std::uint64_t tree_count(std::string_view graph) {
  for (const auto& t : fixtures::kSpanningTrees)
    if (t.graph == graph) return t.count;
  return 0;
}

}  // namespace

TEST_CASE("matrix helpers") {
  CHECK(determinant(BigMatrix(0, 0)) == 1);
  CHECK(determinant(rows_of<Integer>({{2, 1}, {1, 3}})) == 5);
  CHECK(determinant(rows_of<Integer>({{1, 2}, {2, 4}})) == 0);
  CHECK(exact_rank(rows_of<Integer>({{1, 2, 3}, {2, 4, 6}})) == 1);
  CHECK(is_totally_unimodular(rows_of({{1, 0, 1}, {0, 1, -1}})));
  CHECK_FALSE(is_totally_unimodular(rows_of({{1, 1}, {1, -1}})));
}

TEST_CASE("matroid construction is validated") {
  CHECK_THROWS_AS(RegularMatroid(rows_of({{2, 0}}), {"a", "b"}), Error);
  CHECK_THROWS_AS(RegularMatroid(rows_of({{1, 1}, {1, 1}}), {"a", "b"}), Error);
  CHECK_THROWS_AS(RegularMatroid(rows_of({{1, 0}}), {"a", "a"}), Error);
  CHECK_THROWS_AS(RegularMatroid(rows_of({{1, 0}}), {"a"}), Error);
  const RegularMatroid m(rows_of({{1, 0}}), {"a", "b"});
  CHECK(m.index_of("b") == 1);
  CHECK_THROWS_AS(m.index_of("zz"), Error);
}

TEST_CASE("bases of graphic matroids are spanning trees") {
  for (const char* name : {"C2", "C3", "diamond", "K4", "banana3", "banana10"}) {
    CAPTURE(name);
    const auto& m = corpus_entry(name).matroid;
    const BasisSet b = enumerate_bases(m);
    CHECK(b.size() == tree_count(name));
    CHECK(check_basis_exchange(b));
    CHECK(bases_have_unit_determinant(m, b));
  }
  CHECK(enumerate_bases(incidence_matroid(cycle_graph(3))).size() == 3);
  CHECK(enumerate_bases(incidence_matroid(path_graph(4))).size() == 1);
}

TEST_CASE("basis search rejects a non-unimodular matrix") {
  const RegularMatroid m(rows_of({{1, 0, 1, 1}, {0, 1, 1, -1}}), {"a", "b", "c", "d"});
  CHECK_THROWS_AS(enumerate_bases(m), Error);
  try {
    enumerate_bases(m);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::not_unimodular);
  }
}

TEST_CASE("basis exchange detects a non-matroid family") {
  // {12, 34} over four elements fails exchange.
  CHECK_FALSE(check_basis_exchange(BasisSet{4, 2, {0b0011, 0b1100}}));
  CHECK(check_basis_exchange(BasisSet{3, 1, {0b001, 0b010, 0b100}}));
}

TEST_CASE("dual swaps bases and cobases") {
  const auto& m = corpus_entry("diamond").matroid;
  const RegularMatroid d = dual(m);
  CHECK(d.rank() == m.size() - m.rank());
  const BasisSet b = enumerate_bases(m), bd = enumerate_bases(d);
  REQUIRE(b.size() == bd.size());
  for (Mask x : b.members) CHECK(bd.contains(full_mask(5) & ~x));
  CHECK(enumerate_bases(dual(d)) == b);
}

TEST_CASE("element classes") {
  const auto& lc = corpus_entry("loop+C2").matroid;
  CHECK(element_class(lc, "l") == ElementClass::loop);
  CHECK(element_class(lc, "e") == ElementClass::ordinary);
  const auto& path = corpus_entry("path3").matroid;
  for (std::size_t e = 0; e < path.size(); ++e) CHECK(element_class(path, e) == ElementClass::coloop);
  // Both columns are coloops although neither row is a unit row.
  const RegularMatroid twisted(rows_of({{1, 1}, {0, 1}}), {"a", "b"});
  CHECK(element_class(twisted, "a") == ElementClass::coloop);
  CHECK(element_class(twisted, "b") == ElementClass::coloop);
}

TEST_CASE("minors") {
  const auto& c3 = corpus_entry("C3").matroid;
  const RegularMatroid del = delete_element(c3, "e1");
  CHECK(del.size() == 2);
  CHECK(enumerate_bases(del).size() == 1);  // a path: both edges are coloops
  const RegularMatroid con = contract_element(c3, "e1");
  CHECK(con.rank() == 1);
  CHECK(enumerate_bases(con).size() == 2);  // the digon
  CHECK_THROWS_AS(contract_element(corpus_entry("loop+C2").matroid, "l"), Error);
  // Deleting a coloop keeps full row rank.
  const RegularMatroid twisted(rows_of({{1, 1}, {0, 1}}), {"a", "b"});
  CHECK(delete_element(twisted, "a").rank() == 1);
}

TEST_CASE("irreducible components and direct sums") {
  CHECK(irreducible_components(corpus_entry("diamond").matroid).size() == 1);
  CHECK(irreducible_components(corpus_entry("diamond+C2").matroid).size() == 2);
  CHECK(irreducible_components(corpus_entry("U11+U11").matroid).size() == 2);
  CHECK(irreducible_components(corpus_entry("loop+C2").matroid).size() == 2);
  const RegularMatroid s = direct_sum(corpus_entry("C3").matroid, coloop_matroid(2));
  CHECK(s.size() == 5);
  CHECK(s.rank() == 4);
  CHECK(enumerate_bases(s).size() == 3);
  CHECK(enumerate_bases(corpus_entry("diamond+C2").matroid).size() == 16);
}

TEST_CASE("metric expansion of the digon") {
  const auto& c2 = corpus_entry("C2").matroid;
  const LengthMap lam({2, 3});
  const ExpandedMatroid ex = expand(c2, lam);
  CHECK(ex.matroid.ground() == std::vector<std::string>{"e", "e#1", "f", "f#1", "f#2"});
  CHECK(ex.matroid.rank() == 4);
  const BasisSet b = enumerate_bases(ex.matroid);
  CHECK(b.size() == 5);
  CHECK(b == bases_of_expansion_def(c2, lam));
  CHECK(ex.ground.offsets() == std::vector<std::size_t>{0, 2});
}

TEST_CASE("expansion matches the definition and subdivision") {
  const auto& entry = corpus_entry("K4");
  const LengthMap lam({1, 2, 3, 1, 2, 1});
  const ExpandedMatroid ex = expand(entry.matroid, lam);
  const BasisSet b = enumerate_bases(ex.matroid);
  CHECK(b == bases_of_expansion_def(entry.matroid, lam));
  const RegularMatroid sub = incidence_matroid(subdivide_graph(*entry.graph, lam));
  CHECK(sub.ground() == ex.matroid.ground());
  CHECK(enumerate_bases(sub) == b);
  CHECK(ex.matroid.rank() == entry.matroid.rank() + 4);
}

TEST_CASE("expanding a loop gives a cycle") {
  const auto& m = corpus_entry("loop+C2").matroid;
  const ExpandedMatroid ex = expand(m, LengthMap({3, 1, 1}));
  CHECK(enumerate_bases(ex.matroid).size() == 3 * 2);
}

TEST_CASE("a metric graph with a loop has 22 spanning trees") {
  // Loop of length 2 and three parallel edges of lengths 2, 1, 3.
  const Graph g{2, {{"l", 0, 0}, {"a", 0, 1}, {"b", 0, 1}, {"c", 0, 1}}};
  const LengthMap lam({2, 2, 1, 3});
  const Graph sub = subdivide_graph(g, lam);
  CHECK(sub.vertex_count == 6);
  CHECK(sub.edges.size() == 8);
  CHECK(enumerate_bases(incidence_matroid(sub)).size() == 22);
  CHECK(enumerate_bases(expand(incidence_matroid(g), lam).matroid).size() == 22);
}

TEST_CASE("length maps") {
  CHECK_THROWS_AS(LengthMap({1, 0}), Error);
  CHECK(height(LengthMap({1, 4, 2})) == 4);
  CHECK_THROWS_AS(height(LengthMap()), Error);
  CHECK(LengthMap({1, 4, 2}).total() == 7);
}

TEST_CASE("graph validation") {
  CHECK_THROWS_AS(Graph({2, {{"a", 0, 2}}}).validate(), Error);
  CHECK_THROWS_AS(Graph({2, {{"a", 0, 1}, {"a", 1, 0}}}).validate(), Error);
  CHECK(complete_graph(4).edges.size() == 6);
  CHECK(banana_graph(10).edges.size() == 10);
}
