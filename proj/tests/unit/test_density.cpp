#include <doctest.h>

#include "data/fp_fixtures.hpp"
#include "mjac/corpus.hpp"
#include "mjac/density.hpp"
#include "mjac/error.hpp"
#include "mjac/fp_count.hpp"

using namespace mjac;

namespace {
Rational q(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}
}  // namespace

TEST_CASE("residue window is 1..p") {
  CHECK(reduce_mod_p(LengthMap({4, 9}), 3).values == std::vector<unsigned>{1, 3});
  CHECK(reduce_mod_p(LengthMap({1, 2, 5}), 5).values == std::vector<unsigned>{1, 2, 5});
  CHECK(reduce_mod_p(LengthMap({8}), 7).values == std::vector<unsigned>{1});
}

TEST_CASE("digon density is 1/p") {
  const auto& c2 = corpus_entry("C2").matroid;
  for (unsigned p : {2u, 3u, 5u, 7u, 11u, 13u, 31u}) CHECK(density_formula(c2, p).value == q(1, p));
}

TEST_CASE("formula densities") {
  const DensityReport d = density_formula(corpus_entry("diamond").matroid, 2);
  CHECK(d.value == q(1, 2));
  CHECK(d.affine_zeros == 16u);
  CHECK(d.projective_points == 15u);
  CHECK(d.mode == DensityMode::formula);
  CHECK(d.raw_num == 16);
  CHECK(d.raw_den == 32);
  CHECK(density_formula(corpus_entry("banana10").matroid, 3).value == q(53247, 59049));
  CHECK(density_formula(corpus_entry("banana10").matroid, 5).value == q(6305325, 9765625));
  CHECK(density_formula(corpus_entry("banana10").matroid, 2).value == q(1014, 1024));
}

TEST_CASE("trivial Jacobians have density 0") {
  const DensityReport d = density_formula(corpus_entry("path3").matroid, 5);
  CHECK(d.trivial);
  CHECK(d.value == 0);
  CHECK_THROWS_AS(density_formula(RegularMatroid(IntMatrix(0, 0), {}), 2), Error);
}

TEST_CASE("empirical densities against the oracle") {
  for (const auto& fx : fixtures::kEmpirical) {
    CAPTURE(fx.graph);
    CAPTURE(fx.p);
    CAPTURE(fx.height);
    const auto& m = corpus_entry(fx.graph).matroid;
    const DensityReport d = density_empirical(m, fx.p, fx.height);
    Rational expected(Integer(static_cast<unsigned long>(fx.hits)), power(fx.height, m.size()));
    expected.canonicalize();
    CHECK(d.value == expected);
    CHECK(d.empirical_height == fx.height);
    if (fx.height % fx.p == 0) CHECK(d.value == density_formula(m, fx.p).value);
  }
  CHECK(density_empirical(corpus_entry("C2").matroid, 3, 3).value == q(1, 3));
  CHECK_THROWS_AS(density_empirical(corpus_entry("banana10").matroid, 2, 7), Error);
}

TEST_CASE("sandwich") {
  const auto& c2 = corpus_entry("C2").matroid;
  const auto& diamond = corpus_entry("diamond").matroid;
  CHECK(sandwich_check(c2, 2, 6));
  CHECK(sandwich_check(c2, 5, 5));
  const SandwichReport s = sandwich_report(diamond, 3, 7);
  CHECK(s.t == 2);
  CHECK(s.l == 1);
  CHECK(s.holds);
  CHECK(s.lower < s.empirical);
  CHECK(s.empirical < s.upper);
  CHECK(s.lower == s.limit * q(32, 243));
  CHECK_THROWS_AS(sandwich_check(diamond, 5, 4), Error);
}

TEST_CASE("torus densities") {
  const auto& c2 = corpus_entry("C2").matroid;
  CHECK(torus_density(c2, 2).value == q(1, 4));
  CHECK(torus_density(c2, 5).value == q(4, 25));
  CHECK(torus_density(corpus_entry("diamond").matroid, 3).value == q(10, 243));
  CHECK(torus_density(corpus_entry("path3").matroid, 3).value == 0);
}

TEST_CASE("duality") {
  for (unsigned p : {2u, 3u, 5u}) {
    CHECK(dual_density_check(corpus_entry("C2").matroid, p));
    CHECK(dual_density_check(corpus_entry("diamond").matroid, p));
    CHECK(dual_density_check(corpus_entry("K4").matroid, p));
  }
  CHECK(dual_density_check(corpus_entry("banana10").matroid, 2));
}

TEST_CASE("asymptotic estimate") {
  for (unsigned p : {2u, 3u, 5u, 7u, 11u, 13u}) {
    CHECK(asymptotic_check(corpus_entry("C2").matroid, p));
    CHECK(asymptotic_check(corpus_entry("diamond").matroid, p));
  }
  const AsymptoticReport a = asymptotic_report(corpus_entry("C2").matroid, 7);
  CHECK(a.deviation == 0);
  const AsymptoticReport b = asymptotic_report(corpus_entry("banana10").matroid, 2);
  CHECK(b.holds);
  CHECK(b.deviation == q(1014, 1024) - q(1, 2));
  CHECK_THROWS_AS(asymptotic_check(corpus_entry("diamond+C2").matroid, 3), Error);
  CHECK_THROWS_AS(asymptotic_check(corpus_entry("U11").matroid, 3), Error);
}
