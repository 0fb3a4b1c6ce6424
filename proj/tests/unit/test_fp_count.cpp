#include <doctest.h>

#include <functional>

#include "data/fp_fixtures.hpp"
#include "mjac/config_poly.hpp"
#include "mjac/corpus.hpp"
#include "mjac/error.hpp"
#include "mjac/fp_count.hpp"
#include "unit/helpers.hpp"

using namespace mjac;

namespace {

bool naive_fits(unsigned p, std::size_t n) { return bounded_power(p, n, kNaiveBudget).has_value(); }

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no exception");
  return ErrorKind::invalid_input;
}

}  // namespace

TEST_CASE("counts match the oracle fixtures") {
  for (const auto& fx : fixtures::kCounts) {
    CAPTURE(fx.graph);
    CAPTURE(fx.p);
    const MultilinearPoly psi = psi_from_bases(corpus_entry(fx.graph).matroid);
    const std::size_t n = psi.var_count();
    if (naive_fits(fx.p, n)) {
      CHECK(count_affine_naive(psi, fx.p) == fx.affine);
      CHECK(count_torus_naive(psi, fx.p) == fx.torus);
    }
    CHECK(count_affine_eliminative(psi, fx.p, 0) == fx.affine);
    CHECK(count_torus_eliminative(psi, fx.p, n - 1) == fx.torus);
  }
}

TEST_CASE("every pivot and worker count gives the same total") {
  const MultilinearPoly psi = psi_from_bases(corpus_entry("K4").matroid);
  const std::uint64_t reference = count_affine_naive(psi, 7);
  const std::uint64_t torus = count_torus_naive(psi, 7);
  for (std::size_t pivot = 0; pivot < psi.var_count(); ++pivot)
    for (unsigned w = 1; w <= 8; ++w) {
      CHECK(count_affine_eliminative(psi, 7, pivot, w) == reference);
      CHECK(count_torus_eliminative(psi, 7, pivot, w) == torus);
    }
}

TEST_CASE("non-homogeneous and constant polynomials") {
  MultilinearPoly f(3);
  f.add_term(0b011, 1);
  f.add_term(0b100, 2);
  f.add_term(0, 1);
  for (unsigned p : {2u, 3u, 5u})
    for (std::size_t v = 0; v < 3; ++v) CHECK(count_affine_eliminative(f, p, v) == count_affine_naive(f, p));
  const MultilinearPoly one = MultilinearPoly::constant(4, 1);
  CHECK(count_affine_naive(one, 3) == 0);
  CHECK_FALSE(default_pivot(one).has_value());
  CHECK(count_report(one, 3, CountMethod::eliminative, std::nullopt, true, 1).affine_zeros == 0);
}

TEST_CASE("projective counts") {
  const MultilinearPoly diamond = psi_from_bases(corpus_entry("diamond").matroid);
  CHECK(projective_count(diamond, 2) == 15);
  CHECK(projective_count(diamond, 3) == 40);
  // A hyperplane in P^2.
  CHECK(projective_count(psi_from_bases(corpus_entry("C3").matroid), 5) == 6);
  CHECK_THROWS_AS(projective_count(MultilinearPoly::constant(2, 1), 3), Error);
  const CountReport r = count_report(diamond, 3, CountMethod::naive, std::nullopt, true, 1);
  CHECK(r.affine_zeros == 81);
  CHECK(r.projective_points == 40);
  CHECK(r.torus_zeros == 10);
}

TEST_CASE("banana-10: oracle counts and the printed polynomial") {
  const MultilinearPoly psi = psi_from_bases(corpus_entry("banana10").matroid);
  auto printed = [](long long p) {
    const long long c[] = {1, 35, -195, 510, -798, 798, -510, 195, -35, -1};
    long long v = 0;
    for (long long k : c) v = v * p + k;
    return v;
  };
  const std::uint64_t expected[] = {1014, 53247, 6305325};
  const unsigned primes[] = {2, 3, 5};
  for (int i = 0; i < 3; ++i) {
    const std::uint64_t a = count_affine_eliminative(psi, primes[i], 0);
    CHECK(a == expected[i]);
    // The printed polynomial is (p-1)#X, i.e. the affine count minus one.
    CHECK(static_cast<long long>(a) - 1 == printed(primes[i]));
  }
}

TEST_CASE("Stembridge decomposition") {
  for (const char* name : {"C2", "C3", "diamond", "K4", "banana3", "loop+C2"}) {
    CAPTURE(name);
    const MultilinearPoly psi = psi_from_bases(corpus_entry(name).matroid);
    for (unsigned p : {2u, 3u, 5u})
      for (std::size_t v = 0; v < psi.var_count(); ++v)
        if (psi.depends_on(v)) CHECK(stembridge_identity_check(psi, v, p));
  }
  // Degree one: the cone vertex is not on X_F.
  const StembridgeReport r = stembridge_identity(psi_from_bases(corpus_entry("C3").matroid), 0, 2);
  CHECK(r.holds);
  CHECK(r.cone_vertex == 0);
  CHECK(r.hypersurface == 3);
}

TEST_CASE("common zeros") {
  const std::vector<MultilinearPoly> system{MultilinearPoly::variable(2, 0), MultilinearPoly::variable(2, 1)};
  CHECK(count_common_zeros_naive(system, 5) == 1);
}

TEST_CASE("refusals") {
  const MultilinearPoly diamond = psi_from_bases(corpus_entry("diamond").matroid);
  CHECK(kind_of([&] { count_affine_naive(diamond, 4); }) == ErrorKind::invalid_input);
  CHECK(kind_of([&] { count_affine_naive(diamond, 37); }) == ErrorKind::invalid_input);
  CHECK(kind_of([&] { count_affine_eliminative(diamond, 3, 9); }) == ErrorKind::invalid_input);
  CHECK(kind_of([&] { count_affine_eliminative(diamond, 3, 0, 0); }) == ErrorKind::invalid_input);
  MultilinearPoly big(30);
  big.add_term(0b11, 1);
  CHECK(kind_of([&] { count_affine_naive(big, 2); }) == ErrorKind::budget);
  CHECK(kind_of([&] { count_affine_eliminative(big, 3, 0); }) == ErrorKind::budget);
  MultilinearPoly x1(2);
  x1.add_term(0b10, 1);
  CHECK(kind_of([&] { count_affine_eliminative(x1, 3, 0); }) == ErrorKind::invalid_input);
  CHECK(bounded_power(10, 8, 100'000'000) == 100'000'000u);
  CHECK_FALSE(bounded_power(10, 9, 100'000'000).has_value());
}
