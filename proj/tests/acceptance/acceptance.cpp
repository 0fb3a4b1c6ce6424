// Acceptance suite: one PASS/FAIL line per criterion. All comparisons are
// exact; the only tolerances are the wall-clock limits below.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "data/fp_fixtures.hpp"
#include "mjac/bounds.hpp"
#include "mjac/config_poly.hpp"
#include "mjac/corpus.hpp"
#include "mjac/density.hpp"
#include "mjac/error.hpp"
#include "mjac/fp_count.hpp"
#include "mjac/jacobian.hpp"
#include "mjac/verify.hpp"

using namespace mjac;

namespace {

constexpr double kMainTheoremSeconds = 60;
constexpr double kCountingSeconds = 120;
constexpr double kBanana5Seconds = 30;
constexpr double kVerifySeconds = 300;
constexpr unsigned kSeed = 20240917;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::string> notes;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) detail = what;
      pass = false;
    }
  }
};

int failures = 0;

void criterion(int id, const char* title, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto t0 = Clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.require(false, std::string("exception: ") + e.what());
  }
  const double s = seconds_since(t0);
  std::printf("%s %2d  %s  (%.1f s)%s%s\n", o.pass ? "PASS" : "FAIL", id, title, s, o.detail.empty() ? "" : "  ",
              o.detail.c_str());
  for (const auto& n : o.notes) std::printf("         note: %s\n", n.c_str());
  std::fflush(stdout);
  if (!o.pass) ++failures;
}

Rational ratio(const Integer& a, const Integer& b) {
  Rational r(a, b);
  r.canonicalize();
  return r;
}

Integer big(std::uint64_t v) { return Integer(static_cast<unsigned long>(v)); }

std::uint64_t fixture_affine(std::string_view graph, unsigned p) {
  for (const auto& fx : fixtures::kCounts)
    if (fx.graph == graph && fx.p == p) return fx.affine;
  throw std::logic_error("missing fixture");
}

const char* const kMainSix[] = {"C2", "C3", "diamond", "K4", "banana3", "banana10"};

}  // namespace

int main() {
  criterion(1, "Psi_M(lam) == #Jac(M_lam), 20 length maps of height <= 4 per matroid", [](Outcome& o) {
    const auto t0 = Clock::now();
    std::mt19937_64 rng(kSeed);
    std::uniform_int_distribution<unsigned> pick(1, 4);
    std::size_t checked = 0;
    for (const char* name : kMainSix) {
      const auto& m = corpus_entry(name).matroid;
      const MultilinearPoly psi = psi_from_bases(m);
      for (int k = 0; k < 20; ++k) {
        std::vector<unsigned> lam(m.size());
        std::vector<Integer> x;
        for (auto& v : lam) {
          v = pick(rng);
          x.emplace_back(v);
        }
        const Integer lhs = evaluate(psi, x);
        const Integer rhs = jacobian_order(expand(m, LengthMap(lam)).matroid);
        o.require(lhs == rhs, std::string(name) + ": " + to_decimal(lhs) + " != " + to_decimal(rhs));
        ++checked;
      }
    }
    const double s = seconds_since(t0);
    o.require(s < kMainTheoremSeconds, "runtime " + std::to_string(s) + " s");
    o.notes.push_back(std::to_string(checked) + " evaluations, limit " + std::to_string(int(kMainTheoremSeconds)) + " s");
  });

  criterion(2, "diamond Psi reproduces the printed 8-term polynomial", [](Outcome& o) {
    const auto& m = corpus_entry("diamond").matroid;
    const char* printed[][2] = {{"e1", "e3"}, {"e1", "e4"}, {"e2", "e3"}, {"e2", "e4"},
                                {"e1", "e5"}, {"e2", "e5"}, {"e3", "e5"}, {"e4", "e5"}};
    MultilinearPoly expected(m.size());
    for (const auto& t : printed) expected.add_term(bit(m.index_of(t[0])) | bit(m.index_of(t[1])), 1);
    o.require(psi_from_bases(m) == expected, "psi_from_bases differs");
    o.require(psi_deletion_contraction(m) == expected, "psi_deletion_contraction differs");
  });

  criterion(3, "naive == eliminative counts, every pivot, p in {2,3,5,7}, 1-8 workers", [](Outcome& o) {
    const auto t0 = Clock::now();
    std::size_t runs = 0;
    for (const auto& entry : corpus()) {
      const MultilinearPoly psi = psi_from_bases(entry.matroid);
      const std::size_t n = psi.var_count();
      for (unsigned p : {2u, 3u, 5u, 7u}) {
        // The naive oracle is refused above its budget; the committed
        // fixture from the standalone oracle stands in for it there.
        std::uint64_t reference = 0;
        if (bounded_power(p, n, kNaiveBudget)) {
          reference = count_affine_naive(psi, p);
        } else {
          reference = fixture_affine(entry.name, p);
          o.notes.push_back(entry.name + " p=" + std::to_string(p) + ": naive over budget, compared with oracle fixture " +
                            std::to_string(reference));
        }
        for (std::size_t v = 0; v < n; ++v) {
          if (!psi.depends_on(v)) continue;
          for (unsigned w = 1; w <= 8; ++w) {
            const auto e = count_affine_eliminative(psi, p, v, w);
            o.require(e == reference, entry.name + " p=" + std::to_string(p) + " pivot " + std::to_string(v) +
                                          " workers " + std::to_string(w));
            ++runs;
          }
        }
      }
    }
    const double s = seconds_since(t0);
    o.require(s < kCountingSeconds, "runtime " + std::to_string(s) + " s");
    o.notes.push_back(std::to_string(runs) + " eliminative runs, limit " + std::to_string(int(kCountingSeconds)) + " s");
  });

  criterion(4, "Stembridge identity, every pivot, p in {2,3,5}", [](Outcome& o) {
    std::size_t checked = 0;
    for (const auto& entry : corpus()) {
      const MultilinearPoly psi = psi_from_bases(entry.matroid);
      if (psi.is_one()) continue;
      for (unsigned p : {2u, 3u, 5u})
        for (std::size_t v = 0; v < psi.var_count(); ++v) {
          if (!psi.depends_on(v)) continue;
          o.require(stembridge_identity_check(psi, v, p),
                    entry.name + " p=" + std::to_string(p) + " pivot " + std::to_string(v));
          ++checked;
        }
    }
    o.notes.push_back(std::to_string(checked) + " (polynomial, pivot, p) triples");
  });

  criterion(5, "density_formula(C2, p) == 1/p for p in {2,3,5,7,11,13}", [](Outcome& o) {
    const auto& c2 = corpus_entry("C2").matroid;
    for (unsigned p : {2u, 3u, 5u, 7u, 11u, 13u})
      o.require(density_formula(c2, p).value == Rational(1, p), "p=" + std::to_string(p));
  });

  criterion(6, "banana-10 affine counts vs oracle and printed polynomial", [](Outcome& o) {
    const MultilinearPoly psi = psi_from_bases(corpus_entry("banana10").matroid);
    const unsigned primes[] = {2, 3, 5};
    const std::uint64_t oracle[] = {1014, 53247, 6305325};
    const std::uint64_t printed_values[] = {1013, 53246, 6305324};
    const long coeffs[] = {1, 35, -195, 510, -798, 798, -510, 195, -35, -1};
    for (int i = 0; i < 3; ++i) {
      const unsigned p = primes[i];
      const auto t0 = Clock::now();
      const std::uint64_t affine = count_affine_eliminative(psi, p, 0);
      const double s = seconds_since(t0);
      o.require(affine == oracle[i], "p=" + std::to_string(p) + " affine " + std::to_string(affine));
      o.require(affine == fixture_affine("banana10", p), "fixture mismatch at p=" + std::to_string(p));
      Integer poly = 0;
      for (long c : coeffs) poly = poly * p + c;
      o.require(poly == big(printed_values[i]), "printed polynomial at p=" + std::to_string(p));
      o.require(big(affine) - 1 == poly, "(affine - 1) vs printed polynomial at p=" + std::to_string(p));
      if (p == 5) o.require(s < kBanana5Seconds, "p=5 eliminative runtime " + std::to_string(s) + " s");
      const DensityReport d = density_formula(corpus_entry("banana10").matroid, p);
      o.require(d.value == ratio(big(affine), power(p, 10)), "density at p=" + std::to_string(p));
      o.notes.push_back("expected delta p=" + std::to_string(p) + ": formula gives " + std::to_string(affine) + "/" +
                        to_decimal(power(p, 10)) + ", the printed value is " + std::to_string(printed_values[i]) +
                        "/" + to_decimal(power(p, 10)) + " (numerator without the +1)");
    }
  });

  criterion(7, "empirical density at k*p equals the limit; sandwich for l != 0", [](Outcome& o) {
    for (const char* name : {"C2", "diamond"}) {
      const auto& m = corpus_entry(name).matroid;
      for (unsigned p : {2u, 3u}) {
        const Rational limit = density_formula(m, p).value;
        for (unsigned k : {1u, 2u})
          o.require(density_empirical(m, p, k * p).value == limit,
                    std::string(name) + " p=" + std::to_string(p) + " k=" + std::to_string(k));
        for (unsigned cap = p + 1; cap <= 3 * p + 1; ++cap) {
          if (cap % p == 0) continue;
          o.require(sandwich_check(m, p, cap),
                    std::string(name) + " sandwich p=" + std::to_string(p) + " m=" + std::to_string(cap));
        }
      }
    }
  });

  criterion(8, "dual torus densities agree; Cremona identity at 50 points over Q and F_7", [](Outcome& o) {
    std::mt19937_64 rng(kSeed + 8);
    std::uniform_int_distribution<int> num(-9, 9), den(1, 9), unit(1, 6);
    for (const char* name : {"C2", "diamond", "banana10"}) {
      const auto& m = corpus_entry(name).matroid;
      for (unsigned p : {2u, 3u, 5u})
        o.require(dual_density_check(m, p), std::string(name) + " dual density p=" + std::to_string(p));
      for (int k = 0; k < 50; ++k) {
        std::vector<Rational> x;
        std::vector<std::int64_t> y;
        for (std::size_t i = 0; i < m.size(); ++i) {
          int a = 0;
          while (a == 0) a = num(rng);
          x.push_back(ratio(a, den(rng)));
          y.push_back(unit(rng));
        }
        o.require(cremona_identity_check(m, x), std::string(name) + " Cremona over Q");
        o.require(cremona_identity_check_mod(m, y, 7), std::string(name) + " Cremona over F_7");
      }
    }
  });

  criterion(9, "bound sandwich p in {2,3,5,7}; |mu - 1/p| <= (C+1)/p^2 for p <= 13", [](Outcome& o) {
    for (const auto& entry : corpus()) {
      if (!entry.irreducible || psi_from_bases(entry.matroid).is_one()) continue;
      const auto& m = entry.matroid;
      for (unsigned p : {2u, 3u, 5u, 7u}) {
        const BoundReport b = bound_check(m, p);
        o.require(b.sandwich_holds(), entry.name + " bounds p=" + std::to_string(p));
      }
      for (unsigned p : {2u, 3u, 5u, 7u, 11u, 13u}) {
        if (bounded_power(p, m.size() - 1, kEliminativeBudget)) {
          o.require(asymptotic_check(m, p), entry.name + " asymptotic p=" + std::to_string(p));
          continue;
        }
        // Over the counting budget: use the banana closed form, which the
        // standalone oracle confirms for p <= 7.
        if (entry.name != "banana10") {
          o.require(false, entry.name + " p=" + std::to_string(p) + " is over the counting budget");
          continue;
        }
        const unsigned n = 10;
        const Integer q = p, u = p - 1;
        const Integer affine = power(q, n) - power(u, n) - Integer(n) * power(u, n - 1) + (power(u, n) + u) / q;
        const Rational mu = ratio(affine, power(q, n));
        const Rational dev = abs(mu - Rational(1, p));
        const Integer c = big_o_constant(n, n - 1);
        o.require(dev <= ratio(c + 1, q * q), "banana10 asymptotic p=" + std::to_string(p));
        o.notes.push_back("banana10 p=" + std::to_string(p) + ": p^9 exceeds the counting budget; checked with the "
                          "closed-form count " + to_decimal(affine));
      }
    }
  });

  criterion(10, "structural properties on the corpus; verify --suite all under 5 min", [](Outcome& o) {
    const auto t0 = Clock::now();
    const auto results = run_suite("all");
    const double s = seconds_since(t0);
    std::size_t structural = 0;
    for (const auto& r : results) {
      o.require(r.passed, r.suite + "/" + r.check + " " + r.subject + " " + r.detail);
      if (r.suite == "matroid-core" || r.suite == "arith-jacobian") ++structural;
    }
    o.require(s < kVerifySeconds, "verify runtime " + std::to_string(s) + " s");
    o.notes.push_back(std::to_string(results.size()) + " checks (" + std::to_string(structural) +
                      " structural), limit " + std::to_string(int(kVerifySeconds)) + " s");
  });

  std::printf("%s: %d of 10 criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
