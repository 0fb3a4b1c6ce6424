#include "mjac/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>

#include "mjac/bounds.hpp"
#include "mjac/config_poly.hpp"
#include "mjac/corpus.hpp"
#include "mjac/density.hpp"
#include "mjac/error.hpp"
#include "mjac/fp_count.hpp"
#include "mjac/jacobian.hpp"

namespace mjac {

namespace {

// Exhaustive density checks in the suite stay below this many points.
constexpr std::uint64_t kSuitePointCap = 2'000'000;

class Recorder {
 public:
  Recorder(std::string suite, std::vector<CheckResult>& out) : suite_(std::move(suite)), out_(out) {}

  void expect(const std::string& check, const std::string& subject, bool ok, std::string detail = {}) {
    out_.push_back({suite_, check, subject, ok, ok ? std::string() : std::move(detail)});
  }

  // Runs `body`; an exception is a failed check.
  void guard(const std::string& check, const std::string& subject, const std::function<void()>& body) {
    try {
      body();
    } catch (const std::exception& e) {
      expect(check, subject, false, std::string("exception: ") + e.what());
    }
  }

 private:
  std::string suite_;
  std::vector<CheckResult>& out_;
};

std::vector<LengthMap> random_length_maps(std::size_t n, unsigned max_height, std::size_t count,
                                          std::mt19937_64& rng) {
  std::uniform_int_distribution<unsigned> pick(1, max_height);
  std::vector<LengthMap> out;
  for (std::size_t k = 0; k < count; ++k) {
    std::vector<unsigned> v(n);
    for (auto& x : v) x = pick(rng);
    out.emplace_back(std::move(v));
  }
  return out;
}

std::vector<Integer> as_integers(const LengthMap& lam) {
  std::vector<Integer> v;
  for (unsigned x : lam.values()) v.emplace_back(x);
  return v;
}

std::string describe(const LengthMap& lam) {
  std::string s = "lam=(";
  for (std::size_t i = 0; i < lam.size(); ++i) s += (i ? "," : "") + std::to_string(lam[i]);
  return s + ")";
}

/// Re-indexes masks over `from` labels onto the order of `to` labels.
BasisSet relabel(const BasisSet& b, const std::vector<std::string>& from, const std::vector<std::string>& to) {
  std::map<std::string, std::size_t> pos;
  for (std::size_t i = 0; i < to.size(); ++i) pos[to[i]] = i;
  BasisSet out{to.size(), b.r, {}};
  for (Mask m : b.members) {
    Mask t = 0;
    for (std::size_t i = 0; i < from.size(); ++i)
      if (m & bit(i)) t |= bit(pos.at(from[i]));
    out.members.push_back(t);
  }
  std::sort(out.members.begin(), out.members.end());
  return out;
}

bool fits(unsigned base, std::size_t exp, std::uint64_t cap) { return bounded_power(base, exp, cap).has_value(); }

// p^n - (p-1)^n - n(p-1)^(n-1) + ((p-1)^n + (-1)^n (p-1)) / p: affine zeros
// of the elementary symmetric polynomial e_(n-1), i.e. Psi of banana-n.
Integer banana_affine_closed_form(unsigned n, unsigned p) {
  const Integer q = p, u = p - 1;
  const Integer sign = n % 2 == 0 ? 1 : -1;
  return power(q, n) - power(u, n) - Integer(n) * power(u, n - 1) + (power(u, n) + sign * u) / q;
}

void matroid_suite(Recorder& rec, const VerifyOptions& opt) {
  std::mt19937_64 rng(opt.seed);
  for (const auto& entry : corpus()) {
    const auto& m = entry.matroid;
    const auto& name = entry.name;
    rec.guard("bases", name, [&] {
      const BasisSet bases = enumerate_bases(m);
      rec.expect("basis exchange", name, check_basis_exchange(bases));
      rec.expect("unit determinants", name, bases_have_unit_determinant(m, bases));
      // Dual bases are the complements.
      BasisSet comp{m.size(), m.size() - m.rank(), {}};
      for (Mask b : bases.members) comp.members.push_back(full_mask(m.size()) & ~b);
      std::sort(comp.members.begin(), comp.members.end());
      rec.expect("dual bases are complements", name, enumerate_bases(dual(m)) == comp);
      for (std::size_t e = 0; e < m.size(); ++e) {
        bool in_all = true, in_none = true;
        for (Mask b : bases.members) (b & bit(e) ? in_none : in_all) = false;
        const auto cls = element_class(m, e);
        const bool ok = (cls == ElementClass::loop) == in_none && (cls == ElementClass::coloop) == in_all;
        rec.expect("element class", name + ":" + m.ground()[e], ok);
      }
    });

    for (const auto& lam : random_length_maps(m.size(), 3, 4, rng)) {
      const std::string subject = name + " " + describe(lam);
      rec.guard("expansion", subject, [&] {
        const ExpandedMatroid ex = expand(m, lam);
        const auto& mx = ex.matroid;
        std::size_t extra = 0;
        for (unsigned x : lam.values()) extra += x - 1;
        rec.expect("expansion rank", subject, mx.rank() == m.rank() + extra,
                   "rank " + std::to_string(mx.rank()));
        const BasisSet bx = enumerate_bases(mx);
        const Integer psi_at = evaluate(psi_from_bases(m), as_integers(lam));
        rec.expect("expansion basis count", subject, Integer(static_cast<unsigned long>(bx.size())) == psi_at,
                   std::to_string(bx.size()) + " vs " + to_decimal(psi_at));
        rec.expect("expansion matches definition", subject, bx == bases_of_expansion_def(m, lam));
        rec.expect("expansion basis exchange", subject, check_basis_exchange(bx));
        rec.expect("expansion stays unimodular", subject, bases_have_unit_determinant(mx, bx));
        if (entry.graph) {
          const Graph sub = subdivide_graph(*entry.graph, lam);
          const RegularMatroid ms = incidence_matroid(sub);
          const BasisSet bs = relabel(enumerate_bases(ms), ms.ground(), mx.ground());
          rec.expect("subdivision commutes", subject, bs == bx);
        }
      });
    }
  }
}

void jacobian_suite(Recorder& rec, const VerifyOptions& opt) {
  std::mt19937_64 rng(opt.seed + 1);
  for (const auto& entry : corpus()) {
    const auto& m = entry.matroid;
    const auto& name = entry.name;
    rec.guard("jacobian", name, [&] {
      const Integer bases = static_cast<unsigned long>(enumerate_bases(m).size());
      const Integer order = jacobian_order(m);
      const Integer flow = flow_lattice_order(m);
      rec.expect("order equals basis count", name, order == bases,
                 to_decimal(order) + " vs " + to_decimal(bases));
      rec.expect("flow lattice order", name, flow == order, to_decimal(flow) + " vs " + to_decimal(order));
      const AbelianGroup jac = jacobian_group(m);
      rec.expect("invariant factor product", name, jac.order() == order);
      rec.expect("dual group isomorphic", name, jacobian_group(dual(m)) == jac);

      BigMatrix g = gram(m);
      const auto reference = smith_invariant_factors(g);
      for (int round = 0; round < 3; ++round) {
        std::vector<std::size_t> perm(g.rows());
        for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
        std::shuffle(perm.begin(), perm.end(), rng);
        BigMatrix shuffled(g.rows(), g.cols());
        for (std::size_t i = 0; i < g.rows(); ++i)
          for (std::size_t k = 0; k < g.cols(); ++k) shuffled(i, k) = g(perm[i], perm[(k + round) % g.cols()]);
        rec.expect("SNF permutation invariance", name, smith_invariant_factors(shuffled) == reference);
      }
    });

    const MultilinearPoly psi = psi_from_bases(m);
    for (const auto& lam : random_length_maps(m.size(), 4, 5, rng)) {
      const std::string subject = name + " " + describe(lam);
      rec.guard("main theorem", subject, [&] {
        const Integer lhs = evaluate(psi, as_integers(lam));
        const Integer rhs = jacobian_order(expand(m, lam).matroid);
        rec.expect("Psi(lam) = #Jac(M_lam)", subject, lhs == rhs, to_decimal(lhs) + " vs " + to_decimal(rhs));
      });
    }
  }
  // Jac of the metric digon is cyclic of order lam(e) + lam(f).
  const auto& c2 = corpus_entry("C2").matroid;
  for (unsigned a = 1; a <= 4; ++a)
    for (unsigned b = 1; b <= 4; ++b) {
      const AbelianGroup g = jacobian_group(expand(c2, LengthMap({a, b})).matroid);
      rec.expect("metric digon group", "C2 " + std::to_string(a) + "," + std::to_string(b),
                 g == AbelianGroup({Integer(a + b)}));
    }
}

void config_poly_suite(Recorder& rec, const VerifyOptions& opt) {
  std::mt19937_64 rng(opt.seed + 2);
  for (const auto& entry : corpus()) {
    const auto& m = entry.matroid;
    const auto& name = entry.name;
    rec.guard("psi", name, [&] {
      const MultilinearPoly psi = psi_from_bases(m);
      rec.expect("deletion-contraction agrees", name, psi_deletion_contraction(m) == psi);
      rec.expect("homogeneous of corank degree", name, psi.degree() == m.size() - m.rank());
      bool unit = true;
      for (const auto& [mask, c] : psi.terms()) unit = unit && c == 1;
      rec.expect("unit coefficients", name, unit);
      rec.expect("term count is basis count", name, psi.term_count() == enumerate_bases(m).size());
      MultilinearPoly product = MultilinearPoly::constant(m.size(), 1);
      for (const auto& f : factor_by_components(m)) product = product * f;
      rec.expect("component factorisation", name, product == psi);
      for (std::size_t e = 0; e < m.size(); ++e) {
        const auto cls = element_class(m, e);
        if (cls == ElementClass::loop)
          rec.expect("loop divides Psi", name + ":" + m.ground()[e], psi.divisible_by_variable(e));
        if (cls == ElementClass::coloop)
          rec.expect("coloop absent from Psi", name + ":" + m.ground()[e], !psi.depends_on(e));
      }

      std::uniform_int_distribution<int> num(-9, 9), den(1, 9), unit7(1, 6);
      bool q_ok = true, f7_ok = true;
      for (int k = 0; k < 10; ++k) {
        std::vector<Rational> x;
        std::vector<std::int64_t> y;
        for (std::size_t i = 0; i < m.size(); ++i) {
          int a = 0;
          while (a == 0) a = num(rng);
          Rational v(a, den(rng));
          v.canonicalize();
          x.push_back(v);
          y.push_back(unit7(rng));
        }
        q_ok = q_ok && cremona_identity_check(m, x);
        f7_ok = f7_ok && cremona_identity_check_mod(m, y, 7);
      }
      rec.expect("Cremona identity over Q", name, q_ok);
      rec.expect("Cremona identity over F_7", name, f7_ok);
    });
  }
}

void fp_count_suite(Recorder& rec, const VerifyOptions& opt) {
  for (const auto& entry : corpus()) {
    const auto& name = entry.name;
    const MultilinearPoly psi = psi_from_bases(entry.matroid);
    const std::size_t n = psi.var_count();
    for (unsigned p : opt.primes) {
      const std::string subject = name + " p=" + std::to_string(p);
      rec.guard("counting", subject, [&] {
        const bool naive_ok = fits(p, n, kNaiveBudget);
        std::optional<std::uint64_t> affine, torus;
        if (naive_ok) {
          affine = count_affine_naive(psi, p);
          torus = count_torus_naive(psi, p);
        }
        for (std::size_t v = 0; v < n; ++v) {
          if (!psi.depends_on(v) || !fits(p, n - 1, kEliminativeBudget)) continue;
          // Heavy instances are compared on one pivot only.
          if (!naive_ok && v > 0) break;
          for (unsigned w : {1u, opt.workers == 1 ? 3u : opt.workers}) {
            const auto a = count_affine_eliminative(psi, p, v, w);
            const auto t = count_torus_eliminative(psi, p, v, w);
            const std::string where = subject + " pivot=" + std::to_string(v) + " workers=" + std::to_string(w);
            if (!affine) affine = a;
            if (!torus) torus = t;
            rec.expect("naive equals eliminative", where, a == *affine,
                       std::to_string(a) + " vs " + std::to_string(*affine));
            rec.expect("torus naive equals eliminative", where, t == *torus);
          }
        }
        if (affine && psi.degree() && *psi.degree() >= 1) {
          const Integer bound = projective_space_size(p, static_cast<long>(n) - 1);
          rec.expect("projective count within P^(n-1)", subject,
                     Integer(static_cast<unsigned long>((*affine - 1) / (p - 1))) <= bound);
        }
        if (name.rfind("banana", 0) == 0 && affine) {
          const Integer expected = banana_affine_closed_form(static_cast<unsigned>(n), p);
          rec.expect("banana closed form", subject, Integer(static_cast<unsigned long>(*affine)) == expected,
                     std::to_string(*affine) + " vs " + to_decimal(expected));
        }
      });
      if (p > 5 || !psi.degree() || *psi.degree() == 0 || !fits(p, n, kNaiveBudget / 10)) continue;
      for (std::size_t v = 0; v < n; ++v) {
        if (!psi.depends_on(v)) continue;
        const std::string where = subject + " pivot=" + std::to_string(v);
        rec.guard("Stembridge identity", where, [&] {
          const auto s = stembridge_identity(psi, v, p);
          rec.expect("Stembridge identity", where, s.holds);
        });
      }
    }
  }
}

void density_suite(Recorder& rec, const VerifyOptions& opt) {
  for (const auto& entry : corpus()) {
    const auto& m = entry.matroid;
    const auto& name = entry.name;
    const std::size_t n = m.size();
    for (unsigned p : opt.primes) {
      const std::string subject = name + " p=" + std::to_string(p);
      rec.guard("density", subject, [&] {
        if (!fits(p, n - 1, kEliminativeBudget)) return;
        const DensityReport d = density_formula(m, p, opt.workers);
        const bool in_range = d.value >= 0 && d.value <= 1;
        rec.expect("density in [0,1]", subject, in_range);
        if (d.trivial) {
          rec.expect("trivial family has density 0", subject, d.value == 0);
        } else if (fits(p, n, kNaiveBudget)) {
          const auto naive = count_affine_naive(psi_from_bases(m), p);
          Rational expected(Integer(static_cast<unsigned long>(naive)), power(p, n));
          expected.canonicalize();
          rec.expect("numerator is the naive count", subject, d.value == expected);
        }
        for (unsigned k = 1; k <= 3; ++k) {
          if (!fits(k * p, n, kSuitePointCap)) break;
          const auto e = density_empirical(m, p, k * p);
          rec.expect("empirical at k*p is exact", subject + " k=" + std::to_string(k), e.value == d.value);
        }
        if (p <= 3)
          for (unsigned cap = p; cap <= 9; ++cap) {
            if (!fits(cap, n, kSuitePointCap)) break;
            rec.expect("sandwich", subject + " m=" + std::to_string(cap), sandwich_check(m, p, cap));
          }
        if (p <= 5) rec.expect("dual torus density", subject, dual_density_check(m, p, opt.workers));
        if (entry.irreducible && !d.trivial) {
          const auto a = asymptotic_report(m, p, opt.workers);
          rec.expect("asymptotic bound", subject, a.holds);
        }
      });
    }
    for (unsigned p : {11u, 13u}) {
      if (!entry.irreducible || !fits(p, n - 1, kEliminativeBudget)) continue;
      const std::string subject = name + " p=" + std::to_string(p);
      rec.guard("asymptotic bound", subject, [&] {
        if (psi_from_bases(m).is_one()) return;
        rec.expect("asymptotic bound", subject, asymptotic_check(m, p, opt.workers));
      });
    }
  }
}

void bounds_suite(Recorder& rec, const VerifyOptions& opt) {
  for (const auto& entry : corpus()) {
    if (!entry.irreducible) continue;
    const auto& m = entry.matroid;
    if (psi_from_bases(m).is_one()) continue;
    for (unsigned p : opt.primes) {
      if (!fits(p, m.size() - 1, kEliminativeBudget)) continue;
      const std::string subject = entry.name + " p=" + std::to_string(p);
      rec.guard("bounds", subject, [&] {
        const BoundReport b = bound_check(m, p, opt.workers);
        rec.expect("bound sandwich", subject, b.sandwich_holds(),
                   to_decimal(b.lower) + " <= " + std::to_string(b.projective_points) + " <= " + to_decimal(b.upper));
        const Integer x = static_cast<unsigned long>(b.projective_points);
        const Integer dev = abs(x - power(p, m.size() - 2));
        rec.expect("big-O constant", subject, dev <= b.big_o * power(p, m.size() >= 3 ? m.size() - 3 : 0) ||
                                                  m.size() < 3);
      });
    }
  }
}

using SuiteFn = void (*)(Recorder&, const VerifyOptions&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> r{
      {"matroid-core", matroid_suite},   {"arith-jacobian", jacobian_suite}, {"config-poly", config_poly_suite},
      {"fp-count", fp_count_suite},      {"density-stats", density_suite},   {"bounds", bounds_suite},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [name, fn] : registry()) v.push_back(name);
    return v;
  }();
  return names;
}

std::vector<CheckResult> run_suite(std::string_view suite, const VerifyOptions& options) {
  if (options.workers == 0) fail("worker count must be at least 1");
  for (unsigned p : options.primes) require_counting_prime(p);
  std::vector<CheckResult> out;
  bool matched = false;
  for (const auto& [name, fn] : registry()) {
    if (suite != "all" && suite != name) continue;
    matched = true;
    Recorder rec(name, out);
    fn(rec, options);
  }
  if (!matched) fail("unknown suite '" + std::string(suite) + "'");
  return out;
}

Json results_to_json(const std::vector<CheckResult>& results) {
  std::size_t passed = 0;
  Json failures = Json::array();
  std::map<std::string, std::pair<std::size_t, std::size_t>> tally;
  for (const auto& r : results) {
    auto& [ok, bad] = tally[r.suite];
    if (r.passed) {
      ++passed;
      ++ok;
    } else {
      ++bad;
      failures.push_back(Json{{"suite", r.suite}, {"check", r.check}, {"subject", r.subject}, {"detail", r.detail}});
    }
  }
  Json suites = Json::object();
  for (const auto& [name, counts] : tally) suites[name] = Json{{"passed", counts.first}, {"failed", counts.second}};
  return Json{{"passed", passed}, {"failed", results.size() - passed}, {"failures", failures}, {"suites", suites}};
}

}  // namespace mjac
