#include "mjac/density.hpp"

#include <stdexcept>

#include "mjac/bounds.hpp"
#include "mjac/config_poly.hpp"
#include "mjac/error.hpp"
#include "mjac/fp_count.hpp"

namespace mjac {

namespace {

constexpr std::uint64_t kEmpiricalBudget = 100'000'000;

MultilinearPoly checked_psi(const RegularMatroid& m, unsigned p) {
  require_counting_prime(p);
  if (m.size() == 0) fail("density of the empty matroid is undefined");
  return psi_from_bases(m);
}

Rational make_rational(const Integer& num, const Integer& den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Integer from_u64(std::uint64_t v) {
  Integer r;
  mpz_import(r.get_mpz_t(), 1, 1, sizeof v, 0, 0, &v);
  return r;
}

void require_unit_interval(const Rational& v) {
  if (v < 0 || v > 1) throw std::logic_error("density outside [0, 1]");
}

}  // namespace

ResidueMap reduce_mod_p(const LengthMap& lam, unsigned p) {
  if (p == 0) fail("modulus must be positive");
  ResidueMap r{p, {}};
  r.values.reserve(lam.size());
  for (unsigned v : lam.values()) r.values.push_back(v % p == 0 ? p : v % p);
  return r;
}

std::string to_string(DensityMode mode) {
  switch (mode) {
    case DensityMode::formula: return "formula";
    case DensityMode::empirical: return "empirical";
    case DensityMode::torus: return "torus";
  }
  return "?";
}

DensityReport density_formula(const RegularMatroid& m, unsigned p, unsigned workers) {
  const MultilinearPoly psi = checked_psi(m, p);
  DensityReport r;
  r.p = p;
  r.mode = DensityMode::formula;
  if (psi.is_one()) {
    r.trivial = true;
    r.value = 0;
    r.raw_num = 0;
    r.raw_den = power(p, m.size());
    return r;
  }
  const std::size_t n = m.size();
  const std::uint64_t affine = count_affine_eliminative(psi, p, *default_pivot(psi), workers);
  const std::uint64_t proj = (affine - 1) / (p - 1);
  r.affine_zeros = affine;
  r.projective_points = proj;

  const Integer q = p;
  const Integer num = (q - 1) * from_u64(proj) + 1;
  const Integer den = (q - 1) * projective_space_size(q, static_cast<long>(n) - 1) + 1;
  if (num != from_u64(affine) || den != power(q, n))
    throw std::logic_error("density numerator/denominator disagree with the affine count");
  r.raw_num = num;
  r.raw_den = den;
  r.value = make_rational(num, den);
  require_unit_interval(r.value);
  return r;
}

DensityReport density_empirical(const RegularMatroid& m, unsigned p, unsigned height_cap) {
  const MultilinearPoly psi = checked_psi(m, p);
  if (height_cap == 0) fail("height cap must be positive");
  const std::size_t n = m.size();
  const auto box = bounded_power(height_cap, n, kEmpiricalBudget);
  if (!box)
    throw Error(ErrorKind::budget, "empirical density: " + std::to_string(height_cap) + "^" +
                                       std::to_string(n) + " points exceeds the budget of " +
                                       std::to_string(kEmpiricalBudget));

  // Odometer over {1..cap}^n; only residues matter for the evaluation.
  std::vector<std::int64_t> x(n, 1);
  std::uint64_t hits = 0;
  for (std::uint64_t k = 0; k < *box; ++k) {
    if (evaluate_mod(psi, x, p) == 0) ++hits;
    for (std::size_t i = 0; i < n; ++i) {
      if (++x[i] <= static_cast<std::int64_t>(height_cap)) break;
      x[i] = 1;
    }
  }

  DensityReport r;
  r.p = p;
  r.mode = DensityMode::empirical;
  r.empirical_height = height_cap;
  r.trivial = psi.is_one();
  r.raw_num = from_u64(hits);
  r.raw_den = from_u64(*box);
  r.value = make_rational(r.raw_num, r.raw_den);
  require_unit_interval(r.value);
  return r;
}

SandwichReport sandwich_report(const RegularMatroid& m, unsigned p, unsigned height_cap) {
  if (height_cap < p) fail("sandwich check needs m_max >= p");
  SandwichReport s;
  s.height_cap = height_cap;
  s.t = height_cap / p;
  s.l = height_cap % p;
  s.empirical = density_empirical(m, p, height_cap).value;
  s.limit = density_formula(m, p).value;

  const unsigned long n = m.size();
  const Rational shrink(power(s.t, n), power(s.t + 1, n));
  s.lower = shrink * s.limit;
  s.upper = s.limit / shrink;
  s.lower.canonicalize();
  s.upper.canonicalize();
  s.holds = s.lower <= s.empirical && s.empirical <= s.upper;
  if (s.l == 0) s.holds = s.holds && s.empirical == s.limit;
  return s;
}

bool sandwich_check(const RegularMatroid& m, unsigned p, unsigned height_cap) {
  return sandwich_report(m, p, height_cap).holds;
}

DensityReport torus_density(const RegularMatroid& m, unsigned p, unsigned workers) {
  const MultilinearPoly psi = checked_psi(m, p);
  const std::size_t n = m.size();
  const std::uint64_t torus = count_torus(psi, p, workers);

  DensityReport r;
  r.p = p;
  r.mode = DensityMode::torus;
  r.trivial = psi.is_one();
  r.torus_zeros = torus;
  const Integer q = p;
  r.raw_num = from_u64(torus);
  r.raw_den = power(q, n);
  r.value = make_rational(r.raw_num, r.raw_den);

  // Projective form: (p-1) #(X_M minus the coordinate hyperplanes) over
  // (p-1) #P^(n-1) + 1. Torus zeros form whole F_p^* orbits.
  if (torus % (p - 1) != 0) throw std::logic_error("torus zeros are not a union of scaling orbits");
  const Integer proj_torus = from_u64(torus / (p - 1));
  const Rational displayed =
      make_rational((q - 1) * proj_torus, (q - 1) * projective_space_size(q, static_cast<long>(n) - 1) + 1);
  if (displayed != r.value) throw std::logic_error("torus density disagrees with its projective form");
  require_unit_interval(r.value);
  return r;
}

bool dual_density_check(const RegularMatroid& m, unsigned p, unsigned workers) {
  return torus_density(m, p, workers).value == torus_density(dual(m), p, workers).value;
}

AsymptoticReport asymptotic_report(const RegularMatroid& m, unsigned p, unsigned workers) {
  if (m.size() == 0) fail("asymptotic check on the empty matroid");
  if (irreducible_components(m).size() != 1) fail("reducible input: asymptotic check needs an irreducible matroid");
  const MultilinearPoly psi = checked_psi(m, p);
  if (psi.is_one()) fail("configuration polynomial is 1");

  AsymptoticReport a;
  a.density = density_formula(m, p, workers).value;
  a.deviation = abs(a.density - Rational(1, p));
  a.constant = big_o_constant(m.size(), *psi.degree());
  a.bound = Rational(a.constant + 1, Integer(p) * p);
  a.bound.canonicalize();
  a.holds = a.deviation <= a.bound;
  return a;
}

bool asymptotic_check(const RegularMatroid& m, unsigned p, unsigned workers) {
  return asymptotic_report(m, p, workers).holds;
}

}  // namespace mjac
