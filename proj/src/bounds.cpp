#include "mjac/bounds.hpp"

#include <algorithm>

#include "mjac/config_poly.hpp"
#include "mjac/error.hpp"
#include "mjac/fp_count.hpp"

namespace mjac {

Integer couvreur_bound(const Integer& q, long ambient, long dim, const Integer& degree) {
  if (dim >= ambient) fail("Couvreur bound needs dim < ambient");
  if (degree < 1) fail("Couvreur bound needs degree >= 1");
  const long low = 2 * dim - ambient;
  const Integer tail = projective_space_size(q, low);
  return degree * (projective_space_size(q, dim) - tail) + tail;
}

Integer evaluate(const IntPoly& f, const Integer& t) {
  Integer acc = 0;
  for (auto it = f.rbegin(); it != f.rend(); ++it) acc = acc * t + *it;
  return acc;
}

namespace {

// 1 + t + ... + t^k; empty for k < 0.
IntPoly projective_poly(long k) { return k < 0 ? IntPoly{} : IntPoly(static_cast<std::size_t>(k + 1), 1); }

void add_scaled(IntPoly& acc, const IntPoly& f, const Integer& c, std::size_t shift = 0) {
  if (acc.size() < f.size() + shift) acc.resize(f.size() + shift, 0);
  for (std::size_t i = 0; i < f.size(); ++i) acc[i + shift] += c * f[i];
}

void trim(IntPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

Integer abs_coefficient_sum(IntPoly f, long monic_degree) {
  if (monic_degree >= 0) {
    if (f.size() <= static_cast<std::size_t>(monic_degree)) f.resize(monic_degree + 1, 0);
    f[monic_degree] -= 1;
  }
  Integer s = 0;
  for (const auto& c : f) s += abs(c);
  return s;
}

}  // namespace

IntPoly upper_bounding_polynomial(std::size_t ground_size, std::size_t degree) {
  const long n = static_cast<long>(ground_size) - 1;
  const Integer m = static_cast<unsigned long>(degree);
  IntPoly f = projective_poly(n - 1);
  if (degree >= 2) {
    IntPoly h;
    add_scaled(h, projective_poly(n - 3), m * (m - 1));
    add_scaled(h, projective_poly(n - 6), 1 + m - m * m);
    add_scaled(f, h, 1, 1);  // + t h(t)
  }
  trim(f);
  return f;
}

IntPoly lower_bounding_polynomial(std::size_t ground_size, std::size_t degree) {
  const long n = static_cast<long>(ground_size) - 1;
  const Integer m = static_cast<unsigned long>(degree);
  IntPoly g = projective_poly(n - 1);
  if (degree >= 2) {
    add_scaled(g, projective_poly(n - 2), -(m - 1));
    add_scaled(g, projective_poly(n - 4), m);
    add_scaled(g, IntPoly{1}, 1);
  }
  trim(g);
  return g;
}

Integer big_o_constant(std::size_t ground_size, std::size_t degree) {
  if (degree < 1) fail("big-O constant needs degree >= 1");
  const long monic = static_cast<long>(ground_size) - 2;
  const Integer c1 = abs_coefficient_sum(upper_bounding_polynomial(ground_size, degree), monic);
  const Integer c2 = abs_coefficient_sum(lower_bounding_polynomial(ground_size, degree), monic);
  Integer c = c1 > c2 ? c1 : c2;
  return c < 1 ? Integer(1) : c;
}

bool BoundReport::sandwich_holds() const {
  const Integer x = static_cast<unsigned long>(projective_points);
  return lower <= x && x <= upper && proof_lower <= x && x <= proof_upper;
}

bool BoundReport::fg_sandwich_holds() const {
  const Integer x = static_cast<unsigned long>(projective_points);
  return g_value <= x && x <= f_value;
}

BoundReport bound_check(const RegularMatroid& m, unsigned p, unsigned workers) {
  if (m.size() == 0) fail("bound_check on the empty matroid");
  if (irreducible_components(m).size() != 1) fail("reducible input: bound_check needs an irreducible matroid");
  const MultilinearPoly psi = psi_from_bases(m);
  if (psi.is_one()) fail("configuration polynomial is 1");

  BoundReport r;
  r.p = p;
  r.ground_size = m.size();
  r.degree = *psi.degree();
  r.projective_points = projective_count(psi, p, workers);

  const Integer q = p;
  const long big_n = static_cast<long>(m.size());
  const Integer mm = static_cast<unsigned long>(r.degree);
  const Integer base = projective_space_size(q, big_n - 2);
  if (r.degree == 1) {
    r.lower = r.upper = r.proof_lower = r.proof_upper = base;
  } else {
    // X_G1 cap X_G0: dimension N-4 in P^(N-2), degree m(m-1).
    r.intersection_term = {big_n - 2, big_n - 4, mm * (mm - 1), 0};
    r.intersection_term.value = couvreur_bound(q, big_n - 2, big_n - 4, mm * (mm - 1));
    // X_G1: hypersurface of degree m-1 in P^(N-2).
    r.g1_term = {big_n - 2, big_n - 3, mm - 1, 0};
    r.g1_term.value = couvreur_bound(q, big_n - 2, big_n - 3, mm - 1);
    r.upper = q * r.intersection_term.value + base + 1;
    r.lower = base - r.g1_term.value + 1;

    const Integer p4 = projective_space_size(q, big_n - 4);
    const Integer p7 = projective_space_size(q, big_n - 7);
    const Integer p3 = projective_space_size(q, big_n - 3);
    const Integer p5 = projective_space_size(q, big_n - 5);
    r.proof_upper = q * (mm * (mm - 1) * (p4 - p7) + p7) + base + 1;
    r.proof_lower = base - ((mm - 1) * (p3 - p5) + p5) + 1;
  }
  r.f_value = evaluate(upper_bounding_polynomial(m.size(), r.degree), q);
  r.g_value = evaluate(lower_bounding_polynomial(m.size(), r.degree), q);
  r.big_o = big_o_constant(m.size(), r.degree);
  return r;
}

}  // namespace mjac
