#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "mjac/integer.hpp"
#include "mjac/matroid.hpp"

namespace mjac {

/// delta * (#P^d - #P^(2d-N)) + #P^(2d-N), with #P^k = 0 for k < 0:
/// upper bound on the points of an equidimensional X in P^N of dimension
/// d < N and degree delta.
Integer couvreur_bound(const Integer& q, long ambient, long dim, const Integer& degree);

/// Integer polynomial in t, coefficient of t^i at index i.
using IntPoly = std::vector<Integer>;

Integer evaluate(const IntPoly& f, const Integer& t);

/// Monic bounding polynomials for the projective hypersurface of a
/// configuration polynomial with `ground_size` variables and the given
/// degree, as written in the proof (ambient P^n, n = ground_size - 1).
/// (t^k - 1)/(t - 1) is read as 0 for k <= 0.
IntPoly upper_bounding_polynomial(std::size_t ground_size, std::size_t degree);
IntPoly lower_bounding_polynomial(std::size_t ground_size, std::size_t degree);

/// C = max(C1, C2, 1), Ci the sum of |coefficients| of f - t^(n-1) and
/// g - t^(n-1); then |#X - q^(n-1)| <= C q^(n-2).
Integer big_o_constant(std::size_t ground_size, std::size_t degree);

struct CouvreurTerm {
  long ambient = 0;
  long dim = 0;
  Integer degree;
  Integer value;
};

struct BoundReport {
  unsigned p = 0;
  std::size_t ground_size = 0;
  std::size_t degree = 0;
  std::uint64_t projective_points = 0;
  // Raw inequalities with the generic Couvreur indices.
  Integer lower;
  Integer upper;
  CouvreurTerm intersection_term;
  CouvreurTerm g1_term;
  // Same inequalities with the indices used in the proof.
  Integer proof_lower;
  Integer proof_upper;
  // The proof's closed-form f(q), g(q).
  Integer f_value;
  Integer g_value;
  Integer big_o;

  bool sandwich_holds() const;
  bool fg_sandwich_holds() const;
};

/// Bounds for an irreducible matroid with Psi != 1.
BoundReport bound_check(const RegularMatroid& m, unsigned p, unsigned workers = 1);

}  // namespace mjac
