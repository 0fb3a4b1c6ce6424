#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "mjac/matroid.hpp"
#include "mjac/polynomial.hpp"

namespace mjac {

/// Configuration polynomial: one monomial per basis, supported on the
/// cobasis. Variables are indexed by ground element.
MultilinearPoly psi_from_bases(const RegularMatroid& m);

/// Same polynomial through Psi = x_e Psi(M\e) + Psi(M/e), with loops and
/// coloops stripped first and branching on the lowest ordinary element.
/// Minors are memoised by surviving element set plus the canonical reduced
/// form of their matrix.
MultilinearPoly psi_deletion_contraction(const RegularMatroid& m);

/// Psi of each irreducible component, embedded in the full variable set.
/// The product of the factors is Psi_M.
std::vector<MultilinearPoly> factor_by_components(const RegularMatroid& m);

/// Checks Psi_M(x) == (prod x_i) * Psi_dual(1/x) at one point.
bool cremona_identity_holds(const MultilinearPoly& psi, const MultilinearPoly& psi_dual,
                            std::span<const Rational> point);
bool cremona_identity_holds_mod(const MultilinearPoly& psi, const MultilinearPoly& psi_dual,
                                std::span<const std::int64_t> point, std::uint64_t p);

/// The identity for m and dual(m); every coordinate must be invertible.
bool cremona_identity_check(const RegularMatroid& m, std::span<const Rational> point);
bool cremona_identity_check_mod(const RegularMatroid& m, std::span<const std::int64_t> point,
                                std::uint64_t p);

}  // namespace mjac
