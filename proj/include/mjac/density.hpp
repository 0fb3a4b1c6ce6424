#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mjac/integer.hpp"
#include "mjac/matroid.hpp"

namespace mjac {

/// Lengths reduced into the window {1, ..., p}: a multiple of p maps to p.
struct ResidueMap {
  unsigned p = 0;
  std::vector<unsigned> values;
};

ResidueMap reduce_mod_p(const LengthMap& lam, unsigned p);

enum class DensityMode { formula, empirical, torus };

std::string to_string(DensityMode mode);

struct DensityReport {
  unsigned p = 0;
  Rational value;  // always canonical
  /// The same fraction before reduction: points in the set over points in the box.
  Integer raw_num;
  Integer raw_den;
  DensityMode mode = DensityMode::formula;
  std::optional<unsigned> empirical_height;
  std::string matroid_id;
  /// Psi = 1: J_p(M) is empty and the value is 0 by convention.
  bool trivial = false;
  /// Raw counts behind the value, when known.
  std::optional<std::uint64_t> affine_zeros;
  std::optional<std::uint64_t> projective_points;
  std::optional<std::uint64_t> torus_zeros;
};

/// mu(J_p(M)) = ((p-1)#X_M(F_p) + 1) / ((p-1)#P^(n-1)(F_p) + 1).
DensityReport density_formula(const RegularMatroid& m, unsigned p, unsigned workers = 1);

/// #A_m / #B_m over the box {1, ..., m_max}^E, exhaustively.
DensityReport density_empirical(const RegularMatroid& m, unsigned p, unsigned height_cap);

/// The two-sided bound from the fibre argument, with equality when p | m_max.
struct SandwichReport {
  unsigned height_cap = 0;
  unsigned t = 0;
  unsigned l = 0;
  Rational empirical;
  Rational limit;
  Rational lower;
  Rational upper;
  bool holds = false;
};

SandwichReport sandwich_report(const RegularMatroid& m, unsigned p, unsigned height_cap);
bool sandwich_check(const RegularMatroid& m, unsigned p, unsigned height_cap);

/// mu(S_p(M)) = #(zeros in (F_p^*)^n) / p^n.
DensityReport torus_density(const RegularMatroid& m, unsigned p, unsigned workers = 1);

bool dual_density_check(const RegularMatroid& m, unsigned p, unsigned workers = 1);

struct AsymptoticReport {
  Rational density;
  Rational deviation;  // |mu - 1/p|
  Rational bound;      // (C + 1) / p^2
  Integer constant;    // C
  bool holds = false;
};

/// Requires a nonempty irreducible matroid with Psi != 1.
AsymptoticReport asymptotic_report(const RegularMatroid& m, unsigned p, unsigned workers = 1);
bool asymptotic_check(const RegularMatroid& m, unsigned p, unsigned workers = 1);

}  // namespace mjac
