#pragma once

#include <vector>

#include "mjac/integer.hpp"
#include "mjac/matrix.hpp"
#include "mjac/matroid.hpp"

namespace mjac {

/// Finite abelian group Z/d1 + ... + Z/dk with d1 | d2 | ... | dk, each >= 2.
class AbelianGroup {
 public:
  AbelianGroup() = default;
  explicit AbelianGroup(std::vector<Integer> invariant_factors);

  const std::vector<Integer>& invariant_factors() const noexcept { return factors_; }
  Integer order() const;
  bool is_trivial() const noexcept { return factors_.empty(); }

  bool operator==(const AbelianGroup& other) const { return factors_ == other.factors_; }

 private:
  std::vector<Integer> factors_;
};

/// A A^T for the representing matrix.
BigMatrix gram(const RegularMatroid& m);

/// Diagonal of the Smith normal form (d1 | d2 | ..., zeros last).
/// Pivot is always the smallest nonzero absolute value, lowest index first.
std::vector<Integer> smith_invariant_factors(BigMatrix a);

/// coker(A A^T).
AbelianGroup jacobian_group(const RegularMatroid& m);

/// det(A A^T).
Integer jacobian_order(const RegularMatroid& m);

/// Integral basis of ker A intersected with Z^n, one basis vector per column,
/// via unimodular column reduction.
BigMatrix integer_kernel_basis(const BigMatrix& a);

/// det(K^T K) for an integral basis K of the flow lattice ker A in Z^n.
Integer flow_lattice_order(const RegularMatroid& m);

}  // namespace mjac
