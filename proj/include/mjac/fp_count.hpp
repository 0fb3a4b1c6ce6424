#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>

#include "mjac/polynomial.hpp"

namespace mjac {

inline constexpr unsigned kMaxPrime = 31;
/// Exhaustive loops over F_p^n are refused above this many points.
inline constexpr std::uint64_t kNaiveBudget = 100'000'000;
/// The eliminative kernel is refused above this many outer assignments.
inline constexpr std::uint64_t kEliminativeBudget = 1'000'000'000;

/// Throws unless p is a prime <= kMaxPrime.
void require_counting_prime(unsigned p);

/// p^k, or nullopt once it exceeds `cap`.
std::optional<std::uint64_t> bounded_power(std::uint64_t p, std::size_t k, std::uint64_t cap);

struct CountReport {
  unsigned p = 0;
  std::size_t n_vars = 0;
  std::uint64_t affine_zeros = 0;
  /// #X(F_p); zero for a constant polynomial.
  std::uint64_t projective_points = 0;
  std::optional<std::uint64_t> torus_zeros;
};

/// Zeros in F_p^n by evaluating every point. The reference oracle.
std::uint64_t count_affine_naive(const MultilinearPoly& psi, unsigned p);
/// Zeros with every coordinate nonzero, by evaluating every point.
std::uint64_t count_torus_naive(const MultilinearPoly& psi, unsigned p);
/// Common zeros of several polynomials on the same variables.
std::uint64_t count_common_zeros_naive(std::span<const MultilinearPoly> system, unsigned p);

/// Lowest variable that occurs in psi.
std::optional<std::size_t> default_pivot(const MultilinearPoly& psi);

/// Writes psi = x_pivot * G1 + G0 and enumerates F_p^(n-1): a point with
/// G1 != 0 contributes 1 zero, one with G1 = G0 = 0 contributes p.
/// The outer assignment space is split into `workers` contiguous blocks.
std::uint64_t count_affine_eliminative(const MultilinearPoly& psi, unsigned p,
                                       std::size_t pivot, unsigned workers = 1);
/// Torus variant: G1 != 0 contributes 1 iff -G0/G1 != 0; G1 = G0 = 0
/// contributes p - 1.
std::uint64_t count_torus_eliminative(const MultilinearPoly& psi, unsigned p,
                                      std::size_t pivot, unsigned workers = 1);

/// Torus zeros through the eliminative kernel on the default pivot.
std::uint64_t count_torus(const MultilinearPoly& psi, unsigned p, unsigned workers = 1);

/// #X(F_p) = (affine zeros - 1) / (p - 1) for homogeneous psi of degree >= 1.
std::uint64_t projective_count(const MultilinearPoly& psi, unsigned p, unsigned workers = 1);

enum class CountMethod { naive, eliminative };

CountReport count_report(const MultilinearPoly& psi, unsigned p, CountMethod method,
                         std::optional<std::size_t> pivot, bool torus, unsigned workers = 1);

struct StembridgeReport {
  unsigned p = 0;
  std::size_t pivot = 0;
  std::uint64_t hypersurface = 0;      // #X_F
  std::uint64_t g1_points = 0;         // #X_G1 in P^(n-2)
  std::uint64_t intersection = 0;      // #(X_G1 cap X_G0)
  std::uint64_t base_space = 0;        // #P^(n-2)
  std::uint64_t cone_vertex = 0;       // 1 when [1:0:...:0] lies on X_F
  bool holds = false;
};

/// Counts #X_F, #X_G1 and #(X_G1 cap X_G0) by brute force and compares
/// #X_F with q#(X_G1 cap X_G0) + #P^(n-2) - #X_G1 + [vertex on X_F].
StembridgeReport stembridge_identity(const MultilinearPoly& psi, std::size_t pivot, unsigned p);
bool stembridge_identity_check(const MultilinearPoly& psi, std::size_t pivot, unsigned p);

}  // namespace mjac
