#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <utility>

#include "mjac/integer.hpp"
#include "mjac/matroid.hpp"

namespace mjac {

/// Multilinear polynomial in up to 64 variables. A monomial is the set of
/// variables it contains, stored as a bitmask; zero coefficients are never
/// stored.
class MultilinearPoly {
 public:
  MultilinearPoly() = default;
  explicit MultilinearPoly(std::size_t var_count);

  static MultilinearPoly constant(std::size_t var_count, const Integer& c);
  static MultilinearPoly variable(std::size_t var_count, std::size_t i);

  std::size_t var_count() const noexcept { return var_count_; }
  const std::map<Mask, Integer>& terms() const noexcept { return terms_; }
  std::size_t term_count() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_one() const;

  void add_term(Mask support, const Integer& coeff);

  /// Common popcount of all supports; nullopt for the zero polynomial or a
  /// non-homogeneous one.
  std::optional<std::size_t> degree() const;
  bool is_homogeneous() const { return is_zero() || degree().has_value(); }

  /// True when variable i occurs in some monomial.
  bool depends_on(std::size_t i) const;
  /// True when every monomial contains variable i.
  bool divisible_by_variable(std::size_t i) const;

  /// p = x_i * G1 + G0 with neither part involving x_i.
  std::pair<MultilinearPoly, MultilinearPoly> split(std::size_t i) const;
  MultilinearPoly derivative(std::size_t i) const { return split(i).first; }
  MultilinearPoly times_variable(std::size_t i) const;

  /// Removes variable i (which must not occur) and renumbers the rest.
  MultilinearPoly drop_variable(std::size_t i) const;

  MultilinearPoly& operator+=(const MultilinearPoly& other);
  friend MultilinearPoly operator+(MultilinearPoly a, const MultilinearPoly& b) {
    a += b;
    return a;
  }
  /// Product; supports must stay multilinear (no shared variables in any
  /// pair of multiplied monomials).
  friend MultilinearPoly operator*(const MultilinearPoly& a, const MultilinearPoly& b);

  bool operator==(const MultilinearPoly& other) const {
    return var_count_ == other.var_count_ && terms_ == other.terms_;
  }

 private:
  void require_var(std::size_t i) const;

  std::size_t var_count_ = 0;
  std::map<Mask, Integer> terms_;
};

Integer evaluate(const MultilinearPoly& p, std::span<const Integer> point);
Rational evaluate(const MultilinearPoly& p, std::span<const Rational> point);
/// Evaluation in F_modulus; coordinates are reduced first.
std::uint64_t evaluate_mod(const MultilinearPoly& p, std::span<const std::int64_t> point,
                           std::uint64_t modulus);

}  // namespace mjac
