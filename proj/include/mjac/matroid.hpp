#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "mjac/graph.hpp"
#include "mjac/matrix.hpp"

namespace mjac {

using Mask = std::uint64_t;
inline constexpr std::size_t kMaxGround = 64;

inline constexpr Mask bit(std::size_t i) { return Mask{1} << i; }
inline constexpr Mask full_mask(std::size_t n) {
  return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1;
}

/// A regular matroid given by an r x n totally unimodular matrix of full
/// row rank and a list of distinct element labels.
class RegularMatroid {
 public:
  RegularMatroid() = default;
  /// Validates entries in {-1,0,1}, full row rank and label uniqueness.
  RegularMatroid(IntMatrix matrix, std::vector<std::string> ground);

  std::size_t rank() const noexcept { return matrix_.rows(); }
  std::size_t size() const noexcept { return ground_.size(); }
  const IntMatrix& matrix() const noexcept { return matrix_; }
  const std::vector<std::string>& ground() const noexcept { return ground_; }

  /// Index of a ground label; throws "unknown element".
  std::size_t index_of(std::string_view label) const;

 private:
  IntMatrix matrix_;
  std::vector<std::string> ground_;
};

/// Family of r-subsets of an n-element ground set, as sorted bitmasks.
struct BasisSet {
  std::size_t n = 0;
  std::size_t r = 0;
  std::vector<Mask> members;

  std::size_t size() const noexcept { return members.size(); }
  bool contains(Mask m) const;
  bool operator==(const BasisSet&) const = default;
};

/// Positive integer length per ground element.
class LengthMap {
 public:
  LengthMap() = default;
  explicit LengthMap(std::vector<unsigned> values);

  static LengthMap ones(std::size_t n) { return LengthMap(std::vector<unsigned>(n, 1)); }

  std::size_t size() const noexcept { return values_.size(); }
  unsigned operator[](std::size_t e) const { return values_.at(e); }
  const std::vector<unsigned>& values() const noexcept { return values_; }
  unsigned long total() const;

 private:
  std::vector<unsigned> values_;
};

/// Largest length; throws on an empty map.
unsigned height(const LengthMap& lam);

/// Labels of the expanded ground set: groups[e] is E_e(M), starting with e.
struct ExpandedGround {
  std::vector<std::vector<std::string>> groups;

  std::vector<std::string> labels() const;
  /// Index in the expanded ground of the first element of each group.
  std::vector<std::size_t> offsets() const;
};

struct ExpandedMatroid {
  RegularMatroid matroid;
  ExpandedGround ground;
};

enum class ElementClass { loop, coloop, ordinary };

RegularMatroid incidence_matroid(const Graph& g);

/// All bases, by a delete/contract search that pivots only on +-1 entries.
BasisSet enumerate_bases(const RegularMatroid& m);

RegularMatroid dual(const RegularMatroid& m);

RegularMatroid delete_element(const RegularMatroid& m, std::size_t e);
RegularMatroid delete_element(const RegularMatroid& m, std::string_view label);
RegularMatroid contract_element(const RegularMatroid& m, std::size_t e);
RegularMatroid contract_element(const RegularMatroid& m, std::string_view label);

/// Restriction M|S: deletes every element outside `keep` (given in ground order).
RegularMatroid restrict_to(const RegularMatroid& m, const std::vector<std::size_t>& keep);

ElementClass element_class(const RegularMatroid& m, std::size_t e);
ElementClass element_class(const RegularMatroid& m, std::string_view label);

/// Connectivity classes of M, each sorted, ordered by smallest element.
std::vector<std::vector<std::size_t>> irreducible_components(const RegularMatroid& m);

RegularMatroid direct_sum(const RegularMatroid& a, const RegularMatroid& b);
/// k coloops, labels c1..ck.
RegularMatroid coloop_matroid(std::size_t k);

/// Metric expansion M_lam by parallel duplication in the dual.
ExpandedMatroid expand(const RegularMatroid& m, const LengthMap& lam);

/// Deterministic labels of E_e(M): e, e#1, e#2, ...
ExpandedGround expanded_ground(const RegularMatroid& m, const LengthMap& lam);

/// Bases of M_lam built straight from the definition; masks index the
/// expanded ground in `expanded_ground` order.
BasisSet bases_of_expansion_def(const RegularMatroid& m, const LengthMap& lam);

/// Brute-force basis-exchange axiom.
bool check_basis_exchange(const BasisSet& family);

/// True when every listed basis has determinant +-1 (exact arithmetic).
bool bases_have_unit_determinant(const RegularMatroid& m, const BasisSet& bases);

/// Exhaustive check of every square submatrix. Exponential; small inputs only.
bool is_totally_unimodular(const IntMatrix& a);

}  // namespace mjac
