#include "mjac/config_poly.hpp"

#include <string>
#include <unordered_map>

#include "mjac/error.hpp"
#include "unimodular.hpp"

namespace mjac {

MultilinearPoly psi_from_bases(const RegularMatroid& m) {
  const BasisSet bases = enumerate_bases(m);
  const Mask all = full_mask(m.size());
  MultilinearPoly out(m.size());
  for (Mask b : bases.members) out.add_term(all & ~b, 1);
  return out;
}

namespace {

class DeletionContraction {
 public:
  explicit DeletionContraction(std::size_t n) : n_(n) {}

  // `a` represents the minor on original elements `cols`, full row rank.
  MultilinearPoly run(const IntMatrix& a, const std::vector<std::size_t>& cols) {
    if (cols.empty()) return MultilinearPoly::constant(n_, 1);
    Mask survivors = 0;
    for (auto c : cols) survivors |= bit(c);
    std::string key = std::to_string(survivors) + "|" + detail::canonical_key(a);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    MultilinearPoly result = expand_minor(a, cols);
    memo_.emplace(std::move(key), result);
    return result;
  }

 private:
  MultilinearPoly expand_minor(IntMatrix a, std::vector<std::size_t> cols) {
    // Loops multiply by their variable; coloops drop out.
    for (std::size_t j = 0; j < cols.size();) {
      auto row = detail::find_unit_pivot(a, j);
      if (!row) {
        const std::size_t e = cols[j];
        a = a.without_col(j);
        cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(j));
        return run(a, cols).times_variable(e);
      }
      if (detail::is_coloop(a, j)) {
        IntMatrix pivoted = a;
        detail::pivot(pivoted, *row, j);
        cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(j));
        return run(pivoted.without_row(*row).without_col(j), cols);
      }
      ++j;
    }
    // Branch on the lowest ordinary element (cols[0]; all are ordinary now).
    const std::size_t e = cols.front();
    auto row = detail::find_unit_pivot(a, 0);
    detail::pivot(a, *row, 0);
    std::vector<std::size_t> rest(cols.begin() + 1, cols.end());
    MultilinearPoly deleted = run(a.without_col(0), rest).times_variable(e);
    MultilinearPoly contracted = run(a.without_row(*row).without_col(0), rest);
    return deleted + contracted;
  }

  std::size_t n_;
  std::unordered_map<std::string, MultilinearPoly> memo_;
};

}  // namespace

MultilinearPoly psi_deletion_contraction(const RegularMatroid& m) {
  if (m.size() > kMaxGround) fail("ground set too large for bitmask monomials");
  std::vector<std::size_t> cols(m.size());
  for (std::size_t i = 0; i < cols.size(); ++i) cols[i] = i;
  DeletionContraction dc(m.size());
  return dc.run(m.matrix(), cols);
}

std::vector<MultilinearPoly> factor_by_components(const RegularMatroid& m) {
  std::vector<MultilinearPoly> out;
  for (const auto& comp : irreducible_components(m)) {
    const MultilinearPoly local = psi_from_bases(restrict_to(m, comp));
    MultilinearPoly embedded(m.size());
    for (const auto& [mask, c] : local.terms()) {
      Mask global = 0;
      for (std::size_t k = 0; k < comp.size(); ++k)
        if (mask & bit(k)) global |= bit(comp[k]);
      embedded.add_term(global, c);
    }
    out.push_back(std::move(embedded));
  }
  return out;
}

bool cremona_identity_holds(const MultilinearPoly& psi, const MultilinearPoly& psi_dual,
                            std::span<const Rational> point) {
  if (psi.var_count() != psi_dual.var_count()) fail("variable count mismatch");
  std::vector<Rational> inverse;
  Rational product = 1;
  for (const auto& x : point) {
    if (x == 0) fail("non-invertible coordinate 0");
    inverse.push_back(1 / x);
    product *= x;
  }
  return evaluate(psi, point) == product * evaluate(psi_dual, std::span<const Rational>(inverse));
}

bool cremona_identity_holds_mod(const MultilinearPoly& psi, const MultilinearPoly& psi_dual,
                                std::span<const std::int64_t> point, std::uint64_t p) {
  if (psi.var_count() != psi_dual.var_count()) fail("variable count mismatch");
  std::vector<std::int64_t> inverse;
  std::uint64_t product = 1;
  const auto sp = static_cast<std::int64_t>(p);
  for (auto x : point) {
    const auto r = static_cast<std::uint64_t>(((x % sp) + sp) % sp);
    if (r == 0) fail("non-invertible coordinate " + std::to_string(x) + " mod " + std::to_string(p));
    Integer inv;
    const Integer base = static_cast<unsigned long>(r);
    const Integer mod = static_cast<unsigned long>(p);
    mpz_invert(inv.get_mpz_t(), base.get_mpz_t(), mod.get_mpz_t());
    inverse.push_back(static_cast<std::int64_t>(inv.get_ui()));
    product = product * r % p;
  }
  const std::uint64_t lhs = evaluate_mod(psi, point, p);
  const std::uint64_t rhs = product * evaluate_mod(psi_dual, inverse, p) % p;
  return lhs == rhs;
}

bool cremona_identity_check(const RegularMatroid& m, std::span<const Rational> point) {
  return cremona_identity_holds(psi_from_bases(m), psi_from_bases(dual(m)), point);
}

bool cremona_identity_check_mod(const RegularMatroid& m, std::span<const std::int64_t> point,
                                std::uint64_t p) {
  return cremona_identity_holds_mod(psi_from_bases(m), psi_from_bases(dual(m)), point, p);
}

}  // namespace mjac
