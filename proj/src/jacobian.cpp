#include "mjac/jacobian.hpp"

#include <optional>
#include <utility>

#include "mjac/error.hpp"

namespace mjac {

AbelianGroup::AbelianGroup(std::vector<Integer> invariant_factors)
    : factors_(std::move(invariant_factors)) {
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (factors_[i] < 2) fail("invariant factors must be at least 2");
    if (i > 0 && factors_[i] % factors_[i - 1] != 0)
      fail("invariant factors must form a divisibility chain");
  }
}

Integer AbelianGroup::order() const {
  Integer out = 1;
  for (const auto& d : factors_) out *= d;
  return out;
}

BigMatrix gram(const RegularMatroid& m) {
  const BigMatrix a = to_big(m.matrix());
  return multiply(a, a.transpose());
}

namespace {

// Smallest nonzero |entry| in the trailing block starting at (k, k).
std::optional<std::pair<std::size_t, std::size_t>> smallest_entry(const BigMatrix& a,
                                                                   std::size_t k) {
  std::optional<std::pair<std::size_t, std::size_t>> best;
  Integer best_abs;
  for (std::size_t i = k; i < a.rows(); ++i)
    for (std::size_t j = k; j < a.cols(); ++j) {
      if (a(i, j) == 0) continue;
      Integer v = abs(a(i, j));
      if (!best || v < best_abs) {
        best = {i, j};
        best_abs = std::move(v);
      }
    }
  return best;
}

}  // namespace

std::vector<Integer> smith_invariant_factors(BigMatrix a) {
  const std::size_t limit = std::min(a.rows(), a.cols());
  std::vector<Integer> diag;
  Integer q;
  for (std::size_t k = 0; k < limit; ++k) {
    while (true) {
      auto pos = smallest_entry(a, k);
      if (!pos) break;
      a.swap_rows(k, pos->first);
      a.swap_cols(k, pos->second);
      bool clean = true;
      for (std::size_t i = k + 1; i < a.rows(); ++i) {
        if (a(i, k) == 0) continue;
        mpz_fdiv_q(q.get_mpz_t(), a(i, k).get_mpz_t(), a(k, k).get_mpz_t());
        for (std::size_t j = k; j < a.cols(); ++j) a(i, j) -= q * a(k, j);
        if (a(i, k) != 0) clean = false;
      }
      for (std::size_t j = k + 1; j < a.cols(); ++j) {
        if (a(k, j) == 0) continue;
        mpz_fdiv_q(q.get_mpz_t(), a(k, j).get_mpz_t(), a(k, k).get_mpz_t());
        for (std::size_t i = k; i < a.rows(); ++i) a(i, j) -= q * a(i, k);
        if (a(k, j) != 0) clean = false;
      }
      if (!clean) continue;
      // Pivot must divide the rest of the block.
      bool divides = true;
      for (std::size_t i = k + 1; i < a.rows() && divides; ++i)
        for (std::size_t j = k + 1; j < a.cols(); ++j)
          if (a(i, j) % a(k, k) != 0) {
            for (std::size_t c = k; c < a.cols(); ++c) a(k, c) += a(i, c);
            divides = false;
            break;
          }
      if (divides) break;
    }
    diag.push_back(abs(a(k, k)));
  }
  // Zeros (singular input) sit at the end by construction since the search
  // only stops once the remaining block vanishes.
  return diag;
}

AbelianGroup jacobian_group(const RegularMatroid& m) {
  auto diag = smith_invariant_factors(gram(m));
  std::vector<Integer> factors;
  for (auto& d : diag) {
    if (d == 0) fail("rank-deficient input: A A^T is singular");
    if (d > 1) factors.push_back(std::move(d));
  }
  return AbelianGroup(std::move(factors));
}

Integer jacobian_order(const RegularMatroid& m) {
  Integer d = determinant(gram(m));
  if (d == 0) fail("rank-deficient input: A A^T is singular");
  return d;
}

BigMatrix integer_kernel_basis(const BigMatrix& a) {
  const std::size_t r = a.rows();
  const std::size_t n = a.cols();
  // Column operations on [A; I]; the lower block accumulates the unimodular U.
  BigMatrix w(r + n, n);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < n; ++j) w(i, j) = a(i, j);
  for (std::size_t j = 0; j < n; ++j) w(r + j, j) = 1;

  std::size_t lead = 0;
  Integer q;
  for (std::size_t i = 0; i < r && lead < n; ++i) {
    while (true) {
      std::optional<std::size_t> best;
      for (std::size_t j = lead; j < n; ++j)
        if (w(i, j) != 0 && (!best || abs(w(i, j)) < abs(w(i, *best)))) best = j;
      if (!best) break;
      w.swap_cols(lead, *best);
      bool done = true;
      for (std::size_t j = lead + 1; j < n; ++j) {
        if (w(i, j) == 0) continue;
        mpz_fdiv_q(q.get_mpz_t(), w(i, j).get_mpz_t(), w(i, lead).get_mpz_t());
        for (std::size_t k = 0; k < r + n; ++k) w(k, j) -= q * w(k, lead);
        if (w(i, j) != 0) done = false;
      }
      if (done) {
        ++lead;
        break;
      }
    }
  }
  BigMatrix kernel(n, n - lead);
  for (std::size_t j = lead; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) kernel(k, j - lead) = w(r + k, j);
  return kernel;
}

Integer flow_lattice_order(const RegularMatroid& m) {
  const BigMatrix a = to_big(m.matrix());
  const BigMatrix k = integer_kernel_basis(a);
  if (k.cols() != m.size() - m.rank()) fail("rank-deficient input");
  return determinant(multiply(k.transpose(), k));
}

}  // namespace mjac
