#include "mjac/polynomial.hpp"

#include <bit>
#include <vector>

#include "mjac/error.hpp"

namespace mjac {

MultilinearPoly::MultilinearPoly(std::size_t var_count) : var_count_(var_count) {
  if (var_count > kMaxGround)
    fail("polynomials are limited to " + std::to_string(kMaxGround) + " variables");
}

MultilinearPoly MultilinearPoly::constant(std::size_t var_count, const Integer& c) {
  MultilinearPoly p(var_count);
  p.add_term(0, c);
  return p;
}

MultilinearPoly MultilinearPoly::variable(std::size_t var_count, std::size_t i) {
  MultilinearPoly p(var_count);
  p.require_var(i);
  p.add_term(bit(i), 1);
  return p;
}

bool MultilinearPoly::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
}

void MultilinearPoly::require_var(std::size_t i) const {
  if (i >= var_count_) fail("variable index " + std::to_string(i) + " out of range");
}

void MultilinearPoly::add_term(Mask support, const Integer& coeff) {
  if (support & ~full_mask(var_count_)) fail("monomial support outside the variable set");
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(support, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

std::optional<std::size_t> MultilinearPoly::degree() const {
  if (terms_.empty()) return std::nullopt;
  const auto d = std::popcount(terms_.begin()->first);
  for (const auto& [mask, c] : terms_)
    if (std::popcount(mask) != d) return std::nullopt;
  return static_cast<std::size_t>(d);
}

bool MultilinearPoly::depends_on(std::size_t i) const {
  require_var(i);
  for (const auto& [mask, c] : terms_)
    if (mask & bit(i)) return true;
  return false;
}

bool MultilinearPoly::divisible_by_variable(std::size_t i) const {
  require_var(i);
  for (const auto& [mask, c] : terms_)
    if (!(mask & bit(i))) return false;
  return true;
}

std::pair<MultilinearPoly, MultilinearPoly> MultilinearPoly::split(std::size_t i) const {
  require_var(i);
  MultilinearPoly with(var_count_), rest(var_count_);
  for (const auto& [mask, c] : terms_) {
    if (mask & bit(i))
      with.terms_.emplace(mask & ~bit(i), c);
    else
      rest.terms_.emplace(mask, c);
  }
  return {std::move(with), std::move(rest)};
}

MultilinearPoly MultilinearPoly::times_variable(std::size_t i) const {
  require_var(i);
  MultilinearPoly out(var_count_);
  for (const auto& [mask, c] : terms_) {
    if (mask & bit(i)) fail("product would not be multilinear");
    out.terms_.emplace(mask | bit(i), c);
  }
  return out;
}

MultilinearPoly MultilinearPoly::drop_variable(std::size_t i) const {
  require_var(i);
  MultilinearPoly out(var_count_ - 1);
  const Mask low = bit(i) - 1;
  for (const auto& [mask, c] : terms_) {
    if (mask & bit(i)) fail("cannot drop a variable that occurs");
    out.terms_.emplace((mask & low) | ((mask >> 1) & ~low), c);
  }
  return out;
}

MultilinearPoly& MultilinearPoly::operator+=(const MultilinearPoly& other) {
  if (other.var_count_ != var_count_) fail("variable count mismatch in sum");
  for (const auto& [mask, c] : other.terms_) add_term(mask, c);
  return *this;
}

MultilinearPoly operator*(const MultilinearPoly& a, const MultilinearPoly& b) {
  if (a.var_count_ != b.var_count_) fail("variable count mismatch in product");
  MultilinearPoly out(a.var_count_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      if (ma & mb) fail("product would not be multilinear");
      out.add_term(ma | mb, ca * cb);
    }
  return out;
}

namespace {
template <class T>
T evaluate_exact(const MultilinearPoly& p, std::span<const T> point) {
  if (point.size() != p.var_count())
    fail("point has " + std::to_string(point.size()) + " coordinates, expected " +
         std::to_string(p.var_count()));
  T sum = 0;
  for (const auto& [mask, c] : p.terms()) {
    T term = c;
    for (Mask m = mask; m; m &= m - 1) term *= point[static_cast<std::size_t>(std::countr_zero(m))];
    sum += term;
  }
  return sum;
}
}  // namespace

Integer evaluate(const MultilinearPoly& p, std::span<const Integer> point) {
  return evaluate_exact(p, point);
}

Rational evaluate(const MultilinearPoly& p, std::span<const Rational> point) {
  return evaluate_exact(p, point);
}

std::uint64_t evaluate_mod(const MultilinearPoly& p, std::span<const std::int64_t> point,
                           std::uint64_t modulus) {
  if (modulus < 2 || modulus > (1ULL << 31)) fail("modulus out of range");
  if (point.size() != p.var_count()) fail("point length does not match the variable count");
  std::vector<std::uint64_t> x(point.size());
  const auto mod = static_cast<std::int64_t>(modulus);
  for (std::size_t i = 0; i < point.size(); ++i)
    x[i] = static_cast<std::uint64_t>(((point[i] % mod) + mod) % mod);
  std::uint64_t sum = 0;
  Integer reduced;
  for (const auto& [mask, c] : p.terms()) {
    mpz_fdiv_r_ui(reduced.get_mpz_t(), c.get_mpz_t(), modulus);
    std::uint64_t term = reduced.get_ui();
    for (Mask m = mask; m && term; m &= m - 1)
      term = term * x[static_cast<std::size_t>(std::countr_zero(m))] % modulus;
    sum = (sum + term) % modulus;
  }
  return sum;
}

}  // namespace mjac
