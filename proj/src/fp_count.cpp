#include "mjac/fp_count.hpp"

#include <algorithm>
#include <bit>
#include <thread>
#include <vector>

#include "mjac/error.hpp"

namespace mjac {

void require_counting_prime(unsigned p) {
  if (!is_prime(p)) fail(std::to_string(p) + " is not prime");
  if (p > kMaxPrime)
    fail("prime " + std::to_string(p) + " exceeds the supported limit " + std::to_string(kMaxPrime));
}

std::optional<std::uint64_t> bounded_power(std::uint64_t p, std::size_t k, std::uint64_t cap) {
  std::uint64_t out = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (out > cap / p) return std::nullopt;
    out *= p;
  }
  return out;
}

namespace {

[[noreturn]] void over_budget(const std::string& what, unsigned p, std::size_t k,
                              std::uint64_t cap) {
  throw Error(ErrorKind::budget, what + ": " + std::to_string(p) + "^" + std::to_string(k) +
                                     " points exceeds the budget of " + std::to_string(cap));
}

struct ModTerm {
  std::uint32_t coeff;
  std::vector<std::uint8_t> vars;
};

std::vector<ModTerm> reduce_terms(const MultilinearPoly& psi, unsigned p) {
  std::vector<ModTerm> out;
  Integer r;
  for (const auto& [mask, c] : psi.terms()) {
    mpz_fdiv_r_ui(r.get_mpz_t(), c.get_mpz_t(), p);
    if (r == 0) continue;
    ModTerm t{static_cast<std::uint32_t>(r.get_ui()), {}};
    for (Mask m = mask; m; m &= m - 1) t.vars.push_back(static_cast<std::uint8_t>(std::countr_zero(m)));
    out.push_back(std::move(t));
  }
  return out;
}

std::uint32_t eval_terms(const std::vector<ModTerm>& terms, const std::vector<std::uint32_t>& x,
                         unsigned p) {
  std::uint32_t sum = 0;
  for (const auto& t : terms) {
    std::uint32_t v = t.coeff;
    for (auto i : t.vars) v = v * x[i] % p;
    sum += v;
  }
  return sum % p;
}

// Visits every point of {lo..p-1}^n in odometer order.
template <class Visit>
void for_each_point(std::size_t n, unsigned p, unsigned lo, Visit&& visit) {
  std::vector<std::uint32_t> x(n, lo);
  while (true) {
    visit(x);
    std::size_t i = 0;
    while (i < n && ++x[i] == p) x[i++] = lo;
    if (i == n) return;
  }
}

std::uint64_t naive_count(const MultilinearPoly& psi, unsigned p, bool torus) {
  require_counting_prime(p);
  const std::size_t n = psi.var_count();
  if (!bounded_power(p, n, kNaiveBudget)) over_budget("naive count", p, n, kNaiveBudget);
  const auto terms = reduce_terms(psi, p);
  std::uint64_t zeros = 0;
  for_each_point(n, p, torus ? 1 : 0, [&](const std::vector<std::uint32_t>& x) {
    if (eval_terms(terms, x, p) == 0) ++zeros;
  });
  return zeros;
}

// Term of G1 or G0 split into an outer part (list of outer variable slots)
// and an inner part (bitmask over inner variable slots).
struct SplitTerm {
  std::uint32_t coeff;
  std::vector<std::uint8_t> outer;
  std::uint32_t inner;
};

class EliminationKernel {
 public:
  EliminationKernel(const MultilinearPoly& psi, unsigned p, std::size_t pivot, bool torus)
      : p_(p), torus_(torus) {
    const std::size_t n = psi.var_count();
    std::vector<std::size_t> others;
    for (std::size_t v = 0; v < n; ++v)
      if (v != pivot) others.push_back(v);
    // Inner block: as many trailing variables as fit in ~4096 points.
    inner_n_ = 0;
    std::uint64_t inner_points = 1;
    while (inner_n_ < others.size() && inner_points * p <= 4096) {
      inner_points *= p;
      ++inner_n_;
    }
    inner_points_ = inner_points;
    outer_n_ = others.size() - inner_n_;
    std::vector<int> slot(n, -1);
    for (std::size_t k = 0; k < others.size(); ++k) slot[others[k]] = static_cast<int>(k);

    const auto [g1, g0] = psi.split(pivot);
    compile(g1, slot, g1_);
    compile(g0, slot, g0_);

    const unsigned digits = torus ? p - 1 : p;
    outer_points_ = 1;
    for (std::size_t i = 0; i < outer_n_; ++i) outer_points_ *= digits;

    unit_inner_.assign(inner_points_, 1);
    if (torus_)
      for (std::uint64_t idx = 0; idx < inner_points_; ++idx)
        for (std::uint64_t r = idx, i = 0; i < inner_n_; ++i, r /= p)
          if (r % p == 0) unit_inner_[idx] = 0;
  }

  std::uint64_t outer_points() const { return outer_points_; }

  std::uint64_t count_range(std::uint64_t begin, std::uint64_t end) const {
    const unsigned lo = torus_ ? 1 : 0;
    const unsigned digits = p_ - lo;
    std::vector<std::uint32_t> x(outer_n_);
    std::uint64_t rem = begin;
    for (std::size_t i = 0; i < outer_n_; ++i) {
      x[i] = static_cast<std::uint32_t>(rem % digits) + lo;
      rem /= digits;
    }
    const std::size_t coeff_size = std::size_t{1} << inner_n_;
    std::vector<std::uint32_t> c1(coeff_size), c0(coeff_size);
    std::vector<std::uint32_t> v1, v0, scratch;
    std::uint64_t total = 0;
    for (std::uint64_t idx = begin; idx < end; ++idx) {
      accumulate(g1_, x, c1);
      accumulate(g0_, x, c0);
      values(c1, v1, scratch);
      values(c0, v0, scratch);
      for (std::uint64_t j = 0; j < inner_points_; ++j) {
        if (!unit_inner_[j]) continue;
        if (v1[j] != 0) {
          if (!torus_ || v0[j] != 0) ++total;
        } else if (v0[j] == 0) {
          total += torus_ ? p_ - 1 : p_;
        }
      }
      for (std::size_t i = 0; i < outer_n_; ++i) {
        if (++x[i] < p_) break;
        x[i] = lo;
      }
    }
    return total;
  }

 private:
  void compile(const MultilinearPoly& g, const std::vector<int>& slot,
               std::vector<SplitTerm>& out) const {
    Integer r;
    for (const auto& [mask, c] : g.terms()) {
      mpz_fdiv_r_ui(r.get_mpz_t(), c.get_mpz_t(), p_);
      if (r == 0) continue;
      SplitTerm t{static_cast<std::uint32_t>(r.get_ui()), {}, 0};
      for (Mask m = mask; m; m &= m - 1) {
        const auto k = static_cast<std::size_t>(slot[static_cast<std::size_t>(std::countr_zero(m))]);
        if (k < outer_n_)
          t.outer.push_back(static_cast<std::uint8_t>(k));
        else
          t.inner |= 1u << (k - outer_n_);
      }
      out.push_back(std::move(t));
    }
  }

  void accumulate(const std::vector<SplitTerm>& terms, const std::vector<std::uint32_t>& x,
                  std::vector<std::uint32_t>& c) const {
    std::fill(c.begin(), c.end(), 0);
    for (const auto& t : terms) {
      std::uint32_t v = t.coeff;
      for (auto k : t.outer) v = v * x[k] % p_;
      c[t.inner] = (c[t.inner] + v) % p_;
    }
  }

  // Coefficients over inner bitmasks -> values at every inner point, with
  // point index sum d_i p^i. One variable is converted per stage.
  void values(const std::vector<std::uint32_t>& coeffs, std::vector<std::uint32_t>& out,
              std::vector<std::uint32_t>& scratch) const {
    out.assign(coeffs.begin(), coeffs.end());
    std::uint64_t low = 1;  // p^i
    for (std::size_t i = 0; i < inner_n_; ++i) {
      const std::uint64_t high = std::uint64_t{1} << (inner_n_ - i - 1);
      scratch.assign(low * p_ * high, 0);
      for (std::uint64_t h = 0; h < high; ++h) {
        const std::uint32_t* a = out.data() + low * (2 * h);
        const std::uint32_t* b = out.data() + low * (2 * h + 1);
        std::uint32_t* dst = scratch.data() + low * p_ * h;
        for (unsigned d = 0; d < p_; ++d)
          for (std::uint64_t l = 0; l < low; ++l) dst[low * d + l] = (a[l] + d * b[l]) % p_;
      }
      out.swap(scratch);
      low *= p_;
    }
  }

  unsigned p_;
  bool torus_;
  std::size_t inner_n_ = 0;
  std::size_t outer_n_ = 0;
  std::uint64_t inner_points_ = 1;
  std::uint64_t outer_points_ = 1;
  std::vector<SplitTerm> g1_, g0_;
  std::vector<std::uint8_t> unit_inner_;
};

std::uint64_t eliminative(const MultilinearPoly& psi, unsigned p, std::size_t pivot,
                          unsigned workers, bool torus) {
  require_counting_prime(p);
  const std::size_t n = psi.var_count();
  if (pivot >= n) fail("pivot index " + std::to_string(pivot) + " out of range");
  if (!psi.depends_on(pivot))
    fail("pivot does not occur in the polynomial (derivative is zero); choose another pivot");
  if (!bounded_power(p, n - 1, kEliminativeBudget))
    over_budget("eliminative count", p, n - 1, kEliminativeBudget);
  if (workers == 0) fail("worker count must be at least 1");

  const EliminationKernel kernel(psi, p, pivot, torus);
  const std::uint64_t outer = kernel.outer_points();
  const std::uint64_t w = std::min<std::uint64_t>(workers, outer);
  if (w <= 1) return kernel.count_range(0, outer);

  std::vector<std::uint64_t> partial(w, 0);
  {
    std::vector<std::jthread> pool;
    for (std::uint64_t k = 0; k < w; ++k)
      pool.emplace_back([&, k] {
        partial[k] = kernel.count_range(outer * k / w, outer * (k + 1) / w);
      });
  }
  std::uint64_t total = 0;
  for (auto v : partial) total += v;
  return total;
}

std::uint64_t projective_from_affine(std::uint64_t affine, unsigned p) {
  if (affine == 0 || (affine - 1) % (p - 1) != 0)
    throw std::logic_error("affine zero count is not 1 mod p-1");
  return (affine - 1) / (p - 1);
}

void require_positive_degree(const MultilinearPoly& psi) {
  const auto d = psi.degree();
  if (!d) fail("polynomial is not homogeneous");
  if (*d == 0) fail("projective count of a degree-0 polynomial");
}

}  // namespace

std::uint64_t count_affine_naive(const MultilinearPoly& psi, unsigned p) {
  return naive_count(psi, p, false);
}

std::uint64_t count_torus_naive(const MultilinearPoly& psi, unsigned p) {
  return naive_count(psi, p, true);
}

std::uint64_t count_common_zeros_naive(std::span<const MultilinearPoly> system, unsigned p) {
  require_counting_prime(p);
  if (system.empty()) fail("empty polynomial system");
  const std::size_t n = system.front().var_count();
  for (const auto& f : system)
    if (f.var_count() != n) fail("variable count mismatch in system");
  if (!bounded_power(p, n, kNaiveBudget)) over_budget("naive count", p, n, kNaiveBudget);
  std::vector<std::vector<ModTerm>> compiled;
  for (const auto& f : system) compiled.push_back(reduce_terms(f, p));
  std::uint64_t zeros = 0;
  for_each_point(n, p, 0, [&](const std::vector<std::uint32_t>& x) {
    for (const auto& terms : compiled)
      if (eval_terms(terms, x, p) != 0) return;
    ++zeros;
  });
  return zeros;
}

std::optional<std::size_t> default_pivot(const MultilinearPoly& psi) {
  Mask used = 0;
  for (const auto& [mask, c] : psi.terms()) used |= mask;
  if (!used) return std::nullopt;
  return static_cast<std::size_t>(std::countr_zero(used));
}

std::uint64_t count_affine_eliminative(const MultilinearPoly& psi, unsigned p,
                                       std::size_t pivot, unsigned workers) {
  return eliminative(psi, p, pivot, workers, false);
}

std::uint64_t count_torus_eliminative(const MultilinearPoly& psi, unsigned p,
                                      std::size_t pivot, unsigned workers) {
  return eliminative(psi, p, pivot, workers, true);
}

std::uint64_t count_torus(const MultilinearPoly& psi, unsigned p, unsigned workers) {
  if (auto pivot = default_pivot(psi)) return count_torus_eliminative(psi, p, *pivot, workers);
  return count_torus_naive(psi, p);
}

std::uint64_t projective_count(const MultilinearPoly& psi, unsigned p, unsigned workers) {
  require_positive_degree(psi);
  return projective_from_affine(count_affine_eliminative(psi, p, *default_pivot(psi), workers), p);
}

CountReport count_report(const MultilinearPoly& psi, unsigned p, CountMethod method,
                         std::optional<std::size_t> pivot, bool torus, unsigned workers) {
  require_counting_prime(p);
  CountReport r;
  r.p = p;
  r.n_vars = psi.var_count();
  const auto chosen = pivot ? pivot : default_pivot(psi);
  if (method == CountMethod::naive || !chosen) {
    r.affine_zeros = count_affine_naive(psi, p);
    if (torus) r.torus_zeros = count_torus_naive(psi, p);
  } else {
    r.affine_zeros = count_affine_eliminative(psi, p, *chosen, workers);
    if (torus) r.torus_zeros = count_torus_eliminative(psi, p, *chosen, workers);
  }
  const auto d = psi.degree();
  if (d && *d >= 1) r.projective_points = projective_from_affine(r.affine_zeros, p);
  return r;
}

StembridgeReport stembridge_identity(const MultilinearPoly& psi, std::size_t pivot, unsigned p) {
  require_positive_degree(psi);
  if (pivot >= psi.var_count() || !psi.depends_on(pivot))
    fail("invalid pivot: the polynomial does not involve that variable");
  const auto [g1_full, g0_full] = psi.split(pivot);
  const MultilinearPoly g1 = g1_full.drop_variable(pivot);
  const MultilinearPoly g0 = g0_full.drop_variable(pivot);
  const std::size_t n = psi.var_count();

  auto vanishes_at_origin = [](const MultilinearPoly& f) { return !f.terms().count(0); };
  auto projective = [&](std::uint64_t affine, bool origin) {
    return (affine - (origin ? 1 : 0)) / (p - 1);
  };

  StembridgeReport r;
  r.p = p;
  r.pivot = pivot;
  r.hypersurface = projective_from_affine(count_affine_naive(psi, p), p);
  r.g1_points = projective(count_affine_naive(g1, p), vanishes_at_origin(g1));
  const MultilinearPoly pair[] = {g1, g0};
  r.intersection = projective(count_common_zeros_naive(pair, p),
                              vanishes_at_origin(g1) && vanishes_at_origin(g0));
  r.base_space = projective_space_size(p, static_cast<long>(n) - 2).get_ui();
  // [1:0:...:0] is on X_F iff G1 vanishes there, i.e. deg G1 >= 1.
  r.cone_vertex = vanishes_at_origin(g1) ? 1 : 0;
  r.holds = r.hypersurface + r.g1_points == p * r.intersection + r.base_space + r.cone_vertex;
  return r;
}

bool stembridge_identity_check(const MultilinearPoly& psi, std::size_t pivot, unsigned p) {
  return stembridge_identity(psi, pivot, p).holds;
}

}  // namespace mjac
