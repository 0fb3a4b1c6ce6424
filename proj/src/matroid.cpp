#include "mjac/matroid.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <unordered_set>

#include "mjac/error.hpp"
#include "unimodular.hpp"

namespace mjac {

namespace {

struct DisjointSets {
  std::vector<std::size_t> parent;
  explicit DisjointSets(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

void require_index(const RegularMatroid& m, std::size_t e) {
  if (e >= m.size()) fail("unknown element index " + std::to_string(e));
}

void require_bitmask_width(std::size_t n) {
  if (n > kMaxGround)
    fail("ground set of " + std::to_string(n) + " elements exceeds the " +
         std::to_string(kMaxGround) + "-element limit");
}

std::vector<std::string> without(const std::vector<std::string>& v, std::size_t i) {
  std::vector<std::string> out = v;
  out.erase(out.begin() + static_cast<std::ptrdiff_t>(i));
  return out;
}

// Depth-first delete/contract search. `a` represents the current minor on
// `cols` (original indices) with full row rank.
void collect_bases(IntMatrix a, std::vector<std::size_t> cols, Mask chosen,
                   std::vector<Mask>& out) {
  while (!cols.empty()) {
    if (a.rows() == 0) break;  // everything left is a loop
    if (a.rows() == cols.size()) {
      for (auto c : cols) chosen |= bit(c);
      cols.clear();
      a = IntMatrix(0, 0);
      break;
    }
    const std::size_t c = cols.front();
    auto row = detail::find_unit_pivot(a, 0);
    if (!row) {  // loop
      a = a.without_col(0);
      cols.erase(cols.begin());
      continue;
    }
    const bool coloop = detail::is_coloop(a, 0);
    detail::pivot(a, *row, 0);
    cols.erase(cols.begin());
    if (!coloop) collect_bases(a.without_col(0), cols, chosen, out);
    a = a.without_row(*row).without_col(0);
    chosen |= bit(c);
  }
  out.push_back(chosen);
}

}  // namespace

RegularMatroid::RegularMatroid(IntMatrix matrix, std::vector<std::string> ground)
    : matrix_(std::move(matrix)), ground_(std::move(ground)) {
  if (matrix_.cols() != ground_.size())
    fail("matrix has " + std::to_string(matrix_.cols()) + " columns but the ground has " +
         std::to_string(ground_.size()) + " labels");
  for (std::size_t i = 0; i < matrix_.rows(); ++i)
    for (int v : matrix_.row(i))
      if (v < -1 || v > 1) fail("matrix entry " + std::to_string(v) + " is not in {-1,0,1}");
  std::set<std::string_view> seen;
  for (const auto& g : ground_) {
    if (g.empty()) fail("empty element label");
    if (!seen.insert(g).second) fail("duplicate element label '" + g + "'");
  }
  if (exact_rank(to_big(matrix_)) != matrix_.rows())
    fail("matrix does not have full row rank");
}

std::size_t RegularMatroid::index_of(std::string_view label) const {
  auto it = std::find(ground_.begin(), ground_.end(), label);
  if (it == ground_.end()) fail("unknown element '" + std::string(label) + "'");
  return static_cast<std::size_t>(it - ground_.begin());
}

bool BasisSet::contains(Mask m) const {
  return std::binary_search(members.begin(), members.end(), m);
}

LengthMap::LengthMap(std::vector<unsigned> values) : values_(std::move(values)) {
  for (unsigned v : values_)
    if (v < 1) fail("lengths must be positive integers");
}

unsigned long LengthMap::total() const {
  return std::accumulate(values_.begin(), values_.end(), 0UL);
}

unsigned height(const LengthMap& lam) {
  if (lam.size() == 0) fail("height of a length map on an empty ground set");
  return *std::max_element(lam.values().begin(), lam.values().end());
}

std::vector<std::string> ExpandedGround::labels() const {
  std::vector<std::string> out;
  for (const auto& g : groups) out.insert(out.end(), g.begin(), g.end());
  return out;
}

std::vector<std::size_t> ExpandedGround::offsets() const {
  std::vector<std::size_t> out;
  std::size_t at = 0;
  for (const auto& g : groups) {
    out.push_back(at);
    at += g.size();
  }
  return out;
}

RegularMatroid incidence_matroid(const Graph& g) {
  g.validate();
  DisjointSets comp(g.vertex_count);
  for (const auto& e : g.edges) comp.unite(e.tail, e.head);
  // Drop the highest-index vertex of each component.
  std::vector<std::size_t> top(g.vertex_count, 0);
  for (std::size_t v = 0; v < g.vertex_count; ++v) top[comp.find(v)] = v;
  std::vector<std::size_t> row_of(g.vertex_count, SIZE_MAX);
  std::size_t rows = 0;
  for (std::size_t v = 0; v < g.vertex_count; ++v)
    if (top[comp.find(v)] != v) row_of[v] = rows++;

  IntMatrix a(rows, g.edges.size());
  for (std::size_t j = 0; j < g.edges.size(); ++j) {
    const auto& e = g.edges[j];
    if (e.tail == e.head) continue;
    if (row_of[e.tail] != SIZE_MAX) a(row_of[e.tail], j) = 1;
    if (row_of[e.head] != SIZE_MAX) a(row_of[e.head], j) = -1;
  }
  return RegularMatroid(std::move(a), g.edge_labels());
}

BasisSet enumerate_bases(const RegularMatroid& m) {
  require_bitmask_width(m.size());
  std::vector<std::size_t> cols(m.size());
  std::iota(cols.begin(), cols.end(), std::size_t{0});
  BasisSet out{m.size(), m.rank(), {}};
  collect_bases(m.matrix(), std::move(cols), 0, out.members);
  std::sort(out.members.begin(), out.members.end());
  return out;
}

RegularMatroid dual(const RegularMatroid& m) {
  IntMatrix a = m.matrix();
  const auto basic = detail::reduce_to_standard_form(a);
  const std::size_t n = m.size();
  std::vector<bool> is_basic(n, false);
  for (auto c : basic) is_basic[c] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < n; ++c)
    if (!is_basic[c]) free.push_back(c);

  // [I | D] -> [-D^T | I]
  IntMatrix d(free.size(), n);
  for (std::size_t j = 0; j < free.size(); ++j) {
    d(j, free[j]) = 1;
    for (std::size_t i = 0; i < basic.size(); ++i) d(j, basic[i]) = -a(i, free[j]);
  }
  return RegularMatroid(std::move(d), m.ground());
}

RegularMatroid delete_element(const RegularMatroid& m, std::size_t e) {
  require_index(m, e);
  IntMatrix a = m.matrix();
  // Deleting a coloop is contracting it.
  if (detail::is_coloop(a, e)) {
    const auto row = detail::find_unit_pivot(a, e);
    detail::pivot(a, *row, e);
    a = a.without_row(*row);
  }
  return RegularMatroid(a.without_col(e), without(m.ground(), e));
}

RegularMatroid delete_element(const RegularMatroid& m, std::string_view label) {
  return delete_element(m, m.index_of(label));
}

RegularMatroid contract_element(const RegularMatroid& m, std::size_t e) {
  require_index(m, e);
  IntMatrix a = m.matrix();
  auto row = detail::find_unit_pivot(a, e);
  if (!row) fail("loop contraction: element '" + m.ground()[e] + "' is a loop");
  detail::pivot(a, *row, e);
  return RegularMatroid(a.without_row(*row).without_col(e), without(m.ground(), e));
}

RegularMatroid contract_element(const RegularMatroid& m, std::string_view label) {
  return contract_element(m, m.index_of(label));
}

RegularMatroid restrict_to(const RegularMatroid& m, const std::vector<std::size_t>& keep) {
  std::vector<bool> kept(m.size(), false);
  for (auto k : keep) {
    require_index(m, k);
    kept[k] = true;
  }
  RegularMatroid out = m;
  for (std::size_t e = m.size(); e-- > 0;)
    if (!kept[e]) out = delete_element(out, e);
  return out;
}

ElementClass element_class(const RegularMatroid& m, std::size_t e) {
  require_index(m, e);
  IntMatrix a = m.matrix();
  if (!detail::find_unit_pivot(a, e)) return ElementClass::loop;
  return detail::is_coloop(a, e) ? ElementClass::coloop : ElementClass::ordinary;
}

ElementClass element_class(const RegularMatroid& m, std::string_view label) {
  return element_class(m, m.index_of(label));
}

std::vector<std::vector<std::size_t>> irreducible_components(const RegularMatroid& m) {
  IntMatrix a = m.matrix();
  const auto basic = detail::reduce_to_standard_form(a);
  DisjointSets sets(m.size());
  // Fundamental circuit of a non-basis column c: c plus the basis elements
  // whose rows are nonzero in column c.
  for (std::size_t c = 0; c < m.size(); ++c)
    for (std::size_t i = 0; i < basic.size(); ++i)
      if (basic[i] != c && a(i, c) != 0) sets.unite(c, basic[i]);

  std::vector<std::vector<std::size_t>> groups;
  std::vector<std::size_t> slot(m.size(), SIZE_MAX);
  for (std::size_t e = 0; e < m.size(); ++e) {
    const auto root = sets.find(e);
    if (slot[root] == SIZE_MAX) {
      slot[root] = groups.size();
      groups.emplace_back();
    }
    groups[slot[root]].push_back(e);
  }
  return groups;
}

RegularMatroid direct_sum(const RegularMatroid& a, const RegularMatroid& b) {
  IntMatrix out(a.rank() + b.rank(), a.size() + b.size());
  for (std::size_t i = 0; i < a.rank(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) out(i, j) = a.matrix()(i, j);
  for (std::size_t i = 0; i < b.rank(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      out(a.rank() + i, a.size() + j) = b.matrix()(i, j);
  auto ground = a.ground();
  ground.insert(ground.end(), b.ground().begin(), b.ground().end());
  return RegularMatroid(std::move(out), std::move(ground));
}

RegularMatroid coloop_matroid(std::size_t k) {
  IntMatrix id(k, k);
  std::vector<std::string> ground;
  for (std::size_t i = 0; i < k; ++i) {
    id(i, i) = 1;
    ground.push_back("c" + std::to_string(i + 1));
  }
  return RegularMatroid(std::move(id), std::move(ground));
}

ExpandedGround expanded_ground(const RegularMatroid& m, const LengthMap& lam) {
  if (lam.size() != m.size()) fail("length map size does not match the ground set");
  ExpandedGround out;
  for (std::size_t e = 0; e < m.size(); ++e) {
    std::vector<std::string> group{m.ground()[e]};
    for (unsigned k = 1; k < lam[e]; ++k)
      group.push_back(m.ground()[e] + "#" + std::to_string(k));
    out.groups.push_back(std::move(group));
  }
  return out;
}

ExpandedMatroid expand(const RegularMatroid& m, const LengthMap& lam) {
  auto ground = expanded_ground(m, lam);
  require_bitmask_width(lam.total());
  const RegularMatroid star = dual(m);
  std::vector<std::size_t> cols;
  for (std::size_t e = 0; e < m.size(); ++e)
    for (unsigned k = 0; k < lam[e]; ++k) cols.push_back(e);
  RegularMatroid parallel(star.matrix().select_cols(cols), ground.labels());
  return {dual(parallel), std::move(ground)};
}

BasisSet bases_of_expansion_def(const RegularMatroid& m, const LengthMap& lam) {
  const auto ground = expanded_ground(m, lam);
  const std::size_t total = lam.total();
  require_bitmask_width(total);
  const auto offsets = ground.offsets();
  const BasisSet base = enumerate_bases(m);

  BasisSet out{total, total - (m.size() - m.rank()), {}};
  for (Mask b : base.members) {
    std::vector<std::size_t> cobasis;
    for (std::size_t e = 0; e < m.size(); ++e)
      if (!(b & bit(e))) cobasis.push_back(e);
    // Odometer over one removed element per cobasis class.
    std::vector<unsigned> pick(cobasis.size(), 0);
    while (true) {
      Mask removed = 0;
      for (std::size_t i = 0; i < cobasis.size(); ++i)
        removed |= bit(offsets[cobasis[i]] + pick[i]);
      out.members.push_back(full_mask(total) & ~removed);
      std::size_t i = 0;
      while (i < pick.size() && ++pick[i] == lam[cobasis[i]]) pick[i++] = 0;
      if (i == pick.size()) break;
    }
  }
  std::sort(out.members.begin(), out.members.end());
  out.members.erase(std::unique(out.members.begin(), out.members.end()), out.members.end());
  return out;
}

bool check_basis_exchange(const BasisSet& family) {
  if (family.members.empty()) return false;
  std::unordered_set<Mask> lookup(family.members.begin(), family.members.end());
  const Mask all = full_mask(family.n);
  // replace[k][x]: elements y with (B_k - x) + y in the family.
  std::vector<std::vector<Mask>> replace(family.size(), std::vector<Mask>(family.n, 0));
  for (std::size_t k = 0; k < family.size(); ++k) {
    const Mask b = family.members[k];
    for (Mask xs = b; xs; xs &= xs - 1) {
      const auto x = static_cast<std::size_t>(std::countr_zero(xs));
      for (Mask ys = all & ~b; ys; ys &= ys - 1) {
        const auto y = static_cast<std::size_t>(std::countr_zero(ys));
        if (lookup.count((b & ~bit(x)) | bit(y))) replace[k][x] |= bit(y);
      }
    }
  }
  for (std::size_t k1 = 0; k1 < family.size(); ++k1) {
    const Mask b1 = family.members[k1];
    for (const Mask b2 : family.members) {
      const Mask gain = b2 & ~b1;
      for (Mask xs = b1 & ~b2; xs; xs &= xs - 1) {
        const auto x = static_cast<std::size_t>(std::countr_zero(xs));
        if (!(replace[k1][x] & gain)) return false;
      }
    }
  }
  return true;
}

bool bases_have_unit_determinant(const RegularMatroid& m, const BasisSet& bases) {
  const BigMatrix a = to_big(m.matrix());
  for (Mask b : bases.members) {
    std::vector<std::size_t> cols;
    for (std::size_t e = 0; e < m.size(); ++e)
      if (b & bit(e)) cols.push_back(e);
    if (cols.size() != m.rank()) return false;
    const Integer d = determinant(a.select_cols(cols));
    if (d != 1 && d != -1) return false;
  }
  return true;
}

bool is_totally_unimodular(const IntMatrix& a) {
  if (a.rows() > 16 || a.cols() > 16)
    throw Error(ErrorKind::budget, "exhaustive unimodularity check is limited to 16x16");
  const std::size_t r = a.rows();
  const std::size_t c = a.cols();
  for (Mask rows = 1; rows < (Mask{1} << r); ++rows) {
    const auto k = static_cast<std::size_t>(std::popcount(rows));
    for (Mask cols = 1; cols < (Mask{1} << c); ++cols) {
      if (static_cast<std::size_t>(std::popcount(cols)) != k) continue;
      BigMatrix sub(k, k);
      std::size_t si = 0;
      for (std::size_t i = 0; i < r; ++i) {
        if (!(rows & bit(i))) continue;
        std::size_t sj = 0;
        for (std::size_t j = 0; j < c; ++j)
          if (cols & bit(j)) sub(si, sj++) = a(i, j);
        ++si;
      }
      const Integer d = determinant(sub);
      if (d < -1 || d > 1) return false;
    }
  }
  return true;
}

}  // namespace mjac
