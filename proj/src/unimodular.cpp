#include "unimodular.hpp"

#include "mjac/error.hpp"

namespace mjac::detail {

namespace {
[[noreturn]] void not_unimodular(const std::string& why) {
  throw Error(ErrorKind::not_unimodular, "matrix is not totally unimodular: " + why);
}
}  // namespace

std::optional<std::size_t> find_unit_pivot(const IntMatrix& a, std::size_t col,
                                           std::size_t from) {
  std::optional<std::size_t> other;
  for (std::size_t i = from; i < a.rows(); ++i) {
    const int v = a(i, col);
    if (v == 1 || v == -1) return i;
    if (v != 0 && !other) other = i;
  }
  if (other) not_unimodular("column " + std::to_string(col) + " has no +-1 pivot");
  return std::nullopt;
}

void pivot(IntMatrix& a, std::size_t row, std::size_t col) {
  const int p = a(row, col);
  if (p != 1 && p != -1) not_unimodular("pivot entry " + std::to_string(p));
  if (p == -1)
    for (auto& v : a.row(row)) v = -v;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (i == row) continue;
    const int f = a(i, col);
    if (f == 0) continue;
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const int v = a(i, j) - f * a(row, j);
      if (v < -1 || v > 1) not_unimodular("entry " + std::to_string(v) + " after pivoting");
      a(i, j) = v;
    }
  }
}

std::size_t unit_pivot_rank(IntMatrix a) {
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    auto p = find_unit_pivot(a, col, row);
    if (!p) continue;
    a.swap_rows(row, *p);
    pivot(a, row, col);
    ++row;
  }
  return row;
}

bool is_coloop(const IntMatrix& a, std::size_t col) {
  return unit_pivot_rank(a.without_col(col)) < a.rows();
}

std::vector<std::size_t> reduce_to_standard_form(IntMatrix& a) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    auto p = find_unit_pivot(a, col, row);
    if (!p) continue;
    a.swap_rows(row, *p);
    pivot(a, row, col);
    pivots.push_back(col);
    ++row;
  }
  if (row != a.rows()) fail("matrix does not have full row rank");
  return pivots;
}

std::string canonical_key(IntMatrix a) {
  reduce_to_standard_form(a);
  std::string key;
  key.reserve(a.rows() * a.cols() + 8);
  key += std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + ":";
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (int v : a.row(i)) key.push_back(static_cast<char>('1' + v));
  return key;
}

}  // namespace mjac::detail
