#pragma once

#include <initializer_list>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "mjac/matroid.hpp"
#include "mjac/polynomial.hpp"

namespace testing {

template <class T = int>
mjac::Matrix<T> rows_of(std::initializer_list<std::initializer_list<int>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r ? rows.begin()->size() : 0;
  mjac::Matrix<T> a(r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    std::size_t j = 0;
    for (int v : row) a(i, j++) = T(v);
    ++i;
  }
  return a;
}

// Space-separated label lists, one per monomial, all with coefficient 1.
inline mjac::MultilinearPoly poly_from_supports(const std::vector<std::string>& ground,
                                                std::initializer_list<std::string_view> supports) {
  mjac::MultilinearPoly p(ground.size());
  for (auto s : supports) {
    std::istringstream in{std::string(s)};
    mjac::Mask mask = 0;
    for (std::string label; in >> label;)
      for (std::size_t i = 0; i < ground.size(); ++i)
        if (ground[i] == label) mask |= mjac::bit(i);
    p.add_term(mask, 1);
  }
  return p;
}

}  // namespace testing
