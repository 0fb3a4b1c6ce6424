// Generated by: python3 tests/oracles/fp_oracle.py > tests/data/fp_fixtures.hpp
#pragma once

#include <cstdint>
#include <string_view>

namespace fixtures {

struct Count {
  std::string_view graph;
  unsigned p;
  std::uint64_t affine;
  std::uint64_t torus;
};

inline constexpr Count kCounts[] = {
    {"C2", 2, 2, 1},
    {"C2", 3, 3, 2},
    {"C2", 5, 5, 4},
    {"C2", 7, 7, 6},
    {"C3", 2, 4, 0},
    {"C3", 3, 9, 2},
    {"C3", 5, 25, 12},
    {"C3", 7, 49, 30},
    {"diamond", 2, 16, 1},
    {"diamond", 3, 81, 10},
    {"diamond", 5, 625, 172},
    {"diamond", 7, 2401, 966},
    {"K4", 2, 36, 1},
    {"K4", 3, 261, 30},
    {"K4", 5, 3225, 940},
    {"K4", 7, 17101, 7146},
    {"banana3", 2, 4, 0},
    {"banana3", 3, 9, 2},
    {"banana3", 5, 25, 12},
    {"banana3", 7, 49, 30},
    {"banana10", 2, 1014, 1},
    {"banana10", 3, 53247, 342},
    {"banana10", 5, 6305325, 209716},
    {"banana10", 7, 129870139, 8638026},
};

struct Trees {
  std::string_view graph;
  std::uint64_t count;
};

inline constexpr Trees kSpanningTrees[] = {
    {"C2", 2},
    {"C3", 3},
    {"diamond", 8},
    {"K4", 16},
    {"banana3", 3},
    {"banana10", 10},
};

// Cobases of the diamond as edge labels, one Psi monomial each.
inline constexpr std::string_view kDiamondCobases[] = {
    "e1 e3",
    "e1 e4",
    "e1 e5",
    "e2 e3",
    "e2 e4",
    "e2 e5",
    "e3 e5",
    "e4 e5",
};

struct Empirical {
  std::string_view graph;
  unsigned p;
  unsigned height;
  std::uint64_t hits;  // out of height^n
};

inline constexpr Empirical kEmpirical[] = {
    {"C2", 2, 2, 2},
    {"C2", 2, 4, 8},
    {"C2", 2, 6, 18},
    {"C2", 2, 7, 25},
    {"C2", 3, 3, 3},
    {"C2", 3, 6, 12},
    {"C2", 3, 7, 16},
    {"C2", 3, 9, 27},
    {"diamond", 2, 2, 16},
    {"diamond", 2, 4, 512},
    {"diamond", 2, 6, 3888},
    {"diamond", 2, 7, 7975},
    {"diamond", 3, 3, 81},
    {"diamond", 3, 6, 2592},
    {"diamond", 3, 7, 5250},
    {"diamond", 3, 9, 19683},
};

}  // namespace fixtures
