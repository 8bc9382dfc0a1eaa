#include "latsq/fixtures.hpp"

namespace latsq::fixtures {

LatinSquare order8_left() {
  return LatinSquare::from_rows({{1, 2, 3, 4, 5, 6, 7, 8},
                                 {2, 1, 4, 3, 6, 5, 8, 7},
                                 {3, 4, 1, 2, 7, 8, 5, 6},
                                 {4, 3, 2, 1, 8, 7, 6, 5},
                                 {5, 6, 7, 8, 2, 1, 3, 4},
                                 {6, 5, 8, 7, 1, 3, 4, 2},
                                 {7, 8, 5, 6, 3, 4, 2, 1},
                                 {8, 7, 6, 5, 4, 2, 1, 3}});
}

LatinSquare order8_right() {
  return LatinSquare::from_rows({{1, 2, 3, 4, 5, 6, 7, 8},
                                 {2, 1, 4, 3, 6, 5, 8, 7},
                                 {3, 4, 1, 2, 7, 8, 5, 6},
                                 {4, 3, 2, 1, 8, 7, 6, 5},
                                 {5, 6, 7, 8, 1, 2, 4, 3},
                                 {6, 5, 8, 7, 2, 3, 1, 4},
                                 {7, 8, 5, 6, 4, 1, 3, 2},
                                 {8, 7, 6, 5, 3, 4, 2, 1}});
}

Isotopism order8_witness() {
  return Isotopism(Permutation::from_cycles(8, {{1, 3, 2, 4}, {7, 8}}),
                   Permutation::from_cycles(8, {{1, 2}, {5, 8, 6, 7}}),
                   Permutation::from_cycles(8, {{1, 4, 2, 3}, {5, 6}}));
}

LatinSquare a12() {
  return LatinSquare::from_rows({{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12},
                                 {2, 1, 4, 3, 6, 5, 8, 7, 10, 9, 12, 11},
                                 {3, 4, 1, 2, 7, 9, 5, 11, 8, 12, 6, 10},
                                 {4, 3, 2, 1, 9, 7, 11, 5, 12, 8, 10, 6},
                                 {5, 6, 7, 9, 1, 2, 10, 12, 3, 11, 4, 8},
                                 {6, 5, 9, 7, 2, 1, 12, 10, 11, 3, 8, 4},
                                 {7, 8, 5, 11, 10, 12, 1, 2, 6, 4, 3, 9},
                                 {8, 7, 11, 5, 12, 10, 2, 1, 4, 6, 9, 3},
                                 {9, 10, 8, 12, 3, 11, 6, 4, 1, 2, 5, 7},
                                 {10, 9, 12, 8, 11, 3, 4, 6, 2, 1, 7, 5},
                                 {11, 12, 6, 10, 4, 8, 3, 9, 5, 7, 1, 2},
                                 {12, 11, 10, 6, 8, 4, 9, 3, 7, 5, 2, 1}});
}

LatinSquare b12() {
  // a12 with the four 2x2 subsquares at rows/cols {7,8}x{9,10}, {9,10}x{7,8},
  // {9,10}x{11,12}, {11,12}x{9,10} (1-based) replaced by their other filling.
  LatinSquare a = a12();
  std::vector<uint8_t> cells = a.cells();
  auto flip = [&](int r1, int r2, int c1, int c2) {
    --r1; --r2; --c1; --c2;
    std::swap(cells[r1 * 12 + c1], cells[r1 * 12 + c2]);
    std::swap(cells[r2 * 12 + c1], cells[r2 * 12 + c2]);
  };
  flip(7, 8, 9, 10);
  flip(9, 10, 7, 8);
  flip(9, 10, 11, 12);
  flip(11, 12, 9, 10);
  return LatinSquare::from_cells(12, std::move(cells));
}

Isotopism a12_to_b12() {
  Permutation alpha = Permutation::from_cycles(12, {{3, 10, 7, 6, 11, 4, 9, 8, 5, 12}});
  Permutation gamma =
      Permutation::from_cycles(12, {{1, 2}, {3, 9, 7, 5, 11}, {4, 10, 8, 6, 12}});
  return Isotopism(alpha, gamma, gamma);
}

LatinSquare order9_idem_left() {
  return LatinSquare::from_rows({{1, 3, 2, 7, 8, 9, 4, 5, 6},
                                 {3, 2, 1, 8, 9, 7, 6, 4, 5},
                                 {2, 1, 3, 9, 7, 8, 5, 6, 4},
                                 {7, 8, 9, 4, 6, 5, 1, 2, 3},
                                 {8, 9, 7, 6, 5, 4, 3, 1, 2},
                                 {9, 7, 8, 5, 4, 6, 2, 3, 1},
                                 {4, 6, 5, 1, 3, 2, 7, 9, 8},
                                 {5, 4, 6, 2, 1, 3, 9, 8, 7},
                                 {6, 5, 4, 3, 2, 1, 8, 7, 9}});
}

LatinSquare order9_idem_right() {
  return LatinSquare::from_rows({{1, 3, 2, 7, 8, 9, 5, 6, 4},
                                 {3, 2, 1, 8, 9, 7, 4, 5, 6},
                                 {2, 1, 3, 9, 7, 8, 6, 4, 5},
                                 {9, 7, 8, 4, 6, 5, 1, 2, 3},
                                 {7, 8, 9, 6, 5, 4, 3, 1, 2},
                                 {8, 9, 7, 5, 4, 6, 2, 3, 1},
                                 {4, 6, 5, 2, 1, 3, 7, 9, 8},
                                 {5, 4, 6, 3, 2, 1, 9, 8, 7},
                                 {6, 5, 4, 1, 3, 2, 8, 7, 9}});
}

Isotopism order9_idem_witness() {
  return Isotopism(Permutation::from_cycles(9, {{7, 8, 9}}),
                   Permutation::from_cycles(9, {{4, 6, 5}}),
                   Permutation::from_cycles(9, {{4, 5, 6}, {7, 9, 8}}));
}

LatinSquare sade_counterexample() {
  return LatinSquare::from_rows({{2, 1, 3, 5, 6, 4, 9, 7, 8},
                                 {1, 3, 2, 6, 4, 5, 8, 9, 7},
                                 {3, 2, 1, 7, 8, 9, 5, 6, 4},
                                 {5, 4, 8, 2, 7, 1, 6, 3, 9},
                                 {6, 5, 9, 1, 2, 8, 7, 4, 3},
                                 {4, 6, 7, 9, 1, 2, 3, 8, 5},
                                 {7, 8, 6, 4, 9, 3, 1, 5, 2},
                                 {8, 9, 4, 3, 5, 7, 2, 1, 6},
                                 {9, 7, 5, 8, 3, 6, 4, 2, 1}});
}

Permutation sade_tau() { return Permutation::from_cycles(9, {{4, 5, 6}, {7, 8, 9}}); }

LatinSquare a1() {
  return LatinSquare::from_rows({{1, 3, 2, 5, 4, 7, 6},
                                 {3, 4, 1, 2, 6, 5, 7},
                                 {2, 1, 5, 7, 3, 6, 4},
                                 {5, 2, 7, 6, 1, 4, 3},
                                 {4, 6, 3, 1, 7, 2, 5},
                                 {7, 5, 6, 4, 2, 3, 1},
                                 {6, 7, 4, 3, 5, 1, 2}});
}

LatinSquare a2() {
  return LatinSquare::from_rows({{1, 7, 6, 2, 3, 4, 5},
                                 {4, 2, 5, 3, 6, 7, 1},
                                 {5, 4, 3, 7, 2, 1, 6},
                                 {6, 1, 2, 4, 7, 5, 3},
                                 {7, 3, 1, 6, 5, 2, 4},
                                 {3, 5, 7, 1, 4, 6, 2},
                                 {2, 6, 4, 5, 1, 3, 7}});
}

Isotopism a1_to_a2() {
  return Isotopism(Permutation::from_cycles(7, {{2, 6, 5}, {3, 7, 4}}),
                   Permutation::from_cycles(7, {{2, 5, 6}, {3, 4, 7}}),
                   Permutation(7));
}

LatinSquare cyclic_shift_table(int n, int c) {
  std::vector<uint8_t> cells(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      cells[i * n + j] = static_cast<uint8_t>((((c - i - j) % n) + 2 * n) % n);
  return LatinSquare::from_cells(n, std::move(cells));
}

LatinSquare cayley_z(int n) {
  std::vector<uint8_t> cells(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) cells[i * n + j] = static_cast<uint8_t>((i + j) % n);
  return LatinSquare::from_cells(n, std::move(cells));
}

LatinSquare steiner7() {
  std::vector<uint8_t> cells(49, 0);
  for (int i = 0; i < 7; ++i) cells[i * 7 + i] = static_cast<uint8_t>(i);
  for (int i = 0; i < 7; ++i) {
    int a = i, b = (i + 1) % 7, c = (i + 3) % 7;
    cells[a * 7 + b] = cells[b * 7 + a] = static_cast<uint8_t>(c);
    cells[a * 7 + c] = cells[c * 7 + a] = static_cast<uint8_t>(b);
    cells[b * 7 + c] = cells[c * 7 + b] = static_cast<uint8_t>(a);
  }
  return LatinSquare::from_cells(7, std::move(cells));
}

LatinSquare direct_product(const LatinSquare& lhs, const LatinSquare& rhs) {
  const int n = lhs.order(), m = rhs.order();
  const int nm = n * m;
  std::vector<uint8_t> cells(static_cast<size_t>(nm) * nm);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < m; ++d)
          cells[(a * m + b) * nm + (c * m + d)] =
              static_cast<uint8_t>(lhs.at(a, c) * m + rhs.at(b, d));
  return LatinSquare::from_cells(nm, std::move(cells));
}

}  // namespace latsq::fixtures
