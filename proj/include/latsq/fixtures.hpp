#pragma once

#include "latsq/latin_square.hpp"

namespace latsq::fixtures {

// Pair of isotopic symmetric order-8 squares lying in distinct rrs-isotopism
// classes (the right square has a symbol occurring six times on the diagonal).
LatinSquare order8_left();
LatinSquare order8_right();
Isotopism order8_witness();  // maps left to right

// Unipotent symmetric order-12 square and the variant with four intercalates
// flipped; isotopic but not rrs-isotopic.
LatinSquare a12();
LatinSquare b12();
Isotopism a12_to_b12();

// Idempotent semisymmetric order-9 squares that are isotopic while their
// prolongations land in different species.
LatinSquare order9_idem_left();
LatinSquare order9_idem_right();
Isotopism order9_idem_witness();

// Order-9 square with exactly three left autotopisms, all of order 3, and no
// semisymmetric form; its autoparatopism group has order 9.
LatinSquare sade_counterexample();
Permutation sade_tau();  // (456)(789)

// Diagonal semisymmetric order-7 squares, isotopic but with 1 and 7
// idempotent elements respectively.
LatinSquare a1();
LatinSquare a2();
Isotopism a1_to_a2();

// Cyclic constructions on symbols 1..n: entry at (i,j) is c-i-j mod n.
LatinSquare cyclic_shift_table(int n, int c);
inline LatinSquare neg_sum_table(int n) { return cyclic_shift_table(n, 0); }      // -i-j
inline LatinSquare one_minus_sum_table(int n) { return cyclic_shift_table(n, 1); } // 1-i-j

LatinSquare cayley_z(int n);  // Z_n addition table, L[i][j] = i+j mod n

// Idempotent totally symmetric square of order 7 (the Steiner quasigroup of
// the unique triple system on 7 points, blocks {i, i+1, i+3} mod 7).
LatinSquare steiner7();

// Direct product on the symbol pairing (a,b) -> a*m + b, m = order of rhs.
LatinSquare direct_product(const LatinSquare& lhs, const LatinSquare& rhs);

}  // namespace latsq::fixtures
