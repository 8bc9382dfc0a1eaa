#pragma once

#include <cstdint>
#include <vector>

#include "latsq/latin_square.hpp"
#include "latsq/permutation.hpp"

namespace latsq {

// All permutations commuting with p, in a deterministic order.
std::vector<Permutation> centralizer(const Permutation& p);

// All g with apply_isotopism(a, g, g, g) == b. Empty when not isomorphic.
std::vector<Permutation> isomorphisms_between(const LatinSquare& a, const LatinSquare& b);
// Stabiliser under isomorphism, as an explicit group (closed, contains e).
std::vector<Permutation> automorphism_group(const LatinSquare& sq);
uint64_t automorphism_group_order(const LatinSquare& sq);

// All isotopisms mapping a to b.
std::vector<Isotopism> isotopisms_between(const LatinSquare& a, const LatinSquare& b);
std::vector<Isotopism> autotopism_group(const LatinSquare& sq);

// Isotopisms with equal row and column components mapping a to b.
std::vector<Isotopism> rrs_isotopisms_between(const LatinSquare& a, const LatinSquare& b);
std::vector<Isotopism> rrs_autotopism_group(const LatinSquare& sq);
uint64_t rrs_autotopism_group_order(const LatinSquare& sq);

std::vector<Paratopism> autoparatopism_group(const LatinSquare& sq);

// Autotopisms (alpha,beta,e). Requires a symmetric square; the returned group
// is abelian and each member has beta = alpha^-1 with ord(alpha) dividing n.
std::vector<Isotopism> principal_autotopism_group(const LatinSquare& sq);

// Isotopisms from sq to its (3,1,2)-conjugate.
std::vector<Isotopism> left_autotopisms(const LatinSquare& sq);
// Order of a left autotopism as an element of the autoparatopism group.
long left_autotopism_order(const LatinSquare& sq, const Isotopism& la);

// True iff some left autotopism (alpha,beta,gamma) has ord of the composite
// "apply alpha, then beta, then gamma" not divisible by 3; equivalently, some
// member of the square's species is semisymmetric.
bool has_semisymmetric_form(const LatinSquare& sq);

// True iff the symmetric square has an autotopism (theta, theta^-1, e) with
// theta semiregular of prime order.
bool omega_membership(const LatinSquare& sq);

}  // namespace latsq
