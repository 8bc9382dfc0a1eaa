#include "latsq/stabilizers.hpp"

#include <random>

#include "doctest.h"
#include "latsq/fixtures.hpp"
#include "oracles.hpp"

using namespace latsq;
namespace fx = latsq::fixtures;

TEST_CASE("automorphism group of tiny squares") {
  CHECK(automorphism_group(LatinSquare::from_rows({{1}})).size() == 1);

  // brute force over all of S_3 fixes the expected order for the Z_3 table
  LatinSquare z3 = fx::cayley_z(3);
  uint64_t brute = 0;
  for (const auto& p : oracle::all_permutations(3))
    brute += apply_isotopism(z3, p, p, p) == z3;
  auto group = automorphism_group(z3);
  CHECK(group.size() == brute);
  CHECK(group.size() == 2);
  // group is closed and contains the identity
  CHECK(group[0].is_identity());
}

TEST_CASE("stabilizer searches match brute force on order <= 4 samples") {
  std::mt19937 rng(41);
  std::vector<LatinSquare> samples = {
      fx::cayley_z(2), fx::cayley_z(3), fx::cayley_z(4),
      fx::direct_product(fx::cayley_z(2), fx::cayley_z(2)), fx::neg_sum_table(4),
      fx::one_minus_sum_table(3), fx::neg_sum_table(3)};
  for (const auto& sq : samples) {
    CHECK(automorphism_group(sq).size() ==
          oracle::brute_stabilizer_order(sq, EquivalenceRelation::kIsomorphism));
    CHECK(rrs_autotopism_group_order(sq) ==
          oracle::brute_stabilizer_order(sq, EquivalenceRelation::kRrsIsotopism));
    CHECK(autotopism_group(sq).size() ==
          oracle::brute_stabilizer_order(sq, EquivalenceRelation::kIsotopism));
    CHECK(autoparatopism_group(sq).size() ==
          oracle::brute_stabilizer_order(sq, EquivalenceRelation::kSpecies));
  }
}

TEST_CASE("group chain divisibility") {
  for (const auto& sq : {fx::order8_left(), fx::a1(), fx::sade_counterexample()}) {
    uint64_t iso = autotopism_group(sq).size();
    uint64_t par = autoparatopism_group(sq).size();
    CHECK(par % iso == 0);
    if (is_symmetric(sq)) {
      uint64_t rrs = rrs_autotopism_group_order(sq);
      CHECK(iso % rrs == 0);
    }
  }
}

TEST_CASE("rrs autotopisms embed in the autoparatopism group for symmetric squares") {
  LatinSquare sym = fx::order8_left();
  auto par = autoparatopism_group(sym);
  for (const auto& iso : rrs_autotopism_group(sym)) {
    // the same (sigma,sigma,tau) combined with transpose conjugation
    Paratopism p{ConjugateLabel::C213, iso};
    CHECK(apply_paratopism(sym, p) == sym);
    CHECK(std::find(par.begin(), par.end(), p) != par.end());
  }
}

TEST_CASE("order-9 counterexample: left autotopisms, paratopisms, no semisymmetric form") {
  LatinSquare l = fx::sade_counterexample();
  Permutation tau = fx::sade_tau();

  auto autos = automorphism_group(l);
  bool has_tau = false;
  for (const auto& p : autos) has_tau = has_tau || p == tau;
  CHECK(has_tau);

  CHECK(autoparatopism_group(l).size() == 9);

  auto lefts = left_autotopisms(l);
  CHECK(lefts.size() == 3);
  for (const auto& la : lefts) CHECK(left_autotopism_order(l, la) == 3);

  CHECK_FALSE(has_semisymmetric_form(l));

  // every semisymmetric square trivially has a semisymmetric form and its
  // left autotopisms contain the identity
  LatinSquare semi = fx::a1();
  auto semi_lefts = left_autotopisms(semi);
  bool has_identity = false;
  for (const auto& la : semi_lefts) has_identity = has_identity || la.is_identity();
  CHECK(has_identity);
  CHECK(has_semisymmetric_form(semi));
}

TEST_CASE("principal autotopisms of the order-8 pair and omega membership") {
  LatinSquare left = fx::order8_left();
  auto principal = principal_autotopism_group(left);
  bool found = false;
  for (const auto& iso : principal) {
    if (iso.row.is_identity()) continue;
    CHECK(iso.col == iso.row.inverse());
    CHECK(8 % iso.row.order() == 0);
    CHECK(iso.row.fixed_point_count() == 0);
    CHECK(CycleStructure::of(iso.row) == CycleStructure::of(iso.col));
    if (CycleStructure::of(iso.row).str() == "2^4") found = true;
  }
  CHECK(found);
  CHECK(omega_membership(left));
  CHECK(omega_membership(fx::order8_right()));

  // abelian (pairwise commuting)
  for (const auto& x : principal)
    for (const auto& y : principal) CHECK(x.then(y) == y.then(x));
}

TEST_CASE("isotopisms_between finds the fixture witnesses") {
  auto isos = isotopisms_between(fx::order8_left(), fx::order8_right());
  CHECK(!isos.empty());
  CHECK(std::find(isos.begin(), isos.end(), fx::order8_witness()) != isos.end());
  for (const auto& iso : isos)
    CHECK(apply_isotopism(fx::order8_left(), iso) == fx::order8_right());

  // count matches the coset size |autotopism group|
  CHECK(isos.size() == autotopism_group(fx::order8_left()).size());
}
