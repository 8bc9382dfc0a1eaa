#include "latsq/canonical.hpp"

#include <random>
#include <set>

#include "doctest.h"
#include "latsq/fixtures.hpp"
#include "latsq/generate.hpp"
#include "latsq/stabilizers.hpp"
#include "oracles.hpp"

using namespace latsq;
namespace fx = latsq::fixtures;

namespace {
Permutation random_perm(int n, std::mt19937& rng) {
  std::vector<uint8_t> img(n);
  for (int i = 0; i < n; ++i) img[i] = static_cast<uint8_t>(i);
  std::shuffle(img.begin(), img.end(), rng);
  return Permutation::from_images(img);
}
}  // namespace

TEST_CASE("canonical forms match the brute-force minimum on all order-3 squares") {
  gen_all_of_order(3, [&](const LatinSquare& sq) {
    for (EquivalenceRelation rel :
         {EquivalenceRelation::kIsomorphism, EquivalenceRelation::kRrsIsotopism,
          EquivalenceRelation::kIsotopism, EquivalenceRelation::kSpecies}) {
      CHECK(oracle::key(canonical_form(sq, rel)) == oracle::brute_canonical(sq, rel));
    }
  });
}

TEST_CASE("canonical forms match brute force on sampled order-4 squares") {
  std::mt19937 rng(97);
  int step = 0;
  gen_all_of_order(4, [&](const LatinSquare& sq) {
    if (step++ % 37 != 0) return;  // 16 spot checks; the full sweep runs in acceptance
    for (EquivalenceRelation rel :
         {EquivalenceRelation::kIsomorphism, EquivalenceRelation::kRrsIsotopism,
          EquivalenceRelation::kIsotopism, EquivalenceRelation::kSpecies}) {
      CHECK(oracle::key(canonical_form(sq, rel)) == oracle::brute_canonical(sq, rel));
    }
  });
}

TEST_CASE("canonical form is invariant, idempotent, and class-deciding") {
  std::mt19937 rng(13);
  LatinSquare sq = fx::order8_left();
  LatinSquare canon = canonical_form(sq, EquivalenceRelation::kIsomorphism);
  for (int trial = 0; trial < 100; ++trial) {
    Permutation rho = random_perm(8, rng);
    LatinSquare image = apply_isotopism(sq, rho, rho, rho);
    CHECK(canonical_form(image, EquivalenceRelation::kIsomorphism) == canon);
  }
  for (EquivalenceRelation rel :
       {EquivalenceRelation::kIsomorphism, EquivalenceRelation::kRrsIsotopism,
        EquivalenceRelation::kIsotopism, EquivalenceRelation::kSpecies}) {
    LatinSquare c = canonical_form(sq, rel);
    CHECK(canonical_form(c, rel) == c);
  }
}

TEST_CASE("the order-8 pair separates exactly below isotopism") {
  LatinSquare a = fx::order8_left(), b = fx::order8_right();
  CHECK(canonical_form(a, EquivalenceRelation::kIsotopism) ==
        canonical_form(b, EquivalenceRelation::kIsotopism));
  CHECK(canonical_form(a, EquivalenceRelation::kSpecies) ==
        canonical_form(b, EquivalenceRelation::kSpecies));
  CHECK(canonical_form(a, EquivalenceRelation::kRrsIsotopism) !=
        canonical_form(b, EquivalenceRelation::kRrsIsotopism));
}

TEST_CASE("class counts over all 576 order-4 squares") {
  std::set<std::string> iso, rrs, isot, species;
  gen_all_of_order(4, [&](const LatinSquare& sq) {
    iso.insert(oracle::key(canonical_form(sq, EquivalenceRelation::kIsomorphism)));
    rrs.insert(oracle::key(canonical_form(sq, EquivalenceRelation::kRrsIsotopism)));
    isot.insert(oracle::key(canonical_form(sq, EquivalenceRelation::kIsotopism)));
    species.insert(oracle::key(canonical_form(sq, EquivalenceRelation::kSpecies)));
  });
  CHECK(iso.size() == 35);
  CHECK(isot.size() == 2);
  CHECK(species.size() == 2);
  // refinement chain
  CHECK(iso.size() >= rrs.size());
  CHECK(rrs.size() >= isot.size());
  CHECK(isot.size() >= species.size());
}

TEST_CASE("species canonical form is constant on conjugates") {
  std::mt19937 rng(7);
  LatinSquare sq = fx::sade_counterexample();
  LatinSquare canon = canonical_form(sq, EquivalenceRelation::kSpecies);
  for (ConjugateLabel label : kAllConjugates)
    CHECK(canonical_form(conjugate(sq, label), EquivalenceRelation::kSpecies) == canon);
}

TEST_CASE("invariant signatures") {
  std::mt19937 rng(3);
  LatinSquare a12 = fx::a12(), b12 = fx::b12();
  // the right square of the rrs pair has a six-fold diagonal symbol; the
  // signature under rrs separates the pair
  CHECK(!(invariant_signature(fx::order8_left(), EquivalenceRelation::kRrsIsotopism) ==
          invariant_signature(fx::order8_right(), EquivalenceRelation::kRrsIsotopism)));
  CHECK(invariant_signature(a12, EquivalenceRelation::kIsotopism) ==
        invariant_signature(b12, EquivalenceRelation::kIsotopism));

  // soundness: signatures are invariant under their relation's group action
  LatinSquare sq = fx::a1();
  for (int trial = 0; trial < 20; ++trial) {
    Permutation a = random_perm(7, rng), b = random_perm(7, rng), g = random_perm(7, rng);
    CHECK(invariant_signature(apply_isotopism(sq, a, a, a), EquivalenceRelation::kIsomorphism) ==
          invariant_signature(sq, EquivalenceRelation::kIsomorphism));
    CHECK(invariant_signature(apply_isotopism(sq, a, a, g), EquivalenceRelation::kRrsIsotopism) ==
          invariant_signature(sq, EquivalenceRelation::kRrsIsotopism));
    CHECK(invariant_signature(apply_isotopism(sq, a, b, g), EquivalenceRelation::kIsotopism) ==
          invariant_signature(sq, EquivalenceRelation::kIsotopism));
    CHECK(invariant_signature(conjugate(apply_isotopism(sq, a, b, g), kAllConjugates[trial % 6]),
                              EquivalenceRelation::kSpecies) ==
          invariant_signature(sq, EquivalenceRelation::kSpecies));
  }
  // intercalate count is part of every signature
  CHECK(invariant_signature(fx::direct_product(fx::cayley_z(2), fx::cayley_z(2)),
                            EquivalenceRelation::kSpecies)
            .data[1] == 12);
}

TEST_CASE("partial canonicalization screens isomorphic partial squares") {
  std::mt19937 rng(29);
  const int n = 6;
  // a partial square: diagonal plus one symmetric pair
  std::vector<uint8_t> cells(n * n, kEmptyCell);
  for (int i = 0; i < n; ++i) cells[i * n + i] = static_cast<uint8_t>((i + 1) % n);
  cells[0 * n + 3] = 4;
  cells[3 * n + 0] = 4;
  auto canon = canonical_partial(n, cells);
  for (int trial = 0; trial < 30; ++trial) {
    Permutation rho = random_perm(n, rng);
    std::vector<uint8_t> image(n * n, kEmptyCell);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) {
        uint8_t s = cells[r * n + c];
        if (s != kEmptyCell) image[rho(r) * n + rho(c)] = rho(s);
      }
    CHECK(canonical_partial(n, image) == canon);
  }
  // complete squares: partial canonicalization agrees with the isomorphism form
  LatinSquare sq = fx::cayley_z(6);
  CHECK(canonical_partial(6, sq.cells()) ==
        canonical_form(sq, EquivalenceRelation::kIsomorphism).cells());
}

TEST_CASE("deduper catalogs") {
  Deduper d(EquivalenceRelation::kSpecies);
  Catalog empty = d.finish(4);
  CHECK(empty.entries.empty());

  gen_all_of_order(4, [&](const LatinSquare& sq) { d.add(sq); });
  Catalog cat = d.finish(4);
  CHECK(cat.class_count() == 2);
  CHECK(cat.total_squares() == 576);
  uint64_t streamed = 0;
  for (const auto& e : cat.entries) streamed += e.stream_count;
  CHECK(streamed == 576);
  // catalog is sorted by representative
  for (size_t i = 1; i < cat.entries.size(); ++i)
    CHECK(cat.entries[i - 1].representative < cat.entries[i].representative);
}

TEST_CASE("ts graph encoding") {
  // order-2 squares have one idempotent cell and one directed edge; both
  // squares reconstruct uniquely
  for (const LatinSquare& z2 :
       {LatinSquare::from_rows({{2, 1}, {1, 2}}), LatinSquare::from_rows({{1, 2}, {2, 1}})}) {
    TsGraph g = ts_isomorphism_graph(z2);
    CHECK(g.num_points == 2);
    CHECK(g.blocks.empty());
    REQUIRE(g.edges.size() == 1);
    CHECK(ts_square_from_graph(g) == z2);
  }

  // idempotent totally symmetric square of order 7 (a Steiner triple system):
  // seven blocks, no directed edges
  LatinSquare sts7 = fx::steiner7();
  REQUIRE(is_totally_symmetric(sts7));
  REQUIRE(sts7.is_idempotent());
  TsGraph g7 = ts_isomorphism_graph(sts7);
  CHECK(g7.blocks.size() == 7);
  CHECK(g7.edges.empty());
  CHECK(ts_square_from_graph(g7) == sts7);

  CHECK_THROWS(ts_isomorphism_graph(fx::a12()));
}

TEST_CASE("u128 decimal strings") {
  CHECK(u128_to_string(0) == "0");
  CHECK(u128_to_string(factorial_u128(13)) == "6227020800");
  CHECK(u128_from_string("6227020800") == factorial_u128(13));
  unsigned __int128 big = factorial_u128(34);
  CHECK(u128_from_string(u128_to_string(big)) == big);
  CHECK_THROWS(factorial_u128(35));
  CHECK(acting_group_order(4, EquivalenceRelation::kSpecies) == 6ull * 24 * 24 * 24);
}
