#include "latsq/verify.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "latsq/fixtures.hpp"
#include "latsq/parallel.hpp"

namespace latsq {

namespace fx = fixtures;

bool VerifyReport::all_passed() const {
  if (checks.empty()) return false;  // an empty report proves nothing
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

void VerifyReport::add(const std::string& name, bool passed, const std::string& detail) {
  checks.push_back({name, passed, detail});
}

std::string VerifyReport::to_text() const {
  std::ostringstream out;
  out << "suite " << suite << "\n";
  for (const auto& c : checks) {
    out << (c.passed ? "  ok   " : "  FAIL ") << c.name;
    if (!c.detail.empty()) out << "  [" << c.detail << "]";
    out << "\n";
  }
  out << (all_passed() ? "PASSED" : "FAILED") << " (" << checks.size() << " checks)\n";
  return out.str();
}

std::string VerifyReport::to_json() const {
  std::ostringstream out;
  out << "{\"suite\":\"" << suite << "\",\"passed\":" << (all_passed() ? "true" : "false")
      << ",\"checks\":[";
  for (size_t i = 0; i < checks.size(); ++i) {
    const auto& c = checks[i];
    std::string detail = c.detail;
    for (auto& ch : detail)
      if (ch == '"' || ch == '\\' || ch == '\n') ch = ' ';
    out << (i ? "," : "") << "{\"name\":\"" << c.name << "\",\"passed\":"
        << (c.passed ? "true" : "false") << ",\"detail\":\"" << detail << "\"}";
  }
  out << "]}";
  return out.str();
}

namespace {

std::string k(const LatinSquare& sq) {
  return std::string(sq.cells().begin(), sq.cells().end());
}

Catalog classes_of(int n, Symmetry sym, bool reduced = false, bool diagonal = false,
                   bool idempotent = false, bool unipotent = false, int jobs = 1) {
  GenOptions opts;
  opts.jobs = jobs;
  return gen_classes(n, PropertyFilter::make(sym, reduced, diagonal, idempotent, unipotent),
                     opts);
}

}  // namespace

VerifyReport verify_obvious(int max_order, int jobs) {
  VerifyReport report;
  report.suite = "obvious";

  for (int n = 2; n <= max_order; ++n) {
    Catalog sym = classes_of(n, Symmetry::kSymmetric, false, false, false, false, jobs);
    bool diag_ok = true, idem_even_ok = true;
    for (const auto& e : sym.entries) {
      if (e.representative.is_diagonal() != (n % 2 == 1)) diag_ok = false;
      if (n % 2 == 0 && e.representative.is_idempotent()) idem_even_ok = false;
    }
    report.add("symmetric order " + std::to_string(n) + ": diagonal iff odd order",
               diag_ok, std::to_string(sym.class_count()) + " classes");
    if (n % 2 == 0)
      report.add("symmetric order " + std::to_string(n) + ": no idempotent members",
                 idem_even_ok);
  }

  // Reduced semisymmetric squares are unipotent: scan full raw streams.
  for (int n : {4, 5, 7, 8}) {
    if (n > max_order + 1) continue;
    uint64_t scanned = 0;
    bool ok = true;
    GenOptions opts;
    opts.raw_emit = [&](const LatinSquare& sq) {
      ++scanned;
      if (!sq.is_unipotent()) ok = false;
    };
    gen_classes(n, PropertyFilter::make(Symmetry::kSemisymmetric, true), opts);
    report.add("reduced semisymmetric order " + std::to_string(n) + ": all unipotent",
               ok && (n % 3 == 1 || n % 3 == 2),
               std::to_string(scanned) + " squares scanned");
  }

  // Idempotent squares are diagonal; unipotent squares of order >= 2 are
  // neither diagonal nor idempotent; no reduced idempotent squares exist.
  uint64_t scanned = 0;
  bool idem_diag = true, unip_excl = true, no_reduced_idem = true;
  gen_all_of_order(4, [&](const LatinSquare& sq) {
    ++scanned;
    if (sq.is_idempotent() && !sq.is_diagonal()) idem_diag = false;
    if (sq.is_unipotent() && (sq.is_diagonal() || sq.is_idempotent())) unip_excl = false;
    if (sq.is_reduced() && sq.is_idempotent()) no_reduced_idem = false;
  });
  report.add("order 4 sweep: idempotent implies diagonal", idem_diag,
             std::to_string(scanned) + " squares");
  report.add("order 4 sweep: unipotent excludes diagonal and idempotent", unip_excl);
  report.add("order 4 sweep: no reduced idempotent squares", no_reduced_idem);

  // Every symmetric square reduces by a unique symbol permutation.
  bool reduce_ok = true;
  Catalog sym5 = classes_of(5, Symmetry::kSymmetric, false, false, false, false, jobs);
  for (const auto& e : sym5.entries) {
    auto [red, gamma] = reduce_by_symbols(e.representative);
    if (!red.is_reduced() || !is_symmetric(red)) reduce_ok = false;
  }
  report.add("symbol reduction lands on reduced symmetric squares", reduce_ok,
             std::to_string(sym5.class_count()) + " classes");
  return report;
}

VerifyReport verify_prolongation(int max_order, int jobs) {
  VerifyReport report;
  report.suite = "prolongation";

  // Idempotent classes of order n map bijectively onto unipotent classes of
  // order n+1 under prolongation, for each self-conjugate symmetry.
  // For the self-conjugate symmetries every unipotent class contains a
  // reduced square, so prolongation is onto all unipotent classes; for
  // symmetric squares it is onto the classes containing reduced unipotent
  // squares only.
  auto check_bijection = [&](Symmetry sym, int n, const std::string& label) {
    Catalog idem = classes_of(n, sym, false, false, true, false, jobs);
    std::set<std::string> prolonged;
    for (const auto& e : idem.entries) {
      LatinSquare p = prolong(e.representative);
      prolonged.insert(k(canonical_form(p, EquivalenceRelation::kIsomorphism)));
    }
    std::set<std::string> target;
    uint64_t target_classes = 0;
    if (sym == Symmetry::kSymmetric) {
      Deduper d(EquivalenceRelation::kIsomorphism);
      gen_reduced_unipotent_symmetric(n + 1, [&](const LatinSquare& sq) { d.add(sq); });
      for (const auto& [cells, count] : d.sorted_items()) target.insert(cells);
      target_classes = d.class_count();
    } else {
      Catalog unip = classes_of(n + 1, sym, false, false, false, true, jobs);
      target_classes = unip.class_count();
      for (const auto& e : unip.entries) {
        // normalize the constant diagonal symbol to n+1 by an isomorphism
        LatinSquare rep = e.representative;
        int u = rep.at(0, 0);
        if (u != n) {
          std::vector<uint8_t> img(n + 1);
          for (int i = 0; i <= n; ++i) img[i] = static_cast<uint8_t>(i);
          std::swap(img[u], img[n]);
          Permutation swap_perm = Permutation::from_images(img);
          rep = apply_isotopism(rep, swap_perm, swap_perm, swap_perm);
        }
        target.insert(k(canonical_form(rep, EquivalenceRelation::kIsomorphism)));
      }
    }
    report.add(label + " order " + std::to_string(n) + " -> " + std::to_string(n + 1),
               prolonged == target && prolonged.size() == idem.class_count() &&
                   target.size() == target_classes,
               std::to_string(idem.class_count()) + " idempotent classes vs " +
                   std::to_string(target_classes) + " unipotent classes");
  };

  for (int n = 3; n <= max_order; ++n) {
    if (n % 3 != 2) check_bijection(Symmetry::kSemisymmetric, n, "semisymmetric");
    if (n % 2 == 1) {
      // the symmetric categories grow n!-fold; the larger orders are covered
      // by the reduced-square identities in the census checks
      if (n <= 5) check_bijection(Symmetry::kSymmetric, n, "symmetric");
      if (n % 3 != 2 && (n % 6 == 1 || n % 6 == 3))
        check_bijection(Symmetry::kTotallySymmetric, n, "totally symmetric");
    }
  }

  // Round trip on every idempotent semisymmetric class representative.
  bool round = true;
  uint64_t count = 0;
  for (int n : {3, 4, 7}) {
    if (n > max_order) continue;
    for (const auto& e :
         classes_of(n, Symmetry::kSemisymmetric, false, false, true, false, jobs).entries) {
      ++count;
      if (!(antiprolong(prolong(e.representative)) == e.representative)) round = false;
    }
  }
  report.add("antiprolong . prolong = identity", round && count > 0,
             std::to_string(count) + " squares");

  // The order-9 idempotent pair: isotopic, but the prolongations are not even
  // in the same species (their intercalate counts differ).
  LatinSquare p1 = prolong(fx::order9_idem_left());
  LatinSquare p2 = prolong(fx::order9_idem_right());
  int i1 = p1.intercalate_count(), i2 = p2.intercalate_count();
  bool separated = i1 != i2;
  if (!separated)
    separated = !(canonical_form(p1, EquivalenceRelation::kSpecies) ==
                  canonical_form(p2, EquivalenceRelation::kSpecies));
  report.add("order-9 pair prolongs into different species", separated,
             "intercalates " + std::to_string(i1) + " vs " + std::to_string(i2));
  return report;
}

VerifyReport verify_artzy(int max_order, int jobs) {
  VerifyReport report;
  report.suite = "artzy";
  for (int n = 2; n <= max_order; ++n) {
    if (n % 3 == 0) continue;
    CategoryCensus c = category_census(
        n, PropertyFilter::make(Symmetry::kSemisymmetric, false, false, false, true),
        {.jobs = jobs});
    report.add("semisymmetric loops order " + std::to_string(n) +
                   ": isotopism classes = isomorphism classes",
               c.isotopism_classes == c.isomorphism_classes,
               std::to_string(c.isomorphism_classes) + " = " +
                   std::to_string(c.isotopism_classes));
  }
  return report;
}

VerifyReport verify_sade(int max_scan_order, int jobs) {
  VerifyReport report;
  report.suite = "sade";

  LatinSquare l = fx::sade_counterexample();
  auto lefts = left_autotopisms(l);
  report.add("counterexample has exactly 3 left autotopisms", lefts.size() == 3);
  bool order3 = true, div3 = true;
  for (const auto& la : lefts) {
    if (left_autotopism_order(l, la) != 3) order3 = false;
    if (la.row.then(la.col).then(la.sym).order() % 3 != 0) div3 = false;
  }
  report.add("left autotopisms all of order 3", order3);
  report.add("left-autotopism products all have order divisible by 3", div3);
  report.add("autoparatopism group order 9", autoparatopism_group(l).size() == 9);
  bool has_tau = false;
  for (const auto& a : automorphism_group(l)) has_tau = has_tau || a == fx::sade_tau();
  report.add("automorphism (tau,tau,tau) present", has_tau);
  report.add("no semisymmetric form", !has_semisymmetric_form(l));

  // Scan orders <= max_scan_order: the left-autotopism criterion agrees with
  // direct species membership, so every square with a left autotopism at
  // these orders has a semisymmetric form.
  for (int n = 2; n <= max_scan_order; ++n) {
    std::set<std::string> semis;
    for (const auto& e : classes_of(n, Symmetry::kSemisymmetric, false, false, false,
                                    false, jobs)
                             .entries)
      semis.insert(k(canonical_form(e.representative, EquivalenceRelation::kSpecies)));

    // species representatives of all order-n squares, via the reduced ones
    std::set<std::string> reps;
    gen_reduced_of_order(n, [&](const LatinSquare& sq) {
      reps.insert(k(canonical_form(sq, EquivalenceRelation::kSpecies)));
    });
    uint64_t with_left = 0, agree = 0;
    for (const std::string& cells : reps) {
      LatinSquare rep = LatinSquare::from_cells_unchecked(
          n, std::vector<uint8_t>(cells.begin(), cells.end()));
      bool criterion = has_semisymmetric_form(rep);
      bool member = semis.count(cells) > 0;
      if (!left_autotopisms(rep).empty()) ++with_left;
      if (criterion == member) ++agree;
    }
    report.add("order " + std::to_string(n) +
                   ": left-autotopism criterion matches species membership",
               agree == reps.size(),
               std::to_string(reps.size()) + " species, " + std::to_string(with_left) +
                   " with left autotopisms");
    // at these orders a left autotopism always yields a semisymmetric form
    uint64_t bad = 0;
    for (const std::string& cells : reps) {
      LatinSquare rep = LatinSquare::from_cells_unchecked(
          n, std::vector<uint8_t>(cells.begin(), cells.end()));
      if (!left_autotopisms(rep).empty() && !semis.count(cells)) ++bad;
    }
    report.add("order " + std::to_string(n) +
                   ": every square with a left autotopism has a semisymmetric form",
               bad == 0);
  }
  return report;
}

VerifyReport verify_fixtures(int jobs) {
  (void)jobs;
  VerifyReport report;
  report.suite = "fixtures";

  LatinSquare a8 = fx::order8_left(), b8 = fx::order8_right();
  report.add("order-8 pair: witness isotopism maps left to right",
             apply_isotopism(a8, fx::order8_witness()) == b8);
  report.add("order-8 pair: isotopic",
             canonical_form(a8, EquivalenceRelation::kIsotopism) ==
                 canonical_form(b8, EquivalenceRelation::kIsotopism));
  report.add("order-8 pair: not rrs-isotopic",
             !(canonical_form(a8, EquivalenceRelation::kRrsIsotopism) ==
               canonical_form(b8, EquivalenceRelation::kRrsIsotopism)));
  std::vector<uint32_t> diag_mult(8, 0);
  for (int i = 0; i < 8; ++i) ++diag_mult[b8.at(i, i)];
  report.add("order-8 pair: right square has a six-fold diagonal symbol",
             *std::max_element(diag_mult.begin(), diag_mult.end()) == 6);

  report.add("order-12 pair: witness isotopism maps first to second",
             apply_isotopism(fx::a12(), fx::a12_to_b12()) == fx::b12());
  report.add("order-12 pair: both symmetric unipotent",
             is_symmetric(fx::a12()) && fx::a12().is_unipotent() &&
                 is_symmetric(fx::b12()) && fx::b12().is_unipotent());

  LatinSquare q1 = fx::order9_idem_left(), q2 = fx::order9_idem_right();
  report.add("order-9 pair: witness isotopism maps left to right",
             apply_isotopism(q1, fx::order9_idem_witness()) == q2);
  report.add("order-9 pair: both idempotent semisymmetric",
             q1.is_idempotent() && is_semisymmetric(q1) && q2.is_idempotent() &&
                 is_semisymmetric(q2));

  LatinSquare b = fx::neg_sum_table(5);
  LatinSquare p1 = fx::direct_product(fx::a1(), b);
  LatinSquare p2 = fx::direct_product(fx::a2(), b);
  report.add("order-35 products: semisymmetric and diagonal",
             is_semisymmetric(p1) && p1.is_diagonal() && is_semisymmetric(p2) &&
                 p2.is_diagonal());
  report.add("order-35 products: idempotent counts 1 and 7",
             p1.idempotent_count() == 1 && p2.idempotent_count() == 7,
             std::to_string(p1.idempotent_count()) + " and " +
                 std::to_string(p2.idempotent_count()));
  // the factor witness extends to the products with the identity on the
  // second coordinate
  Isotopism fw = fx::a1_to_a2();
  auto extend = [&](const Permutation& p) {
    std::vector<uint8_t> img(35);
    for (int a = 0; a < 7; ++a)
      for (int x = 0; x < 5; ++x) img[a * 5 + x] = static_cast<uint8_t>(p(a) * 5 + x);
    return Permutation::from_images(img);
  };
  Isotopism big(extend(fw.row), extend(fw.col), extend(fw.sym));
  report.add("order-35 products: isotopic via the extended factor witness",
             apply_isotopism(p1, big) == p2);
  report.add("order-35 products: not isomorphic (idempotent counts differ)",
             p1.idempotent_count() != p2.idempotent_count());
  return report;
}

VerifyReport verify_neccon(int max_order, int jobs) {
  VerifyReport report;
  report.suite = "neccon";
  for (int n = 2; n <= max_order; ++n) {
    Catalog cat = classes_of(n, Symmetry::kSemisymmetric, false, false, false, false, jobs);
    bool ok = true;
    for (const auto& e : cat.entries)
      if (e.representative.idempotent_count() % 3 != (n * n) % 3) ok = false;
    report.add("order " + std::to_string(n) + ": idempotent count = n^2 mod 3", ok,
               std::to_string(cat.class_count()) + " classes");
  }
  if (max_order >= 6)
    report.add("no idempotent semisymmetric squares of order 6",
               classes_of(6, Symmetry::kSemisymmetric, false, false, true, false, jobs)
                       .class_count() == 0);
  if (max_order >= 7)
    report.add("no unipotent semisymmetric squares of order 7",
               classes_of(7, Symmetry::kSemisymmetric, false, false, false, true, jobs)
                       .class_count() == 0);
  if (max_order >= 5)
    report.add("no idempotent semisymmetric squares of order 5 (excluded order)",
               classes_of(5, Symmetry::kSemisymmetric, false, false, true, false, jobs)
                       .class_count() == 0);
  report.add("no unipotent semisymmetric squares of order 6 (excluded order)",
             classes_of(6, Symmetry::kSemisymmetric, false, false, false, true, jobs)
                     .class_count() == 0);

  // Seeds rejected by the congruence really admit no completion (brute scan).
  for (int n = 3; n <= std::min(max_order, 5); ++n) {
    std::set<std::string> diags;  // diagonals of semisymmetric squares
    gen_all_of_order(n, [&](const LatinSquare& sq) {
      if (!is_semisymmetric(sq)) return;
      std::string d;
      for (int i = 0; i < n; ++i) d += static_cast<char>(sq.at(i, i));
      diags.insert(d);
    });
    bool ok = true;
    for (const std::string& d : diags) {
      int fixed = 0;
      for (int i = 0; i < n; ++i)
        if (d[i] == i) ++fixed;
      if (fixed % 3 != (n * n) % 3) ok = false;
    }
    report.add("order " + std::to_string(n) +
                   ": realized diagonals respect the congruence (brute scan)",
               ok, std::to_string(diags.size()) + " diagonals");
  }
  return report;
}

VerifyReport verify_action_laws(int cases) {
  VerifyReport report;
  report.suite = "action-laws";
  std::mt19937 rng(20260809);
  auto rand_perm = [&](int m) {
    std::vector<uint8_t> img(m);
    for (int i = 0; i < m; ++i) img[i] = static_cast<uint8_t>(i);
    std::shuffle(img.begin(), img.end(), rng);
    return Permutation::from_images(img);
  };
  int conj_ok = 0, iso_ok = 0, par_ok = 0;
  int per_kind = cases / 3;
  for (int t = 0; t < per_kind; ++t) {
    int n = 4 + static_cast<int>(rng() % 4);
    LatinSquare sq = apply_isotopism(fx::cayley_z(n), rand_perm(n), rand_perm(n), rand_perm(n));
    ConjugateLabel s1 = kAllConjugates[rng() % 6], s2 = kAllConjugates[rng() % 6];
    if (conjugate(conjugate(sq, s1), s2) == conjugate(sq, compose(s1, s2))) ++conj_ok;

    Isotopism i1(rand_perm(n), rand_perm(n), rand_perm(n));
    Isotopism i2(rand_perm(n), rand_perm(n), rand_perm(n));
    if (apply_isotopism(apply_isotopism(sq, i1), i2) == apply_isotopism(sq, i1.then(i2)) &&
        apply_isotopism(apply_isotopism(sq, i1), i1.inverse()) == sq)
      ++iso_ok;

    Paratopism p1{s1, i1}, p2{s2, i2};
    if (apply_paratopism(apply_paratopism(sq, p1), p2) == apply_paratopism(sq, p1.then(p2)) &&
        apply_paratopism(apply_paratopism(sq, p1), p1.inverse()) == sq)
      ++par_ok;
  }
  report.add("conjugation composes through S3", conj_ok == per_kind,
             std::to_string(conj_ok) + "/" + std::to_string(per_kind));
  report.add("isotopism action law and inverses", iso_ok == per_kind,
             std::to_string(iso_ok) + "/" + std::to_string(per_kind));
  report.add("paratopism action law and inverses", par_ok == per_kind,
             std::to_string(par_ok) + "/" + std::to_string(per_kind));
  return report;
}

VerifyReport verify_principal(int max_order, int jobs) {
  VerifyReport report;
  report.suite = "principal";
  for (int n = 3; n <= max_order; ++n) {
    Catalog cat = classes_of(n, Symmetry::kSymmetric, false, false, false, false, jobs);
    bool laws = true, semiregular = true, abelian = true;
    uint64_t nontrivial = 0;
    for (const auto& e : cat.entries) {
      auto group = principal_autotopism_group(e.representative);
      for (const auto& x : group) {
        if (x.row.is_identity()) continue;
        ++nontrivial;
        if (!(x.col == x.row.inverse()) || x.row.fixed_point_count() != 0 ||
            !(CycleStructure::of(x.row) == CycleStructure::of(x.col)) ||
            n % x.row.order() != 0)
          laws = false;
        if (!x.row.is_semiregular()) semiregular = false;
      }
      for (const auto& x : group)
        for (const auto& y : group)
          if (!(x.then(y) == y.then(x))) abelian = false;
    }
    report.add("order " + std::to_string(n) + ": principal autotopism laws", laws,
               std::to_string(nontrivial) + " nontrivial elements over " +
                   std::to_string(cat.class_count()) + " classes");
    report.add("order " + std::to_string(n) + ": nontrivial elements semiregular",
               semiregular);
    report.add("order " + std::to_string(n) + ": principal group abelian", abelian);
  }
  return report;
}

VerifyReport verify_ts(int max_order, int jobs) {
  VerifyReport report;
  report.suite = "ts";
  for (int n = 2; n <= max_order; ++n) {
    CategoryCensus c =
        category_census(n, PropertyFilter::make(Symmetry::kTotallySymmetric), {.jobs = jobs});
    report.add("order " + std::to_string(n) + ": species = isotopism classes",
               c.species == c.isotopism_classes,
               std::to_string(c.isotopism_classes) + " isotopism classes");
    if (n % 3 != 0)
      report.add("order " + std::to_string(n) + ": isomorphism classes = species",
                 c.isomorphism_classes == c.species,
                 std::to_string(c.isomorphism_classes) + " vs " + std::to_string(c.species));
  }
  for (int n : {3, 6, 9, 12}) {
    LatinSquare a = fx::neg_sum_table(n), b = fx::one_minus_sum_table(n);
    bool ts = is_totally_symmetric(a) && is_totally_symmetric(b);
    // isotopic via the symbol shift x -> x+1
    std::vector<uint8_t> img(n);
    for (int i = 0; i < n; ++i) img[i] = static_cast<uint8_t>((i + 1) % n);
    bool isotopic =
        apply_isotopism(a, Permutation(n), Permutation(n), Permutation::from_images(img)) == b;
    bool non_isomorphic = a.idempotent_count() == 3 && b.idempotent_count() == 0;
    report.add("cyclic pair order " + std::to_string(n) +
                   ": totally symmetric, isotopic, not isomorphic",
               ts && isotopic && non_isomorphic,
               "idempotent counts " + std::to_string(a.idempotent_count()) + " vs " +
                   std::to_string(b.idempotent_count()));
  }
  return report;
}

VerifyReport verify_brute_oracles(int max_order) {
  VerifyReport report;
  report.suite = "oracles";
  // implemented in tests/acceptance via the shared brute scan; here we verify
  // stabilizer consistency on the catalogs instead
  for (int n = 2; n <= max_order; ++n) {
    uint64_t checked = 0;
    bool ok = true;
    gen_all_of_order(n, [&](const LatinSquare& sq) {
      ++checked;
      uint64_t par = autoparatopism_group(sq).size();
      uint64_t iso = autotopism_group(sq).size();
      uint64_t aut = automorphism_group(sq).size();
      if (par % iso != 0 || iso % aut != 0) ok = false;
    });
    report.add("order " + std::to_string(n) + ": stabiliser chain divisibility", ok,
               std::to_string(checked) + " squares");
  }
  return report;
}

std::vector<std::string> verify_suite_names() {
  return {"obvious",  "prolongation", "artzy",     "sade", "fixtures",
          "neccon",   "action-laws",  "principal", "ts",   "oracles"};
}

VerifyReport run_verify_suite(const std::string& name, int jobs) {
  if (name == "obvious") return verify_obvious(7, jobs);
  if (name == "prolongation") return verify_prolongation(7, jobs);
  if (name == "artzy") return verify_artzy(8, jobs);
  if (name == "sade") return verify_sade(6, jobs);
  if (name == "fixtures") return verify_fixtures(jobs);
  if (name == "neccon") return verify_neccon(8, jobs);
  if (name == "action-laws") return verify_action_laws(10000);
  if (name == "principal") return verify_principal(7, jobs);
  if (name == "ts") return verify_ts(8, jobs);
  if (name == "oracles") return verify_brute_oracles(4);
  throw std::invalid_argument("unknown verify suite: " + name);
}

}  // namespace latsq
