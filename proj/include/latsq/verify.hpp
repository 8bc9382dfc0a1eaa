#pragma once

#include <string>
#include <vector>

#include "latsq/census.hpp"

namespace latsq {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;  // counts checked, witness on failure
};

struct VerifyReport {
  std::string suite;
  std::vector<CheckResult> checks;

  bool all_passed() const;  // false when empty: a report must check something
  void add(const std::string& name, bool passed, const std::string& detail = "");
  std::string to_text() const;
  std::string to_json() const;
};

// Structural facts about diagonals, reducedness and the shape predicates,
// asserted over every member of small generated catalogs.
VerifyReport verify_obvious(int max_order = 7, int jobs = 1);

// Prolongation bijections between idempotent classes of order n and unipotent
// classes of order n+1, for the symmetric, semisymmetric and totally
// symmetric categories; plus the order-9 pair whose prolongations land in
// different species.
VerifyReport verify_prolongation(int max_order = 7, int jobs = 1);

// Isotopic semisymmetric loops are isomorphic: the class columns agree on
// every unipotent semisymmetric catalog.
VerifyReport verify_artzy(int max_order = 8, int jobs = 1);

// The order-9 square with left autotopisms but no semisymmetric form, plus
// the small-order scan matching the left-autotopism criterion against a
// species-membership oracle.
VerifyReport verify_sade(int max_scan_order = 6, int jobs = 1);

// The explicit square pairs: order-8 (isotopic, not rrs-isotopic), order-12
// intercalate flip, order-35 direct products, order-9 idempotent pair.
VerifyReport verify_fixtures(int jobs = 1);

// Idempotent counts of semisymmetric squares are congruent to n^2 mod 3, and
// the excluded orders really are empty.
VerifyReport verify_neccon(int max_order = 8, int jobs = 1);

// Group-action laws on pseudo-random squares: conjugation composes through
// S_3, isotopisms and paratopisms act associatively with inverses.
VerifyReport verify_action_laws(int cases = 10000);

// Full agreement with brute-force orbit scans over every square of order <= 4
// for all four relations (canonical partitions and stabiliser orders).
VerifyReport verify_brute_oracles(int max_order = 4);

// Principal autotopism laws over symmetric catalogs: beta = alpha^-1, no
// fixed points, matching cycle structures, semiregularity, ord | n, abelian.
VerifyReport verify_principal(int max_order = 7, int jobs = 1);

// Totally symmetric laws: species = isotopism classes on every TS catalog,
// isomorphism = species off multiples of 3, and the cyclic pair construction
// that separates isotopy from isomorphism on multiples of 3.
VerifyReport verify_ts(int max_order = 8, int jobs = 1);

std::vector<std::string> verify_suite_names();
VerifyReport run_verify_suite(const std::string& name, int jobs = 1);

}  // namespace latsq
