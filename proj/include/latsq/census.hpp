#pragma once

#include <optional>
#include <string>
#include <vector>

#include "latsq/canonical.hpp"
#include "latsq/generate.hpp"
#include "latsq/latin_square.hpp"
#include "latsq/stabilizers.hpp"

namespace latsq {

using Count = unsigned __int128;

// Number of isomorphism classes of symmetric squares rrs-isotopic to rep:
// (1/|G|) sum of psi over the rrs-autotopism group G, where psi(alpha,beta) =
// prod (n_i)! c_i^(n_i) over the common cycle structure of the row and symbol
// parts, and 0 when the structures differ.
uint64_t burnside_isomorphism_count(const LatinSquare& rep);
uint64_t burnside_isomorphism_count(const std::vector<Isotopism>& rrs_group);

// Number of isomorphism classes containing reduced symmetric squares
// rrs-isotopic to rep: same sum with psi replaced by the number of fixed
// points of the row part.
uint64_t burnside_loop_count(const LatinSquare& rep);
uint64_t burnside_loop_count(const std::vector<Isotopism>& rrs_group);

// Orbit-stabiliser total over a catalog: sum of actingOrder / |stabiliser|.
Count total_from_classes(const Catalog& catalog);

enum class SymmetricCensusMethod { kBrute, kAutotopism };

struct ShapeCensus {
  CycleStructure alpha, gamma;
  uint64_t survivors = 0;    // screened enumeration survivors (not the raw count)
  uint64_t rrs_classes = 0;  // rrs-isotopism classes among them
};

struct SymmetricCensus {
  int order = 0;
  SymmetricCensusMethod method = SymmetricCensusMethod::kBrute;
  uint64_t reduced_count = 0;
  uint64_t rrs_classes = 0;
  uint64_t species = 0;
  Count isomorphism_classes = 0;  // commutative quasigroups up to isomorphism
  Count loop_classes = 0;         // commutative loops up to isomorphism
  uint64_t nontrivial_classes = 0;  // rrs classes with a nontrivial group
  uint64_t trivial_classes = 0;
  std::vector<ShapeCensus> shapes;  // autotopism method only
};

// The brute method canonicalizes the full reduced stream (n <= 8); the
// autotopism method generates only squares with a nontrivial rrs-autotopism
// and infers the rest from the reduced count (n <= 9).
SymmetricCensus symmetric_census(int n, SymmetricCensusMethod method, int jobs = 1);

struct CategoryCensus {
  int order = 0;
  uint64_t isomorphism_classes = 0;
  uint64_t isotopism_classes = 0;
  uint64_t species = 0;
  Count all_squares = 0;  // labelled squares in the category
  Catalog catalog;        // isomorphism-class representatives
};

// Census of one category via seeded class generation; every column is derived
// from the isomorphism catalog (isotopism/species by re-canonicalizing the
// representatives, totals by orbit-stabiliser).
CategoryCensus category_census(int n, const PropertyFilter& filter,
                               const GenOptions& opts = {});

// One row of counts with a provenance trail, for identity-derived cells.
struct CensusRow {
  int order = 0;
  std::string category;
  std::optional<Count> isomorphism, rrs, isotopism, species, all_squares;
  std::string provenance;
};

// Fills a row from the identity graph connecting the categories (order shifts
// between idempotent/unipotent/reduced forms and the n! / n multipliers).
// Throws when no derivation path is implemented for the filter.
CensusRow derived_census(int n, const PropertyFilter& filter, int jobs = 1);

struct TableResult {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

std::vector<std::string> table_names();
int table_max_order(const std::string& name);
TableResult emit_table(const std::string& name, int max_order, int jobs = 1);
std::string table_csv(const TableResult& table);
std::string table_json(const TableResult& table);

}  // namespace latsq
