#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "latsq/latin_square.hpp"

namespace latsq {

enum class EquivalenceRelation : uint8_t {
  kIsomorphism,
  kRrsIsotopism,
  kIsotopism,
  kSpecies,
};

std::string relation_name(EquivalenceRelation rel);
EquivalenceRelation parse_relation(const std::string& text);
// Partition refinement: isomorphism refines rrs refines isotopism refines species.
bool relation_refines(EquivalenceRelation fine, EquivalenceRelation coarse);

inline constexpr int kMaxCanonOrder = 16;
inline constexpr uint8_t kEmptyCell = 0xFF;

// The lexicographically least row-major cell array among all squares
// equivalent to sq under rel. Deterministic, idempotent, and a member of the
// class; two squares are equivalent under rel iff their canonical forms match.
LatinSquare canonical_form(const LatinSquare& sq, EquivalenceRelation rel);

// Canonical form of a partial square under isomorphism (simultaneous row,
// column and symbol relabelling). Empty cells (kEmptyCell) compare after
// filled ones. Used for isomorph screening of search states.
std::vector<uint8_t> canonical_partial(int n, const std::vector<uint8_t>& cells);

// Isomorphism-invariant fingerprint of a partial square (color refinement
// over rows, columns and symbols). Isomorphic partials always collide.
uint64_t partial_fingerprint(int n, const uint8_t* cells);

// Exact isomorphism test between partial squares: filled cells must map onto
// filled cells.
bool partial_isomorphic(int n, const uint8_t* a, const uint8_t* b);

// Insert-if-new collection of partial squares up to isomorphism, bucketed by
// fingerprint with pairwise testing inside buckets.
class PartialIsoSet {
 public:
  explicit PartialIsoSet(int n = 0) : n_(n) {}
  bool insert(const uint8_t* cells);  // true when no isomorphic member exists

 private:
  int n_;
  std::unordered_map<uint64_t, std::vector<std::vector<uint8_t>>> buckets_;
};

// Order of the acting group for rel on squares of order n: n!, (n!)^2, (n!)^3
// or 6(n!)^3.
unsigned __int128 acting_group_order(int n, EquivalenceRelation rel);
uint64_t stabilizer_order(const LatinSquare& sq, EquivalenceRelation rel);

std::string u128_to_string(unsigned __int128 v);
unsigned __int128 u128_from_string(const std::string& s);
unsigned __int128 factorial_u128(int n);  // n <= 34

// Cheap invariant tuple for bucketing; equal squares always get equal
// signatures and the signature is constant on rel-classes.
struct InvariantSignature {
  std::vector<uint32_t> data;
  bool operator==(const InvariantSignature& o) const = default;
  bool operator<(const InvariantSignature& o) const { return data < o.data; }
};

InvariantSignature invariant_signature(const LatinSquare& sq, EquivalenceRelation rel);

struct CatalogEntry {
  LatinSquare representative;   // canonical form
  uint64_t stream_count = 0;    // members of the input stream in this class
  uint64_t stabilizer_order = 0;
  unsigned __int128 class_size() const;  // |acting group| / |stabiliser|
  EquivalenceRelation relation = EquivalenceRelation::kIsomorphism;
};

struct Catalog {
  int order = 0;
  EquivalenceRelation relation = EquivalenceRelation::kIsomorphism;
  std::vector<CatalogEntry> entries;  // sorted by representative cells

  size_t class_count() const { return entries.size(); }
  unsigned __int128 total_squares() const;  // sum of class sizes
};

// Streaming class collector: canonicalizes every added square and keeps one
// representative per class. finish() computes stabiliser orders and sorts.
class Deduper {
 public:
  explicit Deduper(EquivalenceRelation rel) : rel_(rel) {}

  void add(const LatinSquare& sq);
  void add_canonical(const LatinSquare& canon, uint64_t count = 1);
  void merge(Deduper&& other);
  size_t class_count() const { return classes_.size(); }
  // (canonical cells, stream count) pairs in sorted order, no stabilisers.
  std::vector<std::pair<std::string, uint64_t>> sorted_items() const;
  Catalog finish(int order) const;

 private:
  EquivalenceRelation rel_;
  std::unordered_map<std::string, uint64_t> classes_;  // canonical cells -> count
};

// Directed colored graph encoding of a totally symmetric square: point
// vertices 0..n-1 (color 0), one block vertex per triple orbit on three
// distinct points (color 1), a directed point edge (u,v) per triple (u,u,v)
// with u != v. The square is uniquely recoverable.
struct TsGraph {
  int num_points = 0;
  std::vector<std::array<uint8_t, 3>> blocks;        // sorted triples, sorted list
  std::vector<std::pair<uint8_t, uint8_t>> edges;    // directed, sorted list
};

TsGraph ts_isomorphism_graph(const LatinSquare& sq);  // requires totally symmetric
LatinSquare ts_square_from_graph(const TsGraph& g);

}  // namespace latsq
