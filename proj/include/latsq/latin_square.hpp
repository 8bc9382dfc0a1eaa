#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "latsq/permutation.hpp"

namespace latsq {

// Latin square of order n on symbols {1,...,n}. Cells are stored 0-based and
// row-major; all construction paths validate the Latin property. Instances are
// immutable after construction.
class LatinSquare {
 public:
  LatinSquare() = default;

  // Rows with 1-based symbols, e.g. {{1,2},{2,1}}. Throws std::invalid_argument
  // naming the violated row or column.
  static LatinSquare from_rows(const std::vector<std::vector<int>>& rows);
  // 0-based row-major cells, validated.
  static LatinSquare from_cells(int n, std::vector<uint8_t> cells);
  // Skips validation; for hot generator paths that construct by invariant.
  static LatinSquare from_cells_unchecked(int n, std::vector<uint8_t> cells);

  int order() const { return n_; }
  uint8_t at(int r, int c) const { return cells_[r * n_ + c]; }  // 0-based symbol
  const std::vector<uint8_t>& cells() const { return cells_; }

  bool is_reduced() const;
  bool is_diagonal() const;    // diagonal symbols pairwise distinct
  bool is_idempotent() const;  // cell (i,i) holds i
  bool is_unipotent() const;   // constant diagonal
  int idempotent_count() const;
  int intercalate_count() const;  // number of 2x2 Latin subsquares

  // Row r as the permutation column -> symbol.
  Permutation row_permutation(int r) const;

  bool operator==(const LatinSquare& o) const { return n_ == o.n_ && cells_ == o.cells_; }
  bool operator!=(const LatinSquare& o) const { return !(*this == o); }
  bool operator<(const LatinSquare& o) const {
    return n_ != o.n_ ? n_ < o.n_ : cells_ < o.cells_;
  }

  std::string to_text() const;  // one row per line, 1-based symbols

 private:
  int n_ = 0;
  std::vector<uint8_t> cells_;
};

LatinSquare conjugate(const LatinSquare& sq, ConjugateLabel label);

// Triples (r,c,s) map to (r^alpha, c^beta, s^gamma).
LatinSquare apply_isotopism(const LatinSquare& sq, const Isotopism& iso);
LatinSquare apply_isotopism(const LatinSquare& sq, const Permutation& alpha,
                            const Permutation& beta, const Permutation& gamma);
// Conjugate first, then isotope.
LatinSquare apply_paratopism(const LatinSquare& sq, const Paratopism& p);

bool is_symmetric(const LatinSquare& sq);        // equals its (2,1,3)-conjugate
bool is_semisymmetric(const LatinSquare& sq);    // equals its (3,1,2)-conjugate
bool is_totally_symmetric(const LatinSquare& sq);

enum class SymmetryType {
  kNone,
  kSymmetricOnly,        // equals exactly the transpose conjugate
  kSemisymmetricOnly,    // equals exactly the two cyclic conjugates
  kTwoConjugatesEqual,   // equals exactly one non-transpose conjugate
  kTotallySymmetric,
};

SymmetryType symmetry_type(const LatinSquare& sq);
std::string symmetry_type_name(SymmetryType t);

// Unique symbol permutation g with apply_isotopism(sq, e, e, g) reduced.
// Requires sq symmetric; the result is symmetric.
std::pair<LatinSquare, Permutation> reduce_by_symbols(const LatinSquare& sq);

// Moves the diagonal of a diagonal square of order n to a new last row and
// column and fills the diagonal with the new symbol n+1; yields a unipotent
// square of order n+1. Preserves each conjugate symmetry.
LatinSquare prolong(const LatinSquare& sq);
// Inverse of prolong; requires the prolongation structure (constant diagonal
// symbol n, last row equal to last column).
LatinSquare antiprolong(const LatinSquare& sq);

enum class Symmetry : uint8_t { kNone, kSymmetric, kSemisymmetric, kTotallySymmetric };

std::string symmetry_name(Symmetry s);
Symmetry parse_symmetry(const std::string& text);

// A census category: a conjugate symmetry plus optional shape restrictions.
// Structurally impossible shape combinations (idempotent+unipotent,
// idempotent+reduced, diagonal+unipotent, each empty for all n >= 2) are
// rejected at construction.
class PropertyFilter {
 public:
  static PropertyFilter make(Symmetry symmetry, bool reduced = false,
                             bool diagonal = false, bool idempotent = false,
                             bool unipotent = false);

  Symmetry symmetry() const { return symmetry_; }
  bool reduced() const { return reduced_; }
  bool diagonal() const { return diagonal_; }
  bool idempotent() const { return idempotent_; }
  bool unipotent() const { return unipotent_; }

  bool matches(const LatinSquare& sq) const;
  std::string str() const;  // e.g. "semisymmetric+idempotent"

  bool operator==(const PropertyFilter& o) const = default;

 private:
  Symmetry symmetry_ = Symmetry::kNone;
  bool reduced_ = false, diagonal_ = false, idempotent_ = false, unipotent_ = false;
};

}  // namespace latsq
