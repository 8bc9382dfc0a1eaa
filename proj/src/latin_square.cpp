#include "latsq/latin_square.hpp"

#include <stdexcept>

namespace latsq {

namespace {
void validate_cells(int n, const std::vector<uint8_t>& cells) {
  if (n < 1 || n > 255) throw std::invalid_argument("order out of range");
  if (cells.size() != static_cast<size_t>(n) * n)
    throw std::invalid_argument("cell count does not match order");
  std::vector<uint8_t> seen(n);
  for (int r = 0; r < n; ++r) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int c = 0; c < n; ++c) {
      uint8_t s = cells[r * n + c];
      if (s >= n)
        throw std::invalid_argument("symbol out of range in row " + std::to_string(r + 1));
      if (seen[s]++)
        throw std::invalid_argument("repeated symbol in row " + std::to_string(r + 1));
    }
  }
  for (int c = 0; c < n; ++c) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int r = 0; r < n; ++r) {
      uint8_t s = cells[r * n + c];
      if (seen[s]++)
        throw std::invalid_argument("repeated symbol in column " + std::to_string(c + 1));
    }
  }
}
}  // namespace

LatinSquare LatinSquare::from_rows(const std::vector<std::vector<int>>& rows) {
  int n = static_cast<int>(rows.size());
  std::vector<uint8_t> cells;
  cells.reserve(static_cast<size_t>(n) * n);
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != n)
      throw std::invalid_argument("row length does not match order");
    for (int v : row) {
      if (v < 1 || v > n) throw std::invalid_argument("symbol out of range 1..n");
      cells.push_back(static_cast<uint8_t>(v - 1));
    }
  }
  return from_cells(n, std::move(cells));
}

LatinSquare LatinSquare::from_cells(int n, std::vector<uint8_t> cells) {
  validate_cells(n, cells);
  return from_cells_unchecked(n, std::move(cells));
}

LatinSquare LatinSquare::from_cells_unchecked(int n, std::vector<uint8_t> cells) {
  LatinSquare sq;
  sq.n_ = n;
  sq.cells_ = std::move(cells);
  return sq;
}

bool LatinSquare::is_reduced() const {
  for (int i = 0; i < n_; ++i)
    if (at(0, i) != i || at(i, 0) != i) return false;
  return true;
}

bool LatinSquare::is_diagonal() const {
  std::vector<bool> seen(n_, false);
  for (int i = 0; i < n_; ++i) {
    if (seen[at(i, i)]) return false;
    seen[at(i, i)] = true;
  }
  return true;
}

bool LatinSquare::is_idempotent() const {
  for (int i = 0; i < n_; ++i)
    if (at(i, i) != i) return false;
  return true;
}

bool LatinSquare::is_unipotent() const {
  for (int i = 1; i < n_; ++i)
    if (at(i, i) != at(0, 0)) return false;
  return true;
}

int LatinSquare::idempotent_count() const {
  int k = 0;
  for (int i = 0; i < n_; ++i)
    if (at(i, i) == i) ++k;
  return k;
}

int LatinSquare::intercalate_count() const {
  // For each unordered row pair, 2-cycles of the column map
  // c -> (column of symbol L[r][c] in row r') mark the 2x2 subsquares.
  int count = 0;
  std::vector<uint8_t> pos(n_);
  std::vector<uint8_t> phi(n_);
  for (int r2 = 1; r2 < n_; ++r2) {
    for (int c = 0; c < n_; ++c) pos[at(r2, c)] = static_cast<uint8_t>(c);
    for (int r1 = 0; r1 < r2; ++r1) {
      for (int c = 0; c < n_; ++c) phi[c] = pos[at(r1, c)];
      for (int c = 0; c < n_; ++c)
        if (phi[c] > c && phi[phi[c]] == c) ++count;
    }
  }
  return count;
}

Permutation LatinSquare::row_permutation(int r) const {
  std::vector<uint8_t> img(cells_.begin() + static_cast<size_t>(r) * n_,
                           cells_.begin() + static_cast<size_t>(r + 1) * n_);
  return Permutation::from_images(std::move(img));
}

std::string LatinSquare::to_text() const {
  std::string out;
  for (int r = 0; r < n_; ++r) {
    for (int c = 0; c < n_; ++c) {
      if (c) out += ' ';
      out += std::to_string(at(r, c) + 1);
    }
    out += '\n';
  }
  return out;
}

LatinSquare conjugate(const LatinSquare& sq, ConjugateLabel label) {
  const int n = sq.order();
  const auto& tup = conjugate_tuple(label);
  std::vector<uint8_t> cells(static_cast<size_t>(n) * n);
  int t[3];
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      t[0] = r;
      t[1] = c;
      t[2] = sq.at(r, c);
      cells[t[tup[0]] * n + t[tup[1]]] = static_cast<uint8_t>(t[tup[2]]);
    }
  }
  return LatinSquare::from_cells_unchecked(n, std::move(cells));
}

LatinSquare apply_isotopism(const LatinSquare& sq, const Permutation& alpha,
                            const Permutation& beta, const Permutation& gamma) {
  const int n = sq.order();
  if (alpha.degree() != n || beta.degree() != n || gamma.degree() != n)
    throw std::invalid_argument("isotopism degree does not match square order");
  std::vector<uint8_t> cells(static_cast<size_t>(n) * n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) cells[alpha(r) * n + beta(c)] = gamma(sq.at(r, c));
  return LatinSquare::from_cells_unchecked(n, std::move(cells));
}

LatinSquare apply_isotopism(const LatinSquare& sq, const Isotopism& iso) {
  return apply_isotopism(sq, iso.row, iso.col, iso.sym);
}

LatinSquare apply_paratopism(const LatinSquare& sq, const Paratopism& p) {
  return apply_isotopism(conjugate(sq, p.sigma), p.iso);
}

bool is_symmetric(const LatinSquare& sq) {
  for (int r = 0; r < sq.order(); ++r)
    for (int c = 0; c < r; ++c)
      if (sq.at(r, c) != sq.at(c, r)) return false;
  return true;
}

bool is_semisymmetric(const LatinSquare& sq) {
  // Closure of the triple set under (r,c,s) -> (s,r,c).
  for (int r = 0; r < sq.order(); ++r)
    for (int c = 0; c < sq.order(); ++c)
      if (sq.at(sq.at(r, c), r) != c) return false;
  return true;
}

bool is_totally_symmetric(const LatinSquare& sq) {
  return is_symmetric(sq) && is_semisymmetric(sq);
}

SymmetryType symmetry_type(const LatinSquare& sq) {
  int equal = 0;
  bool transpose_equal = false;
  for (ConjugateLabel label : kAllConjugates) {
    if (conjugate(sq, label) == sq) {
      ++equal;
      if (label == ConjugateLabel::C213) transpose_equal = true;
    }
  }
  switch (equal) {
    case 6:
      return SymmetryType::kTotallySymmetric;
    case 3:
      return SymmetryType::kSemisymmetricOnly;
    case 2:
      return transpose_equal ? SymmetryType::kSymmetricOnly
                             : SymmetryType::kTwoConjugatesEqual;
    default:
      return SymmetryType::kNone;
  }
}

std::string symmetry_type_name(SymmetryType t) {
  switch (t) {
    case SymmetryType::kNone: return "none";
    case SymmetryType::kSymmetricOnly: return "symmetric-only";
    case SymmetryType::kSemisymmetricOnly: return "semisymmetric-only";
    case SymmetryType::kTwoConjugatesEqual: return "two-conjugates-equal";
    case SymmetryType::kTotallySymmetric: return "totally-symmetric";
  }
  return "?";
}

std::pair<LatinSquare, Permutation> reduce_by_symbols(const LatinSquare& sq) {
  if (!is_symmetric(sq)) throw std::invalid_argument("reduce_by_symbols: square not symmetric");
  Permutation gamma = sq.row_permutation(0).inverse();
  int n = sq.order();
  return {apply_isotopism(sq, Permutation(n), Permutation(n), gamma), gamma};
}

LatinSquare prolong(const LatinSquare& sq) {
  if (!sq.is_diagonal()) throw std::invalid_argument("prolong: square not diagonal");
  const int n = sq.order();
  const int m = n + 1;
  std::vector<uint8_t> cells(static_cast<size_t>(m) * m);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) cells[r * m + c] = sq.at(r, c);
  for (int i = 0; i < n; ++i) {
    cells[i * m + i] = static_cast<uint8_t>(n);
    cells[i * m + n] = sq.at(i, i);
    cells[n * m + i] = sq.at(i, i);
  }
  cells[n * m + n] = static_cast<uint8_t>(n);
  return LatinSquare::from_cells(m, std::move(cells));
}

LatinSquare antiprolong(const LatinSquare& sq) {
  const int m = sq.order();
  if (m < 2) throw std::invalid_argument("antiprolong: order too small");
  const int n = m - 1;
  for (int i = 0; i < m; ++i)
    if (sq.at(i, i) != n)
      throw std::invalid_argument("antiprolong: diagonal is not constantly the last symbol");
  for (int i = 0; i < n; ++i)
    if (sq.at(i, n) != sq.at(n, i))
      throw std::invalid_argument("antiprolong: last row and column disagree");
  std::vector<uint8_t> cells(static_cast<size_t>(n) * n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) cells[r * n + c] = (r == c) ? sq.at(r, n) : sq.at(r, c);
  return LatinSquare::from_cells(n, std::move(cells));
}

std::string symmetry_name(Symmetry s) {
  switch (s) {
    case Symmetry::kNone: return "none";
    case Symmetry::kSymmetric: return "symmetric";
    case Symmetry::kSemisymmetric: return "semisymmetric";
    case Symmetry::kTotallySymmetric: return "totally-symmetric";
  }
  return "?";
}

Symmetry parse_symmetry(const std::string& text) {
  if (text == "none") return Symmetry::kNone;
  if (text == "symmetric") return Symmetry::kSymmetric;
  if (text == "semisymmetric") return Symmetry::kSemisymmetric;
  if (text == "totally-symmetric" || text == "totally_symmetric")
    return Symmetry::kTotallySymmetric;
  throw std::invalid_argument("unknown symmetry: " + text);
}

PropertyFilter PropertyFilter::make(Symmetry symmetry, bool reduced, bool diagonal,
                                    bool idempotent, bool unipotent) {
  if (idempotent && unipotent)
    throw std::invalid_argument("idempotent+unipotent is empty for n >= 2");
  if (idempotent && reduced)
    throw std::invalid_argument("idempotent+reduced is empty for n >= 2");
  if (diagonal && unipotent)
    throw std::invalid_argument("diagonal+unipotent is empty for n >= 2");
  PropertyFilter f;
  f.symmetry_ = symmetry;
  f.reduced_ = reduced;
  f.diagonal_ = diagonal;
  f.idempotent_ = idempotent;
  f.unipotent_ = unipotent;
  return f;
}

bool PropertyFilter::matches(const LatinSquare& sq) const {
  switch (symmetry_) {
    case Symmetry::kNone: break;
    case Symmetry::kSymmetric:
      if (!is_symmetric(sq)) return false;
      break;
    case Symmetry::kSemisymmetric:
      if (!is_semisymmetric(sq)) return false;
      break;
    case Symmetry::kTotallySymmetric:
      if (!is_totally_symmetric(sq)) return false;
      break;
  }
  if (reduced_ && !sq.is_reduced()) return false;
  if (diagonal_ && !sq.is_diagonal()) return false;
  if (idempotent_ && !sq.is_idempotent()) return false;
  if (unipotent_ && !sq.is_unipotent()) return false;
  return true;
}

std::string PropertyFilter::str() const {
  std::string out = symmetry_name(symmetry_);
  if (reduced_) out += "+reduced";
  if (diagonal_) out += "+diagonal";
  if (idempotent_) out += "+idempotent";
  if (unipotent_) out += "+unipotent";
  return out;
}

}  // namespace latsq
