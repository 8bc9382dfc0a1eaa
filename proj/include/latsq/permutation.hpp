#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace latsq {

// Permutation of {0,...,n-1}, stored in image form. Products compose left to
// right: x under (a * b) is b(a(x)), matching exponent notation x^(ab) = (x^a)^b.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(int degree);  // identity

  static Permutation from_images(std::vector<uint8_t> images);
  // Cycles in 1-based point labels, e.g. {{1,4,2,3},{7,8}} for (1423)(78).
  static Permutation from_cycles(int degree,
                                 std::initializer_list<std::initializer_list<int>> cycles);
  static Permutation from_cycles(int degree, const std::vector<std::vector<int>>& cycles);

  int degree() const { return static_cast<int>(img_.size()); }
  uint8_t operator()(int x) const { return img_[x]; }
  const std::vector<uint8_t>& images() const { return img_; }

  Permutation then(const Permutation& rhs) const;  // this, then rhs
  Permutation inverse() const;
  Permutation conjugated_by(const Permutation& g) const;  // g^-1 * this * g

  bool is_identity() const;
  bool is_involution() const;
  int fixed_point_count() const;
  // No fixed points and all cycles of equal length.
  bool is_semiregular() const;
  long order() const;

  bool operator==(const Permutation& o) const { return img_ == o.img_; }
  bool operator<(const Permutation& o) const { return img_ < o.img_; }

  std::string cycle_string() const;  // 1-based, "e" for the identity

 private:
  std::vector<uint8_t> img_;
};

Permutation operator*(const Permutation& a, const Permutation& b);

// Multiset of cycle lengths with multiplicities, lengths strictly decreasing.
// Text form joins lengths with "." and multiplicities with "^": "3^2.2.1^3".
class CycleStructure {
 public:
  CycleStructure() = default;
  static CycleStructure of(const Permutation& p);
  static CycleStructure parse(const std::string& text);

  const std::vector<std::pair<int, int>>& parts() const { return parts_; }
  int degree() const;
  long order() const;  // lcm of the lengths
  std::string str() const;

  // A concrete permutation with this structure: cycles on consecutive points,
  // longest first, e.g. 3^2.1^3 -> (1 2 3)(4 5 6)(7)(8)(9).
  Permutation representative() const;

  bool operator==(const CycleStructure& o) const { return parts_ == o.parts_; }
  bool operator<(const CycleStructure& o) const { return parts_ < o.parts_; }

 private:
  std::vector<std::pair<int, int>> parts_;  // (length, multiplicity)
};

struct Isotopism {
  Permutation row, col, sym;

  Isotopism() = default;
  Isotopism(Permutation r, Permutation c, Permutation s);
  static Isotopism identity(int degree);

  int degree() const { return row.degree(); }
  Isotopism then(const Isotopism& rhs) const;
  Isotopism inverse() const;

  bool is_identity() const;
  bool is_isomorphism() const { return row == col && col == sym; }
  bool is_rrs() const { return row == col; }
  bool is_principal() const { return sym.is_identity(); }

  bool operator==(const Isotopism& o) const {
    return row == o.row && col == o.col && sym == o.sym;
  }
  bool operator<(const Isotopism& o) const;
};

// One of the six coordinate reorderings of (row, column, symbol) triples.
// Label (a,b,c) sends a triple t to (t[a], t[b], t[c]); e.g. C213 is the
// transpose and C312 sends (r,c,s) to (s,r,c).
enum class ConjugateLabel : uint8_t { C123, C132, C213, C231, C312, C321 };

inline constexpr ConjugateLabel kAllConjugates[6] = {
    ConjugateLabel::C123, ConjugateLabel::C132, ConjugateLabel::C213,
    ConjugateLabel::C231, ConjugateLabel::C312, ConjugateLabel::C321};

const std::array<int, 3>& conjugate_tuple(ConjugateLabel label);
std::string conjugate_name(ConjugateLabel label);          // "(3,1,2)"
ConjugateLabel parse_conjugate_label(const std::string&);  // "312" or "(3,1,2)"
// conj(conj(L,a),b) == conj(L, compose(a,b))
ConjugateLabel compose(ConjugateLabel a, ConjugateLabel b);
ConjugateLabel inverse(ConjugateLabel a);

// A conjugation followed by an isotopism, in that order.
struct Paratopism {
  ConjugateLabel sigma = ConjugateLabel::C123;
  Isotopism iso;

  static Paratopism identity(int degree);
  Paratopism then(const Paratopism& rhs) const;
  Paratopism inverse() const;
  bool is_identity() const;
  long order() const;

  bool operator==(const Paratopism& o) const { return sigma == o.sigma && iso == o.iso; }
};

}  // namespace latsq
