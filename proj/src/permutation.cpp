#include "latsq/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace latsq {

Permutation::Permutation(int degree) : img_(degree) {
  std::iota(img_.begin(), img_.end(), 0);
}

Permutation Permutation::from_images(std::vector<uint8_t> images) {
  std::vector<bool> seen(images.size(), false);
  for (uint8_t v : images) {
    if (v >= images.size() || seen[v]) throw std::invalid_argument("not a bijection");
    seen[v] = true;
  }
  Permutation p;
  p.img_ = std::move(images);
  return p;
}

Permutation Permutation::from_cycles(int degree,
                                     const std::vector<std::vector<int>>& cycles) {
  Permutation p(degree);
  for (const auto& cyc : cycles) {
    for (size_t k = 0; k < cyc.size(); ++k) {
      int from = cyc[k] - 1;
      int to = cyc[(k + 1) % cyc.size()] - 1;
      if (from < 0 || from >= degree || to < 0 || to >= degree)
        throw std::invalid_argument("cycle point out of range");
      p.img_[from] = static_cast<uint8_t>(to);
    }
  }
  return from_images(p.img_);  // revalidate (catches repeated points)
}

Permutation Permutation::from_cycles(
    int degree, std::initializer_list<std::initializer_list<int>> cycles) {
  std::vector<std::vector<int>> cs;
  for (const auto& c : cycles) cs.emplace_back(c);
  return from_cycles(degree, cs);
}

Permutation Permutation::then(const Permutation& rhs) const {
  Permutation out;
  out.img_.resize(img_.size());
  for (size_t i = 0; i < img_.size(); ++i) out.img_[i] = rhs.img_[img_[i]];
  return out;
}

Permutation operator*(const Permutation& a, const Permutation& b) { return a.then(b); }

Permutation Permutation::inverse() const {
  Permutation out;
  out.img_.resize(img_.size());
  for (size_t i = 0; i < img_.size(); ++i) out.img_[img_[i]] = static_cast<uint8_t>(i);
  return out;
}

Permutation Permutation::conjugated_by(const Permutation& g) const {
  return g.inverse().then(*this).then(g);
}

bool Permutation::is_identity() const {
  for (size_t i = 0; i < img_.size(); ++i)
    if (img_[i] != i) return false;
  return true;
}

bool Permutation::is_involution() const {
  for (size_t i = 0; i < img_.size(); ++i)
    if (img_[img_[i]] != i) return false;
  return true;
}

int Permutation::fixed_point_count() const {
  int k = 0;
  for (size_t i = 0; i < img_.size(); ++i)
    if (img_[i] == i) ++k;
  return k;
}

namespace {
std::vector<int> cycle_lengths(const Permutation& p) {
  std::vector<int> lens;
  std::vector<bool> seen(p.degree(), false);
  for (int i = 0; i < p.degree(); ++i) {
    if (seen[i]) continue;
    int len = 0, j = i;
    while (!seen[j]) {
      seen[j] = true;
      j = p(j);
      ++len;
    }
    lens.push_back(len);
  }
  return lens;
}
}  // namespace

bool Permutation::is_semiregular() const {
  if (fixed_point_count() > 0) return false;
  auto lens = cycle_lengths(*this);
  for (int len : lens)
    if (len != lens[0]) return false;
  return true;
}

long Permutation::order() const {
  long ord = 1;
  for (int len : cycle_lengths(*this)) ord = std::lcm(ord, static_cast<long>(len));
  return ord;
}

std::string Permutation::cycle_string() const {
  std::string out;
  std::vector<bool> seen(degree(), false);
  for (int i = 0; i < degree(); ++i) {
    if (seen[i] || img_[i] == i) {
      seen[i] = true;
      continue;
    }
    out += '(';
    int j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) out += ',';
      out += std::to_string(j + 1);
      first = false;
      j = img_[j];
    }
    out += ')';
  }
  return out.empty() ? "e" : out;
}

CycleStructure CycleStructure::of(const Permutation& p) {
  auto lens = cycle_lengths(p);
  std::sort(lens.begin(), lens.end(), std::greater<int>());
  CycleStructure cs;
  for (int len : lens) {
    if (!cs.parts_.empty() && cs.parts_.back().first == len)
      ++cs.parts_.back().second;
    else
      cs.parts_.emplace_back(len, 1);
  }
  return cs;
}

CycleStructure CycleStructure::parse(const std::string& text) {
  CycleStructure cs;
  size_t i = 0;
  auto read_int = [&]() {
    size_t start = i;
    while (i < text.size() && isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == start) throw std::invalid_argument("bad cycle structure: " + text);
    return std::stoi(text.substr(start, i - start));
  };
  while (i < text.size()) {
    int len = read_int();
    int mult = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      mult = read_int();
    }
    if (len <= 0 || mult <= 0) throw std::invalid_argument("bad cycle structure: " + text);
    if (!cs.parts_.empty() && cs.parts_.back().first <= len)
      throw std::invalid_argument("cycle lengths must strictly decrease: " + text);
    cs.parts_.emplace_back(len, mult);
    if (i < text.size()) {
      if (text[i] != '.') throw std::invalid_argument("bad cycle structure: " + text);
      ++i;
    }
  }
  if (cs.parts_.empty()) throw std::invalid_argument("empty cycle structure");
  return cs;
}

int CycleStructure::degree() const {
  int n = 0;
  for (auto [len, mult] : parts_) n += len * mult;
  return n;
}

long CycleStructure::order() const {
  long ord = 1;
  for (auto [len, mult] : parts_) ord = std::lcm(ord, static_cast<long>(len));
  return ord;
}

std::string CycleStructure::str() const {
  std::string out;
  for (auto [len, mult] : parts_) {
    if (!out.empty()) out += '.';
    out += std::to_string(len);
    if (mult > 1) out += '^' + std::to_string(mult);
  }
  return out;
}

Permutation CycleStructure::representative() const {
  Permutation p(degree());
  std::vector<uint8_t> img = p.images();
  int next = 0;
  for (auto [len, mult] : parts_) {
    for (int m = 0; m < mult; ++m) {
      for (int k = 0; k < len; ++k)
        img[next + k] = static_cast<uint8_t>(next + (k + 1) % len);
      next += len;
    }
  }
  return Permutation::from_images(img);
}

Isotopism::Isotopism(Permutation r, Permutation c, Permutation s)
    : row(std::move(r)), col(std::move(c)), sym(std::move(s)) {
  if (row.degree() != col.degree() || col.degree() != sym.degree())
    throw std::invalid_argument("isotopism components must have equal degree");
}

Isotopism Isotopism::identity(int degree) {
  return Isotopism(Permutation(degree), Permutation(degree), Permutation(degree));
}

Isotopism Isotopism::then(const Isotopism& rhs) const {
  return Isotopism(row.then(rhs.row), col.then(rhs.col), sym.then(rhs.sym));
}

Isotopism Isotopism::inverse() const {
  return Isotopism(row.inverse(), col.inverse(), sym.inverse());
}

bool Isotopism::is_identity() const {
  return row.is_identity() && col.is_identity() && sym.is_identity();
}

bool Isotopism::operator<(const Isotopism& o) const {
  if (!(row == o.row)) return row < o.row;
  if (!(col == o.col)) return col < o.col;
  return sym < o.sym;
}

namespace {
// Tuples indexed by ConjugateLabel, 0-based coordinates.
constexpr std::array<std::array<int, 3>, 6> kTuples = {{
    {0, 1, 2},  // C123
    {0, 2, 1},  // C132
    {1, 0, 2},  // C213
    {1, 2, 0},  // C231
    {2, 0, 1},  // C312
    {2, 1, 0},  // C321
}};

ConjugateLabel label_of_tuple(const std::array<int, 3>& t) {
  for (int i = 0; i < 6; ++i)
    if (kTuples[i] == t) return static_cast<ConjugateLabel>(i);
  throw std::logic_error("bad conjugate tuple");
}
}  // namespace

const std::array<int, 3>& conjugate_tuple(ConjugateLabel label) {
  return kTuples[static_cast<int>(label)];
}

std::string conjugate_name(ConjugateLabel label) {
  const auto& t = conjugate_tuple(label);
  std::string out = "(";
  for (int k = 0; k < 3; ++k) {
    if (k) out += ',';
    out += std::to_string(t[k] + 1);
  }
  return out + ")";
}

ConjugateLabel parse_conjugate_label(const std::string& text) {
  std::string digits;
  for (char ch : text)
    if (isdigit(static_cast<unsigned char>(ch))) digits += ch;
  if (digits.size() != 3) throw std::invalid_argument("bad conjugate label: " + text);
  std::array<int, 3> t = {digits[0] - '1', digits[1] - '1', digits[2] - '1'};
  for (int v : t)
    if (v < 0 || v > 2) throw std::invalid_argument("bad conjugate label: " + text);
  return label_of_tuple(t);
}

ConjugateLabel compose(ConjugateLabel a, ConjugateLabel b) {
  const auto& ta = conjugate_tuple(a);
  const auto& tb = conjugate_tuple(b);
  return label_of_tuple({ta[tb[0]], ta[tb[1]], ta[tb[2]]});
}

ConjugateLabel inverse(ConjugateLabel a) {
  const auto& t = conjugate_tuple(a);
  std::array<int, 3> inv{};
  for (int k = 0; k < 3; ++k) inv[t[k]] = k;
  return label_of_tuple(inv);
}

Paratopism Paratopism::identity(int degree) {
  return Paratopism{ConjugateLabel::C123, Isotopism::identity(degree)};
}

namespace {
// conj(L(I), sigma) == conj(L, sigma)(J) with J_k = I_{sigma(k)}.
Isotopism permute_components(const Isotopism& iso, ConjugateLabel sigma) {
  const auto& t = conjugate_tuple(sigma);
  std::array<const Permutation*, 3> parts = {&iso.row, &iso.col, &iso.sym};
  return Isotopism(*parts[t[0]], *parts[t[1]], *parts[t[2]]);
}
}  // namespace

Paratopism Paratopism::then(const Paratopism& rhs) const {
  return Paratopism{compose(sigma, rhs.sigma),
                    permute_components(iso, rhs.sigma).then(rhs.iso)};
}

Paratopism Paratopism::inverse() const {
  ConjugateLabel si = latsq::inverse(sigma);
  return Paratopism{si, permute_components(iso, si).inverse()};
}

bool Paratopism::is_identity() const {
  return sigma == ConjugateLabel::C123 && iso.is_identity();
}

long Paratopism::order() const {
  Paratopism p = *this;
  long k = 1;
  while (!p.is_identity()) {
    p = p.then(*this);
    ++k;
    if (k > 6L * 1000000) throw std::logic_error("paratopism order runaway");
  }
  return k;
}

}  // namespace latsq
