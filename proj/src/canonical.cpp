#include "latsq/canonical.hpp"

#include <algorithm>
#include <cstring>
#include <stdexcept>

#include "latsq/stabilizers.hpp"

namespace latsq {

std::string relation_name(EquivalenceRelation rel) {
  switch (rel) {
    case EquivalenceRelation::kIsomorphism: return "isomorphism";
    case EquivalenceRelation::kRrsIsotopism: return "rrs-isotopism";
    case EquivalenceRelation::kIsotopism: return "isotopism";
    case EquivalenceRelation::kSpecies: return "species";
  }
  return "?";
}

EquivalenceRelation parse_relation(const std::string& text) {
  if (text == "isomorphism") return EquivalenceRelation::kIsomorphism;
  if (text == "rrs-isotopism" || text == "rrs_isotopism" || text == "rrs")
    return EquivalenceRelation::kRrsIsotopism;
  if (text == "isotopism") return EquivalenceRelation::kIsotopism;
  if (text == "species" || text == "main-class") return EquivalenceRelation::kSpecies;
  throw std::invalid_argument("unknown relation: " + text);
}

bool relation_refines(EquivalenceRelation fine, EquivalenceRelation coarse) {
  return static_cast<int>(fine) <= static_cast<int>(coarse);
}

unsigned __int128 factorial_u128(int n) {
  if (n < 0 || n > 34) throw std::invalid_argument("factorial_u128: out of range");
  unsigned __int128 f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

std::string u128_to_string(unsigned __int128 v) {
  if (v == 0) return "0";
  std::string out;
  while (v > 0) {
    out += static_cast<char>('0' + static_cast<int>(v % 10));
    v /= 10;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

unsigned __int128 u128_from_string(const std::string& s) {
  unsigned __int128 v = 0;
  if (s.empty()) throw std::invalid_argument("empty number");
  for (char ch : s) {
    if (ch < '0' || ch > '9') throw std::invalid_argument("bad number: " + s);
    v = v * 10 + (ch - '0');
  }
  return v;
}

unsigned __int128 acting_group_order(int n, EquivalenceRelation rel) {
  unsigned __int128 f = factorial_u128(n);
  switch (rel) {
    case EquivalenceRelation::kIsomorphism: return f;
    case EquivalenceRelation::kRrsIsotopism: return f * f;
    case EquivalenceRelation::kIsotopism: return f * f * f;
    case EquivalenceRelation::kSpecies: return 6 * f * f * f;
  }
  return 0;
}

uint64_t stabilizer_order(const LatinSquare& sq, EquivalenceRelation rel) {
  switch (rel) {
    case EquivalenceRelation::kIsomorphism: return automorphism_group_order(sq);
    case EquivalenceRelation::kRrsIsotopism: return rrs_autotopism_group_order(sq);
    case EquivalenceRelation::kIsotopism: return autotopism_group(sq).size();
    case EquivalenceRelation::kSpecies: return autoparatopism_group(sq).size();
  }
  return 0;
}

namespace {

enum class Mode { kIso, kRrs, kIsot };

// Lexicographic row-major minimization over the acting group. One partial
// injection serves as the row map; the column map aliases it except in kIsot
// mode. Symbols are relabelled directly in kIso mode and derived from the
// first row's column positions otherwise (first-occurrence relabelling of a
// complete first row).
class Minimizer {
 public:
  Minimizer(int n, const uint8_t* cells, Mode mode, bool partial)
      : n_(n), a_(cells), mode_(mode), partial_(partial) {
    if (n > kMaxCanonOrder) throw std::invalid_argument("order exceeds canonicalization cap");
    end_ = n * n;
    std::memset(best_, 0xFF, sizeof best_);
    std::memset(rmap_, 0xFF, sizeof rmap_);
    std::memset(rinv_, 0xFF, sizeof rinv_);
    std::memset(cmap_sep_, 0xFF, sizeof cmap_sep_);
    std::memset(cinv_sep_, 0xFF, sizeof cinv_sep_);
    if (mode == Mode::kIsot) {
      cmap_ = cmap_sep_;
      cinv_ = cinv_sep_;
    } else {
      cmap_ = rmap_;
      cinv_ = rinv_;
    }
  }

  std::vector<uint8_t> run() {
    if (mode_ == Mode::kIso) {
      cell(0);
    } else {
      for (int j = 0; j < n_; ++j) best_[j] = static_cast<uint8_t>(j);
      for (int a0 = 0; a0 < n_; ++a0) {
        for (int c = 0; c < n_; ++c) col_of_sym0_[a_[a0 * n_ + c]] = static_cast<uint8_t>(c);
        rmap_[a0] = 0;
        rinv_[0] = static_cast<uint8_t>(a0);
        cell(n_);
        rmap_[a0] = kEmptyCell;
        rinv_[0] = kEmptyCell;
      }
    }
    std::vector<uint8_t> out(best_, best_ + end_);
    if (partial_)
      for (auto& v : out)
        if (v == n_) v = kEmptyCell;
    return out;
  }

 private:
  void descend(int k, int v) {
    if (v > best_[k]) return;
    if (v < best_[k]) {
      best_[k] = static_cast<uint8_t>(v);
      std::memset(best_ + k + 1, 0xFF, end_ - k - 1);
    }
    cell(k + 1);
  }

  void cell(int k) {
    if (k == end_) return;  // leaf: best_ equals the string along this path
    const int i = k / n_, j = k % n_;
    if (rinv_[i] == kEmptyCell) {
      for (int r = 0; r < n_; ++r) {
        if (rmap_[r] != kEmptyCell) continue;
        rmap_[r] = static_cast<uint8_t>(i);
        rinv_[i] = static_cast<uint8_t>(r);
        cell(k);
        rmap_[r] = kEmptyCell;
        rinv_[i] = kEmptyCell;
      }
      return;
    }
    if (cinv_[j] == kEmptyCell) {
      for (int c = 0; c < n_; ++c) {
        if (cmap_[c] != kEmptyCell) continue;
        cmap_[c] = static_cast<uint8_t>(j);
        cinv_[j] = static_cast<uint8_t>(c);
        cell(k);
        cmap_[c] = kEmptyCell;
        cinv_[j] = kEmptyCell;
      }
      return;
    }
    const int r = rinv_[i], c = cinv_[j];
    const uint8_t s = a_[r * n_ + c];
    if (s == kEmptyCell) {  // only in partial mode
      descend(k, n_);
      return;
    }
    if (mode_ == Mode::kIso) {
      if (rmap_[s] != kEmptyCell) {
        descend(k, rmap_[s]);
        return;
      }
      for (int t = 0; t < n_; ++t) {
        if (rinv_[t] != kEmptyCell) continue;
        if (t > best_[k]) break;
        rmap_[s] = static_cast<uint8_t>(t);
        rinv_[t] = s;
        descend(k, t);
        rmap_[s] = kEmptyCell;
        rinv_[t] = kEmptyCell;
      }
      return;
    }
    const uint8_t x = col_of_sym0_[s];
    if (cmap_[x] != kEmptyCell) {
      descend(k, cmap_[x]);
      return;
    }
    for (int t = 0; t < n_; ++t) {
      if (cinv_[t] != kEmptyCell) continue;
      if (t > best_[k]) break;
      cmap_[x] = static_cast<uint8_t>(t);
      cinv_[t] = x;
      descend(k, t);
      cmap_[x] = kEmptyCell;
      cinv_[t] = kEmptyCell;
    }
  }

  int n_;
  const uint8_t* a_;
  Mode mode_;
  bool partial_;
  int end_;
  uint8_t* cmap_ = nullptr;
  uint8_t* cinv_ = nullptr;
  uint8_t col_of_sym0_[kMaxCanonOrder];
  uint8_t rmap_[kMaxCanonOrder], rinv_[kMaxCanonOrder];
  uint8_t cmap_sep_[kMaxCanonOrder], cinv_sep_[kMaxCanonOrder];
  uint8_t best_[kMaxCanonOrder * kMaxCanonOrder];
};

std::vector<uint8_t> minimize(const LatinSquare& sq, Mode mode) {
  return Minimizer(sq.order(), sq.cells().data(), mode, false).run();
}

}  // namespace

LatinSquare canonical_form(const LatinSquare& sq, EquivalenceRelation rel) {
  const int n = sq.order();
  switch (rel) {
    case EquivalenceRelation::kIsomorphism:
      return LatinSquare::from_cells_unchecked(n, minimize(sq, Mode::kIso));
    case EquivalenceRelation::kRrsIsotopism:
      return LatinSquare::from_cells_unchecked(n, minimize(sq, Mode::kRrs));
    case EquivalenceRelation::kIsotopism:
      return LatinSquare::from_cells_unchecked(n, minimize(sq, Mode::kIsot));
    case EquivalenceRelation::kSpecies: {
      std::vector<uint8_t> best;
      for (ConjugateLabel label : kAllConjugates) {
        std::vector<uint8_t> cand = minimize(conjugate(sq, label), Mode::kIsot);
        if (best.empty() || cand < best) best = std::move(cand);
      }
      return LatinSquare::from_cells_unchecked(n, std::move(best));
    }
  }
  throw std::logic_error("bad relation");
}

std::vector<uint8_t> canonical_partial(int n, const std::vector<uint8_t>& cells) {
  if (cells.size() != static_cast<size_t>(n) * n)
    throw std::invalid_argument("canonical_partial: size mismatch");
  return Minimizer(n, cells.data(), Mode::kIso, true).run();
}

namespace {

// One scheme of color refinement over the 3n points (rows, columns, symbols)
// of a partial square; returns per-point colors, label-invariant.
struct PartialColors {
  std::array<uint32_t, 3 * kMaxCanonOrder> color;  // rows, cols, syms

  PartialColors(int n, const uint8_t* cells, int rounds = 3) {
    auto scramble = [](uint64_t v) {
      v *= 0x9e3779b97f4a7c15ull;
      v ^= v >> 29;
      v *= 0xbf58476d1ce4e5b9ull;
      v ^= v >> 32;
      return v;
    };
    for (int i = 0; i < 3 * n; ++i) color[i] = 1;
    for (int round = 0; round < rounds; ++round) {
      // aggregate incident-cell hashes commutatively so the result is a
      // multiset invariant, independent of cell scan order
      std::array<uint64_t, 3 * kMaxCanonOrder> next{};
      for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
          uint8_t s = cells[r * n + c];
          if (s == kEmptyCell) continue;
          uint64_t t = scramble((r == c ? 0x517cc1b727220a95ull : 0x2545f4914f6cdd1dull) +
                                color[r] + 0x100000001ull * color[n + c] +
                                0x10000000001ull * color[2 * n + s]);
          next[r] += scramble(t + 1);
          next[n + c] += scramble(t + 2);
          next[2 * n + s] += scramble(t + 3);
        }
      for (int i = 0; i < 3 * n; ++i)
        color[i] = static_cast<uint32_t>(scramble(color[i] + next[i]) >> 16);
    }
  }
};

// Backtracking partial-square isomorphism test with color prefiltering and
// symbol propagation. Succeeds on the first full point map.
class PartialIsoTest {
 public:
  PartialIsoTest(int n, const uint8_t* a, const uint8_t* b)
      : n_(n), a_(a), b_(b), ca_(n, a), cb_(n, b) {
    map_.assign(n_, kEmptyCell);
    inv_.assign(n_, kEmptyCell);
  }

  bool run() {
    // quick invariant gates: sorted colors per role must match
    for (int role = 0; role < 3; ++role) {
      std::vector<uint32_t> x(ca_.color.begin() + role * n_,
                              ca_.color.begin() + (role + 1) * n_);
      std::vector<uint32_t> y(cb_.color.begin() + role * n_,
                              cb_.color.begin() + (role + 1) * n_);
      std::sort(x.begin(), x.end());
      std::sort(y.begin(), y.end());
      if (x != y) return false;
    }
    return dfs();
  }

 private:
  bool compatible(int x, int v) const {
    // a point plays all three roles at once
    return ca_.color[x] == cb_.color[v] && ca_.color[n_ + x] == cb_.color[n_ + v] &&
           ca_.color[2 * n_ + x] == cb_.color[2 * n_ + v];
  }

  bool try_assign(int x, int v) {
    if (map_[x] != kEmptyCell) return map_[x] == v;
    if (inv_[v] != kEmptyCell) return false;
    if (!compatible(x, v)) return false;
    map_[x] = static_cast<uint8_t>(v);
    inv_[v] = static_cast<uint8_t>(x);
    trail_.push_back(x);
    return true;
  }

  bool propagate(size_t start) {
    for (size_t t = start; t < trail_.size(); ++t) {
      int p = trail_[t];
      for (int q = 0; q < n_; ++q) {
        if (map_[q] == kEmptyCell) continue;
        uint8_t sa = a_[p * n_ + q], sb = b_[map_[p] * n_ + map_[q]];
        if ((sa == kEmptyCell) != (sb == kEmptyCell)) return false;
        if (sa != kEmptyCell && !try_assign(sa, sb)) return false;
        sa = a_[q * n_ + p];
        sb = b_[map_[q] * n_ + map_[p]];
        if ((sa == kEmptyCell) != (sb == kEmptyCell)) return false;
        if (sa != kEmptyCell && !try_assign(sa, sb)) return false;
      }
    }
    return true;
  }

  bool dfs() {
    int x = 0;
    while (x < n_ && map_[x] != kEmptyCell) ++x;
    if (x == n_) return true;
    for (int v = 0; v < n_; ++v) {
      if (inv_[v] != kEmptyCell) continue;
      size_t mark = trail_.size();
      if (try_assign(x, v) && propagate(mark) && dfs()) return true;
      while (trail_.size() > mark) {
        int y = trail_.back();
        trail_.pop_back();
        inv_[map_[y]] = kEmptyCell;
        map_[y] = kEmptyCell;
      }
    }
    return false;
  }

  int n_;
  const uint8_t* a_;
  const uint8_t* b_;
  PartialColors ca_, cb_;
  std::vector<uint8_t> map_, inv_;
  std::vector<int> trail_;
};

}  // namespace

uint64_t partial_fingerprint(int n, const uint8_t* cells) {
  PartialColors colors(n, cells);
  std::array<uint64_t, 3> role_hash{};
  for (int role = 0; role < 3; ++role) {
    std::vector<uint32_t> sorted(colors.color.begin() + role * n,
                                 colors.color.begin() + (role + 1) * n);
    std::sort(sorted.begin(), sorted.end());
    uint64_t h = 1469598103934665603ull;
    for (uint32_t c : sorted) h = (h ^ c) * 1099511628211ull;
    role_hash[role] = h;
  }
  return role_hash[0] ^ (role_hash[1] * 3) ^ (role_hash[2] * 7);
}

bool partial_isomorphic(int n, const uint8_t* a, const uint8_t* b) {
  return PartialIsoTest(n, a, b).run();
}

bool PartialIsoSet::insert(const uint8_t* cells) {
  uint64_t fp = partial_fingerprint(n_, cells);
  auto& bucket = buckets_[fp];
  for (const auto& stored : bucket)
    if (partial_isomorphic(n_, stored.data(), cells)) return false;
  bucket.emplace_back(cells, cells + static_cast<size_t>(n_) * n_);
  return true;
}

namespace {

uint32_t encode_structure(const CycleStructure& cs) {
  uint32_t h = 2166136261u;
  for (auto [len, mult] : cs.parts()) {
    h = (h ^ static_cast<uint32_t>(len)) * 16777619u;
    h = (h ^ static_cast<uint32_t>(mult)) * 16777619u;
  }
  return h;
}

// Multiset of relative cycle structures over ordered row pairs, sorted.
std::vector<uint32_t> row_structure_multiset(const LatinSquare& sq) {
  const int n = sq.order();
  std::vector<uint32_t> out;
  std::vector<uint8_t> pos(n), phi(n);
  for (int r2 = 0; r2 < n; ++r2) {
    for (int c = 0; c < n; ++c) pos[sq.at(r2, c)] = static_cast<uint8_t>(c);
    for (int r1 = 0; r1 < n; ++r1) {
      if (r1 == r2) continue;
      for (int c = 0; c < n; ++c) phi[c] = pos[sq.at(r1, c)];
      out.push_back(encode_structure(CycleStructure::of(Permutation::from_images(phi))));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<uint32_t> diagonal_multiplicities(const LatinSquare& sq) {
  std::vector<uint32_t> mult(sq.order(), 0);
  for (int i = 0; i < sq.order(); ++i) ++mult[sq.at(i, i)];
  std::sort(mult.begin(), mult.end());
  while (!mult.empty() && mult.front() == 0) mult.erase(mult.begin());
  return mult;
}

}  // namespace

InvariantSignature invariant_signature(const LatinSquare& sq, EquivalenceRelation rel) {
  InvariantSignature sig;
  auto push = [&](uint32_t v) { sig.data.push_back(v); };
  push(static_cast<uint32_t>(sq.order()));
  push(static_cast<uint32_t>(sq.intercalate_count()));
  switch (rel) {
    case EquivalenceRelation::kIsomorphism:
      push(static_cast<uint32_t>(sq.idempotent_count()));
      [[fallthrough]];
    case EquivalenceRelation::kRrsIsotopism: {
      for (uint32_t m : diagonal_multiplicities(sq)) push(m);
      push(0xFFFFFFFFu);
      auto rows = row_structure_multiset(sq);
      sig.data.insert(sig.data.end(), rows.begin(), rows.end());
      break;
    }
    case EquivalenceRelation::kIsotopism: {
      auto rows = row_structure_multiset(sq);
      sig.data.insert(sig.data.end(), rows.begin(), rows.end());
      break;
    }
    case EquivalenceRelation::kSpecies: {
      std::vector<uint32_t> all;
      for (ConjugateLabel label : kAllConjugates) {
        auto rows = row_structure_multiset(conjugate(sq, label));
        all.insert(all.end(), rows.begin(), rows.end());
      }
      std::sort(all.begin(), all.end());
      sig.data.insert(sig.data.end(), all.begin(), all.end());
      break;
    }
  }
  return sig;
}

unsigned __int128 CatalogEntry::class_size() const {
  return acting_group_order(representative.order(), relation) / stabilizer_order;
}

unsigned __int128 Catalog::total_squares() const {
  unsigned __int128 sum = 0;
  for (const auto& e : entries) sum += e.class_size();
  return sum;
}

void Deduper::add(const LatinSquare& sq) { add_canonical(canonical_form(sq, rel_), 1); }

void Deduper::add_canonical(const LatinSquare& canon, uint64_t count) {
  std::string key(canon.cells().begin(), canon.cells().end());
  classes_[key] += count;
}

void Deduper::merge(Deduper&& other) {
  for (auto& [key, count] : other.classes_) classes_[key] += count;
  other.classes_.clear();
}

std::vector<std::pair<std::string, uint64_t>> Deduper::sorted_items() const {
  std::vector<std::pair<std::string, uint64_t>> sorted(classes_.begin(), classes_.end());
  std::sort(sorted.begin(), sorted.end());
  return sorted;
}

Catalog Deduper::finish(int order) const {
  Catalog cat;
  cat.order = order;
  cat.relation = rel_;
  std::vector<std::pair<std::string, uint64_t>> sorted = sorted_items();
  for (auto& [key, count] : sorted) {
    CatalogEntry e;
    e.representative = LatinSquare::from_cells_unchecked(
        order, std::vector<uint8_t>(key.begin(), key.end()));
    e.stream_count = count;
    e.relation = rel_;
    e.stabilizer_order = stabilizer_order(e.representative, rel_);
    cat.entries.push_back(std::move(e));
  }
  return cat;
}

TsGraph ts_isomorphism_graph(const LatinSquare& sq) {
  if (!is_totally_symmetric(sq))
    throw std::invalid_argument("ts_isomorphism_graph: square not totally symmetric");
  const int n = sq.order();
  TsGraph g;
  g.num_points = n;
  for (int u = 0; u < n; ++u) {
    uint8_t v = sq.at(u, u);
    if (v != u) g.edges.emplace_back(static_cast<uint8_t>(u), v);
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      uint8_t k = sq.at(i, j);
      if (k == i || k == j) continue;
      if (k > j)  // emit each block once, from its sorted form
        g.blocks.push_back({static_cast<uint8_t>(i), static_cast<uint8_t>(j), k});
    }
  }
  std::sort(g.blocks.begin(), g.blocks.end());
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

LatinSquare ts_square_from_graph(const TsGraph& g) {
  const int n = g.num_points;
  std::vector<uint8_t> cells(static_cast<size_t>(n) * n, kEmptyCell);
  auto set_cell = [&](int r, int c, int s) {
    uint8_t& v = cells[r * n + c];
    if (v != kEmptyCell && v != s) throw std::invalid_argument("inconsistent graph");
    v = static_cast<uint8_t>(s);
  };
  std::vector<bool> has_out(n, false);
  for (auto [u, v] : g.edges) {
    has_out[u] = true;
    set_cell(u, u, v);
    set_cell(u, v, u);
    set_cell(v, u, u);
  }
  for (int u = 0; u < n; ++u)
    if (!has_out[u]) set_cell(u, u, u);
  for (const auto& b : g.blocks) {
    int i = b[0], j = b[1], k = b[2];
    set_cell(i, j, k);
    set_cell(j, i, k);
    set_cell(i, k, j);
    set_cell(k, i, j);
    set_cell(j, k, i);
    set_cell(k, j, i);
  }
  return LatinSquare::from_cells(n, std::move(cells));
}

}  // namespace latsq
