#include "latsq/generate.hpp"

#include <algorithm>
#include <bit>
#include <cstring>
#include <fstream>
#include <mutex>
#include <stdexcept>
#include <unordered_set>

#include "latsq/parallel.hpp"
#include "latsq/stabilizers.hpp"

namespace latsq {

namespace {
constexpr int kMaxN = kMaxCanonOrder;
}

// ---------------------------------------------------------------------------
// Oracle: all Latin squares of order n.

namespace {
struct AllSquaresGen {
  int n;
  const SquareSink& emit;
  uint64_t count = 0;
  uint32_t col_mask[kMaxN] = {};
  std::vector<uint8_t> grid;

  AllSquaresGen(int n, const SquareSink& emit) : n(n), emit(emit), grid(n * n) {}

  void cell(int k) {
    if (k == n * n) {
      ++count;
      if (emit) emit(LatinSquare::from_cells_unchecked(n, grid));
      return;
    }
    int r = k / n, c = k % n;
    uint32_t row_mask = 0;
    for (int j = 0; j < c; ++j) row_mask |= 1u << grid[r * n + j];
    uint32_t avail = ~(row_mask | col_mask[c]) & ((1u << n) - 1);
    while (avail) {
      int s = std::countr_zero(avail);
      avail &= avail - 1;
      grid[k] = static_cast<uint8_t>(s);
      col_mask[c] |= 1u << s;
      cell(k + 1);
      col_mask[c] &= ~(1u << s);
    }
  }
};
}  // namespace

void gen_all_of_order(int n, const SquareSink& emit) {
  if (n < 1 || n > 6) throw std::invalid_argument("gen_all_of_order supports n <= 6");
  AllSquaresGen g(n, emit);
  g.cell(0);
}

uint64_t count_all_of_order(int n) {
  if (n < 1 || n > 6) throw std::invalid_argument("count_all_of_order supports n <= 6");
  SquareSink none;
  AllSquaresGen g(n, none);
  g.cell(0);
  return g.count;
}

uint64_t gen_reduced_of_order(int n, const SquareSink& emit) {
  if (n < 1 || n > 7) throw std::invalid_argument("gen_reduced_of_order supports n <= 7");
  if (n == 1) {
    if (emit) emit(LatinSquare::from_rows({{1}}));
    return 1;
  }
  struct Gen {
    int n;
    const SquareSink& emit;
    uint64_t count = 0;
    uint32_t col_mask[kMaxN] = {};
    std::vector<uint8_t> grid;

    Gen(int n, const SquareSink& emit) : n(n), emit(emit), grid(n * n) {}

    void cell(int k) {
      if (k == n * n) {
        ++count;
        if (emit) emit(LatinSquare::from_cells_unchecked(n, grid));
        return;
      }
      int r = k / n, c = k % n;
      if (c == 0) {  // first column fixed
        grid[k] = static_cast<uint8_t>(r);
        cell(k + 1);
        return;
      }
      uint32_t row_mask = 0;
      for (int j = 0; j < c; ++j) row_mask |= 1u << grid[r * n + j];
      uint32_t avail = ~(row_mask | col_mask[c]) & ((1u << n) - 1);
      while (avail) {
        int s = std::countr_zero(avail);
        avail &= avail - 1;
        grid[k] = static_cast<uint8_t>(s);
        col_mask[c] |= 1u << s;
        cell(k + 1);
        col_mask[c] &= ~(1u << s);
      }
    }
  };
  Gen g(n, emit);
  for (int i = 0; i < n; ++i) {
    g.grid[i] = static_cast<uint8_t>(i);  // first row fixed
    g.col_mask[i] = 1u << i;
  }
  g.cell(n);
  return g.count;
}

// ---------------------------------------------------------------------------
// Reduced symmetric squares via the (1,3,2)-conjugate view: row k is an
// involution sending 0 to k, columns stay Latin, and for odd n every row has
// exactly one fixed point. Conjugating by (2,3,1) turns each completed square
// into a reduced symmetric one.

namespace {

struct InvolutionRowsGen {
  int n;
  bool odd;
  uint32_t col_mask[kMaxN] = {};
  uint8_t grid[kMaxN * kMaxN];
  uint64_t count = 0;
  const std::function<void(const LatinSquare&)>* emit = nullptr;

  explicit InvolutionRowsGen(int n) : n(n), odd(n % 2 == 1) {}

  bool put(int r, int c, int s) {
    if (col_mask[c] & (1u << s)) return false;
    grid[r * n + c] = static_cast<uint8_t>(s);
    col_mask[c] |= 1u << s;
    return true;
  }
  void un_put(int c, int s) { col_mask[c] &= ~(1u << s); }

  void finish_square() {
    ++count;
    if (*emit) {
      LatinSquare m = LatinSquare::from_cells_unchecked(
          n, std::vector<uint8_t>(grid, grid + n * n));
      (*emit)(conjugate(m, ConjugateLabel::C231));
    }
  }

  // Pair the unplaced points of row k, smallest first. `placed` is the set of
  // points already holding a value in this row; `loops` counts fixed points.
  void pair_points(int k, uint32_t placed, int loops) {
    if (placed == (1u << n) - 1) {
      if (k + 1 == n)
        finish_square();
      else
        start_row(k + 1);
      return;
    }
    int p = std::countr_zero(~placed);
    // fixed point
    if (!(odd && loops >= 1) && put(k, p, p)) {
      pair_points(k, placed | (1u << p), loops + 1);
      un_put(p, p);
    }
    uint32_t rest = ~placed & ((1u << n) - 1) & ~((1u << (p + 1)) - 1);
    while (rest) {
      int q = std::countr_zero(rest);
      rest &= rest - 1;
      if (put(k, p, q)) {
        if (put(k, q, p)) {
          pair_points(k, placed | (1u << p) | (1u << q), loops);
          un_put(q, p);
        }
        un_put(p, q);
      }
    }
  }

  void start_row(int k) {
    if (k == 0) {
      if (put(0, 0, 0)) {
        pair_points(0, 1u, 1);
        un_put(0, 0);
      }
      return;
    }
    if (put(k, 0, k)) {
      if (put(k, k, 0)) {
        pair_points(k, 1u | (1u << k), 0);
        un_put(k, 0);
      }
      un_put(0, k);
    }
  }
};

}  // namespace

namespace {

// Snapshots of the generator state after row 0, used to partition the search
// forest across workers.
std::vector<InvolutionRowsGen> involution_row0_states(int n) {
  std::vector<InvolutionRowsGen> states;
  InvolutionRowsGen g(n);
  auto rec = [&](auto&& self, uint32_t placed, int loops) -> void {
    if (placed == (1u << n) - 1) {
      states.push_back(g);
      return;
    }
    int p = std::countr_zero(~placed);
    if (!(g.odd && loops >= 1) && g.put(0, p, p)) {
      self(self, placed | (1u << p), loops + 1);
      g.un_put(p, p);
    }
    uint32_t rest = ~placed & ((1u << n) - 1) & ~((1u << (p + 1)) - 1);
    while (rest) {
      int q = std::countr_zero(rest);
      rest &= rest - 1;
      if (g.put(0, p, q)) {
        if (g.put(0, q, p)) {
          self(self, placed | (1u << p) | (1u << q), loops);
          g.un_put(q, p);
        }
        g.un_put(p, q);
      }
    }
  };
  if (g.put(0, 0, 0)) rec(rec, 1u, 1);
  return states;
}

}  // namespace

uint64_t gen_symmetric_reduced(int n, const SquareSink& emit, int jobs) {
  if (n < 1 || n > kMaxN) throw std::invalid_argument("order out of range");
  if (n == 1) {
    if (emit) emit(LatinSquare::from_rows({{1}}));
    return 1;
  }
  if (jobs <= 1) {
    InvolutionRowsGen g(n);
    g.emit = &emit;
    g.start_row(0);
    return g.count;
  }
  std::vector<InvolutionRowsGen> states = involution_row0_states(n);
  std::vector<uint64_t> counts(states.size(), 0);
  std::mutex emit_mu;
  run_tasks(jobs, static_cast<int>(states.size()), [&](int t) {
    InvolutionRowsGen g = states[t];
    SquareSink sink;
    if (emit) {
      sink = [&](const LatinSquare& sq) {
        std::lock_guard<std::mutex> lock(emit_mu);
        emit(sq);
      };
    }
    g.emit = &sink;
    if (n == 1)
      g.finish_square();
    else
      g.start_row(1);
    counts[t] = g.count;
  });
  uint64_t total = 0;
  for (uint64_t c : counts) total += c;
  return total;
}

int symmetric_reduced_task_count(int n) {
  if (n == 1) return 1;
  return static_cast<int>(involution_row0_states(n).size());
}

uint64_t gen_symmetric_reduced_tasks(
    int n, int jobs, const std::function<void(int, const LatinSquare&)>& emit,
    int* num_tasks) {
  if (n < 1 || n > kMaxN) throw std::invalid_argument("order out of range");
  if (n == 1) {
    if (num_tasks) *num_tasks = 1;
    if (emit) emit(0, LatinSquare::from_rows({{1}}));
    return 1;
  }
  std::vector<InvolutionRowsGen> states = involution_row0_states(n);
  if (num_tasks) *num_tasks = static_cast<int>(states.size());
  std::vector<uint64_t> counts(states.size(), 0);
  run_tasks(jobs, static_cast<int>(states.size()), [&](int t) {
    InvolutionRowsGen g = states[t];
    SquareSink sink;
    if (emit) sink = [&, t](const LatinSquare& sq) { emit(t, sq); };
    g.emit = &sink;
    g.start_row(1);
    counts[t] = g.count;
  });
  uint64_t total = 0;
  for (uint64_t c : counts) total += c;
  return total;
}

// ---------------------------------------------------------------------------
// Orbit-closed backtracking used by the constrained symmetric generators and
// the per-seed class search.

namespace {

// A symmetry of the triple set: reorder coordinates, then map each coordinate
// value.
struct TripleGen {
  std::array<int, 3> perm{0, 1, 2};
  const uint8_t* map[3] = {nullptr, nullptr, nullptr};

  std::array<uint8_t, 3> apply(const std::array<uint8_t, 3>& t) const {
    std::array<uint8_t, 3> u;
    for (int k = 0; k < 3; ++k) {
      uint8_t v = t[perm[k]];
      u[k] = map[k] ? map[k][v] : v;
    }
    return u;
  }
};

struct OrbitSearch {
  int n = 0;
  std::vector<TripleGen> gens;
  uint8_t grid[kMaxN * kMaxN];
  uint32_t row_mask[kMaxN] = {};
  uint32_t col_mask[kMaxN] = {};
  int row_filled[kMaxN] = {};
  std::vector<uint16_t> trail;

  explicit OrbitSearch(int n) : n(n) { std::memset(grid, 0xFF, sizeof grid); }

  bool set_cell(int r, int c, int s) {
    uint8_t& cell = grid[r * n + c];
    if (cell != kEmptyCell) return cell == s;
    if ((row_mask[r] | col_mask[c]) & (1u << s)) return false;
    cell = static_cast<uint8_t>(s);
    row_mask[r] |= 1u << s;
    col_mask[c] |= 1u << s;
    ++row_filled[r];
    trail.push_back(static_cast<uint16_t>(r * n + c));
    return true;
  }

  void unwind(size_t mark) {
    while (trail.size() > mark) {
      int idx = trail.back();
      trail.pop_back();
      int r = idx / n, c = idx % n, s = grid[idx];
      grid[idx] = kEmptyCell;
      row_mask[r] &= ~(1u << s);
      col_mask[c] &= ~(1u << s);
      --row_filled[r];
    }
  }

  // Places the whole symmetry orbit of (r,c,s); false on any clash (caller
  // unwinds to its mark).
  bool place_orbit(int r, int c, int s) {
    std::array<std::array<uint8_t, 3>, 48> orbit;
    int size = 0;
    orbit[size++] = {static_cast<uint8_t>(r), static_cast<uint8_t>(c),
                     static_cast<uint8_t>(s)};
    if (!set_cell(r, c, s)) return false;
    for (int head = 0; head < size; ++head) {
      for (const TripleGen& g : gens) {
        auto u = g.apply(orbit[head]);
        bool known = false;
        for (int i = 0; i < size && !known; ++i) known = orbit[i] == u;
        if (known) continue;
        if (size == static_cast<int>(orbit.size())) throw std::logic_error("orbit overflow");
        orbit[size++] = u;
        if (!set_cell(u[0], u[1], u[2])) return false;
      }
    }
    return true;
  }

  int frontier() const {
    for (int r = 0; r < n; ++r)
      if (row_filled[r] < n) return r;
    return n;
  }

  // Most-constrained empty cell in row r; -1 if the row is dead.
  int pick_in_row(int r) const {
    int best_c = -1, best_cnt = n + 1;
    for (int c = 0; c < n; ++c) {
      if (grid[r * n + c] != kEmptyCell) continue;
      int cnt = std::popcount(~(row_mask[r] | col_mask[c]) & ((1u << n) - 1));
      if (cnt < best_cnt) {
        best_cnt = cnt;
        best_c = c;
        if (cnt == 0) break;
      }
    }
    return best_c;
  }

  // Most-constrained empty cell anywhere; -1 if full, -2 if dead.
  int pick_global() const {
    int best_idx = -1, best_cnt = n + 1;
    for (int idx = 0; idx < n * n; ++idx) {
      if (grid[idx] != kEmptyCell) continue;
      int cnt =
          std::popcount(~(row_mask[idx / n] | col_mask[idx % n]) & ((1u << n) - 1));
      if (cnt == 0) return -2;
      if (cnt < best_cnt) {
        best_cnt = cnt;
        best_idx = idx;
      }
    }
    return best_idx;
  }
};

// Exhaustive enumeration with a fixed symmetry group and no screening.
struct ExhaustiveSearch : OrbitSearch {
  uint64_t count = 0;
  const SquareSink* emit = nullptr;

  using OrbitSearch::OrbitSearch;

  void dfs() {
    int idx = pick_global();
    if (idx == -2) return;
    if (idx == -1) {
      ++count;
      if (emit && *emit)
        (*emit)(LatinSquare::from_cells_unchecked(n, std::vector<uint8_t>(grid, grid + n * n)));
      return;
    }
    int r = idx / n, c = idx % n;
    uint32_t avail = ~(row_mask[r] | col_mask[c]) & ((1u << n) - 1);
    while (avail) {
      int s = std::countr_zero(avail);
      avail &= avail - 1;
      size_t mark = trail.size();
      if (place_orbit(r, c, s)) dfs();
      unwind(mark);
    }
  }
};

struct ScreenedSearch : OrbitSearch {
  std::vector<bool> screen_after;
  // Keep-predicate per screening level: false prunes the subtree because an
  // equivalent partial was kept earlier at the same level.
  std::function<bool(int, const uint8_t*)> keep;
  std::function<void(const LatinSquare&)> on_complete;

  explicit ScreenedSearch(int n) : OrbitSearch(n), screen_after(n, false) {}

  void dfs(int fr_before) {
    int fr = frontier();
    if (fr == n) {
      on_complete(LatinSquare::from_cells_unchecked(
          n, std::vector<uint8_t>(grid, grid + n * n)));
      return;
    }
    for (int r = fr_before; r < fr; ++r) {
      if (!screen_after[r]) continue;
      if (!keep(r, grid)) return;
    }
    int c = pick_in_row(fr);
    if (c < 0) return;
    uint32_t avail = ~(row_mask[fr] | col_mask[c]) & ((1u << n) - 1);
    while (avail) {
      int s = std::countr_zero(avail);
      avail &= avail - 1;
      size_t mark = trail.size();
      if (place_orbit(fr, c, s)) dfs(fr);
      unwind(mark);
    }
  }
};

}  // namespace

uint64_t gen_symmetric_with_autotopism(int n, const Permutation& alpha,
                                       const Permutation& gamma, const SquareSink& emit) {
  if (alpha.degree() != n || gamma.degree() != n)
    throw std::invalid_argument("autotopism degree mismatch");
  ExhaustiveSearch s(n);
  TripleGen transpose;
  transpose.perm = {1, 0, 2};
  TripleGen auto_gen;
  auto_gen.map[0] = alpha.images().data();
  auto_gen.map[1] = alpha.images().data();
  auto_gen.map[2] = gamma.images().data();
  s.gens = {transpose, auto_gen};
  s.emit = &emit;
  s.dfs();
  return s.count;
}

uint64_t gen_symmetric_with_principal(int n, const Permutation& theta,
                                      const SquareSink& emit) {
  if (theta.degree() != n) throw std::invalid_argument("autotopism degree mismatch");
  Permutation theta_inv = theta.inverse();
  ExhaustiveSearch s(n);
  TripleGen transpose;
  transpose.perm = {1, 0, 2};
  TripleGen auto_gen;
  auto_gen.map[0] = theta.images().data();
  auto_gen.map[1] = theta_inv.images().data();
  s.gens = {transpose, auto_gen};
  s.emit = &emit;
  s.dfs();
  return s.count;
}

std::vector<LatinSquare> gen_symmetric_autotopism_screened(int n, const Permutation& rowp,
                                                           const Permutation& colp,
                                                           const Permutation& symp,
                                                           int subgroup_cap) {
  if (rowp.degree() != n || colp.degree() != n || symp.degree() != n)
    throw std::invalid_argument("autotopism degree mismatch");

  // Screening subgroup: rrs-isotopisms (sigma, sigma, tau) fixing the
  // constraint triple elementwise, truncated to the cap. Any subset is sound;
  // larger subsets collapse more of the search.
  std::vector<Permutation> sigma_pool;
  for (const Permutation& s : centralizer(rowp)) {
    if (rowp == colp || s.then(colp) == colp.then(s)) sigma_pool.push_back(s);
    if (static_cast<int>(sigma_pool.size()) >= subgroup_cap) break;
  }
  int tau_budget = std::max(1, subgroup_cap / std::max<int>(1, sigma_pool.size()));
  std::vector<Permutation> tau_pool;
  for (const Permutation& t : centralizer(symp)) {
    tau_pool.push_back(t);
    if (static_cast<int>(tau_pool.size()) >= tau_budget) break;
  }

  // Store the inverse of sigma so a transformed grid can be scanned in target
  // order with early exit against the best key so far.
  std::vector<std::pair<Permutation, Permutation>> subgroup;  // (sigma^-1, tau)
  subgroup.reserve(sigma_pool.size() * tau_pool.size());
  for (const auto& s : sigma_pool) {
    Permutation sinv = s.inverse();
    for (const auto& t : tau_pool) subgroup.emplace_back(sinv, t);
  }

  ScreenedSearch search(n);
  TripleGen transpose;
  transpose.perm = {1, 0, 2};
  TripleGen auto_gen;
  auto_gen.map[0] = rowp.images().data();
  auto_gen.map[1] = colp.images().data();
  auto_gen.map[2] = symp.images().data();
  search.gens = {transpose, auto_gen};
  for (int r = 0; r + 1 < n; ++r) search.screen_after[r] = true;
  std::vector<std::unordered_set<std::string>> seen(n);
  search.keep = [n, &subgroup, &seen](int level, const uint8_t* grid) {
    const int nn = n * n;
    std::string best(static_cast<size_t>(nn), '\xff');
    for (const auto& [sinv, tau] : subgroup) {
      for (int k = 0; k < nn; ++k) {
        uint8_t s = grid[sinv(k / n) * n + sinv(k % n)];
        uint8_t b = s == kEmptyCell ? kEmptyCell : tau(s);
        uint8_t cur = static_cast<uint8_t>(best[k]);
        if (b > cur) break;
        if (b < cur) {
          best[k] = static_cast<char>(b);
          for (int j = k + 1; j < nn; ++j) {
            uint8_t sj = grid[sinv(j / n) * n + sinv(j % n)];
            best[j] = static_cast<char>(sj == kEmptyCell ? kEmptyCell : tau(sj));
          }
          break;
        }
      }
    }
    return seen[level].insert(best).second;
  };
  std::vector<LatinSquare> survivors;
  search.on_complete = [&](const LatinSquare& sq) { survivors.push_back(sq); };
  search.dfs(0);
  return survivors;
}

// ---------------------------------------------------------------------------
// Admissible rrs-autotopism shapes (static data).

std::vector<AutotopismShape> admissible_autotopism_shapes(int n) {
  static const std::vector<std::vector<std::pair<const char*, const char*>>> kShapes = {
      /* n=2 */ {{"2", "1^2"}},
      /* n=3 */ {{"2.1", "2.1"}, {"3", "3"}},
      /* n=4 */ {{"2^2", "2.1^2"}, {"2^2", "1^4"}, {"2.1^2", "2.1^2"}, {"3.1", "3.1"}},
      /* n=5 */ {{"2^2.1", "2^2.1"}, {"5", "5"}},
      /* n=6 */
      {{"2^3", "2^2.1^2"},
       {"2^3", "2.1^4"},
       {"2^3", "1^6"},
       {"2^2.1^2", "2^2.1^2"},
       {"3^2", "3^2"},
       {"3^2", "3.1^3"},
       {"5.1", "5.1"}},
      /* n=7 */ {{"2^3.1", "2^3.1"}, {"2^2.1^3", "2^2.1^3"}, {"3^2.1", "3^2.1"}, {"7", "7"}},
      /* n=8 */
      {{"2^4", "2^3.1^2"},
       {"2^4", "2^2.1^4"},
       {"2^4", "2.1^6"},
       {"2^4", "1^8"},
       {"2^3.1^2", "2^3.1^2"},
       {"2^2.1^4", "2^2.1^4"},
       {"3^2.1^2", "3^2.1^2"},
       {"7.1", "7.1"}},
      /* n=9 */
      {{"2^4.1", "2^4.1"}, {"2^3.1^3", "2^3.1^3"}, {"3^3", "3^3"}, {"3^2.1^3", "3^2.1^3"}},
      /* n=10 */
      {{"2^5", "2^4.1^2"},
       {"2^5", "2^3.1^4"},
       {"2^5", "2^2.1^6"},
       {"2^5", "2.1^8"},
       {"2^5", "1^10"},
       {"2^4.1^2", "2^4.1^2"},
       {"2^3.1^4", "2^3.1^4"},
       {"3^3.1", "3^3.1"},
       {"3^2.1^4", "3^2.1^4"},
       {"5^2", "5^2"},
       {"5^2", "5.1^5"}},
      /* n=11 */
      {{"2^5.1", "2^5.1"},
       {"2^4.1^3", "2^4.1^3"},
       {"2^3.1^5", "2^3.1^5"},
       {"5^2.1", "5^2.1"},
       {"11", "11"}},
      /* n=12 */
      {{"2^6", "2^5.1^2"},
       {"2^6", "2^4.1^4"},
       {"2^6", "2^3.1^6"},
       {"2^6", "2^2.1^8"},
       {"2^6", "2.1^10"},
       {"2^6", "1^12"},
       {"2^5.1^2", "2^5.1^2"},
       {"2^4.1^4", "2^4.1^4"},
       {"2^3.1^6", "2^3.1^6"},
       {"3^4", "3^4"},
       {"3^4", "3^3.1^3"},
       {"3^4", "3^2.1^6"},
       {"3^4", "3.1^9"},
       {"3^3.1^3", "3^3.1^3"},
       {"5^2.1^2", "5^2.1^2"},
       {"11.1", "11.1"}},
      /* n=13 */
      {{"2^6.1", "2^6.1"},
       {"2^5.1^3", "2^5.1^3"},
       {"2^4.1^5", "2^4.1^5"},
       {"3^4.1", "3^4.1"},
       {"5^2.1^3", "5^2.1^3"},
       {"13", "13"}},
  };
  if (n < 2 || n > 13)
    throw std::invalid_argument("admissible shapes known for 2 <= n <= 13");
  std::vector<AutotopismShape> out;
  for (auto [a, g] : kShapes[n - 2]) {
    AutotopismShape shape;
    shape.alpha = CycleStructure::parse(a);
    shape.gamma = CycleStructure::parse(g);
    if (shape.alpha.degree() != n || shape.gamma.degree() != n)
      throw std::logic_error("shape table degree mismatch");
    out.push_back(std::move(shape));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Diagonal seeds.

int DiagonalSeed::idempotent_count() const {
  int k = 0;
  for (size_t i = 0; i < diag.size(); ++i)
    if (diag[i] == i) ++k;
  return k;
}

namespace {

// Places the diagonal triples implied by d on a blank grid; for the
// self-conjugate symmetries each off-diagonal entry (i, d_i) = i and
// (d_i, i) = i is forced.
bool build_seed_cells(int n, Symmetry sym, const std::vector<uint8_t>& diag,
                      int upto, std::vector<uint8_t>* cells) {
  OrbitSearch s(n);
  bool cyclic = sym == Symmetry::kSemisymmetric || sym == Symmetry::kTotallySymmetric;
  for (int i = 0; i < upto; ++i) {
    int d = diag[i];
    if (!s.set_cell(i, i, d)) return false;
    if (cyclic && d != i) {
      if (!s.set_cell(i, d, i)) return false;
      if (!s.set_cell(d, i, i)) return false;
    }
  }
  cells->assign(s.grid, s.grid + n * n);
  return true;
}

struct SeedEnumerator {
  int n;
  Symmetry sym;
  const PropertyFilter& filter;
  bool injective;
  bool no_two_cycles;
  bool fix_mod3;
  bool even_mult;
  std::vector<uint8_t> diag;
  std::vector<std::unordered_set<std::string>> seen_by_level;
  std::unordered_set<std::string> final_seen;
  std::vector<DiagonalSeed> out;

  SeedEnumerator(int n, const PropertyFilter& f)
      : n(n), sym(f.symmetry()), filter(f), diag(n, kEmptyCell), seen_by_level(n + 1) {
    bool cyclic = sym == Symmetry::kSemisymmetric || sym == Symmetry::kTotallySymmetric;
    bool transposed = sym == Symmetry::kSymmetric || sym == Symmetry::kTotallySymmetric;
    no_two_cycles = cyclic;
    fix_mod3 = cyclic;
    injective = filter.diagonal() || filter.idempotent() ||
                (transposed && n % 2 == 1);
    even_mult = transposed && n % 2 == 0;
  }

  bool final_checks() {
    if (fix_mod3) {
      int fix = 0;
      for (int i = 0; i < n; ++i)
        if (diag[i] == i) ++fix;
      if (fix % 3 != (n * n) % 3) return false;
    }
    if (even_mult) {
      std::vector<int> mult(n, 0);
      for (int i = 0; i < n; ++i) ++mult[diag[i]];
      for (int v = 0; v < n; ++v)
        if (mult[v] % 2) return false;
    }
    return true;
  }

  void emit() {
    if (!final_checks()) return;
    std::vector<uint8_t> cells;
    if (!build_seed_cells(n, sym, diag, n, &cells)) return;
    std::vector<uint8_t> canon = canonical_partial(n, cells);
    std::string key(canon.begin(), canon.end());
    if (!final_seen.insert(key).second) return;
    DiagonalSeed seed;
    seed.cells = std::move(canon);
    seed.diag.resize(n);
    for (int i = 0; i < n; ++i) seed.diag[i] = seed.cells[i * n + i];
    out.push_back(std::move(seed));
  }

  void level(int i) {
    if (i == n) {
      emit();
      return;
    }
    if (i > 0 && i < n - 1) {  // screen the prefix up to isomorphism
      std::vector<uint8_t> cells;
      if (!build_seed_cells(n, sym, diag, i, &cells)) return;
      std::vector<uint8_t> canon = canonical_partial(n, cells);
      if (!seen_by_level[i].insert(std::string(canon.begin(), canon.end())).second) return;
    }
    for (int v = 0; v < n; ++v) {
      if (injective) {
        bool used = false;
        for (int j = 0; j < i && !used; ++j) used = diag[j] == v;
        if (used) continue;
      }
      if (no_two_cycles && v != i && v < i && diag[v] == i) continue;
      // latin consistency of the implied triples
      std::vector<uint8_t> cells;
      diag[i] = static_cast<uint8_t>(v);
      if (build_seed_cells(n, sym, diag, i + 1, &cells)) level(i + 1);
      diag[i] = kEmptyCell;
    }
  }
};

}  // namespace

std::vector<DiagonalSeed> enumerate_seeds(int n, const PropertyFilter& filter) {
  if (filter.symmetry() == Symmetry::kNone)
    throw std::invalid_argument("seed enumeration needs a conjugate symmetry");
  SeedEnumerator e(n, filter);
  if (filter.idempotent()) {
    for (int i = 0; i < n; ++i) e.diag[i] = static_cast<uint8_t>(i);
    e.emit();
  } else if (filter.unipotent() || filter.reduced()) {
    // reduced squares in the self-conjugate symmetries are unipotent; their
    // classes coincide with the unipotent classes
    for (int i = 0; i < n; ++i) e.diag[i] = 0;
    e.emit();
  } else {
    e.level(0);
  }
  std::sort(e.out.begin(), e.out.end(),
            [](const DiagonalSeed& a, const DiagonalSeed& b) { return a.cells < b.cells; });
  return e.out;
}

// ---------------------------------------------------------------------------
// Per-seed class search with isomorph screening at row boundaries.

namespace {


std::vector<TripleGen> symmetry_gens(Symmetry sym) {
  TripleGen transpose;
  transpose.perm = {1, 0, 2};
  TripleGen cyclic;
  cyclic.perm = {1, 2, 0};
  switch (sym) {
    case Symmetry::kSymmetric: return {transpose};
    case Symmetry::kSemisymmetric: return {cyclic};
    case Symmetry::kTotallySymmetric: return {transpose, cyclic};
    default: return {};
  }
}

// Serialized per-seed results for checkpoint files: one line per seed.
std::string seed_result_line(int seed_index, const std::vector<std::pair<std::string, uint64_t>>& classes) {
  std::string line = std::to_string(seed_index);
  for (const auto& [cells, count] : classes) {
    line += ' ';
    for (uint8_t v : cells) line += std::to_string(static_cast<int>(v) + 1) + ",";
    line += ':' + std::to_string(count);
  }
  return line;
}

}  // namespace

Catalog gen_classes(int n, const PropertyFilter& filter, const GenOptions& opts) {
  if (n < 1 || n > kMaxN) throw std::invalid_argument("order out of range");
  if (filter.symmetry() == Symmetry::kNone)
    throw std::invalid_argument("gen_classes needs a conjugate symmetry");

  // Symmetric reduced catalogs come from the reduced stream: the classes are
  // those containing at least one reduced square.
  if (filter.symmetry() == Symmetry::kSymmetric && filter.reduced() && !filter.unipotent()) {
    Deduper dedup(EquivalenceRelation::kIsomorphism);
    gen_symmetric_reduced(n, [&](const LatinSquare& sq) {
      if (filter.matches(sq)) dedup.add(sq);
    });
    return dedup.finish(n);
  }
  if (filter.symmetry() == Symmetry::kSymmetric && filter.reduced() && filter.unipotent()) {
    Deduper dedup(EquivalenceRelation::kIsomorphism);
    gen_reduced_unipotent_symmetric(n, [&](const LatinSquare& sq) { dedup.add(sq); });
    return dedup.finish(n);
  }

  std::vector<DiagonalSeed> seeds = enumerate_seeds(n, filter);

  std::vector<bool> screen_after(n, false);
  if (!opts.no_screening && !opts.raw_emit) {
    if (opts.screen_rows.empty()) {
      for (int r = 0; r + 2 < n; ++r) screen_after[r] = true;
    } else {
      for (int r : opts.screen_rows)
        if (r >= 0 && r < n) screen_after[r] = true;
    }
  }

  // Checkpoint: completed seeds are loaded and skipped; new results appended.
  std::vector<std::vector<std::pair<std::string, uint64_t>>> results(seeds.size());
  std::vector<bool> done(seeds.size(), false);
  std::string header = "latsq-checkpoint v1 n=" + std::to_string(n) +
                       " filter=" + filter.str() + " seeds=" + std::to_string(seeds.size());
  if (!opts.checkpoint_path.empty()) {
    std::ifstream in(opts.checkpoint_path);
    std::string line;
    if (in && std::getline(in, line)) {
      if (line != header)
        throw std::runtime_error("checkpoint header mismatch: " + opts.checkpoint_path);
      while (std::getline(in, line)) {
        if (line.empty()) continue;
        size_t sp = line.find(' ');
        int idx = std::stoi(line.substr(0, sp));
        std::vector<std::pair<std::string, uint64_t>> classes;
        size_t pos = sp == std::string::npos ? line.size() : sp + 1;
        while (pos < line.size()) {
          size_t colon = line.find(':', pos);
          if (colon == std::string::npos) break;
          size_t end = line.find(' ', colon);
          if (end == std::string::npos) end = line.size();
          std::string cells_text = line.substr(pos, colon - pos);
          uint64_t count = std::stoull(line.substr(colon + 1, end - colon - 1));
          std::string cells;
          size_t p = 0;
          while (p < cells_text.size()) {
            size_t comma = cells_text.find(',', p);
            cells += static_cast<char>(std::stoi(cells_text.substr(p, comma - p)) - 1);
            p = comma + 1;
          }
          classes.emplace_back(std::move(cells), count);
          pos = end + (end < line.size() ? 1 : 0);
        }
        if (idx >= 0 && idx < static_cast<int>(seeds.size())) {
          results[idx] = std::move(classes);
          done[idx] = true;
        }
      }
    }
  }

  std::mutex ckpt_mu;
  std::ofstream ckpt;
  if (!opts.checkpoint_path.empty()) {
    bool fresh = std::none_of(done.begin(), done.end(), [](bool b) { return b; });
    ckpt.open(opts.checkpoint_path, fresh ? std::ios::trunc : std::ios::app);
    if (fresh) ckpt << header << "\n";
  }

  run_tasks(opts.jobs, static_cast<int>(seeds.size()), [&](int t) {
    if (done[t]) return;
    ScreenedSearch search(n);
    search.gens = symmetry_gens(filter.symmetry());
    for (int r = 0; r < n; ++r) search.screen_after[r] = screen_after[r];
    std::vector<PartialIsoSet> levels(n, PartialIsoSet(n));
    GenStats local_stats;
    search.keep = [&levels, &local_stats](int level, const uint8_t* grid) {
      ++local_stats.screen_events;
      bool kept = levels[level].insert(grid);
      if (kept) ++local_stats.screen_kept;
      return kept;
    };
    Deduper local(EquivalenceRelation::kIsomorphism);
    if (opts.raw_emit)
      search.on_complete = opts.raw_emit;
    else
      search.on_complete = [&local](const LatinSquare& sq) { local.add(sq); };
    const auto& cells = seeds[t].cells;
    bool ok = true;
    for (int idx = 0; idx < n * n && ok; ++idx)
      if (cells[idx] != kEmptyCell) ok = search.set_cell(idx / n, idx % n, cells[idx]);
    if (ok) search.dfs(0);
    if (opts.stats) {
      static std::mutex stats_mu;
      std::lock_guard<std::mutex> lock(stats_mu);
      opts.stats->screen_events += local_stats.screen_events;
      opts.stats->screen_kept += local_stats.screen_kept;
    }
    std::vector<std::pair<std::string, uint64_t>> classes = local.sorted_items();
    results[t] = classes;
    if (ckpt.is_open()) {
      std::lock_guard<std::mutex> lock(ckpt_mu);
      ckpt << seed_result_line(t, classes) << "\n";
      ckpt.flush();
    }
  });

  Deduper merged(EquivalenceRelation::kIsomorphism);
  for (const auto& seed_classes : results)
    for (const auto& [cells, count] : seed_classes)
      merged.add_canonical(
          LatinSquare::from_cells_unchecked(n, std::vector<uint8_t>(cells.begin(), cells.end())),
          count);
  return merged.finish(n);
}

uint64_t gen_reduced_unipotent_symmetric(int n, const SquareSink& emit) {
  if (n == 1) {
    if (emit) emit(LatinSquare::from_rows({{1}}));
    return 1;
  }
  if (n % 2 == 1) return 0;
  ExhaustiveSearch s(n);
  TripleGen transpose;
  transpose.perm = {1, 0, 2};
  s.gens = {transpose};
  for (int i = 0; i < n; ++i) {
    if (!s.set_cell(0, i, i) || (i > 0 && !s.set_cell(i, 0, i))) return 0;
  }
  for (int i = 1; i < n; ++i)
    if (!s.set_cell(i, i, 0)) return 0;
  s.emit = &emit;
  s.dfs();
  return s.count;
}

}  // namespace latsq
