#include "latsq/stabilizers.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace latsq {

namespace {

constexpr uint8_t kUnset = 0xFF;

// Backtracking search for all point maps g with g(a[r][c]) = b[g(r)][g(c)],
// where one partial injection plays the row, column and symbol roles at once.
// Assigning a point propagates forced symbol images.
class IsomorphismSearch {
 public:
  IsomorphismSearch(const LatinSquare& a, const LatinSquare& b) : a_(a), b_(b), n_(a.order()) {
    map_.assign(n_, kUnset);
    inv_.assign(n_, kUnset);
  }

  std::vector<Permutation> run() {
    if (a_.order() != b_.order()) return {};
    dfs();
    return std::move(found_);
  }

 private:
  bool try_assign(int x, int v) {
    if (map_[x] != kUnset) return map_[x] == v;
    if (inv_[v] != kUnset) return false;
    map_[x] = static_cast<uint8_t>(v);
    inv_[v] = static_cast<uint8_t>(x);
    trail_.push_back(x);
    return true;
  }

  bool propagate(size_t start) {
    for (size_t t = start; t < trail_.size(); ++t) {
      int p = trail_[t];
      for (int q = 0; q < n_; ++q) {
        if (map_[q] == kUnset) continue;
        if (!try_assign(a_.at(p, q), b_.at(map_[p], map_[q]))) return false;
        if (!try_assign(a_.at(q, p), b_.at(map_[q], map_[p]))) return false;
      }
    }
    return true;
  }

  void dfs() {
    int x = 0;
    while (x < n_ && map_[x] != kUnset) ++x;
    if (x == n_) {
      found_.push_back(Permutation::from_images(map_));
      return;
    }
    for (int v = 0; v < n_; ++v) {
      if (inv_[v] != kUnset) continue;
      size_t mark = trail_.size();
      if (try_assign(x, v) && propagate(mark)) dfs();
      while (trail_.size() > mark) {
        int y = trail_.back();
        trail_.pop_back();
        inv_[map_[y]] = kUnset;
        map_[y] = kUnset;
      }
    }
  }

  const LatinSquare& a_;
  const LatinSquare& b_;
  int n_;
  std::vector<uint8_t> map_, inv_;
  std::vector<int> trail_;
  std::vector<Permutation> found_;
};

// All g with g^-1 * ga * g = gb, enumerated by aligning cycles of ga with
// cycles of gb of the same length in every order and rotation. Empty when the
// cycle structures differ.
std::vector<Permutation> conjugating_permutations(const Permutation& ga,
                                                  const Permutation& gb) {
  const int n = ga.degree();
  auto cycles_by_len = [](const Permutation& p) {
    std::map<int, std::vector<std::vector<int>>> by_len;
    std::vector<bool> seen(p.degree(), false);
    for (int i = 0; i < p.degree(); ++i) {
      if (seen[i]) continue;
      std::vector<int> cyc;
      int j = i;
      while (!seen[j]) {
        seen[j] = true;
        cyc.push_back(j);
        j = p(j);
      }
      by_len[static_cast<int>(cyc.size())].push_back(cyc);
    }
    return by_len;
  };
  auto ca = cycles_by_len(ga), cb = cycles_by_len(gb);
  if (ca.size() != cb.size()) return {};
  for (auto& [len, cycs] : ca) {
    auto it = cb.find(len);
    if (it == cb.end() || it->second.size() != cycs.size()) return {};
  }

  // Flatten into a single worklist of source cycles; per-class used flags for
  // the targets.
  std::vector<std::vector<int>> src;
  std::vector<int> cls_of;
  std::vector<std::vector<std::vector<int>>> tgt;
  std::vector<std::vector<bool>> used;
  for (auto& [len, cycs] : ca) {
    int cls = static_cast<int>(tgt.size());
    tgt.push_back(cb[len]);
    used.emplace_back(cb[len].size(), false);
    for (auto& cyc : cycs) {
      src.push_back(cyc);
      cls_of.push_back(cls);
    }
  }

  std::vector<Permutation> out;
  std::vector<uint8_t> img(n, kUnset);
  auto rec = [&](auto&& self, size_t idx) -> void {
    if (idx == src.size()) {
      out.push_back(Permutation::from_images(img));
      return;
    }
    const auto& cyc = src[idx];
    int cls = cls_of[idx];
    int len = static_cast<int>(cyc.size());
    for (size_t t = 0; t < tgt[cls].size(); ++t) {
      if (used[cls][t]) continue;
      used[cls][t] = true;
      const auto& target = tgt[cls][t];
      for (int rot = 0; rot < len; ++rot) {
        for (int k = 0; k < len; ++k)
          img[cyc[k]] = static_cast<uint8_t>(target[(k + rot) % len]);
        self(self, idx + 1);
      }
      used[cls][t] = false;
    }
    for (int k = 0; k < len; ++k) img[cyc[k]] = kUnset;
  };
  rec(rec, 0);
  return out;
}

std::vector<uint8_t> col_of_symbol(const LatinSquare& sq, int row) {
  std::vector<uint8_t> pos(sq.order());
  for (int c = 0; c < sq.order(); ++c) pos[sq.at(row, c)] = static_cast<uint8_t>(c);
  return pos;
}

std::map<std::vector<uint8_t>, int> rows_by_content(const LatinSquare& sq) {
  std::map<std::vector<uint8_t>, int> rows;
  const int n = sq.order();
  for (int r = 0; r < n; ++r) {
    std::vector<uint8_t> row(sq.cells().begin() + static_cast<size_t>(r) * n,
                             sq.cells().begin() + static_cast<size_t>(r + 1) * n);
    rows[std::move(row)] = r;
  }
  return rows;
}

// Relative symbol map of rows (r0, r1): the symbol s of row r0 maps to the
// symbol below it in row r1. Fixed-point-free for r0 != r1.
Permutation relative_rows(const LatinSquare& sq, int r0, int r1) {
  const int n = sq.order();
  std::vector<uint8_t> g(n);
  auto pos = col_of_symbol(sq, r0);
  for (int s = 0; s < n; ++s) g[s] = sq.at(r1, pos[s]);
  return Permutation::from_images(g);
}

}  // namespace

std::vector<Permutation> centralizer(const Permutation& p) {
  return conjugating_permutations(p, p);
}

std::vector<Permutation> isomorphisms_between(const LatinSquare& a, const LatinSquare& b) {
  return IsomorphismSearch(a, b).run();
}

std::vector<Permutation> automorphism_group(const LatinSquare& sq) {
  return isomorphisms_between(sq, sq);
}

uint64_t automorphism_group_order(const LatinSquare& sq) {
  return automorphism_group(sq).size();
}

std::vector<Isotopism> isotopisms_between(const LatinSquare& a, const LatinSquare& b) {
  const int n = a.order();
  if (b.order() != n) return {};
  std::vector<Isotopism> out;
  if (n == 1) {
    out.push_back(Isotopism::identity(1));
    return out;
  }

  auto b_rows = rows_by_content(b);
  Permutation ga = relative_rows(a, 0, 1);

  for (int r0 = 0; r0 < n; ++r0) {
    auto b_pos = col_of_symbol(b, r0);
    for (int r1 = 0; r1 < n; ++r1) {
      if (r1 == r0) continue;
      Permutation gb = relative_rows(b, r0, r1);
      // Any isotopism sending rows (0,1) to (r0,r1) conjugates ga to gb via
      // its symbol part.
      for (const Permutation& gamma : conjugating_permutations(ga, gb)) {
        std::vector<uint8_t> beta_img(n);
        for (int c = 0; c < n; ++c) beta_img[c] = b_pos[gamma(a.at(0, c))];
        std::vector<uint8_t> alpha_img(n);
        std::vector<bool> used(n, false);
        std::vector<uint8_t> trow(n);
        bool ok = true;
        for (int r = 0; r < n && ok; ++r) {
          for (int c = 0; c < n; ++c) trow[beta_img[c]] = gamma(a.at(r, c));
          auto it = b_rows.find(trow);
          if (it == b_rows.end() || used[it->second]) {
            ok = false;
            break;
          }
          used[it->second] = true;
          alpha_img[r] = static_cast<uint8_t>(it->second);
        }
        if (!ok || alpha_img[1] != r1) continue;
        out.emplace_back(Permutation::from_images(alpha_img),
                         Permutation::from_images(beta_img), gamma);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Isotopism> autotopism_group(const LatinSquare& sq) {
  return isotopisms_between(sq, sq);
}

namespace {

// Search for (sigma, sigma, tau) with b[sigma(r)][sigma(c)] = tau(a[r][c]).
class RrsSearch {
 public:
  RrsSearch(const LatinSquare& a, const LatinSquare& b) : a_(a), b_(b), n_(a.order()) {
    sigma_.assign(n_, kUnset);
    sigma_inv_.assign(n_, kUnset);
    tau_.assign(n_, kUnset);
    tau_inv_.assign(n_, kUnset);
  }

  uint64_t run(std::vector<Isotopism>* out) {
    out_ = out;
    if (a_.order() != b_.order()) return 0;
    dfs(0);
    return count_;
  }

 private:
  bool assign_tau(int s, int t) {
    if (tau_[s] != kUnset) return tau_[s] == t;
    if (tau_inv_[t] != kUnset) return false;
    tau_[s] = static_cast<uint8_t>(t);
    tau_inv_[t] = static_cast<uint8_t>(s);
    tau_trail_.push_back(s);
    return true;
  }

  void dfs(int i) {
    if (i == n_) {
      ++count_;
      if (out_) {
        Permutation s = Permutation::from_images(sigma_);
        out_->emplace_back(s, s, Permutation::from_images(tau_));
      }
      return;
    }
    for (int v = 0; v < n_; ++v) {
      if (sigma_inv_[v] != kUnset) continue;
      size_t mark = tau_trail_.size();
      sigma_[i] = static_cast<uint8_t>(v);
      sigma_inv_[v] = static_cast<uint8_t>(i);
      bool ok = true;
      for (int j = 0; j <= i && ok; ++j) {
        ok = assign_tau(a_.at(i, j), b_.at(v, sigma_[j])) &&
             assign_tau(a_.at(j, i), b_.at(sigma_[j], v));
      }
      if (ok) dfs(i + 1);
      while (tau_trail_.size() > mark) {
        int s = tau_trail_.back();
        tau_trail_.pop_back();
        tau_inv_[tau_[s]] = kUnset;
        tau_[s] = kUnset;
      }
      sigma_inv_[v] = kUnset;
      sigma_[i] = kUnset;
    }
  }

  const LatinSquare& a_;
  const LatinSquare& b_;
  int n_;
  std::vector<uint8_t> sigma_, sigma_inv_, tau_, tau_inv_;
  std::vector<int> tau_trail_;
  std::vector<Isotopism>* out_ = nullptr;
  uint64_t count_ = 0;
};

}  // namespace

std::vector<Isotopism> rrs_isotopisms_between(const LatinSquare& a, const LatinSquare& b) {
  std::vector<Isotopism> out;
  RrsSearch(a, b).run(&out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Isotopism> rrs_autotopism_group(const LatinSquare& sq) {
  return rrs_isotopisms_between(sq, sq);
}

uint64_t rrs_autotopism_group_order(const LatinSquare& sq) {
  return RrsSearch(sq, sq).run(nullptr);
}

std::vector<Paratopism> autoparatopism_group(const LatinSquare& sq) {
  std::vector<Paratopism> out;
  for (ConjugateLabel sigma : kAllConjugates) {
    LatinSquare conj = conjugate(sq, sigma);
    for (const Isotopism& iso : isotopisms_between(conj, sq))
      out.push_back(Paratopism{sigma, iso});
  }
  return out;
}

std::vector<Isotopism> principal_autotopism_group(const LatinSquare& sq) {
  if (!is_symmetric(sq))
    throw std::invalid_argument("principal_autotopism_group: square not symmetric");
  const int n = sq.order();
  std::vector<Isotopism> out;
  auto rows = rows_by_content(sq);
  // alpha(0) = r0 forces beta via sq[r0][beta(c)] = sq[0][c], then alpha by
  // row matching.
  for (int r0 = 0; r0 < n; ++r0) {
    auto pos = col_of_symbol(sq, r0);
    std::vector<uint8_t> beta_img(n);
    for (int c = 0; c < n; ++c) beta_img[c] = pos[sq.at(0, c)];
    std::vector<uint8_t> alpha_img(n);
    std::vector<bool> used(n, false);
    std::vector<uint8_t> trow(n);
    bool ok = true;
    for (int r = 0; r < n && ok; ++r) {
      for (int c = 0; c < n; ++c) trow[beta_img[c]] = sq.at(r, c);
      auto it = rows.find(trow);
      if (it == rows.end() || used[it->second]) {
        ok = false;
        break;
      }
      used[it->second] = true;
      alpha_img[r] = static_cast<uint8_t>(it->second);
    }
    if (!ok) continue;
    Permutation alpha = Permutation::from_images(alpha_img);
    Permutation beta = Permutation::from_images(beta_img);
    if (!(beta == alpha.inverse()) || n % alpha.order() != 0)
      throw std::logic_error("principal autotopism violates the symmetric-square laws");
    out.emplace_back(alpha, beta, Permutation(n));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Isotopism> left_autotopisms(const LatinSquare& sq) {
  return isotopisms_between(sq, conjugate(sq, ConjugateLabel::C312));
}

long left_autotopism_order(const LatinSquare& sq, const Isotopism& la) {
  if (!(apply_isotopism(sq, la) == conjugate(sq, ConjugateLabel::C312)))
    throw std::invalid_argument("left_autotopism_order: not a left autotopism of sq");
  long ord = std::lcm(la.row.order(), std::lcm(la.col.order(), la.sym.order()));
  return ord;
}

bool has_semisymmetric_form(const LatinSquare& sq) {
  for (const Isotopism& la : left_autotopisms(sq)) {
    Permutation prod = la.row.then(la.col).then(la.sym);
    if (prod.order() % 3 != 0) return true;
  }
  return false;
}

bool omega_membership(const LatinSquare& sq) {
  if (!is_symmetric(sq)) throw std::invalid_argument("omega_membership: square not symmetric");
  for (const Isotopism& iso : principal_autotopism_group(sq)) {
    if (iso.row.is_identity() || !iso.row.is_semiregular()) continue;
    // A semiregular element of composite order powers down to a semiregular
    // element of prime order inside the same group.
    return true;
  }
  return false;
}

}  // namespace latsq
