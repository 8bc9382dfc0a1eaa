#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "latsq/canonical.hpp"
#include "latsq/latin_square.hpp"

namespace latsq {

using SquareSink = std::function<void(const LatinSquare&)>;

// Oracle stream of every Latin square of order n, deterministic row-major DFS
// order. Intended for n <= 6.
void gen_all_of_order(int n, const SquareSink& emit);
uint64_t count_all_of_order(int n);

// Every reduced Latin square of order n (first row and column in natural
// order); every species contains one, so these seed species scans. n <= 7.
uint64_t gen_reduced_of_order(int n, const SquareSink& emit);

// Streams every reduced symmetric Latin square of order n in a deterministic
// order (for jobs == 1); returns the count. emit may be empty for counting.
// Built by extending one involution row at a time in the (1,3,2)-conjugate
// view and conjugating back.
uint64_t gen_symmetric_reduced(int n, const SquareSink& emit, int jobs = 1);

// Parallel variant: the search forest is split at the first row; emit(task,
// square) runs concurrently for distinct task indices, so callers keep
// per-task accumulators and merge in task order. Returns the total count and
// the task count via num_tasks.
uint64_t gen_symmetric_reduced_tasks(
    int n, int jobs, const std::function<void(int, const LatinSquare&)>& emit,
    int* num_tasks = nullptr);
int symmetric_reduced_task_count(int n);

// All symmetric squares L with L(alpha,alpha,gamma) = L, filled one cell
// orbit at a time. Returns the number of squares emitted.
uint64_t gen_symmetric_with_autotopism(int n, const Permutation& alpha,
                                       const Permutation& gamma, const SquareSink& emit);
// All symmetric squares with the principal autotopism (theta, theta^-1, e).
uint64_t gen_symmetric_with_principal(int n, const Permutation& theta,
                                      const SquareSink& emit);

// Same search spaces, but enumerated up to screening by a subgroup of the
// centralizer of the fixed autotopism (at most subgroup_cap elements). The
// survivors meet every rrs-isotopism class that the full set meets, at a
// small fraction of the volume; exact class counting dedups them afterwards.
std::vector<LatinSquare> gen_symmetric_autotopism_screened(int n, const Permutation& rowp,
                                                           const Permutation& colp,
                                                           const Permutation& symp,
                                                           int subgroup_cap = 4000);

struct AutotopismShape {
  CycleStructure alpha;
  CycleStructure gamma;
  // Fixed representatives: cycles on consecutive points, longest first.
  Permutation alpha_rep() const { return alpha.representative(); }
  Permutation gamma_rep() const { return gamma.representative(); }
};

// The admissible (alpha, gamma) cycle-structure pairs for rrs-autotopisms
// (alpha,alpha,gamma) of symmetric squares, per order. Static data, 2 <= n <= 13.
std::vector<AutotopismShape> admissible_autotopism_shapes(int n);

struct GenStats {
  uint64_t screen_events = 0;
  uint64_t screen_kept = 0;
  uint64_t completions = 0;
};

struct GenOptions {
  int jobs = 1;
  GenStats* stats = nullptr;  // optional instrumentation sink
  // Isomorph screening runs after each listed row index is completely filled.
  // An empty list means the default schedule (every row but the last two).
  std::vector<int> screen_rows;
  bool no_screening = false;
  std::string checkpoint_path;  // resumable per-seed state when non-empty
  // When set, every completed square from canonical seeds is reported and
  // screening is disabled (raw enumeration per seed diagonal).
  SquareSink raw_emit;
};

// Diagonal contents (with their symmetry-implied cells) that can start a
// square in the filter's category, one representative per isomorphism class.
struct DiagonalSeed {
  std::vector<uint8_t> diag;   // 0-based diagonal symbols
  std::vector<uint8_t> cells;  // partial square, kEmptyCell = empty
  int idempotent_count() const;
};

std::vector<DiagonalSeed> enumerate_seeds(int n, const PropertyFilter& filter);

// One representative per isomorphism class of squares matching the filter.
// Supported symmetries: symmetric, semisymmetric, totally-symmetric; the
// reduced shape maps to unipotent classes for the two self-conjugate
// symmetries and to a dedicated stream for symmetric squares.
Catalog gen_classes(int n, const PropertyFilter& filter, const GenOptions& opts = {});

// Reduced unipotent symmetric squares of order n (direct enumeration).
uint64_t gen_reduced_unipotent_symmetric(int n, const SquareSink& emit);

}  // namespace latsq
