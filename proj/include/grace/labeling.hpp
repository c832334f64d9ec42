#pragma once

#include <utility>
#include <vector>

#include "grace/config.hpp"
#include "grace/perm_group.hpp"
#include "grace/transformation.hpp"

namespace grace {

// Bijective vertex labeling by {0, ..., n-1}; values[j] is the label of
// vertex j.
struct Labeling {
  std::vector<int> values;

  static Labeling from_values(std::vector<int> values);  // validates bijection
  int n() const { return static_cast<int>(values.size()); }

  bool operator==(const Labeling&) const = default;
};

// The n induced edge labels {|x_{f(j)} - x_j| : j in Z_n}, sorted (multiset).
std::vector<int> edge_label_set(const Transformation& f, const Labeling& x);

struct BetaResult {
  int beta = 0;          // max over all labelings of the distinct-label count
  Labeling witness;      // first labeling achieving beta in search order
  bool graceful = false; // beta == n
};

struct BetaOptions {
  int max_n = kDefaultMaxN;
  int workers = 1;
};

// Exact maximum over all n! labelings of the number of distinct induced edge
// labels. Backtracking search: vertices in decreasing degree order, labels
// extremal-first, pruned by (distinct so far) + (edges not yet determined)
// <= best. The label of the first search vertex splits the space into n
// deterministic shards; shard results merge by strict-improvement max, so
// worker count never changes the answer.
BetaResult beta(const Transformation& f, const BetaOptions& opts = {});

bool is_graceful(const Transformation& f, const BetaOptions& opts = {});

struct GrLResult {
  int count = 0;
  // (conjugating permutation, sigma f sigma^(-1)) per graceful conjugate,
  // one per left coset of Aut(G_f), in lexicographic order of sigma.
  std::vector<std::pair<Permutation, Transformation>> representatives;
};

// GrL(G_f): graceful conjugates of f, one per left coset of Aut(G_f); a
// conjugate counts when the identity labeling of its own vertex names yields
// n distinct edge labels.
GrLResult grl(const Transformation& f, int max_n = kDefaultMaxN);

// Vertices of the underlying undirected tree (loop dropped) at undirected
// distance exactly 2 from some leaf, sorted. Requires a semigroup member.
std::vector<int> fixed_point_swap_candidates(const Transformation& f);

// Re-roots the underlying tree of G_f at the lexicographically least vertex
// at distance exactly 2 from a leaf, then relabels in breadth-first order
// from the new root (neighbors in increasing old-name order) so the result
// is again a semigroup member. Throws ConstructionUnavailableError when no
// vertex qualifies and PremiseError for non-semigroup input.
Transformation fixed_point_swap(const Transformation& f);

// Same construction re-rooted at a caller-chosen qualifying vertex.
Transformation fixed_point_swap_at(const Transformation& f, int vertex);

// Permutation on n = 1 + 2^(s+t) points: a fixed point at 0 and 2^s disjoint
// 2^t-cycles laid out in consecutive blocks. Requires s >= 1, t >= 2.
Transformation cycle_union(int s, int t, int max_n = kDefaultMaxN);

}  // namespace grace
