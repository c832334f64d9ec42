#include "grace/perm_group.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

#include "grace/errors.hpp"

namespace grace {

bool is_permutation(const std::vector<int>& v) {
  const int n = static_cast<int>(v.size());
  std::vector<bool> seen(n, false);
  for (int x : v) {
    if (x < 0 || x >= n || seen[x]) return false;
    seen[x] = true;
  }
  return true;
}

Permutation identity_permutation(int n) {
  Permutation p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Permutation compose_perm(const Permutation& a, const Permutation& b) {
  assert(a.size() == b.size());
  Permutation r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    r[i] = a[b[i]];
  return r;
}

Permutation inverse_perm(const Permutation& p) {
  Permutation r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i)
    r[p[i]] = static_cast<int>(i);
  return r;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<Permutation> out;
  out.reserve(factorial(n));
  Permutation p = identity_permutation(n);
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::uint64_t perm_rank(const Permutation& p) {
  const int n = static_cast<int>(p.size());
  std::uint64_t rank = 0;
  for (int i = 0; i < n; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < n; ++j)
      if (p[j] < p[i]) ++smaller;
    rank += static_cast<std::uint64_t>(smaller) * factorial(n - 1 - i);
  }
  return rank;
}

bool PermutationGroup::contains(const Permutation& p) const {
  return std::binary_search(elements.begin(), elements.end(), p);
}

bool is_subgroup(const PermutationGroup& g) {
  if (g.elements.empty()) return false;
  for (const Permutation& p : g.elements)
    if (static_cast<int>(p.size()) != g.n || !is_permutation(p)) return false;
  if (!g.contains(identity_permutation(g.n))) return false;
  for (const Permutation& p : g.elements) {
    if (!g.contains(inverse_perm(p))) return false;
    for (const Permutation& q : g.elements)
      if (!g.contains(compose_perm(p, q))) return false;
  }
  return true;
}

namespace {

// Backtracking over candidate images sigma(v) = w in increasing v. A partial
// assignment survives only if sigma(f(i)) = f(sigma(i)) holds whenever both
// sides are determined. In-degree and loop preservation filter candidates.
class AutSearch {
 public:
  explicit AutSearch(const Transformation& f)
      : f_(f), n_(f.n()), indeg_(n_, 0),
        sigma_(n_, -1), used_(n_, false) {
    for (int i = 0; i < n_; ++i) ++indeg_[f_(i)];
  }

  std::vector<Permutation> run() {
    extend(0);
    return std::move(found_);
  }

 private:
  bool consistent(int v, int w) const {
    if (indeg_[v] != indeg_[w]) return false;
    if ((f_(v) == v) != (f_(w) == w)) return false;
    // Edge out of v: need sigma(f(v)) == f(w) when sigma(f(v)) is known.
    const int fv = f_(v);
    if (fv == v) {
      if (f_(w) != w) return false;
    } else if (sigma_[fv] != -1 &&
               sigma_[fv] != f_(w)) {
      return false;
    }
    // Edges into v: for assigned u with f(u) = v, need f(sigma(u)) == w.
    for (int u = 0; u < n_; ++u) {
      if (sigma_[u] == -1 || f_(u) != v) continue;
      if (f_(sigma_[u]) != w) return false;
    }
    return true;
  }

  void extend(int v) {
    if (v == n_) {
      found_.push_back(sigma_);
      return;
    }
    for (int w = 0; w < n_; ++w) {
      if (used_[w] || !consistent(v, w)) continue;
      sigma_[v] = w;
      used_[w] = true;
      extend(v + 1);
      sigma_[v] = -1;
      used_[w] = false;
    }
  }

  const Transformation& f_;
  int n_;
  std::vector<int> indeg_;
  Permutation sigma_;
  std::vector<bool> used_;
  std::vector<Permutation> found_;
};

}  // namespace

PermutationGroup automorphism_group(const Transformation& f) {
  PermutationGroup g;
  g.n = f.n();
  g.elements = AutSearch(f).run();
  std::sort(g.elements.begin(), g.elements.end());
  return g;
}

std::vector<Permutation> left_coset_representatives(const PermutationGroup& g) {
  if (!is_subgroup(g))
    throw GroupAxiomError("left_coset_representatives: element list is not a subgroup");
  const int n = g.n;
  const std::uint64_t total = factorial(n);
  std::vector<bool> covered(total, false);
  std::vector<Permutation> reps;
  reps.reserve(total / g.order());
  Permutation sigma = identity_permutation(n);
  std::uint64_t rank = 0;
  do {
    if (!covered[rank]) {
      // sigma is the lexicographically least member of its coset, because
      // every earlier coset member would have marked this rank.
      reps.push_back(sigma);
      for (const Permutation& h : g.elements)
        covered[perm_rank(compose_perm(sigma, h))] = true;
    }
    ++rank;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return reps;
}

bool is_strict_subgroup(const PermutationGroup& inner, const PermutationGroup& outer) {
  if (inner.order() >= outer.order()) return false;
  for (const Permutation& p : inner.elements)
    if (!outer.contains(p)) return false;
  return true;
}

}  // namespace grace
