#include "grace/labeling.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <cstdlib>
#include <queue>
#include <thread>

#include "grace/errors.hpp"

namespace grace {

Labeling Labeling::from_values(std::vector<int> values) {
  if (!is_permutation(values))
    throw ParseError("labeling values must be a bijection on Z_n");
  Labeling x;
  x.values = std::move(values);
  return x;
}

std::vector<int> edge_label_set(const Transformation& f, const Labeling& x) {
  if (f.n() != x.n())
    throw DomainSizeError("edge_label_set: transformation and labeling sizes differ");
  std::vector<int> labels;
  labels.reserve(f.n());
  for (int j = 0; j < f.n(); ++j)
    labels.push_back(std::abs(x.values[f(j)] -
                              x.values[j]));
  std::sort(labels.begin(), labels.end());
  return labels;
}

namespace {

std::vector<int> extremal_first_labels(int n) {
  std::vector<int> order;
  order.reserve(n);
  int lo = 0, hi = n - 1;
  while (lo <= hi) {
    order.push_back(lo++);
    if (lo <= hi) order.push_back(hi--);
  }
  return order;
}

struct ShardResult {
  int best = 0;
  std::vector<int> witness;  // by vertex, empty if shard found nothing
};

// One β search shard: the first vertex in the search order carries a fixed
// label. `floor` is a lower bound the shard must strictly beat before it
// records anything.
class BetaShard {
 public:
  BetaShard(const Transformation& f, const std::vector<int>& vertex_order,
            const std::vector<int>& label_order, int first_label, int floor)
      : f_(f), n_(f.n()), vertex_order_(vertex_order), label_order_(label_order),
        first_label_(first_label), best_(floor),
        x_(n_, -1), label_used_(n_, false),
        edge_count_(n_, 0) {
    // Edge j = (j, f(j)) becomes determined once the later of its endpoints
    // (in search order) is assigned.
    std::vector<int> pos(n_);
    for (int p = 0; p < n_; ++p) pos[vertex_order_[static_cast<std::size_t>(p)]] = p;
    determined_at_.resize(n_);
    for (int j = 0; j < n_; ++j) {
      const int p = std::max(pos[j], pos[f_(j)]);
      determined_at_[p].push_back(j);
    }
    undetermined_after_.resize(n_ + 1);
    undetermined_after_[0] = n_;
    for (int p = 0; p < n_; ++p)
      undetermined_after_[p + 1] =
          undetermined_after_[p] -
          static_cast<int>(determined_at_[p].size());
  }

  ShardResult run() {
    extend(0, 0);
    ShardResult r;
    r.best = best_;
    r.witness = witness_;
    return r;
  }

 private:
  void assign(int p, int label, int& distinct) {
    const int v = vertex_order_[p];
    x_[v] = label;
    label_used_[label] = true;
    for (int j : determined_at_[p]) {
      const int l = std::abs(x_[f_(j)] - x_[j]);
      if (++edge_count_[l] == 1) ++distinct;
    }
  }

  void unassign(int p, int label, int& distinct) {
    const int v = vertex_order_[p];
    for (int j : determined_at_[p]) {
      const int l = std::abs(x_[f_(j)] - x_[j]);
      if (--edge_count_[l] == 0) --distinct;
    }
    label_used_[label] = false;
    x_[v] = -1;
  }

  void extend(int p, int distinct) {
    if (best_ == n_) return;  // nothing can strictly improve
    if (distinct + undetermined_after_[p] <= best_) return;
    if (p == n_) {
      best_ = distinct;
      witness_ = x_;
      return;
    }
    if (p == 0) {
      int d = distinct;
      assign(0, first_label_, d);
      extend(1, d);
      unassign(0, first_label_, d);
      return;
    }
    for (int label : label_order_) {
      if (label_used_[label]) continue;
      int d = distinct;
      assign(p, label, d);
      extend(p + 1, d);
      unassign(p, label, d);
    }
  }

  const Transformation& f_;
  int n_;
  const std::vector<int>& vertex_order_;
  const std::vector<int>& label_order_;
  int first_label_;
  int best_;
  std::vector<int> x_;
  std::vector<bool> label_used_;
  std::vector<int> edge_count_;
  std::vector<int> witness_;
  std::vector<std::vector<int>> determined_at_;
  std::vector<int> undetermined_after_;
};

}  // namespace

BetaResult beta(const Transformation& f, const BetaOptions& opts) {
  const int n = f.n();
  if (n > opts.max_n)
    throw SizeCapError("beta: n=" + std::to_string(n) + " exceeds max_n=" +
                       std::to_string(opts.max_n));

  std::vector<int> degree(n, 1);  // out-degree 1 each
  for (int i = 0; i < n; ++i) ++degree[f(i)];
  std::vector<int> vertex_order(n);
  for (int i = 0; i < n; ++i) vertex_order[i] = i;
  std::stable_sort(vertex_order.begin(), vertex_order.end(),
                   [&](int a, int b) { return degree[a] > degree[b]; });
  const std::vector<int> label_order = extremal_first_labels(n);

  std::vector<ShardResult> shard(n);
  const int workers = std::min(opts.workers, n);
  if (workers <= 1) {
    int floor = 0;
    for (int s = 0; s < n; ++s) {
      shard[s] =
          BetaShard(f, vertex_order, label_order, label_order[s], floor).run();
      floor = std::max(floor, shard[s].best);
      if (floor == n) break;  // graceful witness found; later shards cannot improve
    }
  } else {
    std::vector<std::thread> pool;
    std::atomic<int> next{0};
    for (int w = 0; w < workers; ++w)
      pool.emplace_back([&]() {
        for (int s = next.fetch_add(1); s < n; s = next.fetch_add(1))
          shard[s] =
              BetaShard(f, vertex_order, label_order, label_order[s], 0).run();
      });
    for (auto& t : pool) t.join();
  }

  BetaResult result;
  for (int s = 0; s < n; ++s) {
    const ShardResult& r = shard[s];
    if (!r.witness.empty() && r.best > result.beta) {
      result.beta = r.best;
      result.witness.values = r.witness;
    }
  }
  assert(result.beta >= 1);
  result.graceful = (result.beta == n);
  return result;
}

bool is_graceful(const Transformation& f, const BetaOptions& opts) {
  return beta(f, opts).graceful;
}

namespace {

bool distinct_identity_labels(const Transformation& g) {
  std::vector<bool> seen(g.n(), false);
  for (int i = 0; i < g.n(); ++i) {
    const int l = std::abs(g(i) - i);
    if (seen[l]) return false;
    seen[l] = true;
  }
  return true;
}

}  // namespace

GrLResult grl(const Transformation& f, int max_n) {
  if (f.n() > max_n)
    throw SizeCapError("grl: n=" + std::to_string(f.n()) + " exceeds max_n=" +
                       std::to_string(max_n));
  GrLResult result;
  const PermutationGroup aut = automorphism_group(f);
  for (const Permutation& sigma : left_coset_representatives(aut)) {
    Transformation g = conjugate(sigma, f);
    if (distinct_identity_labels(g))
      result.representatives.emplace_back(sigma, std::move(g));
  }
  result.count = static_cast<int>(result.representatives.size());
  return result;
}

namespace {

struct UndirectedTree {
  std::vector<std::vector<int>> adj;

  explicit UndirectedTree(const Transformation& f) : adj(f.n()) {
    for (int i = 1; i < f.n(); ++i) {
      adj[i].push_back(f(i));
      adj[f(i)].push_back(i);
    }
    for (auto& nbrs : adj) std::sort(nbrs.begin(), nbrs.end());
  }

  std::vector<int> bfs_distances(int src) const {
    std::vector<int> dist(adj.size(), -1);
    std::queue<int> q;
    dist[src] = 0;
    q.push(src);
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      for (int w : adj[u])
        if (dist[w] == -1) {
          dist[w] = dist[u] + 1;
          q.push(w);
        }
    }
    return dist;
  }
};

}  // namespace

std::vector<int> fixed_point_swap_candidates(const Transformation& f) {
  if (!is_semigroup_member(f))
    throw PremiseError("fixed_point_swap: input is not a semigroup member");
  const int n = f.n();
  const UndirectedTree tree(f);
  std::vector<bool> qualifies(n, false);
  for (int u = 0; u < n; ++u) {
    if (tree.adj[u].size() != 1) continue;  // leaves only
    const std::vector<int> dist = tree.bfs_distances(u);
    for (int v = 0; v < n; ++v)
      if (dist[v] == 2) qualifies[v] = true;
  }
  std::vector<int> out;
  for (int v = 0; v < n; ++v)
    if (qualifies[v]) out.push_back(v);
  return out;
}

Transformation fixed_point_swap_at(const Transformation& f, int vertex) {
  const std::vector<int> candidates = fixed_point_swap_candidates(f);
  if (!std::binary_search(candidates.begin(), candidates.end(), vertex))
    throw ConstructionUnavailableError(
        "fixed_point_swap: vertex " + std::to_string(vertex) +
        " is not at distance 2 from a leaf");
  const int n = f.n();
  const UndirectedTree tree(f);

  // BFS from the new root; neighbor lists are sorted, so discovery order is
  // deterministic and parents precede children.
  std::vector<int> new_name(n, -1);
  std::vector<int> parent(n, -1);
  std::vector<int> bfs_order;
  bfs_order.reserve(n);
  std::queue<int> q;
  new_name[vertex] = 0;
  q.push(vertex);
  while (!q.empty()) {
    const int u = q.front();
    q.pop();
    bfs_order.push_back(u);
    for (int w : tree.adj[u])
      if (new_name[w] == -1) {
        new_name[w] = static_cast<int>(bfs_order.size() + q.size());
        parent[w] = u;
        q.push(w);
      }
  }

  Transformation g;
  g.images.resize(n);
  g.images[0] = 0;  // loop at the new root
  for (int u = 0; u < n; ++u) {
    if (u == vertex) continue;
    g.images[new_name[static_cast<std::size_t>(u)]] =
        new_name[parent[static_cast<std::size_t>(u)]];
  }
  assert(is_semigroup_member(g));
  return g;
}

Transformation fixed_point_swap(const Transformation& f) {
  const std::vector<int> candidates = fixed_point_swap_candidates(f);
  if (candidates.empty())
    throw ConstructionUnavailableError(
        "fixed_point_swap: no vertex at distance exactly 2 from a leaf (n=" +
        std::to_string(f.n()) + ")");
  return fixed_point_swap_at(f, candidates.front());
}

Transformation cycle_union(int s, int t, int max_n) {
  if (s < 1) throw ParseError("cycle_union: s must be >= 1");
  if (t < 2) throw ParseError("cycle_union: t must be > 1");
  if (s + t >= 31)
    throw SizeCapError("cycle_union: 1 + 2^" + std::to_string(s + t) + " points");
  const int n = 1 + (1 << (s + t));
  if (n > max_n)
    throw SizeCapError("cycle_union: n=" + std::to_string(n) + " exceeds max_n=" +
                       std::to_string(max_n));
  Transformation f;
  f.images.resize(n);
  f.images[0] = 0;
  const int len = 1 << t;
  for (int block = 0; block < (1 << s); ++block) {
    const int start = 1 + block * len;
    for (int k = 0; k < len; ++k)
      f.images[start + k] = (k + 1 < len) ? start + k + 1 : start;
  }
  return f;
}

}  // namespace grace
