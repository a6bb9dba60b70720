// Exhaustive edge-disjoint path router.
//
// Demands are routed one at a time as vertex-simple paths over a residual
// capacity table. Parallel copies of a pair are interchangeable, so the search
// only tracks how many copies remain; concrete copy indices are assigned once
// a full solution exists.

#include <algorithm>
#include <limits>
#include <set>
#include <string>
#include <unordered_set>

#include "k33/immersion.hpp"
#include "router_internal.hpp"

namespace k33 {
namespace {

constexpr int kMaxDemands = 32;
constexpr int kFullScanLimit = 12;
constexpr std::size_t kMemoLimit = 1u << 21;

struct Task {
  int s = -1;
  int t = -1;
  int outer_l = -1;
  int outer_r = -1;
  std::optional<EdgeRef> forced_l;
  std::optional<EdgeRef> forced_r;
  bool direct = false;
  std::vector<int> path;
};

class Router {
 public:
  Router(const Multigraph& g, std::vector<Task> tasks, std::vector<std::uint8_t> cap,
         const RouteOptions& options, RouteStats* stats, const detail::CutCache* cache)
      : n_(g.num_vertices()), tasks_(std::move(tasks)), cap_(std::move(cap)),
        options_(options), stats_(stats ? stats : &local_stats_) {
    if (options_.cut_pruning && n_ > kFullScanLimit) {
      if (!cache) {
        owned_cache_ = detail::CutCache::build(g);
        cache = &owned_cache_;
      }
      cached_cuts_ = &cache->in_a;
    }
  }

  bool solve_all() {
    std::uint32_t pending = 0;
    for (std::size_t i = 0; i < tasks_.size(); ++i) {
      auto& task = tasks_[i];
      if (task.direct || task.s == task.t) {
        task.path = {task.s};
        continue;
      }
      pending |= 1u << i;
    }
    return solve(pending);
  }

  const std::vector<Task>& tasks() const { return tasks_; }

 private:
  std::uint8_t& cap(int u, int v) { return cap_[static_cast<std::size_t>(u) * n_ + v]; }
  std::uint8_t cap(int u, int v) const { return cap_[static_cast<std::size_t>(u) * n_ + v]; }

  bool solve(std::uint32_t pending) {
    ++stats_->nodes;
    if (pending == 0) return true;
    if (options_.cut_pruning && !feasible(pending)) {
      ++stats_->pruned;
      return false;
    }
    std::string key;
    if (options_.memoize) {
      key = memo_key(pending);
      if (memo_.count(key)) {
        ++stats_->memo_hits;
        return false;
      }
    }
    // Most constrained demand: fewest edge-disjoint paths left.
    int chosen = -1;
    int chosen_flow = std::numeric_limits<int>::max();
    for (std::size_t i = 0; i < tasks_.size(); ++i) {
      if (!((pending >> i) & 1u)) continue;
      int f = residual_flow(tasks_[i].s, tasks_[i].t, 4);
      if (f == 0) {
        remember(key);
        return false;
      }
      if (f < chosen_flow) {
        chosen_flow = f;
        chosen = static_cast<int>(i);
      }
    }
    Task& task = tasks_[chosen];
    std::vector<char> visited(n_, 0);
    if (task.outer_l >= 0) visited[task.outer_l] = 1;
    if (task.outer_r >= 0) visited[task.outer_r] = 1;
    visited[task.s] = 1;
    std::vector<int> path{task.s};
    const std::uint32_t rest = pending & ~(1u << chosen);
    if (extend(task, path, visited, rest)) {
      task.path = path;
      return true;
    }
    remember(key);
    return false;
  }

  // Depth-first over simple paths in increasing neighbour order.
  bool extend(const Task& task, std::vector<int>& path, std::vector<char>& visited,
              std::uint32_t rest) {
    const int u = path.back();
    for (int w = 0; w < n_; ++w) {
      if (cap(u, w) == 0 || visited[w]) continue;
      if (w == task.t) {
        --cap(u, w);
        --cap(w, u);
        path.push_back(w);
        if (solve(rest)) return true;
        path.pop_back();
        ++cap(u, w);
        ++cap(w, u);
        continue;
      }
      visited[w] = 1;
      --cap(u, w);
      --cap(w, u);
      path.push_back(w);
      if (extend(task, path, visited, rest)) return true;
      path.pop_back();
      ++cap(u, w);
      ++cap(w, u);
      visited[w] = 0;
    }
    return false;
  }

  int residual_flow(int s, int t, int limit) const {
    std::vector<int> flow(static_cast<std::size_t>(n_) * n_, 0);
    std::vector<int> prev(n_);
    int value = 0;
    while (value < limit) {
      std::fill(prev.begin(), prev.end(), -1);
      prev[s] = s;
      std::vector<int> queue{s};
      for (std::size_t i = 0; i < queue.size() && prev[t] < 0; ++i) {
        int u = queue[i];
        for (int v = 0; v < n_; ++v)
          if (prev[v] < 0 && cap(u, v) - flow[u * n_ + v] > 0) {
            prev[v] = u;
            queue.push_back(v);
          }
      }
      if (prev[t] < 0) break;
      for (int v = t; v != s; v = prev[v]) {
        ++flow[prev[v] * n_ + v];
        --flow[v * n_ + prev[v]];
      }
      ++value;
    }
    return value;
  }

  // Necessary conditions: every vertex keeps enough residual degree for the
  // demands ending there, and every cut keeps at least as much residual
  // capacity as the number of pending demands crossing it.
  bool feasible(std::uint32_t pending) const {
    std::vector<int> need(n_, 0);
    for (std::size_t i = 0; i < tasks_.size(); ++i)
      if ((pending >> i) & 1u) {
        ++need[tasks_[i].s];
        ++need[tasks_[i].t];
      }
    for (int v = 0; v < n_; ++v) {
      if (!need[v]) continue;
      int deg = 0;
      for (int w = 0; w < n_; ++w) deg += cap(v, w);
      if (deg < need[v]) return false;
    }
    return n_ <= kFullScanLimit ? full_cut_scan(pending) : cached_cut_check(pending);
  }

  bool full_cut_scan(std::uint32_t pending) const {
    if (n_ < 2) return true;
    std::vector<int> active;
    for (std::size_t i = 0; i < tasks_.size(); ++i)
      if ((pending >> i) & 1u) active.push_back(static_cast<int>(i));
    std::vector<char> in_a(n_, 0);
    in_a[0] = 1;
    std::vector<int> w(n_);
    int cut = 0;
    for (int v = 0; v < n_; ++v) {
      w[v] = cap(v, 0);
      cut += cap(0, v);
    }
    auto crossing = [&]() {
      int c = 0;
      for (int i : active) c += in_a[tasks_[i].s] != in_a[tasks_[i].t];
      return c;
    };
    if (cut < crossing()) return false;
    const std::uint32_t steps = 1u << (n_ - 1);
    for (std::uint32_t i = 1; i < steps; ++i) {
      const int v = 1 + __builtin_ctz(i);
      int deg = 0;
      for (int u = 0; u < n_; ++u) deg += cap(v, u);
      if (in_a[v]) {
        cut += 2 * w[v] - deg;
        in_a[v] = 0;
        for (int u = 0; u < n_; ++u) w[u] -= cap(u, v);
      } else {
        cut += deg - 2 * w[v];
        in_a[v] = 1;
        for (int u = 0; u < n_; ++u) w[u] += cap(u, v);
      }
      if (cut < static_cast<int>(active.size()) && cut < crossing()) return false;
    }
    return true;
  }

  bool cached_cut_check(std::uint32_t pending) const {
    if (!cached_cuts_) return true;
    for (const auto& in_a : *cached_cuts_) {
      int crossing = 0;
      for (std::size_t i = 0; i < tasks_.size(); ++i)
        if ((pending >> i) & 1u) crossing += in_a[tasks_[i].s] != in_a[tasks_[i].t];
      if (crossing == 0) continue;
      int cut = 0;
      for (int u = 0; u < n_; ++u)
        if (in_a[u])
          for (int v = 0; v < n_; ++v)
            if (!in_a[v]) cut += cap(u, v);
      if (cut < crossing) return false;
    }
    return true;
  }

  std::string memo_key(std::uint32_t pending) const {
    std::string key;
    key.reserve(4 + static_cast<std::size_t>(n_) * (n_ - 1) / 2);
    for (int b = 0; b < 4; ++b) key.push_back(static_cast<char>((pending >> (8 * b)) & 0xff));
    for (int u = 0; u < n_; ++u)
      for (int v = u + 1; v < n_; ++v) key.push_back(static_cast<char>(cap(u, v)));
    return key;
  }

  void remember(const std::string& key) {
    if (options_.memoize && memo_.size() < kMemoLimit) memo_.insert(key);
  }

  int n_;
  std::vector<Task> tasks_;
  std::vector<std::uint8_t> cap_;
  RouteOptions options_;
  RouteStats local_stats_;
  RouteStats* stats_;
  detail::CutCache owned_cache_;
  const std::vector<std::vector<char>>* cached_cuts_ = nullptr;
  std::unordered_set<std::string> memo_;
};

void require(bool ok, const char* what) {
  if (!ok) throw GraphError(what);
}

}  // namespace

namespace detail {

CutCache CutCache::build(const Multigraph& g) {
  CutCache cache;
  for (const auto& sep : enumerate_separations(g, 4, 1, 1)) {
    std::vector<char> in_a(g.num_vertices(), 0);
    for (int v : sep.side_a) in_a[v] = 1;
    cache.in_a.push_back(std::move(in_a));
  }
  return cache;
}

std::optional<std::vector<Walk>> route_cached(const Multigraph& g,
                                              const std::vector<Demand>& demands,
                                              const RouteOptions& options, RouteStats* stats,
                                              const CutCache* cache) {
  const int n = g.num_vertices();
  require(demands.size() <= static_cast<std::size_t>(kMaxDemands), "route: too many demands");
  std::set<EdgeRef> reserved;
  std::vector<Task> tasks;
  bool infeasible = false;
  for (const auto& d : demands) {
    Task task;
    for (const Terminal* term : {&d.left, &d.right})
      require(term->vertex >= 0 && term->vertex < n, "route: terminal vertex out of range");
    require(d.left.vertex != d.right.vertex, "route: demand endpoints coincide");
    if (d.left.edge && d.right.edge && *d.left.edge == *d.right.edge) {
      const EdgeRef& e = *d.left.edge;
      require(g.has_edge(e) && e.incident(d.left.vertex) && e.incident(d.right.vertex),
              "route: forced edge does not join the demand endpoints");
      require(reserved.insert(e).second, "route: two demands force the same edge");
      task.direct = true;
      task.forced_l = e;
      task.s = task.t = d.right.vertex;
      task.outer_l = d.left.vertex;
      tasks.push_back(std::move(task));
      continue;
    }
    auto inner = [&](const Terminal& term, int& outer, std::optional<EdgeRef>& forced) {
      if (!term.edge) return term.vertex;
      const EdgeRef& e = *term.edge;
      require(g.has_edge(e) && e.incident(term.vertex), "route: forced edge not at its terminal");
      require(reserved.insert(e).second, "route: two demands force the same edge");
      outer = term.vertex;
      forced = e;
      return e.other(term.vertex);
    };
    task.s = inner(d.left, task.outer_l, task.forced_l);
    task.t = inner(d.right, task.outer_r, task.forced_r);
    // A walk that re-enters its own outer terminal is not a path.
    if ((task.outer_r >= 0 && task.s == task.outer_r) ||
        (task.outer_l >= 0 && task.t == task.outer_l))
      infeasible = true;
    tasks.push_back(std::move(task));
  }

  if (infeasible) return std::nullopt;
  const int limit = std::max<int>(1, static_cast<int>(demands.size()));
  std::vector<std::uint8_t> cap(static_cast<std::size_t>(n) * n, 0);
  for (const auto& p : g.pairs()) {
    int avail = p.mult;
    for (const auto& e : reserved)
      if (e.u == p.u && e.v == p.v) --avail;
    const auto c = static_cast<std::uint8_t>(std::min(avail, limit));
    cap[static_cast<std::size_t>(p.u) * n + p.v] = c;
    cap[static_cast<std::size_t>(p.v) * n + p.u] = c;
  }

  Router router(g, std::move(tasks), std::move(cap), options, stats, cache);
  if (!router.solve_all()) return std::nullopt;

  // Concrete copies: forced ones as given, the rest lowest-free first.
  std::vector<Walk> walks;
  std::vector<int> next_copy(static_cast<std::size_t>(n) * n, 0);
  auto take_copy = [&](int a, int b) {
    EdgeRef e = EdgeRef::make(a, b);
    int& c = next_copy[static_cast<std::size_t>(e.u) * n + e.v];
    while (reserved.count({e.u, e.v, c})) ++c;
    e.copy = c++;
    return e;
  };
  for (const auto& task : router.tasks()) {
    Walk w;
    if (task.forced_l) w.push_back(*task.forced_l);
    if (!task.direct)
      for (std::size_t i = 0; i + 1 < task.path.size(); ++i)
        w.push_back(take_copy(task.path[i], task.path[i + 1]));
    if (task.forced_r) w.push_back(*task.forced_r);
    walks.push_back(std::move(w));
  }
  return walks;
}

}  // namespace detail

std::optional<std::vector<Walk>> route(const Multigraph& g, const std::vector<Demand>& demands,
                                       const RouteOptions& options, RouteStats* stats) {
  return detail::route_cached(g, demands, options, stats, nullptr);
}

}  // namespace k33
