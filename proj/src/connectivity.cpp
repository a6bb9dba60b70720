#include "k33/connectivity.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <sstream>

namespace k33 {

Separation make_separation(const Multigraph& g, std::vector<int> side_a) {
  const int n = g.num_vertices();
  std::vector<char> in_a(n, 0);
  for (int v : side_a) in_a.at(v) = 1;
  Separation s;
  for (int v = 0; v < n; ++v) (in_a[v] ? s.side_a : s.side_b).push_back(v);
  for (const auto& p : g.pairs())
    if (in_a[p.u] != in_a[p.v])
      for (int c = 0; c < p.mult; ++c) s.cut.push_back({p.u, p.v, c});
  return s;
}

FlowResult max_flow(const Multigraph& g, int s, int t) {
  const int n = g.num_vertices();
  if (s == t) throw GraphError("max_flow: s and t must differ");
  (void)g.degree(s);
  (void)g.degree(t);
  // flow[u*n+v] = net flow u -> v; residual = mult - flow.
  std::vector<int> flow(static_cast<std::size_t>(n) * n, 0);
  auto residual = [&](int u, int v) { return g.multiplicity(u, v) - flow[u * n + v]; };
  int value = 0;
  std::vector<int> prev(n);
  while (true) {
    std::fill(prev.begin(), prev.end(), -1);
    prev[s] = s;
    std::vector<int> queue{s};
    for (std::size_t i = 0; i < queue.size() && prev[t] < 0; ++i) {
      int u = queue[i];
      for (int v = 0; v < n; ++v)
        if (prev[v] < 0 && residual(u, v) > 0) {
          prev[v] = u;
          queue.push_back(v);
        }
    }
    if (prev[t] < 0) {
      std::vector<int> side;
      for (int v = 0; v < n; ++v)
        if (prev[v] >= 0) side.push_back(v);
      return {value, make_separation(g, std::move(side))};
    }
    for (int v = t; v != s; v = prev[v]) {
      ++flow[prev[v] * n + v];
      --flow[v * n + prev[v]];
    }
    ++value;
  }
}

int edge_connectivity(const Multigraph& g) {
  const int n = g.num_vertices();
  if (n < 2) return -1;
  if (!is_connected(g)) return 0;
  int best = std::numeric_limits<int>::max();
  for (int t = 1; t < n; ++t) best = std::min(best, max_flow(g, 0, t).value);
  return best;
}

namespace {

// Decides orientation and bounds; returns false if neither orientation fits.
bool orient(int n, std::vector<int>& a, std::vector<int>& b, int min_a, int min_b) {
  const int sa = static_cast<int>(a.size());
  const int sb = n - sa;
  if (sa >= min_a && sb >= min_b) return true;
  if (sb >= min_a && sa >= min_b) {
    std::swap(a, b);
    return true;
  }
  return false;
}

// Visits every bipartition {A, B} with 0 in A and B non-empty, passing the
// membership mask of A and the cut order.
void scan_bipartitions(const Multigraph& g, const std::function<void(std::uint32_t, int)>& visit) {
  const int n = g.num_vertices();
  if (n < 2) return;
  if (n > kScanLimit) throw GraphError("scan: too many vertices");
  // w[v] = multiplicity from v into A.
  std::vector<int> w(n);
  for (int v = 0; v < n; ++v) w[v] = g.multiplicity(v, 0);
  std::uint32_t mask = 1;
  int cut = g.degree(0);
  const std::uint32_t steps = 1u << (n - 1);
  // Gray code over vertices 1..n-1; step i flips bit ctz(i).
  for (std::uint32_t i = 1; i < steps; ++i) {
    const int v = 1 + __builtin_ctz(i);
    const std::uint32_t bit = 1u << v;
    if (mask & bit) {
      cut += 2 * w[v] - g.degree(v);
      mask &= ~bit;
      for (int u = 0; u < n; ++u) w[u] -= g.multiplicity(u, v);
    } else {
      cut += g.degree(v) - 2 * w[v];
      mask |= bit;
      for (int u = 0; u < n; ++u) w[u] += g.multiplicity(u, v);
    }
    if (mask != (1u << n) - 1) visit(mask, cut);
  }
  // The initial state A = {0} corresponds to i = 0.
  visit(1u, g.degree(0));
}

std::vector<Separation> enumerate_scan(const Multigraph& g, int max_order, int min_a, int min_b) {
  const int n = g.num_vertices();
  std::vector<std::vector<int>> sides;
  scan_bipartitions(g, [&](std::uint32_t mask, int cut) {
    if (cut > max_order) return;
    std::vector<int> a, b;
    for (int v = 0; v < n; ++v) ((mask >> v) & 1u ? a : b).push_back(v);
    if (orient(n, a, b, min_a, min_b)) sides.push_back(std::move(a));
  });
  std::sort(sides.begin(), sides.end());
  std::vector<Separation> out;
  out.reserve(sides.size());
  for (auto& a : sides) out.push_back(make_separation(g, std::move(a)));
  return out;
}

std::vector<Separation> enumerate_branching(const Multigraph& g, int max_order, int min_a,
                                            int min_b) {
  const int n = g.num_vertices();
  std::vector<std::vector<int>> sides;
  if (n < 2) return {};
  // Order: BFS from 0, restarting in unvisited components.
  std::vector<int> order;
  std::vector<char> seen(n, 0);
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    seen[s] = 1;
    std::size_t head = order.size();
    order.push_back(s);
    while (head < order.size()) {
      int u = order[head++];
      for (int v : g.neighbors(u))
        if (!seen[v]) {
          seen[v] = 1;
          order.push_back(v);
        }
    }
  }
  std::vector<int> side(n, -1);  // 0 = A, 1 = B
  int count_a = 0;
  std::function<void(int, int)> rec = [&](int idx, int cut) {
    if (idx == n) {
      if (count_a == n) return;
      std::vector<int> a, b;
      for (int v = 0; v < n; ++v) (side[v] == 0 ? a : b).push_back(v);
      if (orient(n, a, b, min_a, min_b)) sides.push_back(std::move(a));
      return;
    }
    const int v = order[idx];
    for (int s = 0; s < 2; ++s) {
      if (idx == 0 && s == 1) break;  // vertex order[0] == 0 stays in A
      int added = 0;
      for (int u = 0; u < n; ++u)
        if (side[u] >= 0 && side[u] != s) added += g.multiplicity(u, v);
      if (cut + added > max_order) continue;
      side[v] = s;
      count_a += s == 0;
      rec(idx + 1, cut + added);
      count_a -= s == 0;
      side[v] = -1;
    }
  };
  rec(0, 0);
  std::sort(sides.begin(), sides.end());
  std::vector<Separation> out;
  for (auto& a : sides) out.push_back(make_separation(g, std::move(a)));
  return out;
}

}  // namespace

std::vector<Separation> enumerate_separations(const Multigraph& g, int max_order, int min_a,
                                              int min_b, CutStrategy strategy) {
  if (strategy == CutStrategy::automatic)
    strategy = g.num_vertices() <= kScanLimit ? CutStrategy::scan : CutStrategy::branching;
  if (strategy == CutStrategy::scan) return enumerate_scan(g, max_order, min_a, min_b);
  return enumerate_branching(g, max_order, min_a, min_b);
}

TwoConnectivity two_vertex_connectivity(const Multigraph& g) {
  const int n = g.num_vertices();
  if (!is_connected(g)) return {false, std::nullopt};
  if (n < 3) return {true, std::nullopt};
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<char> is_cut(n, 0);
  int timer = 0;
  std::function<void(int, int)> dfs = [&](int u, int parent) {
    disc[u] = low[u] = timer++;
    int children = 0;
    for (int v : g.neighbors(u)) {
      if (v == parent) continue;
      if (disc[v] >= 0) {
        low[u] = std::min(low[u], disc[v]);
        continue;
      }
      ++children;
      dfs(v, u);
      low[u] = std::min(low[u], low[v]);
      if (parent >= 0 && low[v] >= disc[u]) is_cut[u] = 1;
    }
    if (parent < 0 && children > 1) is_cut[u] = 1;
  };
  dfs(0, -1);
  for (int v = 0; v < n; ++v)
    if (is_cut[v]) return {true, v};
  return {true, std::nullopt};
}

bool is_2_vertex_connected(const Multigraph& g) {
  auto r = two_vertex_connectivity(g);
  return r.connected && !r.cut_vertex;
}

ConnectivityReport classify(const Multigraph& g) {
  ConnectivityReport r;
  const int n = g.num_vertices();
  if (n < 2) return r;
  auto two = two_vertex_connectivity(g);
  r.is_2_vertex_connected = two.connected && !two.cut_vertex;
  r.cut_vertex = two.cut_vertex;
  if (!two.connected) {
    r.lambda = 0;
    r.is_3ec = r.is_internally_4ec = r.is_weakly_5ec = false;
    r.witness_3ec = make_separation(g, connected_components(g).front());
    r.witness_internally_4ec = r.witness_weakly_5ec = r.witness_3ec;
    return r;
  }
  r.lambda = edge_connectivity(g);
  for (auto& s : enumerate_separations(g, 4, 1, 1)) {
    const int k = s.order();
    const int small = static_cast<int>(std::min(s.side_a.size(), s.side_b.size()));
    if (k <= 2 && !r.witness_3ec) r.witness_3ec = s;
    if (k == 3 && small >= 2 && !r.witness_internally_4ec) r.witness_internally_4ec = s;
    if (k == 4 && small >= 3 && !r.witness_weakly_5ec) r.witness_weakly_5ec = s;
  }
  if (r.witness_3ec) {
    r.is_3ec = false;
    r.witness_internally_4ec = r.witness_3ec;
  }
  if (r.witness_internally_4ec) {
    r.is_internally_4ec = false;
    r.witness_weakly_5ec = r.witness_internally_4ec;
  }
  r.is_weakly_5ec = !r.witness_weakly_5ec;
  return r;
}

namespace {

// Every cut of order <= top_order must have a side of acceptable size
// (3 = internally 4ec, 4 = weakly 5ec).
bool all_cuts_acceptable(const Multigraph& g, int top_order) {
  const int n = g.num_vertices();
  if (n < 2) return true;
  if (n > kScanLimit) {
    for (const auto& s : enumerate_separations(g, top_order, 1, 1)) {
      const int small = static_cast<int>(std::min(s.side_a.size(), s.side_b.size()));
      if (!acceptable_side(s.order(), small)) return false;
    }
    return true;
  }
  bool ok = true;
  scan_bipartitions(g, [&](std::uint32_t mask, int cut) {
    if (!ok || cut > top_order) return;
    const int a = __builtin_popcount(mask);
    if (!acceptable_side(cut, std::min(a, n - a))) ok = false;
  });
  return ok;
}

}  // namespace

bool is_internally_4ec(const Multigraph& g) { return all_cuts_acceptable(g, 3); }
bool is_weakly_5ec(const Multigraph& g) { return all_cuts_acceptable(g, 4); }

namespace {

void put_flag(std::ostream& os, const char* name, bool value, const std::optional<Separation>& w) {
  os << name << '=' << (value ? "yes" : "no");
  if (!value && w) {
    os << " witness=";
    for (std::size_t i = 0; i < w->side_a.size(); ++i) os << (i ? "," : "") << w->side_a[i];
  }
  os << '\n';
}

}  // namespace

std::string format_report(const ConnectivityReport& r) {
  std::ostringstream os;
  os << "lambda=";
  if (r.lambda < 0) os << "none";
  else os << r.lambda;
  os << '\n';
  put_flag(os, "3ec", r.is_3ec, r.witness_3ec);
  put_flag(os, "internally4ec", r.is_internally_4ec, r.witness_internally_4ec);
  put_flag(os, "weakly5ec", r.is_weakly_5ec, r.witness_weakly_5ec);
  os << "2connected=" << (r.is_2_vertex_connected ? "yes" : "no");
  if (r.cut_vertex) os << " cutvertex=" << *r.cut_vertex;
  os << '\n';
  return os.str();
}

}  // namespace k33
