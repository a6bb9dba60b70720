#include "k33/canonical.hpp"

#include <algorithm>
#include <numeric>

namespace k33 {
namespace {

using Coloring = std::vector<int>;

int num_cells(const Coloring& c) {
  return c.empty() ? 0 : *std::max_element(c.begin(), c.end()) + 1;
}

// Renumbers colours 0..k-1 by ascending signature.
template <typename Sig>
Coloring rank_by(const std::vector<Sig>& sig) {
  std::vector<int> order(sig.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return sig[a] < sig[b]; });
  Coloring out(sig.size());
  int rank = -1;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (i == 0 || sig[order[i]] != sig[order[i - 1]]) ++rank;
    out[order[i]] = rank;
  }
  return out;
}

// Refines to the coarsest equitable partition below `c`. Cell order is a
// function of the old order and the multiplicity pattern only, so it commutes
// with relabelling.
Coloring refine(const Multigraph& g, Coloring c) {
  const int n = g.num_vertices();
  int cells = num_cells(c);
  while (true) {
    std::vector<std::vector<int>> sig(n);
    for (int v = 0; v < n; ++v) {
      std::vector<std::pair<int, int>> nb;
      for (int w = 0; w < n; ++w)
        if (int k = g.multiplicity(v, w)) nb.emplace_back(c[w], k);
      std::sort(nb.begin(), nb.end());
      auto& s = sig[v];
      s.push_back(c[v]);
      for (auto [col, k] : nb) {
        s.push_back(col);
        s.push_back(k);
      }
    }
    Coloring next = rank_by(sig);
    const int next_cells = num_cells(next);
    c = std::move(next);
    if (next_cells == cells) return c;
    cells = next_cells;
  }
}

Coloring individualize(const Coloring& c, int v) {
  std::vector<int> sig(c.size());
  for (std::size_t u = 0; u < c.size(); ++u)
    sig[u] = 2 * c[u] + ((c[u] == c[v] && static_cast<int>(u) != v) ? 1 : 0);
  return rank_by(sig);
}

std::string encode(const Multigraph& g, const Coloring& position) {
  const int n = g.num_vertices();
  std::vector<int> at(n);
  for (int v = 0; v < n; ++v) at[position[v]] = v;
  std::string out;
  out.reserve(2 + static_cast<std::size_t>(n) * (n - 1) / 2);
  out.push_back(static_cast<char>((n >> 8) & 0xff));
  out.push_back(static_cast<char>(n & 0xff));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      out.push_back(static_cast<char>(std::min(g.multiplicity(at[i], at[j]), 255)));
  return out;
}

class Search {
 public:
  explicit Search(const Multigraph& g) : g_(g) {}

  void run() {
    Coloring root(g_.num_vertices(), 0);
    std::vector<int> prefix;
    descend(refine(g_, root), prefix);
  }

  std::string best_code;
  Coloring best_leaf;

 private:
  void descend(const Coloring& c, std::vector<int>& prefix) {
    const int n = g_.num_vertices();
    if (num_cells(c) == n) {
      leaf(c);
      return;
    }
    // First non-singleton cell.
    std::vector<int> size(num_cells(c), 0);
    for (int v = 0; v < n; ++v) ++size[c[v]];
    int target = 0;
    while (size[target] == 1) ++target;
    std::vector<int> cell;
    for (int v = 0; v < n; ++v)
      if (c[v] == target) cell.push_back(v);

    std::vector<int> explored;
    for (int v : cell) {
      if (equivalent_to_explored(v, explored, prefix)) continue;
      explored.push_back(v);
      prefix.push_back(v);
      descend(refine(g_, individualize(c, v)), prefix);
      prefix.pop_back();
    }
  }

  // True if some stored automorphism fixing `prefix` pointwise links `v` to
  // an already explored sibling (orbits of the generated subgroup).
  bool equivalent_to_explored(int v, const std::vector<int>& explored,
                              const std::vector<int>& prefix) const {
    if (explored.empty() || automorphisms_.empty()) return false;
    const int n = g_.num_vertices();
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& a : automorphisms_) {
      bool fixes = std::all_of(prefix.begin(), prefix.end(), [&](int p) { return a[p] == p; });
      if (!fixes) continue;
      for (int x = 0; x < n; ++x) parent[find(x)] = find(a[x]);
    }
    const int root = find(v);
    return std::any_of(explored.begin(), explored.end(), [&](int u) { return find(u) == root; });
  }

  void leaf(const Coloring& position) {
    std::string code = encode(g_, position);
    if (best_leaf.empty() || code < best_code) {
      best_code = std::move(code);
      best_leaf = position;
      return;
    }
    if (code == best_code && automorphisms_.size() < kMaxAutomorphisms) {
      // position^-1 composed with best_leaf maps v to the vertex sharing its slot.
      const int n = g_.num_vertices();
      std::vector<int> at(n);
      for (int v = 0; v < n; ++v) at[best_leaf[v]] = v;
      std::vector<int> aut(n);
      for (int v = 0; v < n; ++v) aut[v] = at[position[v]];
      automorphisms_.push_back(std::move(aut));
    }
  }

  static constexpr std::size_t kMaxAutomorphisms = 256;
  const Multigraph& g_;
  std::vector<std::vector<int>> automorphisms_;
};

}  // namespace

std::string CanonicalKey::hex() const {
  static constexpr char digits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (unsigned char b : bytes) {
    out.push_back(digits[b >> 4]);
    out.push_back(digits[b & 15]);
  }
  return out;
}

CanonicalForm canonical_form(const Multigraph& g) {
  CanonicalForm form;
  if (g.num_vertices() == 0) {
    form.key.bytes = std::string(2, '\0');
    return form;
  }
  Search search(g);
  search.run();
  form.key.bytes = std::move(search.best_code);
  form.labeling = std::move(search.best_leaf);
  form.graph = g.permuted(form.labeling);
  return form;
}

CanonicalKey canonical_key(const Multigraph& g) { return canonical_form(g).key; }

bool is_isomorphic(const Multigraph& a, const Multigraph& b) {
  if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges()) return false;
  return canonical_key(a) == canonical_key(b);
}

std::optional<std::vector<int>> find_isomorphism(const Multigraph& a, const Multigraph& b) {
  if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges()) return std::nullopt;
  auto fa = canonical_form(a);
  auto fb = canonical_form(b);
  if (fa.key != fb.key) return std::nullopt;
  const int n = a.num_vertices();
  std::vector<int> at_b(n);
  for (int v = 0; v < n; ++v) at_b[fb.labeling[v]] = v;
  std::vector<int> map(n);
  for (int v = 0; v < n; ++v) map[v] = at_b[fa.labeling[v]];
  return map;
}

}  // namespace k33
