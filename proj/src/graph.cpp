#include "triality/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "triality/perm.hpp"

namespace triality {

void SimpleGraph::add_edge(int a, int b) {
  if (a == b) fail(ErrorCode::InvalidArgument, "loops are not allowed");
  if (a < 0 || b < 0 || a >= n || b >= n)
    fail(ErrorCode::InvalidArgument, "edge endpoint out of range");
  if (has_edge(a, b)) fail(ErrorCode::InvalidArgument, "duplicate edge");
  adj[a].insert(std::lower_bound(adj[a].begin(), adj[a].end(), b), b);
  adj[b].insert(std::lower_bound(adj[b].begin(), adj[b].end(), a), a);
}

bool SimpleGraph::has_edge(int a, int b) const {
  return std::binary_search(adj[a].begin(), adj[a].end(), b);
}

int SimpleGraph::edge_count() const {
  int s = 0;
  for (const auto& l : adj) s += static_cast<int>(l.size());
  return s / 2;
}

std::vector<std::pair<int, int>> SimpleGraph::edges() const {
  std::vector<std::pair<int, int>> es;
  for (int v = 0; v < n; ++v)
    for (int w : adj[v])
      if (v < w) es.emplace_back(v, w);
  return es;
}

void SimpleGraph::finish() {
  for (auto& l : adj) std::sort(l.begin(), l.end());
}

std::vector<std::vector<int>> components(const SimpleGraph& g) {
  std::vector<int> owner(g.n, -1);
  std::vector<std::vector<int>> comps;
  for (int v = 0; v < g.n; ++v) {
    if (owner[v] != -1) continue;
    std::vector<int> comp{v};
    owner[v] = static_cast<int>(comps.size());
    std::deque<int> dq{v};
    while (!dq.empty()) {
      int u = dq.front();
      dq.pop_front();
      for (int w : g.adj[u])
        if (owner[w] == -1) {
          owner[w] = owner[v];
          comp.push_back(w);
          dq.push_back(w);
        }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

std::vector<int> degrees(const SimpleGraph& g) {
  std::vector<int> d(g.n);
  for (int v = 0; v < g.n; ++v) d[v] = static_cast<int>(g.adj[v].size());
  return d;
}

bool is_regular(const SimpleGraph& g, int k) {
  for (int v = 0; v < g.n; ++v)
    if (static_cast<int>(g.adj[v].size()) != k) return false;
  return true;
}

std::optional<int> girth(const SimpleGraph& g) {
  int best = -1;
  std::vector<int> dist(g.n), parent(g.n);
  for (int v = 0; v < g.n; ++v) {
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(parent.begin(), parent.end(), -1);
    dist[v] = 0;
    std::deque<int> dq{v};
    while (!dq.empty()) {
      int u = dq.front();
      dq.pop_front();
      if (best != -1 && 2 * dist[u] >= best) continue;
      for (int w : g.adj[u]) {
        if (dist[w] == -1) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          dq.push_back(w);
        } else if (w != parent[u]) {
          int c = dist[u] + dist[w] + 1;
          if (best == -1 || c < best) best = c;
        }
      }
    }
    if (best == 3) break;
  }
  if (best == -1) return std::nullopt;
  return best;
}

std::optional<int> diameter(const SimpleGraph& g) {
  if (g.n == 0) return std::nullopt;
  int best = 0;
  std::vector<int> dist(g.n);
  for (int v = 0; v < g.n; ++v) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[v] = 0;
    std::deque<int> dq{v};
    while (!dq.empty()) {
      int u = dq.front();
      dq.pop_front();
      for (int w : g.adj[u])
        if (dist[w] == -1) {
          dist[w] = dist[u] + 1;
          best = std::max(best, dist[w]);
          dq.push_back(w);
        }
    }
  }
  return best;
}

// ---------------------------------------------------------------------------
// automorphism group search: equitable refinement + orbit-stabilizer backtrack

namespace {

using Partition = std::vector<std::vector<int>>;

struct AutSearch {
  const SimpleGraph& g;
  int n;
  std::vector<std::vector<uint64_t>> adjbits;

  explicit AutSearch(const SimpleGraph& graph) : g(graph), n(graph.n) {
    int words = (n + 63) / 64;
    adjbits.assign(n, std::vector<uint64_t>(words, 0));
    for (int v = 0; v < n; ++v)
      for (int w : g.adj[v]) adjbits[v][w >> 6] |= 1ull << (w & 63);
  }

  bool adjacent(int a, int b) const {
    return (adjbits[a][b >> 6] >> (b & 63)) & 1;
  }

  // Equitable refinement; the trace records the evolving cell structure so
  // two refinements are comparable position by position.
  void refine(Partition& cells, std::vector<int>& trace) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (size_t s = 0; s < cells.size(); ++s) {
        // neighbor counts in splitter cell s
        std::vector<int> cnt(n, 0);
        for (int v : cells[s])
          for (int w : g.adj[v]) ++cnt[w];
        for (size_t c = 0; c < cells.size(); ++c) {
          if (cells[c].size() <= 1) continue;
          auto& cell = cells[c];
          bool uniform = true;
          for (size_t k = 1; k < cell.size(); ++k)
            if (cnt[cell[k]] != cnt[cell[0]]) {
              uniform = false;
              break;
            }
          if (uniform) continue;
          std::stable_sort(cell.begin(), cell.end(),
                           [&](int a, int b) { return cnt[a] < cnt[b]; });
          Partition pieces;
          size_t start = 0;
          for (size_t k = 1; k <= cell.size(); ++k) {
            if (k == cell.size() || cnt[cell[k]] != cnt[cell[start]]) {
              pieces.emplace_back(cell.begin() + start, cell.begin() + k);
              trace.push_back(static_cast<int>(c));
              trace.push_back(static_cast<int>(k - start));
              trace.push_back(cnt[cell[start]]);
              start = k;
            }
          }
          cells.erase(cells.begin() + c);
          cells.insert(cells.begin() + c, pieces.begin(), pieces.end());
          changed = true;
          // restart the splitter sweep with the new cell layout
          s = static_cast<size_t>(-1);
          break;
        }
        if (changed) break;
      }
    }
  }

  Partition individualized(const std::vector<int>& seq) const {
    Partition cells;
    std::vector<bool> used(n, false);
    for (int v : seq) {
      cells.push_back({v});
      used[v] = true;
    }
    std::vector<int> rest;
    for (int v = 0; v < n; ++v)
      if (!used[v]) rest.push_back(v);
    if (!rest.empty()) cells.push_back(std::move(rest));
    return cells;
  }

  static int target_cell(const Partition& cells) {
    int best = -1;
    for (size_t c = 0; c < cells.size(); ++c)
      if (cells[c].size() > 1 &&
          (best == -1 || cells[c].size() < cells[best].size()))
        best = static_cast<int>(c);
    return best;
  }

  bool verify(const std::vector<int>& map) const {
    for (int v = 0; v < n; ++v)
      for (int w : g.adj[v])
        if (!adjacent(map[v], map[w])) return false;
    return true;
  }

  // one automorphism mapping src sequence to tgt sequence, or empty
  bool find_mapping(std::vector<int> src, std::vector<int> tgt,
                    std::vector<int>& out) const {
    Partition cs = individualized(src), ct = individualized(tgt);
    std::vector<int> trs, trt;
    refine(cs, trs);
    refine(ct, trt);
    if (trs != trt) return false;
    // cell size sequences must match
    if (cs.size() != ct.size()) return false;
    for (size_t c = 0; c < cs.size(); ++c)
      if (cs[c].size() != ct[c].size()) return false;
    int tc = target_cell(cs);
    if (tc == -1) {
      std::vector<int> map(n);
      for (size_t c = 0; c < cs.size(); ++c) map[cs[c][0]] = ct[c][0];
      if (!verify(map)) return false;
      out = map;
      return true;
    }
    int a = cs[tc][0];
    for (int b : ct[tc]) {
      src.push_back(a);
      tgt.push_back(b);
      if (find_mapping(src, tgt, out)) return true;
      src.pop_back();
      tgt.pop_back();
    }
    return false;
  }

  // order and strong generators of the automorphisms fixing `fixed` pointwise
  void group_order(std::vector<int> fixed, Bignat& order,
                   std::vector<std::vector<int>>& gens) const {
    Partition cells = individualized(fixed);
    std::vector<int> tr;
    refine(cells, tr);
    int tc = target_cell(cells);
    if (tc == -1) {
      order = Bignat(1);
      return;
    }
    int v = cells[tc][0];
    std::vector<int> sub_fixed = fixed;
    sub_fixed.push_back(v);
    group_order(sub_fixed, order, gens);

    std::vector<bool> in_orbit(n, false);
    in_orbit[v] = true;
    std::deque<int> dq{v};
    auto grow = [&](void) {
      while (!dq.empty()) {
        int x = dq.front();
        dq.pop_front();
        for (const auto& p : gens) {
          if (!in_orbit[p[x]]) {
            in_orbit[p[x]] = true;
            dq.push_back(p[x]);
          }
        }
      }
    };
    grow();
    int orbit_size = 0;
    for (int u : cells[tc]) {
      if (in_orbit[u]) continue;
      std::vector<int> src = fixed, tgt = fixed, found;
      src.push_back(v);
      tgt.push_back(u);
      if (find_mapping(src, tgt, found)) {
        gens.push_back(found);
        // orbit closure restart from all current members
        for (int x = 0; x < n; ++x)
          if (in_orbit[x]) dq.push_back(x);
        grow();
      }
    }
    for (int u : cells[tc])
      if (in_orbit[u]) ++orbit_size;
    order.mul_u64(static_cast<uint64_t>(orbit_size));
  }
};

}  // namespace

AutReport aut_order(const SimpleGraph& g) {
  if (g.n > 400)
    fail(ErrorCode::Unsupported,
         "aut_order supports at most 400 vertices, got " + std::to_string(g.n));
  AutReport rep;
  if (g.n == 0) {
    rep.order = Bignat(1);
    return rep;
  }
  AutSearch s(g);
  Bignat order(1);
  std::vector<std::vector<int>> gens;
  s.group_order({}, order, gens);
  rep.order = order;
  rep.generators = gens;
  // every generator must preserve adjacency
  for (const auto& p : rep.generators)
    if (!s.verify(p)) fail(ErrorCode::Internal, "bad automorphism generator");
  // the generated group must have exactly the reported order
  std::vector<Perm> perms;
  for (const auto& p : rep.generators)
    perms.emplace_back(p.begin(), p.end());
  PermGroup pg(g.n, perms);
  if (pg.order_big() != rep.order)
    fail(ErrorCode::Internal, "automorphism order verification failed");
  return rep;
}

namespace {

std::vector<Perm> as_automorphisms(const SimpleGraph& g,
                                   const std::vector<std::vector<int>>& gens) {
  std::vector<Perm> perms;
  for (const auto& v : gens) {
    if (static_cast<int>(v.size()) != g.n)
      fail(ErrorCode::InvalidArgument, "permutation degree mismatch");
    Perm p(v.begin(), v.end());
    for (int a = 0; a < g.n; ++a)
      for (int b : g.adj[a])
        if (!g.has_edge(p[a], p[b]))
          fail(ErrorCode::InvalidArgument, "input permutation is not an automorphism");
    perms.push_back(std::move(p));
  }
  return perms;
}

}  // namespace

std::vector<std::vector<int>> vertex_orbits(
    const SimpleGraph& g, const std::vector<std::vector<int>>& gens) {
  return perm_orbits(g.n, as_automorphisms(g, gens));
}

int edge_orbit_count(const SimpleGraph& g,
                     const std::vector<std::vector<int>>& gens) {
  auto perms = as_automorphisms(g, gens);
  auto es = g.edges();
  auto edge_id = [&](int a, int b) {
    if (a > b) std::swap(a, b);
    auto it = std::lower_bound(es.begin(), es.end(), std::make_pair(a, b));
    return static_cast<int>(it - es.begin());
  };
  std::vector<Perm> eperms;
  for (const Perm& p : perms) {
    Perm ep(es.size());
    for (size_t i = 0; i < es.size(); ++i)
      ep[i] = static_cast<uint16_t>(edge_id(p[es[i].first], p[es[i].second]));
    eperms.push_back(std::move(ep));
  }
  return static_cast<int>(perm_orbits(static_cast<int>(es.size()), eperms).size());
}

int arc_orbit_count(const SimpleGraph& g,
                    const std::vector<std::vector<int>>& gens) {
  auto perms = as_automorphisms(g, gens);
  auto es = g.edges();
  // arcs listed as (a,b) then (b,a)
  std::vector<std::pair<int, int>> arcs;
  for (auto& e : es) {
    arcs.emplace_back(e.first, e.second);
    arcs.emplace_back(e.second, e.first);
  }
  std::sort(arcs.begin(), arcs.end());
  auto arc_id = [&](int a, int b) {
    auto it = std::lower_bound(arcs.begin(), arcs.end(), std::make_pair(a, b));
    return static_cast<int>(it - arcs.begin());
  };
  std::vector<Perm> aperms;
  for (const Perm& p : perms) {
    Perm ap(arcs.size());
    for (size_t i = 0; i < arcs.size(); ++i)
      ap[i] = static_cast<uint16_t>(arc_id(p[arcs[i].first], p[arcs[i].second]));
    aperms.push_back(std::move(ap));
  }
  return static_cast<int>(perm_orbits(static_cast<int>(arcs.size()), aperms).size());
}

// ---------------------------------------------------------------------------
// maximum matching (blossom shrinking), used for perfect-matching queries

namespace {

struct Blossom {
  int n;
  const std::vector<std::vector<int>>& adj;
  std::vector<int> match, parent, base;
  std::vector<bool> used, blossom;

  explicit Blossom(const SimpleGraph& g)
      : n(g.n), adj(g.adj), match(n, -1), parent(n), base(n), used(n), blossom(n) {}

  int lca(int a, int b) {
    std::vector<bool> mark(n, false);
    for (;;) {
      a = base[a];
      mark[a] = true;
      if (match[a] == -1) break;
      a = parent[match[a]];
    }
    for (;;) {
      b = base[b];
      if (mark[b]) return b;
      b = parent[match[b]];
    }
  }

  void mark_path(int v, int b, int child) {
    while (base[v] != b) {
      blossom[base[v]] = true;
      blossom[base[match[v]]] = true;
      parent[v] = child;
      child = match[v];
      v = parent[match[v]];
    }
  }

  int find_path(int root) {
    std::fill(used.begin(), used.end(), false);
    std::fill(parent.begin(), parent.end(), -1);
    std::iota(base.begin(), base.end(), 0);
    used[root] = true;
    std::deque<int> dq{root};
    while (!dq.empty()) {
      int v = dq.front();
      dq.pop_front();
      for (int to : adj[v]) {
        if (base[v] == base[to] || match[v] == to) continue;
        if (to == root || (match[to] != -1 && parent[match[to]] != -1)) {
          int curbase = lca(v, to);
          std::fill(blossom.begin(), blossom.end(), false);
          mark_path(v, curbase, to);
          mark_path(to, curbase, v);
          for (int i = 0; i < n; ++i)
            if (blossom[base[i]]) {
              base[i] = curbase;
              if (!used[i]) {
                used[i] = true;
                dq.push_back(i);
              }
            }
        } else if (parent[to] == -1) {
          parent[to] = v;
          if (match[to] == -1) return to;
          used[match[to]] = true;
          dq.push_back(match[to]);
        }
      }
    }
    return -1;
  }

  int solve() {
    int res = 0;
    for (int v = 0; v < n; ++v) {
      if (match[v] != -1) continue;
      int u = find_path(v);
      if (u == -1) continue;
      ++res;
      while (u != -1) {
        int pv = parent[u], ppv = match[pv];
        match[u] = pv;
        match[pv] = u;
        u = ppv;
      }
    }
    return res;
  }
};

}  // namespace

bool has_perfect_matching(const SimpleGraph& g) {
  if (g.n % 2 != 0) return false;
  Blossom b(g);
  return b.solve() * 2 == g.n;
}

}  // namespace triality
