#include "triality/incidence.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "triality/graph.hpp"

namespace triality {

void IncidenceSystem::add_element(int type, std::string label) {
  if (type < 0 || type >= rank())
    fail(ErrorCode::InvalidArgument, "element type out of range");
  elem_type.push_back(type);
  elem_label.push_back(std::move(label));
  adj.emplace_back();
}

void IncidenceSystem::add_incidence(int a, int b) {
  if (a == b || elem_type[a] == elem_type[b])
    fail(ErrorCode::InvalidArgument,
         "incident elements must be distinct and of distinct types");
  adj[a].insert(std::lower_bound(adj[a].begin(), adj[a].end(), b), b);
  adj[b].insert(std::lower_bound(adj[b].begin(), adj[b].end(), a), a);
}

bool IncidenceSystem::incident(int a, int b) const {
  return std::binary_search(adj[a].begin(), adj[a].end(), b);
}

void IncidenceSystem::validate() const {
  for (int a = 0; a < size(); ++a)
    for (int b : adj[a]) {
      if (elem_type[a] == elem_type[b])
        fail(ErrorCode::CheckFailed, "incidence within a type");
      if (!incident(b, a)) fail(ErrorCode::CheckFailed, "asymmetric adjacency");
    }
}

bool is_flag(const IncidenceSystem& s, const Flag& f) {
  for (size_t i = 0; i < f.size(); ++i)
    for (size_t j = i + 1; j < f.size(); ++j)
      if (!s.incident(f[i], f[j])) return false;
  std::set<int> types;
  for (int e : f) types.insert(s.elem_type[e]);
  return types.size() == f.size();
}

void Correlation::validate(const IncidenceSystem& s) const {
  if (static_cast<int>(elem_image.size()) != s.size() ||
      static_cast<int>(type_image.size()) != s.rank())
    fail(ErrorCode::InvalidArgument, "correlation size mismatch");
  std::vector<bool> seen(s.size(), false);
  for (int img : elem_image) {
    if (img < 0 || img >= s.size() || seen[img])
      fail(ErrorCode::InvalidArgument, "correlation is not a bijection");
    seen[img] = true;
  }
  std::vector<bool> tseen(s.rank(), false);
  for (int t : type_image) {
    if (t < 0 || t >= s.rank() || tseen[t])
      fail(ErrorCode::InvalidArgument, "type image is not a bijection");
    tseen[t] = true;
  }
  for (int e = 0; e < s.size(); ++e) {
    if (type_image[s.elem_type[e]] != s.elem_type[elem_image[e]])
      fail(ErrorCode::InvalidArgument,
           "correlation does not respect the induced type permutation");
    for (int b : s.adj[e])
      if (!s.incident(elem_image[e], elem_image[b]))
        fail(ErrorCode::InvalidArgument, "correlation breaks incidence");
  }
}

Correlation identity_correlation(const IncidenceSystem& s) {
  Correlation c;
  c.elem_image.resize(s.size());
  for (int i = 0; i < s.size(); ++i) c.elem_image[i] = i;
  c.type_image.resize(s.rank());
  for (int i = 0; i < s.rank(); ++i) c.type_image[i] = i;
  return c;
}

Correlation compose(const Correlation& f, const Correlation& g) {
  Correlation c;
  c.elem_image.resize(g.elem_image.size());
  for (size_t i = 0; i < g.elem_image.size(); ++i)
    c.elem_image[i] = f.elem_image[g.elem_image[i]];
  c.type_image.resize(g.type_image.size());
  for (size_t i = 0; i < g.type_image.size(); ++i)
    c.type_image[i] = f.type_image[g.type_image[i]];
  return c;
}

std::string to_string(const Rank2Params& p) {
  auto one = [](const std::optional<int>& v) {
    return v ? std::to_string(*v) : std::string("inf");
  };
  std::string s = "(" + one(p.d_p) + "," + one(p.g) + "," + one(p.d_l) + ")";
  if (!p.connected) s += " disconnected";
  return s;
}

namespace {

bool flag_extends(const IncidenceSystem& s, const Flag& f) {
  std::set<int> types;
  for (int e : f) types.insert(s.elem_type[e]);
  for (int x = 0; x < s.size(); ++x) {
    if (types.count(s.elem_type[x])) continue;
    bool ok = true;
    for (int e : f)
      if (!s.incident(x, e)) {
        ok = false;
        break;
      }
    if (ok) return true;
  }
  return false;
}

bool all_flags_extend(const IncidenceSystem& s, Flag& f, int start) {
  if (static_cast<int>(f.size()) < s.rank() && !flag_extends(s, f))
    return false;
  for (int x = start; x < s.size(); ++x) {
    bool ok = true;
    for (int e : f)
      if (!s.incident(x, e)) {
        ok = false;
        break;
      }
    if (!ok) continue;
    f.push_back(x);
    bool sub = all_flags_extend(s, f, x + 1);
    f.pop_back();
    if (!sub) return false;
  }
  return true;
}

}  // namespace

bool is_geometry(const IncidenceSystem& s) {
  if (s.size() == 0) return s.rank() == 0;
  Flag f;
  return all_flags_extend(s, f, 0);
}

IncidenceSystem residue(const IncidenceSystem& s, const Flag& f) {
  if (!is_flag(s, f)) fail(ErrorCode::InvalidArgument, "residue of a non-flag");
  std::set<int> ftypes;
  for (int e : f) ftypes.insert(s.elem_type[e]);
  std::vector<int> keep_types;
  for (int t = 0; t < s.rank(); ++t)
    if (!ftypes.count(t)) keep_types.push_back(t);
  std::vector<int> type_map(s.rank(), -1);
  IncidenceSystem r;
  for (int t : keep_types) {
    type_map[t] = static_cast<int>(r.type_names.size());
    r.type_names.push_back(s.type_names[t]);
  }
  std::vector<int> elem_map(s.size(), -1);
  for (int x = 0; x < s.size(); ++x) {
    if (ftypes.count(s.elem_type[x])) continue;
    bool inc_all = true;
    for (int e : f)
      if (!s.incident(x, e)) {
        inc_all = false;
        break;
      }
    if (!inc_all) continue;
    elem_map[x] = r.size();
    r.add_element(type_map[s.elem_type[x]], s.elem_label[x]);
  }
  for (int x = 0; x < s.size(); ++x) {
    if (elem_map[x] < 0) continue;
    for (int b : s.adj[x])
      if (elem_map[b] >= 0 && x < b) r.add_incidence(elem_map[x], elem_map[b]);
  }
  return r;
}

Rank2Params rank2_params(const IncidenceSystem& s) {
  if (s.rank() != 2) fail(ErrorCode::InvalidArgument, "rank2_params: rank != 2");
  const int n = s.size();
  Rank2Params out;
  if (n == 0) return out;

  // eccentricities within components via BFS from every element
  std::vector<int> comp(n, -1);
  int ncomp = 0;
  for (int v = 0; v < n; ++v) {
    if (comp[v] != -1) continue;
    std::deque<int> dq{v};
    comp[v] = ncomp;
    while (!dq.empty()) {
      int u = dq.front();
      dq.pop_front();
      for (int w : s.adj[u])
        if (comp[w] == -1) {
          comp[w] = ncomp;
          dq.push_back(w);
        }
    }
    ++ncomp;
  }
  out.connected = ncomp == 1;

  int best_p = 0, best_l = 0;
  std::vector<int> dist(n);
  int girth = -1;
  for (int v = 0; v < n; ++v) {
    std::fill(dist.begin(), dist.end(), -1);
    std::vector<int> parent(n, -1);
    dist[v] = 0;
    std::deque<int> dq{v};
    int ecc = 0;
    while (!dq.empty()) {
      int u = dq.front();
      dq.pop_front();
      for (int w : s.adj[u]) {
        if (dist[w] == -1) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          ecc = std::max(ecc, dist[w]);
          dq.push_back(w);
        } else if (w != parent[u]) {
          int cyc = dist[u] + dist[w] + 1;
          if (girth == -1 || cyc < girth) girth = cyc;
        }
      }
    }
    if (s.elem_type[v] == 0)
      best_p = std::max(best_p, ecc);
    else
      best_l = std::max(best_l, ecc);
  }
  out.d_p = best_p;
  out.d_l = best_l;
  if (girth != -1) out.g = girth / 2;
  return out;
}

IncidenceSystem absolute_geometry(const IncidenceSystem& s,
                                  const Correlation& phi) {
  phi.validate(s);
  // element orbits under phi
  std::vector<int> orbit_of(s.size(), -1);
  std::vector<std::vector<int>> orbits;
  for (int e = 0; e < s.size(); ++e) {
    if (orbit_of[e] != -1) continue;
    std::vector<int> orb;
    int x = e;
    do {
      orbit_of[x] = static_cast<int>(orbits.size());
      orb.push_back(x);
      x = phi.elem_image[x];
    } while (x != e);
    std::sort(orb.begin(), orb.end());
    orbits.push_back(std::move(orb));
  }
  // keep the orbits that are flags; they are the minimal invariant flags
  std::vector<int> kept;
  for (size_t i = 0; i < orbits.size(); ++i)
    if (is_flag(s, orbits[i])) kept.push_back(static_cast<int>(i));

  // type of an orbit-flag: the set of original types it covers
  auto orbit_type_label = [&](const std::vector<int>& orb) {
    std::set<int> ts;
    for (int e : orb) ts.insert(s.elem_type[e]);
    std::string label;
    for (int t : ts) {
      if (!label.empty()) label += "+";
      label += s.type_names[t];
    }
    return label;
  };

  IncidenceSystem out;
  std::map<std::string, int> type_index;
  std::vector<int> elem_of_orbit;
  for (int oi : kept) {
    std::string tl = orbit_type_label(orbits[oi]);
    auto it = type_index.find(tl);
    if (it == type_index.end()) {
      it = type_index.emplace(tl, static_cast<int>(out.type_names.size())).first;
      out.type_names.push_back(tl);
    }
  }
  for (int oi : kept) {
    std::string tl = orbit_type_label(orbits[oi]);
    std::string label = "{";
    for (size_t k = 0; k < orbits[oi].size(); ++k) {
      if (k) label += ",";
      label += s.elem_label[orbits[oi][k]];
    }
    label += "}";
    elem_of_orbit.push_back(oi);
    out.add_element(type_index[tl], label);
  }
  for (size_t a = 0; a < elem_of_orbit.size(); ++a)
    for (size_t b = a + 1; b < elem_of_orbit.size(); ++b) {
      if (out.elem_type[a] == out.elem_type[b]) continue;
      Flag u = orbits[elem_of_orbit[a]];
      const auto& ob = orbits[elem_of_orbit[b]];
      u.insert(u.end(), ob.begin(), ob.end());
      std::sort(u.begin(), u.end());
      if (is_flag(s, u))
        out.add_incidence(static_cast<int>(a), static_cast<int>(b));
    }
  return out;
}

IncidenceSystem graph_to_rank2(const SimpleGraph& g) {
  IncidenceSystem s;
  s.type_names = {"P", "L"};
  for (int v = 0; v < g.n; ++v) s.add_element(0, "v" + std::to_string(v));
  auto es = g.edges();
  for (size_t i = 0; i < es.size(); ++i) {
    int id = s.size();
    s.add_element(1, "e" + std::to_string(i));
    s.add_incidence(id, es[i].first);
    s.add_incidence(id, es[i].second);
  }
  return s;
}

}  // namespace triality
