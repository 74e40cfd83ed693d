#include "triality/perm.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace triality {

Perm perm_identity(int n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

bool perm_is_identity(const Perm& p) {
  for (size_t i = 0; i < p.size(); ++i)
    if (p[i] != i) return false;
  return true;
}

Perm perm_compose(const Perm& a, const Perm& b) {
  Perm r(b.size());
  for (size_t i = 0; i < b.size(); ++i) r[i] = a[b[i]];
  return r;
}

Perm perm_inverse(const Perm& p) {
  Perm r(p.size());
  for (size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<uint16_t>(i);
  return r;
}

int perm_order(const Perm& p) {
  int n = static_cast<int>(p.size());
  std::vector<bool> seen(n, false);
  long long ord = 1;
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    int len = 0, x = i;
    while (!seen[x]) {
      seen[x] = true;
      x = p[x];
      ++len;
    }
    ord = std::lcm(ord, static_cast<long long>(len));
  }
  return static_cast<int>(ord);
}

PermGroup::PermGroup(int degree, std::vector<Perm> generators)
    : degree_(degree), gens_(std::move(generators)) {
  for (const Perm& g : gens_) {
    if (static_cast<int>(g.size()) != degree_)
      fail(ErrorCode::InvalidArgument, "generator degree mismatch");
    std::vector<bool> seen(degree_, false);
    for (uint16_t img : g) {
      if (img >= degree_ || seen[img])
        fail(ErrorCode::InvalidArgument, "generator is not a permutation");
      seen[img] = true;
    }
  }
  build();
}

// Strong generators of level i are all chain generators fixing bases 0..i-1.
// The chain is rebuilt to a fixpoint: done when every Schreier generator of
// every level sifts to the identity through the levels below it.
void PermGroup::build() {
  std::vector<Perm> strong;
  for (const Perm& g : gens_)
    if (!perm_is_identity(g)) strong.push_back(g);

  std::vector<int> bases;
  auto fixes_bases = [&](const Perm& g, size_t upto) {
    for (size_t i = 0; i < upto; ++i)
      if (g[bases[i]] != bases[i]) return false;
    return true;
  };

  for (int guard = 0;; ++guard) {
    if (guard > 100000) fail(ErrorCode::Internal, "schreier-sims did not converge");
    // every strong generator must move some base point
    for (const Perm& g : strong) {
      if (!fixes_bases(g, bases.size())) continue;
      int b = 0;
      while (g[b] == b) ++b;
      bases.push_back(b);
    }
    // rebuild all levels
    levels_.clear();
    for (size_t i = 0; i < bases.size(); ++i) {
      Level L;
      L.base = bases[i];
      for (const Perm& g : strong)
        if (fixes_bases(g, i)) L.gens.push_back(g);
      L.pos.assign(degree_, -1);
      L.pos[L.base] = 0;
      L.orbit = {L.base};
      L.transversal = {perm_identity(degree_)};
      for (size_t oi = 0; oi < L.orbit.size(); ++oi)
        for (const Perm& s : L.gens) {
          int img = s[L.orbit[oi]];
          if (L.pos[img] == -1) {
            L.pos[img] = static_cast<int>(L.orbit.size());
            L.orbit.push_back(img);
            L.transversal.push_back(perm_compose(s, L.transversal[oi]));
          }
        }
      levels_.push_back(std::move(L));
    }
    // look for a Schreier generator that does not sift away
    bool added = false;
    for (size_t i = 0; i < levels_.size() && !added; ++i) {
      const Level& L = levels_[i];
      for (size_t oi = 0; oi < L.orbit.size() && !added; ++oi)
        for (const Perm& s : L.gens) {
          int img = s[L.orbit[oi]];
          Perm schreier =
              perm_compose(perm_inverse(L.transversal[L.pos[img]]),
                           perm_compose(s, L.transversal[oi]));
          Perm residue;
          if (!sift(schreier, i + 1, &residue)) {
            if (std::find(strong.begin(), strong.end(), residue) ==
                strong.end()) {
              strong.push_back(residue);
              added = true;
              break;
            }
            fail(ErrorCode::Internal, "duplicate non-sifting residue");
          }
        }
    }
    if (!added) break;
  }
}

bool PermGroup::sift(const Perm& g, size_t from, Perm* out) const {
  Perm h = g;
  for (size_t i = from; i < levels_.size(); ++i) {
    const Level& L = levels_[i];
    int img = h[L.base];
    if (img == L.base) continue;
    if (L.pos[img] == -1) {
      if (out) *out = h;
      return false;
    }
    h = perm_compose(perm_inverse(L.transversal[L.pos[img]]), h);
  }
  if (out) *out = h;
  return perm_is_identity(h);
}

bool PermGroup::contains(const Perm& p) const {
  if (static_cast<int>(p.size()) != degree_)
    fail(ErrorCode::InvalidArgument, "degree mismatch in membership test");
  return sift(p, 0, nullptr);
}

Bignat PermGroup::order_big() const {
  Bignat o(1);
  for (const Level& L : levels_) o.mul_u64(L.orbit.size());
  return o;
}

uint64_t PermGroup::order() const {
  Bignat o = order_big();
  if (!o.fits_u64())
    fail(ErrorCode::Unsupported, "group order exceeds 64 bits");
  return o.as_u64();
}

std::vector<Perm> PermGroup::elements(size_t cap) const {
  Bignat o = order_big();
  if (!o.fits_u64() || o.as_u64() > cap)
    fail(ErrorCode::Unsupported, "group too large to enumerate");
  std::vector<Perm> out{perm_identity(degree_)};
  std::vector<Perm> frontier = out;
  std::vector<Perm> seen = out;
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const Perm& x : frontier)
      for (const Perm& s : gens_) {
        Perm y = perm_compose(s, x);
        auto it = std::lower_bound(seen.begin(), seen.end(), y);
        if (it == seen.end() || *it != y) {
          seen.insert(it, y);
          out.push_back(y);
          next.push_back(std::move(y));
        }
      }
    frontier = std::move(next);
  }
  return out;
}

std::vector<std::vector<int>> perm_orbits(int n, const std::vector<Perm>& gens) {
  std::vector<int> owner(n, -1);
  std::vector<std::vector<int>> orbits;
  for (int v = 0; v < n; ++v) {
    if (owner[v] != -1) continue;
    std::vector<int> orb{v};
    owner[v] = static_cast<int>(orbits.size());
    std::deque<int> dq{v};
    while (!dq.empty()) {
      int u = dq.front();
      dq.pop_front();
      for (const Perm& g : gens) {
        int w = g[u];
        if (owner[w] == -1) {
          owner[w] = owner[v];
          orb.push_back(w);
          dq.push_back(w);
        }
      }
    }
    std::sort(orb.begin(), orb.end());
    orbits.push_back(std::move(orb));
  }
  return orbits;
}

}  // namespace triality
