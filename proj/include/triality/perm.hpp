#ifndef TRIALITY_PERM_HPP
#define TRIALITY_PERM_HPP

#include <cstdint>
#include <vector>

#include "triality/bignat.hpp"
#include "triality/errors.hpp"

namespace triality {

// Permutation as an image array on 0..n-1.
using Perm = std::vector<uint16_t>;

Perm perm_identity(int n);
bool perm_is_identity(const Perm& p);
// apply b first, then a (matches composition of functions a o b)
Perm perm_compose(const Perm& a, const Perm& b);
Perm perm_inverse(const Perm& p);
int perm_order(const Perm& p);

// Permutation group with a deterministic Schreier-Sims stabilizer chain;
// exact order and membership.
class PermGroup {
public:
  PermGroup(int degree, std::vector<Perm> generators);

  int degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return gens_; }
  Bignat order_big() const;
  // convenience for groups known to fit; throws otherwise
  uint64_t order() const;
  bool contains(const Perm& p) const;

  // all group elements, BFS over generators from the identity; only for
  // small groups (throws above the cap)
  std::vector<Perm> elements(size_t cap = 2000000) const;

private:
  struct Level {
    int base;
    std::vector<int> pos;          // point -> orbit position or -1
    std::vector<int> orbit;        // BFS order, orbit[0] = base
    std::vector<Perm> transversal; // transversal[i] maps base to orbit[i]
    std::vector<Perm> gens;        // strong generators fixing all bases above
  };

  void build();
  bool sift(const Perm& g, size_t from, Perm* out) const;

  int degree_;
  std::vector<Perm> gens_;
  std::vector<Level> levels_;
};

// Orbit partition of 0..n-1 under a set of permutations.
std::vector<std::vector<int>> perm_orbits(int n, const std::vector<Perm>& gens);

}  // namespace triality

#endif
