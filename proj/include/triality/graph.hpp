#ifndef TRIALITY_GRAPH_HPP
#define TRIALITY_GRAPH_HPP

#include <optional>
#include <string>
#include <vector>

#include "triality/bignat.hpp"
#include "triality/errors.hpp"

namespace triality {

struct SimpleGraph {
  int n = 0;
  std::vector<std::vector<int>> adj;  // sorted, symmetric, loop-free

  explicit SimpleGraph(int vertices = 0) : n(vertices), adj(vertices) {}
  void add_edge(int a, int b);
  bool has_edge(int a, int b) const;
  int edge_count() const;
  std::vector<std::pair<int, int>> edges() const;  // sorted pairs a < b
  void finish();                                   // sort adjacency lists
};

std::vector<std::vector<int>> components(const SimpleGraph& g);
std::vector<int> degrees(const SimpleGraph& g);
// empty optional = infinite (forest)
std::optional<int> girth(const SimpleGraph& g);
// max eccentricity; on disconnected graphs the max over components
std::optional<int> diameter(const SimpleGraph& g);
bool is_regular(const SimpleGraph& g, int k);

// Exact automorphism group via equitable partition refinement plus
// orbit-stabilizer backtracking. Orders can be astronomically large for
// graphs with many interchangeable components, hence the big natural.
struct AutReport {
  Bignat order;
  std::vector<std::vector<int>> generators;
};

AutReport aut_order(const SimpleGraph& g);  // refuses n > 400

// Orbit partition of the vertices under the group generated by the given
// vertex permutations; every permutation must be an automorphism of g.
std::vector<std::vector<int>> vertex_orbits(const SimpleGraph& g,
                                            const std::vector<std::vector<int>>& gens);
// Orbits on unordered edges / ordered arcs under the generated group.
int edge_orbit_count(const SimpleGraph& g,
                     const std::vector<std::vector<int>>& gens);
int arc_orbit_count(const SimpleGraph& g,
                    const std::vector<std::vector<int>>& gens);

// True iff the graph has a perfect matching (blossom algorithm).
bool has_perfect_matching(const SimpleGraph& g);

}  // namespace triality

#endif
