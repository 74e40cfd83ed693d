#ifndef TRIALITY_INCIDENCE_HPP
#define TRIALITY_INCIDENCE_HPP

#include <optional>
#include <string>
#include <vector>

#include "triality/errors.hpp"

namespace triality {

// Typed incidence system: elements carry a type index into `type_names`,
// incidence is symmetric and only relates elements of distinct types.
struct IncidenceSystem {
  std::vector<std::string> type_names;
  std::vector<int> elem_type;
  std::vector<std::string> elem_label;
  std::vector<std::vector<int>> adj;  // sorted neighbor lists

  int rank() const { return static_cast<int>(type_names.size()); }
  int size() const { return static_cast<int>(elem_type.size()); }

  void add_element(int type, std::string label);
  void add_incidence(int a, int b);
  bool incident(int a, int b) const;
  void validate() const;
};

using Flag = std::vector<int>;  // sorted element indices, pairwise incident

bool is_flag(const IncidenceSystem& s, const Flag& f);

// Incidence-preserving element bijection together with the type permutation
// it induces.
struct Correlation {
  std::vector<int> elem_image;
  std::vector<int> type_image;

  // checks bijectivity, incidence preservation both ways, type compatibility
  void validate(const IncidenceSystem& s) const;
};

Correlation identity_correlation(const IncidenceSystem& s);
Correlation compose(const Correlation& f, const Correlation& g);  // f after g

// Point-diameter, gonality, line-diameter of a rank-2 system. Infinite
// values are explicit (empty optional), never sentinels.
struct Rank2Params {
  std::optional<int> d_p;
  std::optional<int> g;
  std::optional<int> d_l;
  bool connected = true;

  bool operator==(const Rank2Params& o) const {
    return d_p == o.d_p && g == o.g && d_l == o.d_l;
  }
};

std::string to_string(const Rank2Params& p);

// True iff every maximal flag is a chamber (greedy extension check over the
// full flag poset; intended for systems of bounded size/degree).
bool is_geometry(const IncidenceSystem& s);

// Elements incident to every element of F, minus F; types are re-indexed to
// the surviving ones.
IncidenceSystem residue(const IncidenceSystem& s, const Flag& f);

// BFS-exact (d_P, g, d_L) of a rank-2 system. On disconnected input the
// diameters are maxima over components and `connected` is false.
Rank2Params rank2_params(const IncidenceSystem& s);

// Absolute geometry of a correlation: elements are the minimal nonempty
// phi-invariant flags (the orbit-flags), the type of such a flag is the
// phi-orbit of types it covers, and two of them are incident when their
// union is a flag of the original system.
IncidenceSystem absolute_geometry(const IncidenceSystem& s,
                                  const Correlation& phi);

struct SimpleGraph;  // graph.hpp
IncidenceSystem graph_to_rank2(const SimpleGraph& g);

}  // namespace triality

#endif
