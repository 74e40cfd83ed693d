#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "triality/graph.hpp"
#include "triality/incidence.hpp"

using namespace triality;

namespace {

// complete bipartite point-line system K_{m,n}
IncidenceSystem k_mn(int m, int n) {
  IncidenceSystem s;
  s.type_names = {"P", "L"};
  for (int i = 0; i < m; ++i) s.add_element(0, "p" + std::to_string(i));
  for (int j = 0; j < n; ++j) s.add_element(1, "l" + std::to_string(j));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) s.add_incidence(i, m + j);
  return s;
}

IncidenceSystem triangle_geometry() {
  IncidenceSystem s;
  s.type_names = {"P", "L"};
  for (int i = 0; i < 3; ++i) s.add_element(0, "p" + std::to_string(i));
  for (int i = 0; i < 3; ++i) s.add_element(1, "l" + std::to_string(i));
  // line i joins points i and i+1
  for (int i = 0; i < 3; ++i) {
    s.add_incidence(3 + i, i);
    s.add_incidence(3 + i, (i + 1) % 3);
  }
  return s;
}

}  // namespace

TEST_CASE("incidence construction rejects same-type incidence") {
  IncidenceSystem s;
  s.type_names = {"P", "L"};
  s.add_element(0, "p0");
  s.add_element(0, "p1");
  CHECK_THROWS_AS(s.add_incidence(0, 1), Error);
}

TEST_CASE("is_geometry on small fixtures") {
  CHECK(is_geometry(k_mn(2, 3)));
  IncidenceSystem iso = k_mn(2, 3);
  iso.add_element(0, "lonely");
  CHECK_FALSE(is_geometry(iso));
  CHECK(is_geometry(triangle_geometry()));
}

TEST_CASE("residue basics") {
  IncidenceSystem s = k_mn(2, 3);
  IncidenceSystem r = residue(s, {0});
  CHECK(r.rank() == 1);
  CHECK(r.size() == 3);  // the three lines
  // residue of a chamber is empty
  IncidenceSystem r2 = residue(s, {0, 2});
  CHECK(r2.size() == 0);
  CHECK_THROWS_AS(residue(s, {0, 1}), Error);  // two points are not a flag
}

TEST_CASE("residue of a flag in a geometry is a geometry") {
  for (const IncidenceSystem& s : {k_mn(2, 3), k_mn(3, 3), triangle_geometry()}) {
    for (int e = 0; e < s.size(); ++e) {
      IncidenceSystem r = residue(s, {e});
      CHECK(is_geometry(r));
    }
  }
}

TEST_CASE("rank2_params on generalized digons and the triangle") {
  Rank2Params d = rank2_params(k_mn(2, 3));
  CHECK(d == Rank2Params{2, 2, 2});
  CHECK(d.connected);
  Rank2Params t = rank2_params(triangle_geometry());
  CHECK(t == Rank2Params{3, 3, 3});
  CHECK(to_string(t) == "(3,3,3)");
}

TEST_CASE("rank2_params is side-symmetric up to swapping dP and dL") {
  IncidenceSystem s = k_mn(2, 4);
  IncidenceSystem sw = s;
  for (auto& t : sw.elem_type) t = 1 - t;
  std::swap(sw.type_names[0], sw.type_names[1]);
  Rank2Params a = rank2_params(s), b = rank2_params(sw);
  CHECK(a.d_p == b.d_l);
  CHECK(a.d_l == b.d_p);
  CHECK(a.g == b.g);
}

TEST_CASE("rank2_params flags disconnected systems and acyclic gonality") {
  IncidenceSystem s;
  s.type_names = {"P", "L"};
  s.add_element(0, "p0");
  s.add_element(0, "p1");
  s.add_element(1, "l0");
  s.add_incidence(0, 2);
  Rank2Params r = rank2_params(s);
  CHECK_FALSE(r.connected);
  CHECK_FALSE(r.g.has_value());  // forest: gonality infinite
}

TEST_CASE("correlation validation") {
  IncidenceSystem s = k_mn(2, 2);
  Correlation id = identity_correlation(s);
  id.validate(s);
  Correlation bad = id;
  bad.elem_image = {0, 1, 2, 2};
  CHECK_THROWS_AS(bad.validate(s), Error);
  // swapping the two sides of K_{2,2} is a duality
  Correlation dual;
  dual.elem_image = {2, 3, 0, 1};
  dual.type_image = {1, 0};
  dual.validate(s);
}

TEST_CASE("absolute geometry of the identity embeds the system") {
  IncidenceSystem s = k_mn(2, 3);
  IncidenceSystem a = absolute_geometry(s, identity_correlation(s));
  CHECK(a.size() == s.size());
  CHECK(a.rank() == 2);
  int incid = 0;
  for (const auto& l : a.adj) incid += static_cast<int>(l.size());
  int orig = 0;
  for (const auto& l : s.adj) orig += static_cast<int>(l.size());
  CHECK(incid == orig);
}

TEST_CASE("absolute geometry of a cycled chamber is one element of full type") {
  IncidenceSystem s;
  s.type_names = {"0", "1", "2"};
  s.add_element(0, "a");
  s.add_element(1, "b");
  s.add_element(2, "c");
  s.add_incidence(0, 1);
  s.add_incidence(1, 2);
  s.add_incidence(0, 2);
  Correlation rot;
  rot.elem_image = {1, 2, 0};
  rot.type_image = {1, 2, 0};
  IncidenceSystem a = absolute_geometry(s, rot);
  CHECK(a.size() == 1);
  CHECK(a.type_names == std::vector<std::string>{"0+1+2"});
}

TEST_CASE("absolute geometry agrees for phi and phi^2 when phi has order 3") {
  // two chambers swapped into each other by an order-3 correlation on types
  IncidenceSystem s;
  s.type_names = {"0", "1", "2"};
  for (int c = 0; c < 2; ++c) {
    int b = 3 * c;
    s.add_element(0, "a" + std::to_string(c));
    s.add_element(1, "b" + std::to_string(c));
    s.add_element(2, "c" + std::to_string(c));
    s.add_incidence(b + 0, b + 1);
    s.add_incidence(b + 1, b + 2);
    s.add_incidence(b + 0, b + 2);
  }
  Correlation rot;
  rot.elem_image = {1, 2, 0, 4, 5, 3};
  rot.type_image = {1, 2, 0};
  Correlation rot2 = compose(rot, rot);
  IncidenceSystem a1 = absolute_geometry(s, rot);
  IncidenceSystem a2 = absolute_geometry(s, rot2);
  REQUIRE(a1.size() == a2.size());
  for (int i = 0; i < a1.size(); ++i) CHECK(a1.elem_label[i] == a2.elem_label[i]);
}

TEST_CASE("graph_to_rank2 on small graphs") {
  SimpleGraph c5(5);
  for (int i = 0; i < 5; ++i) c5.add_edge(i, (i + 1) % 5);
  Rank2Params p = rank2_params(graph_to_rank2(c5));
  CHECK(p == Rank2Params{5, 5, 5});

  SimpleGraph k4(4);
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) k4.add_edge(i, j);
  Rank2Params pk = rank2_params(graph_to_rank2(k4));
  CHECK(pk.g == 3);
}
