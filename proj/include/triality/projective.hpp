#ifndef TRIALITY_PROJECTIVE_HPP
#define TRIALITY_PROJECTIVE_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "triality/field.hpp"

namespace triality {

// Point of PG(6,q) or PG(7,q): homogeneous coordinates normalized so the
// first nonzero coordinate is 1, which makes equality and hashing canonical.
struct ProjPoint {
  const FieldSpec* field = nullptr;
  int dim = 0;  // number of coordinates: 7 or 8
  std::array<uint16_t, 8> c{};

  bool operator==(const ProjPoint& o) const {
    return field == o.field && dim == o.dim && c == o.c;
  }
  bool operator<(const ProjPoint& o) const { return c < o.c; }
};

ProjPoint make_point(const FieldSpec& f, int dim,
                     const std::vector<int>& coords);
ProjPoint normalized(const ProjPoint& p);
// e_i basis point.
ProjPoint unit_point(const FieldSpec& f, int dim, int i);
// p + lambda*q, normalized.
ProjPoint add_scaled(const ProjPoint& p, const ProjPoint& q, uint16_t lambda);
// All points of PG(dim-1, q) in a fixed deterministic order.
std::vector<ProjPoint> enumerate_points(const FieldSpec& f, int dim);

struct PointHash {
  size_t operator()(const ProjPoint& p) const {
    size_t h = 1469598103934665603ull;
    for (int i = 0; i < p.dim; ++i) {
      h ^= p.c[i];
      h *= 1099511628211ull;
    }
    return h;
  }
};

// X0X4 + X1X5 + X2X6 + X3X7; zero iff the point lies on the hyperbolic
// quadric of PG(7,q).
FieldElem quadric_value(const ProjPoint& p);
// X0X4 + X1X5 + X2X6 - X3^2; zero iff the point lies on the parabolic
// quadric Q' of PG(6,q).
FieldElem parabolic_value(const ProjPoint& p);
// Polarization of the parabolic form; two points of Q' span a line fully on
// Q' iff this vanishes.
uint16_t parabolic_bilinear(const ProjPoint& p, const ProjPoint& q);

// Trilinear form attached to the PG(7,q) quadric. Both 3x3 determinant
// blocks run over coordinate columns (0,1,2) and (4,5,6) of the three
// arguments; the remaining terms follow the bilinear/cubic pattern
//   X3(Z0Y4+Z1Y5+Z2Y6) + X7(Y0Z4+Y1Z5+Y2Z6) + cyclic - X3Y3Z3 - X7Y7Z7.
FieldElem trilinear(const ProjPoint& x, const ProjPoint& y,
                    const ProjPoint& z);
// Coefficients of z -> trilinear(x,y,z); the form vanishes identically in
// the third argument iff all eight coefficients are zero.
std::array<uint16_t, 8> trilinear_functional(const ProjPoint& x,
                                             const ProjPoint& y);
bool trilinear_vanishes(const ProjPoint& x, const ProjPoint& y);

// Line of PG(dim-1,q) as an ordered basis pair plus its Grassmann coordinate
// table g[i][j] = x_i y_j - x_j y_i stored for i < j and rescaled so the
// first nonzero entry is 1. In odd characteristic the sign convention
// X_{ji} = -X_{ij} is normative and resolved on read.
struct PlueckerLine {
  ProjPoint a, b;
  std::array<uint16_t, 28> gr{};  // flat upper-triangle table

  bool operator==(const PlueckerLine& o) const {
    return a.field == o.b.field ? gr == o.gr : false;
  }
};

int gr_index(int dim, int i, int j);  // i < j
// Signed access: X_{ij} for any i != j.
uint16_t gr_entry(const PlueckerLine& l, int i, int j);

PlueckerLine line_through(const ProjPoint& p, const ProjPoint& q);
std::vector<ProjPoint> line_points(const PlueckerLine& l);
// True iff every one of the q+1 points of l lies on the parabolic quadric.
bool line_on_parabolic(const PlueckerLine& l);
// The six linear Grassmann relations characterizing absolute lines among the
// lines on Q'. Rejects lines not on Q'.
bool grassmann_absolute(const PlueckerLine& l);

}  // namespace triality

#endif
