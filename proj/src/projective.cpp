#include "triality/projective.hpp"

#include <algorithm>

namespace triality {

namespace {

void check_dim(const ProjPoint& p, int dim, const char* what) {
  if (p.dim != dim)
    fail(ErrorCode::InvalidArgument,
         std::string(what) + ": expected " + std::to_string(dim) +
             " coordinates, got " + std::to_string(p.dim));
}

bool is_zero_point(const ProjPoint& p) {
  for (int i = 0; i < p.dim; ++i)
    if (p.c[i] != 0) return false;
  return true;
}

}  // namespace

ProjPoint normalized(const ProjPoint& p) {
  ProjPoint r = p;
  const FieldSpec& f = *r.field;
  for (int i = 0; i < r.dim; ++i) {
    if (r.c[i] != 0) {
      if (r.c[i] != 1) {
        uint16_t s = f.inv(r.c[i]);
        for (int j = i; j < r.dim; ++j) r.c[j] = f.mul(r.c[j], s);
      }
      return r;
    }
  }
  fail(ErrorCode::InvalidArgument, "zero vector is not a projective point");
}

ProjPoint make_point(const FieldSpec& f, int dim,
                     const std::vector<int>& coords) {
  if (dim != 7 && dim != 8)
    fail(ErrorCode::InvalidArgument, "ambient dimension must be 7 or 8");
  if (static_cast<int>(coords.size()) != dim)
    fail(ErrorCode::InvalidArgument, "coordinate count mismatch");
  ProjPoint p;
  p.field = &f;
  p.dim = dim;
  for (int i = 0; i < dim; ++i) {
    int v = coords[i] % f.order();
    if (v < 0) v += f.order();
    p.c[i] = static_cast<uint16_t>(v);
  }
  if (is_zero_point(p))
    fail(ErrorCode::InvalidArgument, "zero vector is not a projective point");
  return normalized(p);
}

ProjPoint unit_point(const FieldSpec& f, int dim, int i) {
  ProjPoint p;
  p.field = &f;
  p.dim = dim;
  p.c[i] = 1;
  return p;
}

ProjPoint add_scaled(const ProjPoint& p, const ProjPoint& q, uint16_t lambda) {
  const FieldSpec& f = *p.field;
  ProjPoint r;
  r.field = p.field;
  r.dim = p.dim;
  for (int i = 0; i < p.dim; ++i)
    r.c[i] = f.add(p.c[i], f.mul(lambda, q.c[i]));
  return normalized(r);
}

std::vector<ProjPoint> enumerate_points(const FieldSpec& f, int dim) {
  std::vector<ProjPoint> pts;
  const int q = f.order();
  for (int lead = 0; lead < dim; ++lead) {
    int tail = dim - lead - 1;
    long long count = 1;
    for (int i = 0; i < tail; ++i) count *= q;
    for (long long t = 0; t < count; ++t) {
      ProjPoint p;
      p.field = &f;
      p.dim = dim;
      p.c[lead] = 1;
      long long v = t;
      for (int i = dim - 1; i > lead; --i) {
        p.c[i] = static_cast<uint16_t>(v % q);
        v /= q;
      }
      pts.push_back(p);
    }
  }
  return pts;
}

FieldElem quadric_value(const ProjPoint& p) {
  check_dim(p, 8, "quadric_value");
  const FieldSpec& f = *p.field;
  uint16_t v = f.add(f.mul(p.c[0], p.c[4]), f.mul(p.c[1], p.c[5]));
  v = f.add(v, f.mul(p.c[2], p.c[6]));
  v = f.add(v, f.mul(p.c[3], p.c[7]));
  return FieldElem(f, v);
}

FieldElem parabolic_value(const ProjPoint& p) {
  check_dim(p, 7, "parabolic_value");
  const FieldSpec& f = *p.field;
  uint16_t v = f.add(f.mul(p.c[0], p.c[4]), f.mul(p.c[1], p.c[5]));
  v = f.add(v, f.mul(p.c[2], p.c[6]));
  v = f.sub(v, f.mul(p.c[3], p.c[3]));
  return FieldElem(f, v);
}

uint16_t parabolic_bilinear(const ProjPoint& p, const ProjPoint& q) {
  const FieldSpec& f = *p.field;
  uint16_t v = f.add(f.mul(p.c[0], q.c[4]), f.mul(p.c[4], q.c[0]));
  v = f.add(v, f.add(f.mul(p.c[1], q.c[5]), f.mul(p.c[5], q.c[1])));
  v = f.add(v, f.add(f.mul(p.c[2], q.c[6]), f.mul(p.c[6], q.c[2])));
  uint16_t t = f.mul(p.c[3], q.c[3]);
  v = f.sub(v, f.add(t, t));
  return v;
}

namespace {

// 2x2 minor x_i y_j - x_j y_i of two coordinate rows.
uint16_t minor2(const FieldSpec& f, const ProjPoint& x, const ProjPoint& y,
                int i, int j) {
  return f.sub(f.mul(x.c[i], y.c[j]), f.mul(x.c[j], y.c[i]));
}

}  // namespace

std::array<uint16_t, 8> trilinear_functional(const ProjPoint& x,
                                             const ProjPoint& y) {
  check_dim(x, 8, "trilinear");
  check_dim(y, 8, "trilinear");
  const FieldSpec& f = *x.field;
  std::array<uint16_t, 8> co{};
  // determinant over columns 0,1,2 expanded along the z row
  co[0] = minor2(f, x, y, 1, 2);
  co[1] = f.neg(minor2(f, x, y, 0, 2));
  co[2] = minor2(f, x, y, 0, 1);
  // determinant over columns 4,5,6 expanded along the z row
  co[4] = minor2(f, x, y, 5, 6);
  co[5] = f.neg(minor2(f, x, y, 4, 6));
  co[6] = minor2(f, x, y, 4, 5);
  // bilinear terms
  co[0] = f.add(co[0], f.add(f.mul(x.c[3], y.c[4]), f.mul(y.c[7], x.c[4])));
  co[1] = f.add(co[1], f.add(f.mul(x.c[3], y.c[5]), f.mul(y.c[7], x.c[5])));
  co[2] = f.add(co[2], f.add(f.mul(x.c[3], y.c[6]), f.mul(y.c[7], x.c[6])));
  co[4] = f.add(co[4], f.add(f.mul(x.c[7], y.c[0]), f.mul(y.c[3], x.c[0])));
  co[5] = f.add(co[5], f.add(f.mul(x.c[7], y.c[1]), f.mul(y.c[3], x.c[1])));
  co[6] = f.add(co[6], f.add(f.mul(x.c[7], y.c[2]), f.mul(y.c[3], x.c[2])));
  uint16_t s3 = f.add(f.mul(y.c[0], x.c[4]), f.mul(y.c[1], x.c[5]));
  s3 = f.add(s3, f.mul(y.c[2], x.c[6]));
  co[3] = f.sub(s3, f.mul(x.c[3], y.c[3]));
  uint16_t s7 = f.add(f.mul(x.c[0], y.c[4]), f.mul(x.c[1], y.c[5]));
  s7 = f.add(s7, f.mul(x.c[2], y.c[6]));
  co[7] = f.sub(s7, f.mul(x.c[7], y.c[7]));
  return co;
}

FieldElem trilinear(const ProjPoint& x, const ProjPoint& y,
                    const ProjPoint& z) {
  check_dim(z, 8, "trilinear");
  const FieldSpec& f = *x.field;
  std::array<uint16_t, 8> co = trilinear_functional(x, y);
  uint16_t v = 0;
  for (int i = 0; i < 8; ++i) v = f.add(v, f.mul(co[i], z.c[i]));
  return FieldElem(f, v);
}

bool trilinear_vanishes(const ProjPoint& x, const ProjPoint& y) {
  std::array<uint16_t, 8> co = trilinear_functional(x, y);
  return std::all_of(co.begin(), co.end(), [](uint16_t c) { return c == 0; });
}

int gr_index(int dim, int i, int j) {
  // flat index of (i,j), i<j, rows of decreasing length
  return i * dim - i * (i + 1) / 2 + (j - i - 1);
}

uint16_t gr_entry(const PlueckerLine& l, int i, int j) {
  const FieldSpec& f = *l.a.field;
  if (i < j) return l.gr[gr_index(l.a.dim, i, j)];
  return f.neg(l.gr[gr_index(l.a.dim, j, i)]);
}

PlueckerLine line_through(const ProjPoint& p, const ProjPoint& q) {
  if (p.field != q.field || p.dim != q.dim)
    fail(ErrorCode::InvalidArgument, "line_through: ambient space mismatch");
  if (p == q) fail(ErrorCode::InvalidArgument, "line_through: equal points");
  const FieldSpec& f = *p.field;
  PlueckerLine l;
  l.a = p;
  l.b = q;
  int k = 0;
  for (int i = 0; i < p.dim; ++i)
    for (int j = i + 1; j < p.dim; ++j)
      l.gr[k++] = f.sub(f.mul(p.c[i], q.c[j]), f.mul(p.c[j], q.c[i]));
  // canonical scaling: first nonzero entry becomes 1
  for (int t = 0; t < k; ++t) {
    if (l.gr[t] != 0) {
      if (l.gr[t] != 1) {
        uint16_t s = f.inv(l.gr[t]);
        for (int u = t; u < k; ++u) l.gr[u] = f.mul(l.gr[u], s);
      }
      break;
    }
  }
  return l;
}

std::vector<ProjPoint> line_points(const PlueckerLine& l) {
  const FieldSpec& f = *l.a.field;
  std::vector<ProjPoint> pts;
  pts.reserve(f.order() + 1);
  pts.push_back(l.b);
  for (int lam = 0; lam < f.order(); ++lam)
    pts.push_back(add_scaled(l.a, l.b, static_cast<uint16_t>(lam)));
  std::sort(pts.begin(), pts.end());
  return pts;
}

bool line_on_parabolic(const PlueckerLine& l) {
  if (l.a.dim != 7)
    fail(ErrorCode::InvalidArgument, "line_on_parabolic: ambient must be PG(6,q)");
  for (const ProjPoint& p : line_points(l))
    if (!parabolic_value(p).is_zero()) return false;
  return true;
}

bool grassmann_absolute(const PlueckerLine& l) {
  if (!line_on_parabolic(l))
    fail(ErrorCode::InvalidArgument,
         "grassmann_absolute is only defined for lines on the quadric");
  return gr_entry(l, 1, 2) == gr_entry(l, 3, 4) &&
         gr_entry(l, 5, 4) == gr_entry(l, 3, 2) &&
         gr_entry(l, 2, 0) == gr_entry(l, 3, 5) &&
         gr_entry(l, 6, 5) == gr_entry(l, 3, 0) &&
         gr_entry(l, 0, 1) == gr_entry(l, 3, 6) &&
         gr_entry(l, 4, 6) == gr_entry(l, 3, 1);
}

}  // namespace triality
