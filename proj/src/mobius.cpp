#include "triality/mobius.hpp"

#include <algorithm>

namespace triality {

namespace {

std::pair<int, int> factor_prime_power(int Q) {
  for (int p = 2; p <= Q; ++p) {
    if (Q % p != 0) continue;
    int n = 0, v = Q;
    while (v % p == 0) {
      v /= p;
      ++n;
    }
    if (v != 1)
      fail(ErrorCode::InvalidArgument,
           std::to_string(Q) + " is not a prime power");
    return {p, n};
  }
  fail(ErrorCode::InvalidArgument, "invalid field order");
}

}  // namespace

PslContext::PslContext(int Q) : Q_(Q) {
  auto [p, n] = factor_prime_power(Q);
  F_ = &FieldSpec::get(p, n);
}

Mat2 PslContext::canon(Mat2 m) const {
  if (F_->p() == 2) return m;
  Mat2 neg{F_->neg(m.a), F_->neg(m.b), F_->neg(m.c), F_->neg(m.d)};
  return std::min(m, neg);
}

Mat2 PslContext::mul(const Mat2& x, const Mat2& y) const {
  const FieldSpec& f = *F_;
  Mat2 r;
  r.a = f.add(f.mul(x.a, y.a), f.mul(x.b, y.c));
  r.b = f.add(f.mul(x.a, y.b), f.mul(x.b, y.d));
  r.c = f.add(f.mul(x.c, y.a), f.mul(x.d, y.c));
  r.d = f.add(f.mul(x.c, y.b), f.mul(x.d, y.d));
  return canon(r);
}

Mat2 PslContext::inverse(const Mat2& m) const {
  const FieldSpec& f = *F_;
  return canon(Mat2{m.d, f.neg(m.b), f.neg(m.c), m.a});
}

bool PslContext::is_identity(const Mat2& m) const {
  if (m.b != 0 || m.c != 0 || m.a != m.d) return false;
  return F_->mul(m.a, m.a) == 1;  // +-I
}

bool PslContext::is_involution(const Mat2& m) const {
  return !is_identity(m) && F_->add(m.a, m.d) == 0;
}

int PslContext::apply(const Mat2& m, int x) const {
  const FieldSpec& f = *F_;
  if (x == Q_) {
    if (m.c == 0) return Q_;
    return f.mul(m.a, f.inv(m.c));
  }
  uint16_t den = f.add(f.mul(m.c, static_cast<uint16_t>(x)), m.d);
  uint16_t num = f.add(f.mul(m.a, static_cast<uint16_t>(x)), m.b);
  if (den == 0) return Q_;
  return f.mul(num, f.inv(den));
}

Perm PslContext::to_perm(const Mat2& m) const {
  Perm p(n_points());
  for (int x = 0; x <= Q_; ++x) p[x] = static_cast<uint16_t>(apply(m, x));
  return p;
}

Mat2 PslContext::field_auto(const Mat2& m, int powm) const {
  const FieldSpec& f = *F_;
  Mat2 r = m;
  for (int i = 0; i < powm; ++i) {
    r.a = f.frob(r.a);
    r.b = f.frob(r.b);
    r.c = f.frob(r.c);
    r.d = f.frob(r.d);
  }
  return canon(r);
}

Perm PslContext::frobenius_perm(int powm) const {
  Perm p(n_points());
  for (int x = 0; x < Q_; ++x) {
    uint16_t y = static_cast<uint16_t>(x);
    for (int i = 0; i < powm; ++i) y = F_->frob(y);
    p[x] = y;
  }
  p[Q_] = static_cast<uint16_t>(Q_);
  return p;
}

Mat2 PslContext::gen_translation() const { return canon(Mat2{1, 1, 0, 1}); }
Mat2 PslContext::gen_lower() const { return canon(Mat2{1, 0, 1, 1}); }

void PslContext::for_each_element(
    const std::function<void(const Mat2&)>& visit) const {
  const FieldSpec& f = *F_;
  const int Q = Q_;
  // det-1 matrices: a != 0 -> d = (1+bc)/a ; a = 0 -> c = -1/b, d free
  for (int a = 1; a < Q; ++a) {
    uint16_t ainv = f.inv(static_cast<uint16_t>(a));
    for (int b = 0; b < Q; ++b)
      for (int c = 0; c < Q; ++c) {
        uint16_t d = f.mul(f.add(1, f.mul(static_cast<uint16_t>(b),
                                          static_cast<uint16_t>(c))),
                           ainv);
        Mat2 m{static_cast<uint16_t>(a), static_cast<uint16_t>(b),
               static_cast<uint16_t>(c), d};
        if (canon(m) == m) visit(m);
      }
  }
  for (int b = 1; b < Q; ++b) {
    uint16_t c = f.neg(f.inv(static_cast<uint16_t>(b)));
    for (int d = 0; d < Q; ++d) {
      Mat2 m{0, static_cast<uint16_t>(b), c, static_cast<uint16_t>(d)};
      if (canon(m) == m) visit(m);
    }
  }
}

std::vector<Mat2> PslContext::involutions() const {
  const FieldSpec& f = *F_;
  const int Q = Q_;
  std::vector<Mat2> out;
  std::unordered_set<uint64_t> seen;
  auto push = [&](Mat2 m) {
    m = canon(m);
    if (!is_involution(m)) return;
    if (seen.insert(mat_key(m)).second) out.push_back(m);
  };
  // trace-zero determinant-1 matrices [[a,b],[c,-a]] with -a^2 - bc = 1
  for (int a = 0; a < Q; ++a) {
    uint16_t na = f.neg(static_cast<uint16_t>(a));
    uint16_t rhs = f.neg(f.add(1, f.mul(static_cast<uint16_t>(a),
                                        static_cast<uint16_t>(a))));
    for (int b = 1; b < Q; ++b)
      push(Mat2{static_cast<uint16_t>(a), static_cast<uint16_t>(b),
                f.mul(rhs, f.inv(static_cast<uint16_t>(b))), na});
    if (rhs == 0)
      for (int c = 0; c < Q; ++c)
        push(Mat2{static_cast<uint16_t>(a), 0, static_cast<uint16_t>(c), na});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Mat2> PslContext::closure(const std::vector<Mat2>& gens,
                                      size_t cap) const {
  std::vector<Mat2> out{canon(Mat2{})};
  std::unordered_set<uint64_t> seen{mat_key(out[0])};
  for (size_t i = 0; i < out.size(); ++i) {
    for (const Mat2& g : gens) {
      Mat2 x = mul(out[i], g);
      if (seen.insert(mat_key(x)).second) {
        out.push_back(x);
        if (out.size() > cap)
          fail(ErrorCode::Unsupported, "subgroup closure exceeded cap");
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

PermGroup psl2_group(const PslContext& ctx) {
  return PermGroup(ctx.n_points(), {ctx.to_perm(ctx.gen_translation()),
                                    ctx.to_perm(ctx.gen_lower())});
}

uint64_t psl2_order_formula(int Q) {
  uint64_t q = Q;
  uint64_t o = q * (q * q - 1);
  return (Q % 2 == 0) ? o : o / 2;
}

CosetSpace::CosetSpace(const PslContext& ctx, std::vector<Mat2> subgroup_elements)
    : ctx_(&ctx), H_(std::move(subgroup_elements)) {
  if (H_.empty()) fail(ErrorCode::InvalidArgument, "empty subgroup");
  // closure check: H must be a subgroup
  std::unordered_set<uint64_t> keys;
  for (const Mat2& h : H_) keys.insert(mat_key(h));
  if (!keys.count(mat_key(ctx.canon(Mat2{}))))
    fail(ErrorCode::InvalidArgument, "subgroup does not contain the identity");
  for (const Mat2& x : H_)
    for (const Mat2& y : H_)
      if (!keys.count(mat_key(ctx.mul(x, y))))
        fail(ErrorCode::InvalidArgument, "element list is not a subgroup");
}

Mat2 CosetSpace::rep(const Mat2& x) const {
  Mat2 best = ctx_->mul(H_[0], x);
  for (size_t i = 1; i < H_.size(); ++i) {
    Mat2 cand = ctx_->mul(H_[i], x);
    if (cand < best) best = cand;
  }
  return best;
}

std::vector<Mat2> CosetSpace::enumerate(const std::vector<Mat2>& group_gens) const {
  std::vector<Mat2> reps{rep(Mat2{})};
  std::unordered_set<uint64_t> seen{mat_key(reps[0])};
  for (size_t i = 0; i < reps.size(); ++i)
    for (const Mat2& s : group_gens) {
      Mat2 r = rep(ctx_->mul(reps[i], s));
      if (seen.insert(mat_key(r)).second) reps.push_back(r);
    }
  std::sort(reps.begin(), reps.end());
  return reps;
}

std::unordered_set<uint64_t> product_set(const PslContext& ctx,
                                         const std::vector<Mat2>& A,
                                         const std::vector<Mat2>& B) {
  std::unordered_set<uint64_t> out;
  out.reserve(A.size() * B.size());
  for (const Mat2& x : A)
    for (const Mat2& y : B) out.insert(mat_key(ctx.mul(x, y)));
  return out;
}

// ---------------------------------------------------------------------------
// condition-5 search in PGammaL(2,Q)

namespace {

// nullspace of the stacked linear system rows*unknowns over GF(Q);
// returns a basis of column vectors of length ncols
std::vector<std::vector<uint16_t>> nullspace(const FieldSpec& f,
                                             std::vector<std::vector<uint16_t>> rows,
                                             int ncols) {
  std::vector<int> pivot_col;
  size_t r = 0;
  for (int c = 0; c < ncols && r < rows.size(); ++c) {
    size_t sel = r;
    while (sel < rows.size() && rows[sel][c] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[r], rows[sel]);
    uint16_t inv = f.inv(rows[r][c]);
    for (int j = 0; j < ncols; ++j) rows[r][j] = f.mul(rows[r][j], inv);
    for (size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      uint16_t factor = rows[i][c];
      for (int j = 0; j < ncols; ++j)
        rows[i][j] = f.sub(rows[i][j], f.mul(factor, rows[r][j]));
    }
    pivot_col.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(ncols, false);
  for (int c : pivot_col) is_pivot[c] = true;
  std::vector<std::vector<uint16_t>> basis;
  for (int free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<uint16_t> v(ncols, 0);
    v[free] = 1;
    for (size_t i = 0; i < pivot_col.size(); ++i)
      v[pivot_col[i]] = f.neg(rows[i][free]);
    basis.push_back(std::move(v));
  }
  return basis;
}

struct Gl2 {
  uint16_t w[4];  // row-major
};

bool conj_matches(const PslContext& ctx, const Gl2& W, const Mat2& sigma_rho,
                  const Mat2& target) {
  // checks W * sigma_rho * W^-1 == +-target exactly
  const FieldSpec& f = ctx.field();
  uint16_t det = f.sub(f.mul(W.w[0], W.w[3]), f.mul(W.w[1], W.w[2]));
  if (det == 0) return false;
  // adjugate; the 1/det scale cancels against target comparison up to +-,
  // so compare W*M*adj(W) against det*target and -det*target
  uint16_t m00 = f.add(f.mul(W.w[0], sigma_rho.a), f.mul(W.w[1], sigma_rho.c));
  uint16_t m01 = f.add(f.mul(W.w[0], sigma_rho.b), f.mul(W.w[1], sigma_rho.d));
  uint16_t m10 = f.add(f.mul(W.w[2], sigma_rho.a), f.mul(W.w[3], sigma_rho.c));
  uint16_t m11 = f.add(f.mul(W.w[2], sigma_rho.b), f.mul(W.w[3], sigma_rho.d));
  uint16_t r00 = f.sub(f.mul(m00, W.w[3]), f.mul(m01, W.w[2]));
  uint16_t r01 = f.sub(f.mul(m01, W.w[0]), f.mul(m00, W.w[1]));
  uint16_t r10 = f.sub(f.mul(m10, W.w[3]), f.mul(m11, W.w[2]));
  uint16_t r11 = f.sub(f.mul(m11, W.w[0]), f.mul(m10, W.w[1]));
  auto matches = [&](uint16_t s) {
    return r00 == f.mul(s, target.a) && r01 == f.mul(s, target.b) &&
           r10 == f.mul(s, target.c) && r11 == f.mul(s, target.d);
  };
  return matches(det) || matches(f.neg(det));
}

}  // namespace

bool transporter_exists(const PslContext& ctx, const Mat2& rho0,
                        const Mat2& rho2, const Mat2& rho1) {
  for (const Mat2* m : {&rho0, &rho2, &rho1})
    if (!ctx.is_involution(*m))
      fail(ErrorCode::InvalidArgument, "transporter inputs must be involutions");
  const FieldSpec& f = ctx.field();
  const int gal_order = f.n();
  std::vector<uint16_t> signs{1};
  if (f.p() != 2) signs.push_back(f.neg(1));

  for (int powm = 0; powm < gal_order; ++powm) {
    Mat2 a0 = ctx.field_auto(rho0, powm);
    Mat2 a2 = ctx.field_auto(rho2, powm);
    Mat2 a1 = ctx.field_auto(rho1, powm);
    for (uint16_t e0 : signs)
      for (uint16_t e2 : signs)
        for (uint16_t e1 : signs) {
          // rows: W*A - e*B*W = 0 for (A,B) in {(a0,rho2),(a2,rho0),(a1,rho1)}
          std::vector<std::vector<uint16_t>> rows;
          auto add_eqs = [&](const Mat2& A, const Mat2& B, uint16_t e) {
            uint16_t Am[2][2] = {{A.a, A.b}, {A.c, A.d}};
            uint16_t Bm[2][2] = {{B.a, B.b}, {B.c, B.d}};
            for (int i = 0; i < 2; ++i)
              for (int j = 0; j < 2; ++j) {
                std::vector<uint16_t> row(4, 0);
                row[2 * i + 0] = f.add(row[2 * i + 0], Am[0][j]);
                row[2 * i + 1] = f.add(row[2 * i + 1], Am[1][j]);
                row[2 * 0 + j] = f.sub(row[2 * 0 + j], f.mul(e, Bm[i][0]));
                row[2 * 1 + j] = f.sub(row[2 * 1 + j], f.mul(e, Bm[i][1]));
                rows.push_back(std::move(row));
              }
          };
          add_eqs(a0, rho2, e0);
          add_eqs(a2, rho0, e2);
          add_eqs(a1, rho1, e1);
          auto basis = nullspace(f, std::move(rows), 4);
          if (basis.empty()) continue;
          // look for an invertible element; scan projective combinations
          size_t d = basis.size();
          std::vector<uint16_t> coef(d, 0);
          // first nonzero coefficient fixed to 1
          for (size_t lead = 0; lead < d; ++lead) {
            std::vector<int> tail(d - lead - 1, 0);
            bool done = false;
            while (!done) {
              std::fill(coef.begin(), coef.end(), 0);
              coef[lead] = 1;
              for (size_t t = 0; t < tail.size(); ++t)
                coef[lead + 1 + t] = static_cast<uint16_t>(tail[t]);
              Gl2 W{};
              for (size_t bi = 0; bi < d; ++bi) {
                if (coef[bi] == 0) continue;
                for (int k = 0; k < 4; ++k)
                  W.w[k] = f.add(W.w[k], f.mul(coef[bi], basis[bi][k]));
              }
              uint16_t det = f.sub(f.mul(W.w[0], W.w[3]), f.mul(W.w[1], W.w[2]));
              if (det != 0 && conj_matches(ctx, W, a0, rho2) &&
                  conj_matches(ctx, W, a2, rho0) &&
                  conj_matches(ctx, W, a1, rho1))
                return true;
              // advance odometer
              done = true;
              for (size_t t = 0; t < tail.size(); ++t) {
                if (++tail[t] < ctx.Q()) {
                  done = false;
                  break;
                }
                tail[t] = 0;
              }
            }
          }
        }
  }
  return false;
}

bool transporter_exists_bruteforce(const PslContext& ctx, const Mat2& rho0,
                                   const Mat2& rho2, const Mat2& rho1,
                                   size_t cap) {
  const FieldSpec& f = ctx.field();
  const int Q = ctx.Q();
  size_t total = static_cast<size_t>(Q + 1) * Q * (Q - 1) * f.n();
  if (total > cap)
    fail(ErrorCode::Unsupported, "brute-force transporter too large");
  bool found = false;
  // all projective GL2 matrices: first nonzero entry normalized to 1
  for (int a = 0; a < Q && !found; ++a)
    for (int b = 0; b < Q && !found; ++b)
      for (int c = 0; c < Q && !found; ++c)
        for (int d = 0; d < Q && !found; ++d) {
          uint16_t first[4] = {static_cast<uint16_t>(a), static_cast<uint16_t>(b),
                               static_cast<uint16_t>(c), static_cast<uint16_t>(d)};
          int lead = 0;
          while (lead < 4 && first[lead] == 0) ++lead;
          if (lead == 4 || first[lead] != 1) continue;
          uint16_t det = f.sub(f.mul(first[0], first[3]), f.mul(first[1], first[2]));
          if (det == 0) continue;
          Gl2 W{{first[0], first[1], first[2], first[3]}};
          for (int powm = 0; powm < f.n() && !found; ++powm) {
            Mat2 a0 = ctx.field_auto(rho0, powm);
            Mat2 a2 = ctx.field_auto(rho2, powm);
            Mat2 a1 = ctx.field_auto(rho1, powm);
            if (conj_matches(ctx, W, a0, rho2) && conj_matches(ctx, W, a2, rho0) &&
                conj_matches(ctx, W, a1, rho1))
              found = true;
          }
        }
  return found;
}

}  // namespace triality
