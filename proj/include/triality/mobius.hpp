#ifndef TRIALITY_MOBIUS_HPP
#define TRIALITY_MOBIUS_HPP

#include <cstdint>
#include <functional>
#include <unordered_set>
#include <vector>

#include "triality/field.hpp"
#include "triality/perm.hpp"

namespace triality {

// Element of PSL(2,Q) as a determinant-1 matrix over GF(Q), canonicalized
// under the +-I scalar (lexicographically smaller of M and -M). Entries are
// field element codes.
struct Mat2 {
  uint16_t a = 1, b = 0, c = 0, d = 1;

  bool operator==(const Mat2& o) const {
    return a == o.a && b == o.b && c == o.c && d == o.d;
  }
  bool operator<(const Mat2& o) const {
    if (a != o.a) return a < o.a;
    if (b != o.b) return b < o.b;
    if (c != o.c) return c < o.c;
    return d < o.d;
  }
};

inline uint64_t mat_key(const Mat2& m) {
  return (((static_cast<uint64_t>(m.a) << 10 | m.b) << 10 | m.c) << 10) | m.d;
}

// PSL(2,Q) realized on the projective line GF(Q) u {inf}: point codes are
// field element codes 0..Q-1 plus Q for infinity.
class PslContext {
public:
  explicit PslContext(int Q);

  const FieldSpec& field() const { return *F_; }
  int Q() const { return Q_; }
  int n_points() const { return Q_ + 1; }
  int infinity() const { return Q_; }

  Mat2 canon(Mat2 m) const;  // +-I normalization (no-op in char 2)
  Mat2 mul(const Mat2& x, const Mat2& y) const;
  Mat2 inverse(const Mat2& m) const;
  bool is_identity(const Mat2& m) const;
  // PSL involution test: trace zero and not the identity
  bool is_involution(const Mat2& m) const;

  int apply(const Mat2& m, int point) const;
  Perm to_perm(const Mat2& m) const;

  // entrywise x -> x^(p^m), then canonicalized; conjugation by the Frobenius
  // permutation realizes this map
  Mat2 field_auto(const Mat2& m, int powm) const;
  Perm frobenius_perm(int powm) const;

  Mat2 gen_translation() const;  // x -> x+1
  Mat2 gen_lower() const;        // x -> x/(x+1)

  // visits every element of PSL(2,Q) exactly once (canonical reps)
  void for_each_element(const std::function<void(const Mat2&)>& visit) const;
  std::vector<Mat2> involutions() const;

  // closure of a small generating set, sorted by key
  std::vector<Mat2> closure(const std::vector<Mat2>& gens,
                            size_t cap = 500000) const;

private:
  const FieldSpec* F_;
  int Q_;
};

// PSL(2,Q) as a permutation group on the projective line.
PermGroup psl2_group(const PslContext& ctx);
uint64_t psl2_order_formula(int Q);

// Canonical right cosets H*x of a small subgroup, keyed by the
// lexicographically minimal member.
class CosetSpace {
public:
  CosetSpace(const PslContext& ctx, std::vector<Mat2> subgroup_elements);

  const std::vector<Mat2>& subgroup() const { return H_; }
  Mat2 rep(const Mat2& x) const;  // min over {h*x}
  // all coset representatives, reachable from the identity by the given
  // group generators; sorted by key
  std::vector<Mat2> enumerate(const std::vector<Mat2>& group_gens) const;

private:
  const PslContext* ctx_;
  std::vector<Mat2> H_;
};

// hashed product set {h_i * h_j} for the coset incidence test
std::unordered_set<uint64_t> product_set(const PslContext& ctx,
                                         const std::vector<Mat2>& A,
                                         const std::vector<Mat2>& B);

// True iff some element of the full automorphism group PGammaL(2,Q),
// realized as semilinear maps (W, sigma), swaps rho0 and rho2 while fixing
// rho1. Solved exactly per field automorphism and sign pattern via the
// linear intertwiner equations W*sigma(rho0) = +-rho2*W etc.
bool transporter_exists(const PslContext& ctx, const Mat2& rho0,
                        const Mat2& rho2, const Mat2& rho1);

// Exhaustive reference implementation (small Q only): enumerates PGL x Gal.
bool transporter_exists_bruteforce(const PslContext& ctx, const Mat2& rho0,
                                   const Mat2& rho2, const Mat2& rho1,
                                   size_t cap = 3000000);

}  // namespace triality

#endif
