#ifndef TRIALITY_FIELD_HPP
#define TRIALITY_FIELD_HPP

#include <cstdint>
#include <memory>
#include <vector>

#include "triality/errors.hpp"

namespace triality {

// Exact arithmetic in GF(p^n), p^n <= 1024. Elements are residue classes of
// polynomials modulo a fixed monic irreducible; an element is encoded as
// code = sum coeff[i] * p^i, so equality of codes is equality of elements.
// For orders <= 729 full add/mul tables are precomputed since every
// enumeration hot loop multiplies field elements.
class FieldSpec {
public:
  // Returns the cached spec for GF(p^n). The modulus comes from a fixed
  // built-in table (deterministic across runs and platforms); sizes not in
  // the table fall back to the lexicographically smallest monic irreducible.
  static const FieldSpec& get(int p, int n);

  int p() const { return p_; }
  int n() const { return n_; }
  int order() const { return order_; }
  // Monic modulus, little-endian coefficients c0..cn (cn = 1). For n = 1 the
  // modulus is x and reduction is plain arithmetic mod p.
  const std::vector<int>& modulus() const { return modulus_; }

  uint16_t add(uint16_t a, uint16_t b) const { return add_[a * order_ + b]; }
  uint16_t mul(uint16_t a, uint16_t b) const { return mul_[a * order_ + b]; }
  uint16_t neg(uint16_t a) const { return neg_[a]; }
  uint16_t sub(uint16_t a, uint16_t b) const { return add(a, neg(b)); }
  uint16_t inv(uint16_t a) const {
    if (a == 0) fail(ErrorCode::DomainError, "division by zero in GF(" +
                                                 std::to_string(order_) + ")");
    return inv_[a];
  }
  // x -> x^p, the generating Frobenius map.
  uint16_t frob(uint16_t a) const { return frob_[a]; }
  uint16_t pow(uint16_t a, long long e) const;

  std::vector<int> coeffs(uint16_t code) const;
  uint16_t encode(const std::vector<int>& coeffs) const;

private:
  FieldSpec(int p, int n, std::vector<int> modulus);
  void build_tables();
  uint16_t mul_slow(uint16_t a, uint16_t b) const;

  int p_, n_, order_;
  std::vector<int> modulus_;
  std::vector<uint16_t> add_, mul_, neg_, inv_, frob_;
};

// Value-semantics wrapper used outside hot loops.
class FieldElem {
public:
  FieldElem() : spec_(nullptr), code_(0) {}
  FieldElem(const FieldSpec& spec, uint16_t code) : spec_(&spec), code_(code) {}

  const FieldSpec& spec() const { return *spec_; }
  uint16_t code() const { return code_; }
  bool is_zero() const { return code_ == 0; }
  std::vector<int> coeffs() const { return spec_->coeffs(code_); }

  FieldElem operator+(const FieldElem& o) const {
    check_same(o);
    return FieldElem(*spec_, spec_->add(code_, o.code_));
  }
  FieldElem operator-(const FieldElem& o) const {
    check_same(o);
    return FieldElem(*spec_, spec_->sub(code_, o.code_));
  }
  FieldElem operator*(const FieldElem& o) const {
    check_same(o);
    return FieldElem(*spec_, spec_->mul(code_, o.code_));
  }
  FieldElem operator-() const { return FieldElem(*spec_, spec_->neg(code_)); }
  FieldElem inverse() const { return FieldElem(*spec_, spec_->inv(code_)); }
  bool operator==(const FieldElem& o) const {
    return spec_ == o.spec_ && code_ == o.code_;
  }
  bool operator!=(const FieldElem& o) const { return !(*this == o); }

private:
  void check_same(const FieldElem& o) const {
    if (spec_ != o.spec_)
      fail(ErrorCode::InvalidArgument, "field mismatch");
  }
  const FieldSpec* spec_;
  uint16_t code_;
};

FieldElem ff_make_elem(const FieldSpec& spec, uint16_t code);

// x -> x^r with r = p^m, m <= n; rejects r that is not a power of p.
FieldElem frobenius(const FieldElem& x, int r);
uint16_t frobenius_code(const FieldSpec& spec, uint16_t code, int r);

bool is_prime(int p);

}  // namespace triality

#endif
