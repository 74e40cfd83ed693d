#include "triality/field.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace triality {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

namespace {

// Polynomials over GF(p), little-endian coefficient vectors.
std::vector<int> poly_mod(std::vector<int> a, const std::vector<int>& m, int p) {
  int dm = static_cast<int>(m.size()) - 1;
  while (static_cast<int>(a.size()) > dm) {
    int lead = a.back();
    int shift = static_cast<int>(a.size()) - 1 - dm;
    if (lead != 0) {
      for (int i = 0; i <= dm; ++i) {
        int& c = a[i + shift];
        c = (c - lead * m[i]) % p;
        if (c < 0) c += p;
      }
    }
    a.pop_back();
  }
  return a;
}

std::vector<int> poly_mul(const std::vector<int>& a, const std::vector<int>& b,
                          int p) {
  std::vector<int> r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j)
      r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  return r;
}

bool poly_divides(const std::vector<int>& g, const std::vector<int>& f, int p) {
  // true iff g | f, both monic, deg g <= deg f
  std::vector<int> r = poly_mod(f, g, p);
  return std::all_of(r.begin(), r.end(), [](int c) { return c == 0; });
}

// next monic polynomial of degree d in lexicographic coefficient order;
// coefficients act as a base-p counter over c0..c_{d-1}.
bool next_monic(std::vector<int>& c, int p) {
  for (size_t i = 0; i + 1 < c.size(); ++i) {
    if (++c[i] < p) return true;
    c[i] = 0;
  }
  return false;
}

bool is_irreducible(const std::vector<int>& f, int p) {
  int d = static_cast<int>(f.size()) - 1;
  if (d < 1) return false;
  for (int dg = 1; dg <= d / 2; ++dg) {
    std::vector<int> g(dg + 1, 0);
    g[dg] = 1;
    do {
      if (poly_divides(g, f, p)) return false;
    } while (next_monic(g, p));
  }
  return true;
}

struct TableEntry {
  int p, n;
  std::vector<int> modulus;
};

// Conway-style fixed choices so all coordinates and downstream outputs are
// bit-reproducible. Verified irreducible at load.
const TableEntry kModulusTable[] = {
    {2, 2, {1, 1, 1}},
    {2, 3, {1, 1, 0, 1}},
    {2, 4, {1, 1, 0, 0, 1}},
    {2, 6, {1, 1, 0, 1, 1, 0, 1}},
    {3, 2, {2, 2, 1}},
    {3, 3, {1, 2, 0, 1}},
    {3, 6, {2, 2, 1, 0, 2, 0, 1}},
    {5, 2, {2, 4, 1}},
    {5, 3, {3, 3, 0, 1}},
    {7, 3, {2, 3, 0, 1}},
};

std::vector<int> pick_modulus(int p, int n) {
  if (n == 1) return {0, 1};  // reduction is plain mod p
  for (const auto& e : kModulusTable)
    if (e.p == p && e.n == n) {
      if (!is_irreducible(e.modulus, p))
        fail(ErrorCode::Internal, "built-in modulus for GF(" +
                                      std::to_string(p) + "^" +
                                      std::to_string(n) + ") is reducible");
      return e.modulus;
    }
  // deterministic fallback: lexicographically smallest monic irreducible
  std::vector<int> f(n + 1, 0);
  f[n] = 1;
  do {
    if (is_irreducible(f, p)) return f;
  } while (next_monic(f, p));
  fail(ErrorCode::Internal, "no irreducible polynomial found");
}

}  // namespace

FieldSpec::FieldSpec(int p, int n, std::vector<int> modulus)
    : p_(p), n_(n), modulus_(std::move(modulus)) {
  long long o = 1;
  for (int i = 0; i < n; ++i) o *= p;
  order_ = static_cast<int>(o);
  build_tables();
}

std::vector<int> FieldSpec::coeffs(uint16_t code) const {
  std::vector<int> c(n_);
  int v = code;
  for (int i = 0; i < n_; ++i) {
    c[i] = v % p_;
    v /= p_;
  }
  return c;
}

uint16_t FieldSpec::encode(const std::vector<int>& coeffs) const {
  int v = 0;
  for (int i = n_ - 1; i >= 0; --i) {
    int c = i < static_cast<int>(coeffs.size()) ? coeffs[i] % p_ : 0;
    if (c < 0) c += p_;
    v = v * p_ + c;
  }
  return static_cast<uint16_t>(v);
}

uint16_t FieldSpec::mul_slow(uint16_t a, uint16_t b) const {
  std::vector<int> r = poly_mul(coeffs(a), coeffs(b), p_);
  if (n_ == 1) {
    return static_cast<uint16_t>(r[0] % p_);
  }
  r = poly_mod(std::move(r), modulus_, p_);
  return encode(r);
}

void FieldSpec::build_tables() {
  const int o = order_;
  add_.resize(static_cast<size_t>(o) * o);
  mul_.resize(static_cast<size_t>(o) * o);
  neg_.resize(o);
  inv_.assign(o, 0);
  frob_.resize(o);
  for (int a = 0; a < o; ++a) {
    std::vector<int> ca = coeffs(static_cast<uint16_t>(a));
    for (int b = 0; b < o; ++b) {
      std::vector<int> cb = coeffs(static_cast<uint16_t>(b));
      std::vector<int> s(n_);
      for (int i = 0; i < n_; ++i) s[i] = (ca[i] + cb[i]) % p_;
      add_[static_cast<size_t>(a) * o + b] = encode(s);
      mul_[static_cast<size_t>(a) * o + b] =
          mul_slow(static_cast<uint16_t>(a), static_cast<uint16_t>(b));
    }
    std::vector<int> nc(n_);
    for (int i = 0; i < n_; ++i) nc[i] = (p_ - ca[i]) % p_;
    neg_[a] = encode(nc);
  }
  for (int a = 1; a < o; ++a) {
    for (int b = 1; b < o; ++b) {
      if (mul_[static_cast<size_t>(a) * o + b] == 1) {
        inv_[a] = static_cast<uint16_t>(b);
        break;
      }
    }
    if (inv_[a] == 0)
      fail(ErrorCode::Internal, "non-invertible nonzero element; modulus not irreducible?");
  }
  for (int a = 0; a < o; ++a)
    frob_[a] = pow(static_cast<uint16_t>(a), p_);
}

uint16_t FieldSpec::pow(uint16_t a, long long e) const {
  if (e < 0) fail(ErrorCode::InvalidArgument, "negative exponent");
  uint16_t r = 1;
  uint16_t base = a;
  while (e > 0) {
    if (e & 1) r = mul_slow(r, base);
    base = mul_slow(base, base);
    e >>= 1;
  }
  return r;
}

const FieldSpec& FieldSpec::get(int p, int n) {
  if (!is_prime(p))
    fail(ErrorCode::InvalidArgument, std::to_string(p) + " is not prime");
  if (n < 1) fail(ErrorCode::InvalidArgument, "exponent must be positive");
  long long o = 1;
  for (int i = 0; i < n; ++i) {
    o *= p;
    if (o > 1024)
      fail(ErrorCode::Unsupported, "unsupported field: order " +
                                       std::to_string(p) + "^" +
                                       std::to_string(n) + " exceeds 1024");
  }
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<FieldSpec>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(p, n);
  auto it = cache.find(key);
  if (it == cache.end()) {
    auto spec = std::unique_ptr<FieldSpec>(
        new FieldSpec(p, n, pick_modulus(p, n)));
    it = cache.emplace(key, std::move(spec)).first;
  }
  return *it->second;
}

FieldElem ff_make_elem(const FieldSpec& spec, uint16_t code) {
  if (code >= spec.order())
    fail(ErrorCode::InvalidArgument, "element code out of range");
  return FieldElem(spec, code);
}

uint16_t frobenius_code(const FieldSpec& spec, uint16_t code, int r) {
  int m = 0;
  long long v = 1;
  while (v < r) {
    v *= spec.p();
    ++m;
  }
  if (v != r || m > spec.n())
    fail(ErrorCode::InvalidArgument,
         "frobenius power must be p^m with m <= n, got " + std::to_string(r));
  uint16_t x = code;
  for (int i = 0; i < m; ++i) x = spec.frob(x);
  return x;
}

FieldElem frobenius(const FieldElem& x, int r) {
  return FieldElem(x.spec(), frobenius_code(x.spec(), x.code(), r));
}

}  // namespace triality
