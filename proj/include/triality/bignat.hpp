#ifndef TRIALITY_BIGNAT_HPP
#define TRIALITY_BIGNAT_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace triality {

// Minimal arbitrary-precision natural number: just enough for automorphism
// group orders (multiply, compare, print).
class Bignat {
public:
  Bignat() : limbs_{0} {}
  explicit Bignat(uint64_t v) : limbs_{v} {}

  void mul_u64(uint64_t m) {
    unsigned __int128 carry = 0;
    for (auto& l : limbs_) {
      unsigned __int128 t = static_cast<unsigned __int128>(l) * m + carry;
      l = static_cast<uint64_t>(t);
      carry = t >> 64;
    }
    while (carry) {
      limbs_.push_back(static_cast<uint64_t>(carry));
      carry >>= 64;
    }
  }

  bool fits_u64() const { return limbs_.size() == 1; }
  uint64_t as_u64() const { return limbs_[0]; }

  bool operator==(const Bignat& o) const { return limbs_ == o.limbs_; }
  bool operator==(uint64_t v) const { return fits_u64() && limbs_[0] == v; }
  bool operator!=(const Bignat& o) const { return !(*this == o); }

  std::string to_string() const {
    std::vector<uint64_t> t = limbs_;
    std::string out;
    auto all_zero = [&] {
      for (uint64_t l : t)
        if (l) return false;
      return true;
    };
    if (all_zero()) return "0";
    while (!all_zero()) {
      // divide t by 10, collecting the remainder
      unsigned __int128 rem = 0;
      for (size_t i = t.size(); i-- > 0;) {
        unsigned __int128 cur = (rem << 64) | t[i];
        t[i] = static_cast<uint64_t>(cur / 10);
        rem = cur % 10;
      }
      out.push_back(static_cast<char>('0' + static_cast<int>(rem)));
    }
    return std::string(out.rbegin(), out.rend());
  }

private:
  std::vector<uint64_t> limbs_;  // little-endian
};

}  // namespace triality

#endif
