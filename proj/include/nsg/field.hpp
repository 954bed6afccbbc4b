#pragma once

#include <cstdint>

namespace nsg {

using Coeff = std::uint32_t;

bool is_prime(std::uint64_t n);

// Arithmetic in Z/p for a prime p < 2^31 chosen at run time.
class PrimeField {
 public:
  explicit PrimeField(std::uint32_t p);

  std::uint32_t prime() const noexcept { return p_; }

  Coeff add(Coeff a, Coeff b) const noexcept {
    Coeff s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Coeff sub(Coeff a, Coeff b) const noexcept { return a >= b ? a - b : a + p_ - b; }
  Coeff neg(Coeff a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Coeff mul(Coeff a, Coeff b) const noexcept {
    return static_cast<Coeff>(static_cast<std::uint64_t>(a) * b % p_);
  }
  Coeff inv(Coeff a) const;
  Coeff from_int(long long v) const noexcept {
    long long r = v % static_cast<long long>(p_);
    return static_cast<Coeff>(r < 0 ? r + p_ : r);
  }
  // Symmetric representative in (-p/2, p/2], handy for printing signs.
  long long to_signed(Coeff a) const noexcept {
    return a > p_ / 2 ? static_cast<long long>(a) - p_ : static_cast<long long>(a);
  }

  bool operator==(const PrimeField& o) const noexcept { return p_ == o.p_; }

 private:
  std::uint32_t p_;
};

}  // namespace nsg
