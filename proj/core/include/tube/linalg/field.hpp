#pragma once

#include <cstdint>
#include <string>

#include "tube/linalg/rational.hpp"

namespace tube::linalg {

class RationalField {
 public:
  using Elem = Rat;

  Elem zero() const { return Rat(0); }
  Elem one() const { return Rat(1); }
  Elem from_rat(const Rat& r) const { return r; }
  Elem from_int(long v) const { return Rat(v); }
  Rat to_rat(const Elem& a) const { return a; }
  bool is_zero(const Elem& a) const { return sgn(a) == 0; }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem inv(const Elem& a) const;
  // y -= a * x
  void sub_mul(Elem& y, const Elem& a, const Elem& x) const;
  void scale(Elem& y, const Elem& a) const { y *= a; }
  std::string name() const { return "Q"; }
  bool operator==(const RationalField&) const { return true; }
};

// Z/pZ for primes p < 2^31 with Barrett reduction of 64-bit products.
class PrimeField {
 public:
  using Elem = std::uint32_t;

  // Throws BadPrime if p is not a prime in [2, 2^31).
  explicit PrimeField(std::uint32_t p);
  PrimeField();  // uses kPrime1

  std::uint32_t modulus() const { return p_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  // Throws BadPrime if p divides the denominator.
  Elem from_rat(const Rat& r) const;
  Elem from_int(long v) const;
  Elem from_mpz(const Int& v) const;
  bool is_zero(Elem a) const { return a == 0; }
  Elem add(Elem a, Elem b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
  Elem mul(Elem a, Elem b) const { return reduce(std::uint64_t(a) * b); }
  Elem inv(Elem a) const;
  Elem pow(Elem a, std::uint64_t e) const;
  void sub_mul(Elem& y, Elem a, Elem x) const {
    y = reduce(std::uint64_t(y) + std::uint64_t(p_ - a) * x);
  }
  void scale(Elem& y, Elem a) const { y = mul(y, a); }
  std::string name() const { return "F_" + std::to_string(p_); }
  bool operator==(const PrimeField& o) const { return p_ == o.p_; }

  std::uint32_t reduce(std::uint64_t x) const {
    std::uint64_t q = static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * m_) >> 64);
    std::uint64_t r = x - q * p_;
    while (r >= p_) r -= p_;
    return static_cast<std::uint32_t>(r);
  }

 private:
  std::uint32_t p_;
  std::uint64_t m_;  // floor(2^64 / p)
};

bool is_prime(std::uint64_t n);

// Default pair of 30-bit primes used by the fast path.
inline constexpr std::uint32_t kPrime1 = 1073741789u;
inline constexpr std::uint32_t kPrime2 = 1073741783u;

// The i-th prime below 2^30 counting downwards (i = 0 gives kPrime1).
std::uint32_t prime_below_2_30(std::size_t i);

// A 30-bit prime drawn from the seed, distinct from kPrime1 and kPrime2.
std::uint32_t seeded_prime(std::uint64_t seed);

}  // namespace tube::linalg
