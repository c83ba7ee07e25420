#include "tube/linalg/field.hpp"

#include <mutex>
#include <random>

#include "tube/error.hpp"

namespace tube::linalg {

RationalField::Elem RationalField::inv(const Elem& a) const {
  if (sgn(a) == 0) throw NotInvertible("division by zero");
  return Rat(1) / a;
}

void RationalField::sub_mul(Elem& y, const Elem& a, const Elem& x) const {
  static thread_local Rat tmp;
  mpq_mul(tmp.get_mpq_t(), a.get_mpq_t(), x.get_mpq_t());
  mpq_sub(y.get_mpq_t(), y.get_mpq_t(), tmp.get_mpq_t());
}

bool is_prime(std::uint64_t n) {
  Int z(std::to_string(n));
  return mpz_probab_prime_p(z.get_mpz_t(), 40) > 0;
}

PrimeField::PrimeField() : PrimeField(kPrime1) {}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p < 2 || p >= (1u << 31) || !is_prime(p)) throw BadPrime("not a usable prime: " + std::to_string(p));
  m_ = static_cast<std::uint64_t>((static_cast<unsigned __int128>(1) << 64) / p);
}

PrimeField::Elem PrimeField::from_mpz(const Int& v) const {
  return static_cast<Elem>(mpz_fdiv_ui(v.get_mpz_t(), p_));
}

PrimeField::Elem PrimeField::from_int(long v) const {
  long r = v % static_cast<long>(p_);
  if (r < 0) r += p_;
  return static_cast<Elem>(r);
}

PrimeField::Elem PrimeField::from_rat(const Rat& r) const {
  Elem den = static_cast<Elem>(mpz_fdiv_ui(r.get_den_mpz_t(), p_));
  if (den == 0) throw BadPrime("prime " + std::to_string(p_) + " divides a denominator");
  Elem num = static_cast<Elem>(mpz_fdiv_ui(r.get_num_mpz_t(), p_));
  return mul(num, inv(den));
}

PrimeField::Elem PrimeField::pow(Elem a, std::uint64_t e) const {
  Elem result = 1;
  while (e) {
    if (e & 1) result = mul(result, a);
    a = mul(a, a);
    e >>= 1;
  }
  return result;
}

PrimeField::Elem PrimeField::inv(Elem a) const {
  if (a == 0) throw NotInvertible("division by zero mod " + std::to_string(p_));
  return pow(a, p_ - 2);
}

std::uint32_t prime_below_2_30(std::size_t i) {
  static std::mutex mu;
  static std::vector<std::uint32_t> cache;
  static std::uint32_t next = (1u << 30) - 1;
  std::lock_guard<std::mutex> lock(mu);
  while (cache.size() <= i) {
    while (!is_prime(next)) --next;
    cache.push_back(next--);
  }
  return cache[i];
}

std::uint32_t seeded_prime(std::uint64_t seed) {
  std::mt19937_64 gen(seed ^ 0x9e3779b97f4a7c15ULL);
  for (;;) {
    std::uint32_t candidate = static_cast<std::uint32_t>((1u << 29) + (gen() % (1u << 29)));
    if (candidate != kPrime1 && candidate != kPrime2 && is_prime(candidate)) return candidate;
  }
}

}  // namespace tube::linalg
