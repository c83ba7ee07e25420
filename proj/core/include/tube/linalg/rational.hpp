#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tube {

using Rat = mpq_class;
using Int = mpz_class;
using QVector = std::vector<Rat>;

// Canonicalized num/den.
inline Rat rat(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Rat& r);

// Accepts "n", "-n", "n/d". Throws std::invalid_argument on malformed input.
Rat parse_rat(std::string_view text);

QVector zero_vector(std::size_t n);
QVector unit_vector(std::size_t n, std::size_t i);
bool is_zero(std::span<const Rat> v);
Rat dot(std::span<const Rat> a, std::span<const Rat> b);

// Scales v by a positive rational so that entries are coprime integers.
QVector primitive(std::span<const Rat> v);

}  // namespace tube
