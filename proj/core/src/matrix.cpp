#include "tube/linalg/matrix.hpp"

#include <sstream>

namespace tube::linalg {

namespace {
const RationalField kQ;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) { return multiply(kQ, a, b); }

QMatrix operator+(const QMatrix& a, const QMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionMismatch("matrix sum: shapes differ");
  QMatrix c = a;
  for (std::size_t i = 0; i < c.data().size(); ++i) c.data()[i] += b.data()[i];
  return c;
}

QMatrix operator-(const QMatrix& a, const QMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionMismatch("matrix difference: shapes differ");
  QMatrix c = a;
  for (std::size_t i = 0; i < c.data().size(); ++i) c.data()[i] -= b.data()[i];
  return c;
}

QMatrix operator*(const Rat& s, const QMatrix& a) {
  QMatrix c = a;
  for (auto& x : c.data()) x *= s;
  return c;
}

QVector operator*(const QMatrix& a, std::span<const Rat> v) { return apply(kQ, a, v); }

QMatrix identity(std::size_t n) { return identity(kQ, n); }

QMatrix commutator(const QMatrix& a, const QMatrix& b) { return a * b - b * a; }

bool is_zero(const QMatrix& a) {
  for (const auto& x : a.data())
    if (sgn(x) != 0) return false;
  return true;
}

QMatrix from_columns(const std::vector<QVector>& cols, std::size_t length) {
  QMatrix m(length, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != length) throw DimensionMismatch("from_columns: wrong column length");
    for (std::size_t i = 0; i < length; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

std::string to_string(const QMatrix& a) {
  std::ostringstream out;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    out << '[';
    for (std::size_t j = 0; j < a.cols(); ++j) out << (j ? " " : "") << a(i, j).get_str();
    out << "]\n";
  }
  return out.str();
}

}  // namespace tube::linalg
