#pragma once

#include <array>
#include <cstddef>

namespace tube::zoo {

// Split octonions as Zorn vector matrices (a, v; v', b) with coordinates
// ordered (a, v1, v2, v3, v'1, v'2, v'3, b). T is any commutative ring type
// with +, -, * and unary minus.
template <class T>
struct SplitOctonion {
  std::array<T, 8> c;

  const T& a() const { return c[0]; }
  const T& b() const { return c[7]; }
  const T& v(int i) const { return c[1 + i]; }
  const T& w(int i) const { return c[4 + i]; }  // v'

  static SplitOctonion filled(const T& zero) {
    SplitOctonion o;
    o.c.fill(zero);
    return o;
  }

  friend SplitOctonion operator+(const SplitOctonion& x, const SplitOctonion& y) {
    SplitOctonion r = x;
    for (int i = 0; i < 8; ++i) r.c[i] = x.c[i] + y.c[i];
    return r;
  }
  friend SplitOctonion operator-(const SplitOctonion& x, const SplitOctonion& y) {
    SplitOctonion r = x;
    for (int i = 0; i < 8; ++i) r.c[i] = x.c[i] - y.c[i];
    return r;
  }
  friend SplitOctonion operator*(const T& s, const SplitOctonion& x) {
    SplitOctonion r = x;
    for (int i = 0; i < 8; ++i) r.c[i] = s * x.c[i];
    return r;
  }

  friend SplitOctonion operator*(const SplitOctonion& x, const SplitOctonion& y) {
    auto dot = [](const SplitOctonion& p, int po, const SplitOctonion& q, int qo) -> T {
      return p.c[po] * q.c[qo] + p.c[po + 1] * q.c[qo + 1] + p.c[po + 2] * q.c[qo + 2];
    };
    // cross product of the 3-vectors starting at offsets po and qo
    auto cross = [](const SplitOctonion& p, int po, const SplitOctonion& q, int qo, int i) -> T {
      int j = (i + 1) % 3, k = (i + 2) % 3;
      return p.c[po + j] * q.c[qo + k] - p.c[po + k] * q.c[qo + j];
    };
    SplitOctonion r = x;
    r.c[0] = x.c[0] * y.c[0] + dot(x, 1, y, 4);
    r.c[7] = x.c[7] * y.c[7] + dot(x, 4, y, 1);
    for (int i = 0; i < 3; ++i) {
      r.c[1 + i] = x.c[0] * y.c[1 + i] + y.c[7] * x.c[1 + i] + cross(x, 4, y, 4, i);
      r.c[4 + i] = y.c[0] * x.c[4 + i] + x.c[7] * y.c[4 + i] - cross(x, 1, y, 1, i);
    }
    return r;
  }

  SplitOctonion conj() const {
    SplitOctonion r = *this;
    r.c[0] = c[7];
    r.c[7] = c[0];
    for (int i = 1; i < 7; ++i) r.c[i] = -c[i];
    return r;
  }

  // a b - v . v'
  T norm() const { return c[0] * c[7] - (c[1] * c[4] + c[2] * c[5] + c[3] * c[6]); }
};

// Element of the exceptional Jordan algebra, diagonal (a, b, c) and
// off-diagonal octonions (x, y, z); 27 coordinates (a, b, c, x, y, z).
template <class T>
struct JordanElem {
  T a, b, c;
  SplitOctonion<T> x, y, z;

  // Quadratic adjoint X^#; X is rank one iff X^# = 0 and X != 0.
  JordanElem sharp() const {
    return {b * c - x.norm(), c * a - y.norm(), a * b - z.norm(),
            (y * z).conj() - a * x, (z * x).conj() - b * y, (x * y).conj() - c * z};
  }

  std::array<T, 27> coordinates() const {
    std::array<T, 27> out;
    out[0] = a;
    out[1] = b;
    out[2] = c;
    for (int i = 0; i < 8; ++i) {
      out[3 + i] = x.c[i];
      out[11 + i] = y.c[i];
      out[19 + i] = z.c[i];
    }
    return out;
  }
};

}  // namespace tube::zoo
