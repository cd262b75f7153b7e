#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>

namespace fourmode {

using cplx = std::complex<double>;

/// Dense 2x2 complex matrix, row-major.
struct Mat2 {
  std::array<cplx, 4> e{};

  cplx& operator()(int i, int j) { return e[static_cast<std::size_t>(2 * i + j)]; }
  const cplx& operator()(int i, int j) const { return e[static_cast<std::size_t>(2 * i + j)]; }

  static Mat2 identity() {
    Mat2 m;
    m(0, 0) = m(1, 1) = 1.0;
    return m;
  }
};

inline Mat2 operator*(const Mat2& a, const Mat2& b) {
  Mat2 c;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      c(i, j) = a(i, 0) * b(0, j) + a(i, 1) * b(1, j);
  return c;
}

inline Mat2 adjoint(const Mat2& a) {
  Mat2 c;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      c(i, j) = std::conj(a(j, i));
  return c;
}

inline cplx det(const Mat2& a) { return a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0); }

inline double max_abs_diff(const Mat2& a, const Mat2& b) {
  double m = 0.0;
  for (std::size_t k = 0; k < 4; ++k) m = std::max(m, std::abs(a.e[k] - b.e[k]));
  return m;
}

/// Max-norm deviation of U†U from the identity.
inline double unitarity_defect(const Mat2& u) {
  Mat2 g = adjoint(u) * u;
  g(0, 0) -= 1.0;
  g(1, 1) -= 1.0;
  double m = 0.0;
  for (std::size_t k = 0; k < 4; ++k) m = std::max(m, std::abs(g.e[k]));
  return m;
}

inline bool is_unitary(const Mat2& u, double tol = 1e-12) { return unitarity_defect(u) <= tol; }

/// Dense 4x4 complex matrix, row-major.
struct Mat4 {
  std::array<cplx, 16> e{};

  cplx& operator()(int i, int j) { return e[static_cast<std::size_t>(4 * i + j)]; }
  const cplx& operator()(int i, int j) const { return e[static_cast<std::size_t>(4 * i + j)]; }

  static Mat4 identity() {
    Mat4 m;
    for (int i = 0; i < 4; ++i) m(i, i) = 1.0;
    return m;
  }
};

inline Mat4 operator*(const Mat4& a, const Mat4& b) {
  Mat4 c;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      cplx s = 0.0;
      for (int k = 0; k < 4; ++k) s += a(i, k) * b(k, j);
      c(i, j) = s;
    }
  return c;
}

inline Mat4 adjoint(const Mat4& a) {
  Mat4 c;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      c(i, j) = std::conj(a(j, i));
  return c;
}

inline Mat4 kron(const Mat2& a, const Mat2& b) {
  Mat4 c;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l)
          c(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
  return c;
}

/// K rho K†
inline Mat4 sandwich(const Mat4& k, const Mat4& rho) { return k * rho * adjoint(k); }

inline cplx trace(const Mat4& a) { return a(0, 0) + a(1, 1) + a(2, 2) + a(3, 3); }

inline double hermiticity_defect(const Mat4& a) {
  double m = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      m = std::max(m, std::abs(a(i, j) - std::conj(a(j, i))));
  return m;
}

/// Eigenvalues of a 4x4 Hermitian matrix via cyclic Jacobi on the real 8x8
/// embedding [[Re, -Im], [Im, Re]]; each eigenvalue appears twice.
std::array<double, 4> hermitian_eigenvalues(const Mat4& a);

}  // namespace fourmode
