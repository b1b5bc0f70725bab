#pragma once

// Fixed-size dense complex matrices (2x2 and 4x4) with the handful of
// operations the game needs: Kronecker product, adjoint, arithmetic,
// a cyclic-Jacobi Hermitian eigensolver and a PSD matrix square root.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>

#include "pennyflip/errors.hpp"

namespace pennyflip {

using Complex = std::complex<double>;

template <std::size_t N>
class Matrix {
 public:
  Matrix() = default;

  constexpr Complex& operator()(std::size_t i, std::size_t j) {
    return entries_[i * N + j];
  }
  constexpr const Complex& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * N + j];
  }

  static constexpr std::size_t size() { return N; }

  static Matrix identity() {
    Matrix m;
    for (std::size_t i = 0; i < N; ++i) m(i, i) = 1.0;
    return m;
  }

  static Matrix zero() { return Matrix{}; }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    Matrix r;
    for (std::size_t i = 0; i < N * N; ++i) r.entries_[i] = a.entries_[i] + b.entries_[i];
    return r;
  }

  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    Matrix r;
    for (std::size_t i = 0; i < N * N; ++i) r.entries_[i] = a.entries_[i] - b.entries_[i];
    return r;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    Matrix r;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t k = 0; k < N; ++k) {
        const Complex aik = a(i, k);
        for (std::size_t j = 0; j < N; ++j) r(i, j) += aik * b(k, j);
      }
    return r;
  }

 private:
  std::array<Complex, N * N> entries_{};
};

using Mat2 = Matrix<2>;
using Mat4 = Matrix<4>;

template <std::size_t N>
Matrix<N> scale(Complex c, const Matrix<N>& m) {
  Matrix<N> r;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) r(i, j) = c * m(i, j);
  return r;
}

template <std::size_t N>
Matrix<N> adjoint(const Matrix<N>& m) {
  Matrix<N> r;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) r(i, j) = std::conj(m(j, i));
  return r;
}

template <std::size_t N>
Matrix<N> conj_elementwise(const Matrix<N>& m) {
  Matrix<N> r;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) r(i, j) = std::conj(m(i, j));
  return r;
}

template <std::size_t N>
Complex trace(const Matrix<N>& m) {
  Complex t = 0.0;
  for (std::size_t i = 0; i < N; ++i) t += m(i, i);
  return t;
}

template <std::size_t N>
double max_abs_diff(const Matrix<N>& a, const Matrix<N>& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) d = std::max(d, std::abs(a(i, j) - b(i, j)));
  return d;
}

template <std::size_t N>
bool is_hermitian(const Matrix<N>& m, double tol) {
  return max_abs_diff(m, adjoint(m)) <= tol;
}

template <std::size_t N>
bool is_unitary(const Matrix<N>& m, double tol) {
  return max_abs_diff(adjoint(m) * m, Matrix<N>::identity()) <= tol;
}

/// (kron(a,b))[2i+k][2j+l] = a[i][j] * b[k][l]
inline Mat4 kron(const Mat2& a, const Mat2& b) {
  Mat4 r;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t l = 0; l < 2; ++l) r(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
  return r;
}

struct EigenDecomposition {
  std::array<double, 4> values;  // descending
  Mat4 vectors;                  // columns, orthonormal
};

// Cyclic Jacobi for a 4x4 Hermitian matrix. Each pivot (p,q) is killed by
// a phase rotation that makes the off-diagonal entry real followed by a
// real Givens rotation. Converges when the off-diagonal Frobenius norm
// drops below 1e-12; at most 100 sweeps.
inline EigenDecomposition eig_hermitian(const Mat4& m, double herm_tol = 1e-10) {
  if (!is_hermitian(m, herm_tol)) throw NotHermitian("eig_hermitian: matrix is not Hermitian");

  Mat4 a = m;
  Mat4 v = Mat4::identity();

  auto offdiag_norm = [](const Mat4& x) {
    double s = 0.0;
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j)
        if (i != j) s += std::norm(x(i, j));
    return std::sqrt(s);
  };

  for (int sweep = 0; sweep < 100 && offdiag_norm(a) >= 1e-12; ++sweep) {
    for (std::size_t p = 0; p < 4; ++p) {
      for (std::size_t q = p + 1; q < 4; ++q) {
        const Complex apq = a(p, q);
        const double r = std::abs(apq);
        if (r < 1e-300) continue;
        const double phase = std::arg(apq);
        const double alpha = a(p, p).real();
        const double beta = a(q, q).real();
        const double theta = 0.5 * std::atan2(2.0 * r, alpha - beta);
        const double c = std::cos(theta);
        const double s = std::sin(theta);
        // R restricted to the (p,q) plane: [[c e^{i*ph/2}, -s e^{i*ph/2}],
        //                                   [s e^{-i*ph/2}, c e^{-i*ph/2}]]
        const Complex ep = std::polar(1.0, phase / 2.0);
        const Complex em = std::conj(ep);
        const Complex rpp = c * ep, rpq = -s * ep;
        const Complex rqp = s * em, rqq = c * em;

        // a <- R^dag a R, applied as column then row updates
        for (std::size_t i = 0; i < 4; ++i) {
          const Complex aip = a(i, p), aiq = a(i, q);
          a(i, p) = aip * rpp + aiq * rqp;
          a(i, q) = aip * rpq + aiq * rqq;
        }
        for (std::size_t j = 0; j < 4; ++j) {
          const Complex apj = a(p, j), aqj = a(q, j);
          a(p, j) = std::conj(rpp) * apj + std::conj(rqp) * aqj;
          a(q, j) = std::conj(rpq) * apj + std::conj(rqq) * aqj;
        }
        for (std::size_t i = 0; i < 4; ++i) {
          const Complex vip = v(i, p), viq = v(i, q);
          v(i, p) = vip * rpp + viq * rqp;
          v(i, q) = vip * rpq + viq * rqq;
        }
      }
    }
  }

  EigenDecomposition out;
  std::array<std::size_t, 4> order{0, 1, 2, 3};
  std::array<double, 4> diag;
  for (std::size_t i = 0; i < 4; ++i) diag[i] = a(i, i).real();
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return diag[x] > diag[y]; });
  for (std::size_t k = 0; k < 4; ++k) {
    out.values[k] = diag[order[k]];
    for (std::size_t i = 0; i < 4; ++i) out.vectors(i, k) = v(i, order[k]);
  }
  return out;
}

/// Hermitian PSD square root. Eigenvalues in (-1e-8, 0) are clamped to 0;
/// anything below -1e-8 is rejected.
inline Mat4 sqrt_psd(const Mat4& m) {
  const EigenDecomposition eig = eig_hermitian(m);
  std::array<double, 4> roots;
  for (std::size_t i = 0; i < 4; ++i) {
    double lambda = eig.values[i];
    if (lambda < -1e-8) throw NotPSD("sqrt_psd: eigenvalue below -1e-8");
    if (lambda < 0.0) lambda = 0.0;
    roots[i] = std::sqrt(lambda);
  }
  Mat4 r;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      Complex acc = 0.0;
      for (std::size_t k = 0; k < 4; ++k)
        acc += eig.vectors(i, k) * roots[k] * std::conj(eig.vectors(j, k));
      r(i, j) = acc;
    }
  return r;
}

}  // namespace pennyflip
