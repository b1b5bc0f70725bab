#pragma once

// Two-qubit state construction and the moves of the entangled penny flip:
// Q's parameterized unitaries on the first qubit and P's probabilistic
// flip channel on the second.
//
// Basis order throughout: |00>, |01>, |10>, |11>, first symbol Q's qubit,
// second P's qubit, so Q acts as U (x) I and P as I (x) X.

#include <array>
#include <cassert>
#include <cmath>
#include <numbers>

#include "pennyflip/errors.hpp"
#include "pennyflip/linalg.hpp"

namespace pennyflip {

class StateVector {
 public:
  explicit StateVector(std::array<Complex, 4> amplitudes, double norm_tol = 1e-10)
      : amplitudes_(amplitudes) {
    double n = 0.0;
    for (const Complex& a : amplitudes_) n += std::norm(a);
    if (std::abs(std::sqrt(n) - 1.0) > norm_tol)
      throw NotNormalized("StateVector: amplitudes are not normalized");
  }

  const Complex& operator[](std::size_t i) const { return amplitudes_[i]; }
  const std::array<Complex, 4>& amplitudes() const { return amplitudes_; }

 private:
  std::array<Complex, 4> amplitudes_;
};

inline Mat2 gate_i() { return Mat2::identity(); }

inline Mat2 gate_x() {
  Mat2 m;
  m(0, 1) = 1.0;
  m(1, 0) = 1.0;
  return m;
}

inline Mat2 gate_y() {
  Mat2 m;
  m(0, 1) = Complex(0.0, -1.0);
  m(1, 0) = Complex(0.0, 1.0);
  return m;
}

inline Mat2 gate_z() {
  Mat2 m;
  m(0, 0) = 1.0;
  m(1, 1) = -1.0;
  return m;
}

inline Mat2 gate_h() {
  const double s = 1.0 / std::numbers::sqrt2;
  Mat2 m;
  m(0, 0) = s;
  m(0, 1) = s;
  m(1, 0) = s;
  m(1, 1) = -s;
  return m;
}

enum class BellKind { PsiMinus, PsiPlus, PhiMinus, PhiPlus };

inline StateVector bell_state(BellKind kind) {
  const double s = 1.0 / std::numbers::sqrt2;
  switch (kind) {
    case BellKind::PsiMinus: return StateVector({0.0, -s, s, 0.0});
    case BellKind::PsiPlus:  return StateVector({0.0, s, s, 0.0});
    case BellKind::PhiMinus: return StateVector({s, 0.0, 0.0, -s});
    case BellKind::PhiPlus:  return StateVector({s, 0.0, 0.0, s});
  }
  throw BadConfig("bell_state: unknown kind");
}

class DensityMatrix {
 public:
  // Validates Hermiticity and unit trace; positivity is checked in debug
  // builds only (it needs the eigensolver).
  explicit DensityMatrix(const Mat4& m) : mat_(m) {
    if (!is_hermitian(mat_, 1e-10)) throw NotHermitian("DensityMatrix: not Hermitian");
    if (std::abs(trace(mat_) - Complex(1.0)) > 1e-10)
      throw NotHermitian("DensityMatrix: trace is not 1");
    assert(min_eigenvalue() >= -1e-8 && "DensityMatrix: not PSD");
  }

  const Mat4& mat() const { return mat_; }

  double min_eigenvalue() const { return eig_hermitian(mat_).values[3]; }

 private:
  Mat4 mat_;
};

/// rho = |psi><psi|
inline DensityMatrix density_from_state(const StateVector& psi) {
  Mat4 m;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) m(i, j) = psi[i] * std::conj(psi[j]);
  return DensityMatrix(m);
}

struct UnitaryParams {
  double theta = 0.0;
  double phi = 0.0;
  double phi_prime = 0.0;
};

inline UnitaryParams hadamard_params() { return {std::numbers::pi / 4.0, 0.0, 0.0}; }

/// U = [[cos(t) e^{i phi},  sin(t) e^{i phi'}],
///      [sin(t) e^{-i phi'}, -cos(t) e^{-i phi}]]
inline Mat2 su2(const UnitaryParams& p) {
  const double ct = std::cos(p.theta);
  const double st = std::sin(p.theta);
  Mat2 u;
  u(0, 0) = ct * std::polar(1.0, p.phi);
  u(0, 1) = st * std::polar(1.0, p.phi_prime);
  u(1, 0) = st * std::polar(1.0, -p.phi_prime);
  u(1, 1) = -ct * std::polar(1.0, -p.phi);
  return u;
}

enum class Side { QubitQ, QubitP };

/// Conjugation by u (x) I (QubitQ) or I (x) u (QubitP).
inline DensityMatrix apply_local_unitary(const DensityMatrix& rho, const Mat2& u, Side side) {
  if (!is_unitary(u, 1e-10)) throw NotUnitary("apply_local_unitary: matrix is not unitary");
  const Mat4 big = side == Side::QubitQ ? kron(u, gate_i()) : kron(gate_i(), u);
  return DensityMatrix(big * rho.mat() * adjoint(big));
}

/// rho' = p (I x X) rho (I x X)^dag + (1-p) rho
inline DensityMatrix flip_channel(const DensityMatrix& rho, double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw ProbabilityOutOfRange("flip_channel: p outside [0,1]");
  const Mat4 flip = kron(gate_i(), gate_x());
  const Mat4 flipped = flip * rho.mat() * adjoint(flip);
  return DensityMatrix(scale(p, flipped) + scale(1.0 - p, rho.mat()));
}

/// Final state of the Hadamard game in closed form:
/// 1/2 [[p,0,0,-p],[0,1-p,-1+p,0],[0,-1+p,1-p,0],[-p,0,0,p]]
inline DensityMatrix rho3_hadamard_closed_form(double p) {
  if (!(p >= 0.0 && p <= 1.0))
    throw ProbabilityOutOfRange("rho3_hadamard_closed_form: p outside [0,1]");
  Mat4 m;
  m(0, 0) = p / 2.0;
  m(0, 3) = -p / 2.0;
  m(3, 0) = -p / 2.0;
  m(3, 3) = p / 2.0;
  m(1, 1) = (1.0 - p) / 2.0;
  m(1, 2) = (-1.0 + p) / 2.0;
  m(2, 1) = (-1.0 + p) / 2.0;
  m(2, 2) = (1.0 - p) / 2.0;
  return DensityMatrix(m);
}

}  // namespace pennyflip
