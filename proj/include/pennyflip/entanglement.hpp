#pragma once

// Wootters concurrence and the separable / non-maximal / maximal
// classification used to adjudicate the game.

#include <algorithm>
#include <cmath>

#include "pennyflip/errors.hpp"
#include "pennyflip/linalg.hpp"
#include "pennyflip/quantum.hpp"

namespace pennyflip {

struct Concurrence {
  double value = 0.0;  // clamped to [0,1]

  static Concurrence clamped(double raw) {
    return Concurrence{std::clamp(raw, 0.0, 1.0)};
  }
};

enum class EntanglementClass { Separable, NonMaximal, Maximal };

/// gamma = (sigma_y x sigma_y) rho^* (sigma_y x sigma_y)
inline Mat4 spin_flip(const DensityMatrix& rho) {
  const Mat4 yy = kron(gate_y(), gate_y());
  return yy * conj_elementwise(rho.mat()) * yy;
}

// C = max(l1 - l2 - l3 - l4, 0) with l_i the decreasing square roots of
// the eigenvalues of rho * gamma. Computed through the Hermitian
// equivalent sqrt(rho) * gamma * sqrt(rho), which shares that spectrum.
inline Concurrence concurrence(const DensityMatrix& rho) {
  const Mat4 root = sqrt_psd(rho.mat());
  const Mat4 herm = root * spin_flip(rho) * root;
  const EigenDecomposition eig = eig_hermitian(herm);
  std::array<double, 4> lambda;
  for (std::size_t i = 0; i < 4; ++i) {
    double v = eig.values[i];
    // rank-deficient states leave eigenvalue noise at machine-epsilon
    // scale, which the square root would amplify to ~1e-8
    if (v < 1e-13) v = 0.0;
    lambda[i] = std::sqrt(v);
  }
  return Concurrence::clamped(lambda[0] - lambda[1] - lambda[2] - lambda[3]);
}

/// Pure-state cross-check: C = |<psi| sigma_y x sigma_y |psi^*>|
inline Concurrence concurrence_pure_oracle(const StateVector& psi) {
  const Mat4 yy = kron(gate_y(), gate_y());
  Complex inner = 0.0;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      inner += std::conj(psi[i]) * yy(i, j) * std::conj(psi[j]);
  return Concurrence::clamped(std::abs(inner));
}

inline EntanglementClass classify(Concurrence c, double tol_sep = 1e-6, double tol_max = 1e-6) {
  if (!(tol_sep > 0.0 && tol_sep < 0.5 && tol_max > 0.0 && tol_max < 0.5))
    throw BadTolerance("classify: tolerances must lie in (0, 0.5)");
  if (c.value < tol_sep) return EntanglementClass::Separable;
  if (c.value > 1.0 - tol_max) return EntanglementClass::Maximal;
  return EntanglementClass::NonMaximal;
}

}  // namespace pennyflip
