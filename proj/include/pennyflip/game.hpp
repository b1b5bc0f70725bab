#pragma once

// Game protocols: Meyer's single-qubit penny flip, the entangled penny
// flip against a pure or mixed classical player, adjudication by
// concurrence, and a textual circuit transcript.

#include <array>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>
#include <variant>
#include <vector>

#include "pennyflip/entanglement.hpp"
#include "pennyflip/errors.hpp"
#include "pennyflip/quantum.hpp"

namespace pennyflip {

enum class ClassicalMove { Flip, NoFlip };

struct ClassicalPure {
  ClassicalMove move;
};

struct ClassicalMixed {
  double p;
};

struct QuantumStrategy {
  UnitaryParams first;
  UnitaryParams second;
};

using Strategy = std::variant<ClassicalPure, ClassicalMixed, QuantumStrategy>;

enum class Outcome { QWins, PWins, Draw };

struct Payoffs {
  double p = 0.0;
  double q = 0.0;
};

struct GameRecord {
  DensityMatrix initial;
  Strategy q_strategy;
  Strategy p_strategy;
  DensityMatrix final_state;
  Concurrence concurrence;
  Outcome outcome;
  Payoffs payoffs;
};

struct Tolerances {
  double sep = 1e-6;
  double max = 1e-6;
};

inline Outcome adjudicate(Concurrence c, double tol_sep = 1e-6, double tol_max = 1e-6) {
  switch (classify(c, tol_sep, tol_max)) {
    case EntanglementClass::Maximal: return Outcome::QWins;
    case EntanglementClass::Separable: return Outcome::PWins;
    case EntanglementClass::NonMaximal: return Outcome::Draw;
  }
  throw BadConfig("adjudicate: unreachable");
}

inline Payoffs payoffs_for(Outcome o) {
  switch (o) {
    case Outcome::QWins: return {-1.0, 1.0};
    case Outcome::PWins: return {1.0, -1.0};
    case Outcome::Draw: return {0.0, 0.0};
  }
  throw BadConfig("payoffs_for: unreachable");
}

namespace detail {

inline GameRecord finish(DensityMatrix initial, Strategy q, Strategy p, DensityMatrix final_state,
                         Tolerances tol) {
  const Concurrence c = concurrence(final_state);
  const Outcome o = adjudicate(c, tol.sep, tol.max);
  return GameRecord{std::move(initial), std::move(q), std::move(p), std::move(final_state),
                    c, o, payoffs_for(o)};
}

}  // namespace detail

/// Q -> P -> Q on the shared singlet, P restricted to flip / no-flip.
inline GameRecord play_entangled_pure(ClassicalMove p_move, const Strategy& q,
                                      Tolerances tol = {}) {
  const auto* qs = std::get_if<QuantumStrategy>(&q);
  if (qs == nullptr) throw WrongStrategyKind("play_entangled_pure: Q must play quantum");
  const DensityMatrix initial = density_from_state(bell_state(BellKind::PsiMinus));
  DensityMatrix rho = apply_local_unitary(initial, su2(qs->first), Side::QubitQ);
  rho = apply_local_unitary(rho, p_move == ClassicalMove::Flip ? gate_x() : gate_i(), Side::QubitP);
  rho = apply_local_unitary(rho, su2(qs->second), Side::QubitQ);
  return detail::finish(initial, q, Strategy{ClassicalPure{p_move}}, rho, tol);
}

/// Q -> P -> Q with P flipping with probability p.
inline GameRecord play_entangled_mixed(double p, const Strategy& q, Tolerances tol = {}) {
  const auto* qs = std::get_if<QuantumStrategy>(&q);
  if (qs == nullptr) throw WrongStrategyKind("play_entangled_mixed: Q must play quantum");
  if (!(p >= 0.0 && p <= 1.0)) throw ProbabilityOutOfRange("play_entangled_mixed: p outside [0,1]");
  const DensityMatrix initial = density_from_state(bell_state(BellKind::PsiMinus));
  DensityMatrix rho = apply_local_unitary(initial, su2(qs->first), Side::QubitQ);
  rho = flip_channel(rho, p);
  rho = apply_local_unitary(rho, su2(qs->second), Side::QubitQ);
  return detail::finish(initial, q, Strategy{ClassicalMixed{p}}, rho, tol);
}

enum class MeyerWinner { Q, P };

struct MeyerResult {
  std::array<Complex, 2> final_state;
  MeyerWinner winner;
};

/// |0> -> H -> (X or I) -> H; Q wins iff the penny comes back heads.
inline MeyerResult play_meyer(ClassicalMove p_move) {
  const Mat2 h = gate_h();
  const Mat2 mid = p_move == ClassicalMove::Flip ? gate_x() : gate_i();
  const Mat2 total = h * mid * h;
  const std::array<Complex, 2> final_state{total(0, 0), total(1, 0)};
  // phase-insensitive heads test (H X H = Z phases |1> only)
  const bool heads = std::norm(final_state[0]) > 1.0 - 1e-10;
  return MeyerResult{final_state, heads ? MeyerWinner::Q : MeyerWinner::P};
}

namespace detail {

inline std::string fmt12(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

}  // namespace detail

using CircuitTranscript = std::vector<std::string>;

// Gate list for the mixed game: Bell preparation (H, CNOT, then Y on q1
// turns |Phi+> into the singlet up to global phase), Q's two unitaries,
// P's probabilistic flip, and the concurrence measurement.
inline CircuitTranscript game_to_circuit(double p, const Strategy& q) {
  const auto* qs = std::get_if<QuantumStrategy>(&q);
  if (qs == nullptr) throw WrongStrategyKind("game_to_circuit: Q must play quantum");
  if (!(p >= 0.0 && p <= 1.0)) throw ProbabilityOutOfRange("game_to_circuit: p outside [0,1]");
  auto u_line = [](const UnitaryParams& u) {
    return "U(" + detail::fmt12(u.theta) + "," + detail::fmt12(u.phi) + "," +
           detail::fmt12(u.phi_prime) + ") q0";
  };
  return CircuitTranscript{
      "H q0",
      "CNOT q0 q1",
      "Y q1",
      u_line(qs->first),
      "FLIP? p=" + detail::fmt12(p) + " q1",
      u_line(qs->second),
      "MEASURE-CONCURRENCE q0 q1",
  };
}

}  // namespace pennyflip
