#pragma once

// Parameter-sweep harness: concurrence vs the flip probability or vs any
// of Q's six unitary angles, plus a randomized audit of the p = 1/2
// defeat claim. Rows come out in grid order and serialize to CSV.

#include <cstdint>
#include <numbers>
#include <optional>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "pennyflip/errors.hpp"
#include "pennyflip/game.hpp"

namespace pennyflip {

enum class SweepVariable { P, Theta1, Theta2, Phi1, Phi2, Phi1Prime, Phi2Prime };

struct SweepConfig {
  SweepVariable variable = SweepVariable::P;
  double start = 0.0;
  double stop = 1.0;
  int steps = 101;
  double p = 0.5;                           // fixed flip probability for angle sweeps
  QuantumStrategy q{hadamard_params(), hadamard_params()};
  Tolerances tol{};
  std::uint64_t seed = 0;
};

struct SweepRow {
  double p;
  UnitaryParams first;
  UnitaryParams second;
  double concurrence;
  Outcome outcome;
};

namespace detail {

inline void check_grid(const SweepConfig& cfg) {
  if (cfg.steps < 2) throw BadConfig("sweep: steps must be >= 2");
  if (!(cfg.start < cfg.stop)) throw BadConfig("sweep: start must be < stop");
}

inline double grid_point(const SweepConfig& cfg, int i) {
  return cfg.start + (cfg.stop - cfg.start) * static_cast<double>(i) /
                         static_cast<double>(cfg.steps - 1);
}

inline SweepRow run_point(double p, const QuantumStrategy& q, Tolerances tol) {
  const GameRecord rec = play_entangled_mixed(p, Strategy{q}, tol);
  return SweepRow{p, q.first, q.second, rec.concurrence.value, rec.outcome};
}

}  // namespace detail

inline std::vector<SweepRow> sweep_p(const SweepConfig& cfg) {
  if (cfg.variable != SweepVariable::P) throw BadConfig("sweep_p: variable must be p");
  detail::check_grid(cfg);
  if (!(cfg.start >= 0.0 && cfg.stop <= 1.0)) throw BadConfig("sweep_p: grid outside [0,1]");
  std::vector<SweepRow> rows;
  rows.reserve(static_cast<std::size_t>(cfg.steps));
  for (int i = 0; i < cfg.steps; ++i)
    rows.push_back(detail::run_point(detail::grid_point(cfg, i), cfg.q, cfg.tol));
  return rows;
}

inline std::vector<SweepRow> sweep_angle(const SweepConfig& cfg) {
  if (cfg.variable == SweepVariable::P) throw BadConfig("sweep_angle: variable must be an angle");
  detail::check_grid(cfg);
  if (!(cfg.p >= 0.0 && cfg.p <= 1.0)) throw BadConfig("sweep_angle: fixed p outside [0,1]");
  std::vector<SweepRow> rows;
  rows.reserve(static_cast<std::size_t>(cfg.steps));
  for (int i = 0; i < cfg.steps; ++i) {
    const double x = detail::grid_point(cfg, i);
    QuantumStrategy q = cfg.q;
    switch (cfg.variable) {
      case SweepVariable::Theta1: q.first.theta = x; break;
      case SweepVariable::Theta2: q.second.theta = x; break;
      case SweepVariable::Phi1: q.first.phi = x; break;
      case SweepVariable::Phi2: q.second.phi = x; break;
      case SweepVariable::Phi1Prime: q.first.phi_prime = x; break;
      case SweepVariable::Phi2Prime: q.second.phi_prime = x; break;
      case SweepVariable::P: break;  // excluded above
    }
    rows.push_back(detail::run_point(cfg.p, q, cfg.tol));
  }
  return rows;
}

struct AuditResult {
  double max_concurrence = 0.0;
  QuantumStrategy worst_params;
};

/// Draws n random (U1, U2) pairs (angles uniform over [0, 2*pi)) and plays
/// each against p = 1/2. Deterministic given the seed.
inline AuditResult audit_p_half(int n, std::uint64_t seed, Tolerances tol = {}) {
  if (n < 1) throw BadConfig("audit_p_half: n must be >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  // draw everything up front so evaluation order cannot change the stream
  std::vector<QuantumStrategy> draws;
  draws.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    QuantumStrategy q;
    q.first = {angle(rng), angle(rng), angle(rng)};
    q.second = {angle(rng), angle(rng), angle(rng)};
    draws.push_back(q);
  }
  AuditResult result;
  result.worst_params = draws.front();
  for (const QuantumStrategy& q : draws) {
    const GameRecord rec = play_entangled_mixed(0.5, Strategy{q}, tol);
    if (rec.concurrence.value > result.max_concurrence) {
      result.max_concurrence = rec.concurrence.value;
      result.worst_params = q;
    }
  }
  return result;
}

inline const char* outcome_label(Outcome o) {
  switch (o) {
    case Outcome::QWins: return "Q";
    case Outcome::PWins: return "P";
    case Outcome::Draw: return "DRAW";
  }
  return "?";
}

inline constexpr const char* kRngName = "mt19937_64";

inline void write_csv(const std::vector<SweepRow>& rows, std::ostream& out,
                      std::optional<std::uint64_t> seed = std::nullopt) {
  if (seed) out << "# seed=" << *seed << " rng=" << kRngName << "\n";
  out << "p,theta1,phi1,phi1p,theta2,phi2,phi2p,concurrence,outcome\n";
  for (const SweepRow& r : rows) {
    out << detail::fmt12(r.p) << ',' << detail::fmt12(r.first.theta) << ','
        << detail::fmt12(r.first.phi) << ',' << detail::fmt12(r.first.phi_prime) << ','
        << detail::fmt12(r.second.theta) << ',' << detail::fmt12(r.second.phi) << ','
        << detail::fmt12(r.second.phi_prime) << ',' << detail::fmt12(r.concurrence) << ','
        << outcome_label(r.outcome) << '\n';
  }
}

}  // namespace pennyflip
