#pragma once

// Classical limits: matching pennies, the PQ penny flip, mixed-strategy
// Nash verification by pure-deviation enumeration, and the reduction of
// the entangled game to matching pennies.

#include <array>
#include <cmath>
#include <string>
#include <variant>

#include "pennyflip/errors.hpp"
#include "pennyflip/game.hpp"

namespace pennyflip {

enum class PennyFace { Head, Tail };  // Head = bit 0, Tail = bit 1

struct Payoff {
  int p = 0;
  int q = 0;
};

/// P wins when the disclosed faces match.
inline Payoff matching_pennies_payoff(PennyFace p_choice, PennyFace q_choice) {
  return p_choice == q_choice ? Payoff{1, -1} : Payoff{-1, 1};
}

/// Heads-up penny through Q, P, Q; Q wins on a final head.
inline Payoff pq_pennyflip_payoff(ClassicalMove p_action,
                                  std::array<ClassicalMove, 2> q_actions) {
  int bit = 0;
  if (q_actions[0] == ClassicalMove::Flip) bit ^= 1;
  if (p_action == ClassicalMove::Flip) bit ^= 1;
  if (q_actions[1] == ClassicalMove::Flip) bit ^= 1;
  return bit == 0 ? Payoff{-1, 1} : Payoff{1, -1};
}

struct MatchingPenniesProfile {
  double p_head_p;  // P plays Head with this probability
  double p_head_q;
};

struct PqPennyFlipProfile {
  double p_flip;                    // P's flip probability
  std::array<double, 4> q_weights;  // over {NN, NF, FN, FF}
};

using MixedProfile = std::variant<MatchingPenniesProfile, PqPennyFlipProfile>;

namespace detail {

inline void check_probability(double p, const char* what) {
  if (!(p >= 0.0 && p <= 1.0)) throw ProbabilityOutOfRange(what);
}

inline constexpr std::array<std::array<ClassicalMove, 2>, 4> kQJointActions{{
    {ClassicalMove::NoFlip, ClassicalMove::NoFlip},
    {ClassicalMove::NoFlip, ClassicalMove::Flip},
    {ClassicalMove::Flip, ClassicalMove::NoFlip},
    {ClassicalMove::Flip, ClassicalMove::Flip},
}};

}  // namespace detail

struct ExpectedPayoff {
  double p = 0.0;
  double q = 0.0;
};

inline ExpectedPayoff expected_payoff(const MixedProfile& profile) {
  if (const auto* mp = std::get_if<MatchingPenniesProfile>(&profile)) {
    detail::check_probability(mp->p_head_p, "expected_payoff: p_head_p outside [0,1]");
    detail::check_probability(mp->p_head_q, "expected_payoff: p_head_q outside [0,1]");
    ExpectedPayoff e;
    for (PennyFace pf : {PennyFace::Head, PennyFace::Tail})
      for (PennyFace qf : {PennyFace::Head, PennyFace::Tail}) {
        const double wp = pf == PennyFace::Head ? mp->p_head_p : 1.0 - mp->p_head_p;
        const double wq = qf == PennyFace::Head ? mp->p_head_q : 1.0 - mp->p_head_q;
        const Payoff pay = matching_pennies_payoff(pf, qf);
        e.p += wp * wq * pay.p;
        e.q += wp * wq * pay.q;
      }
    return e;
  }
  const auto& pq = std::get<PqPennyFlipProfile>(profile);
  detail::check_probability(pq.p_flip, "expected_payoff: p_flip outside [0,1]");
  double wsum = 0.0;
  for (double w : pq.q_weights) {
    detail::check_probability(w, "expected_payoff: q weight outside [0,1]");
    wsum += w;
  }
  if (std::abs(wsum - 1.0) > 1e-12)
    throw ProfileShapeMismatch("expected_payoff: q weights must sum to 1");
  ExpectedPayoff e;
  for (ClassicalMove pm : {ClassicalMove::NoFlip, ClassicalMove::Flip}) {
    const double wp = pm == ClassicalMove::Flip ? pq.p_flip : 1.0 - pq.p_flip;
    for (std::size_t k = 0; k < 4; ++k) {
      const Payoff pay = pq_pennyflip_payoff(pm, detail::kQJointActions[k]);
      e.p += wp * pq.q_weights[k] * pay.p;
      e.q += wp * pq.q_weights[k] * pay.q;
    }
  }
  return e;
}

struct NashReport {
  bool is_equilibrium = true;
  std::string best_deviation;  // empty when none improves beyond tol
  double best_gain = 0.0;
};

/// Checks every pure deviation of each player against the profile.
inline NashReport verify_nash(const MixedProfile& profile, double tol = 1e-9) {
  const ExpectedPayoff base = expected_payoff(profile);
  NashReport report;
  auto consider = [&](double gain, std::string label) {
    if (gain > report.best_gain) {
      report.best_gain = gain;
      report.best_deviation = std::move(label);
    }
  };
  if (const auto* mp = std::get_if<MatchingPenniesProfile>(&profile)) {
    for (double dev : {1.0, 0.0}) {
      MixedProfile alt = MatchingPenniesProfile{dev, mp->p_head_q};
      consider(expected_payoff(alt).p - base.p,
               std::string("P plays ") + (dev == 1.0 ? "Head" : "Tail"));
    }
    for (double dev : {1.0, 0.0}) {
      MixedProfile alt = MatchingPenniesProfile{mp->p_head_p, dev};
      consider(expected_payoff(alt).q - base.q,
               std::string("Q plays ") + (dev == 1.0 ? "Head" : "Tail"));
    }
  } else {
    const auto& pq = std::get<PqPennyFlipProfile>(profile);
    expected_payoff(profile);  // validates shape
    for (double dev : {0.0, 1.0}) {
      MixedProfile alt = PqPennyFlipProfile{dev, pq.q_weights};
      consider(expected_payoff(alt).p - base.p,
               std::string("P plays ") + (dev == 1.0 ? "Flip" : "NoFlip"));
    }
    static constexpr const char* kLabels[4] = {"NN", "NF", "FN", "FF"};
    for (std::size_t k = 0; k < 4; ++k) {
      std::array<double, 4> w{};
      w[k] = 1.0;
      MixedProfile alt = PqPennyFlipProfile{pq.p_flip, w};
      consider(expected_payoff(alt).q - base.q, std::string("Q plays ") + kLabels[k]);
    }
  }
  report.is_equilibrium = report.best_gain <= tol;
  if (report.is_equilibrium) report.best_deviation.clear();
  return report;
}

enum class ReductionWinner { QWins, PWins };

/// Entangled game with entanglement and superposition switched off:
/// bits start at |10> or |01>, Q flips his bit twice, P once; Q wins on
/// matching bits.
inline ReductionWinner classical_reduction(std::array<int, 2> initial,
                                           std::array<ClassicalMove, 2> q_moves,
                                           ClassicalMove p_move) {
  const bool valid = (initial[0] == 1 && initial[1] == 0) || (initial[0] == 0 && initial[1] == 1);
  if (!valid) throw BadInitialState("classical_reduction: initial must be |10> or |01>");
  int q_bit = initial[0];
  int p_bit = initial[1];
  if (q_moves[0] == ClassicalMove::Flip) q_bit ^= 1;
  if (p_move == ClassicalMove::Flip) p_bit ^= 1;
  if (q_moves[1] == ClassicalMove::Flip) q_bit ^= 1;
  return q_bit == p_bit ? ReductionWinner::QWins : ReductionWinner::PWins;
}

}  // namespace pennyflip
