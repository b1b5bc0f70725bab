#include <catch2/catch_amalgamated.hpp>

#include "test_helpers.hpp"

using namespace pennyflip;

namespace {

constexpr std::array<ClassicalMove, 2> kMoves{ClassicalMove::NoFlip, ClassicalMove::Flip};

}  // namespace

TEST_CASE("matching pennies payoff matrix") {
  CHECK(matching_pennies_payoff(PennyFace::Head, PennyFace::Head).p == 1);
  CHECK(matching_pennies_payoff(PennyFace::Head, PennyFace::Tail).p == -1);
  CHECK(matching_pennies_payoff(PennyFace::Tail, PennyFace::Tail).p == 1);

  for (PennyFace pf : {PennyFace::Head, PennyFace::Tail})
    for (PennyFace qf : {PennyFace::Head, PennyFace::Tail}) {
      const Payoff pay = matching_pennies_payoff(pf, qf);
      CHECK(pay.p + pay.q == 0);
    }
}

TEST_CASE("PQ penny flip payoff matrix") {
  // printed 2x4 matrix, rows P in {N, F}, columns Q in {NN, NF, FN, FF}
  const int expected_p[2][4] = {{-1, 1, 1, -1}, {1, -1, -1, 1}};
  const std::array<std::array<ClassicalMove, 2>, 4> columns{{
      {ClassicalMove::NoFlip, ClassicalMove::NoFlip},
      {ClassicalMove::NoFlip, ClassicalMove::Flip},
      {ClassicalMove::Flip, ClassicalMove::NoFlip},
      {ClassicalMove::Flip, ClassicalMove::Flip},
  }};
  for (int row = 0; row < 2; ++row)
    for (int col = 0; col < 4; ++col) {
      const Payoff pay = pq_pennyflip_payoff(kMoves[row], columns[col]);
      CHECK(pay.p == expected_p[row][col]);
      CHECK(pay.p + pay.q == 0);
    }
}

TEST_CASE("expected payoffs at reference profiles") {
  const ExpectedPayoff mp = expected_payoff(MatchingPenniesProfile{0.5, 0.5});
  CHECK(mp.p == Catch::Approx(0.0).margin(1e-12));
  CHECK(mp.q == Catch::Approx(0.0).margin(1e-12));

  const ExpectedPayoff pq =
      expected_payoff(PqPennyFlipProfile{0.5, {0.25, 0.25, 0.25, 0.25}});
  CHECK(pq.p == Catch::Approx(0.0).margin(1e-12));
  CHECK(pq.q == Catch::Approx(0.0).margin(1e-12));

  const ExpectedPayoff pure = expected_payoff(MatchingPenniesProfile{1.0, 1.0});
  CHECK(pure.p == Catch::Approx(1.0).margin(1e-12));
  CHECK(pure.q == Catch::Approx(-1.0).margin(1e-12));
}

TEST_CASE("expected_payoff validates profiles") {
  CHECK_THROWS_AS(expected_payoff(PqPennyFlipProfile{0.5, {0.5, 0.5, 0.5, 0.5}}),
                  ProfileShapeMismatch);
  CHECK_THROWS_AS(expected_payoff(MatchingPenniesProfile{1.5, 0.5}), ProbabilityOutOfRange);
}

TEST_CASE("Nash verification at the paper's equilibria") {
  CHECK(verify_nash(MatchingPenniesProfile{0.5, 0.5}).is_equilibrium);
  CHECK(verify_nash(PqPennyFlipProfile{0.5, {0.25, 0.25, 0.25, 0.25}}).is_equilibrium);
}

TEST_CASE("Nash verification flags profitable deviations") {
  const NashReport report = verify_nash(MatchingPenniesProfile{1.0, 1.0});
  CHECK_FALSE(report.is_equilibrium);
  CHECK(report.best_gain == Catch::Approx(2.0).margin(1e-12));
  CHECK(report.best_deviation == "Q plays Tail");

  // against pure Head from P, Q still gains by switching to pure Tail
  const NashReport lopsided = verify_nash(MatchingPenniesProfile{1.0, 0.5});
  CHECK_FALSE(lopsided.is_equilibrium);
  CHECK(lopsided.best_deviation == "Q plays Tail");
  CHECK(lopsided.best_gain == Catch::Approx(1.0).margin(1e-12));
}

TEST_CASE("classical reduction examples") {
  CHECK(classical_reduction({1, 0}, {ClassicalMove::Flip, ClassicalMove::NoFlip},
                            ClassicalMove::NoFlip) == ReductionWinner::QWins);
  CHECK(classical_reduction({1, 0}, {ClassicalMove::NoFlip, ClassicalMove::NoFlip},
                            ClassicalMove::NoFlip) == ReductionWinner::PWins);
  CHECK_THROWS_AS(classical_reduction({1, 1}, {ClassicalMove::NoFlip, ClassicalMove::NoFlip},
                                      ClassicalMove::NoFlip),
                  BadInitialState);
}

TEST_CASE("reduction agrees with the matching-pennies rule on all 16 cases") {
  for (std::array<int, 2> initial : {std::array<int, 2>{1, 0}, std::array<int, 2>{0, 1}})
    for (ClassicalMove q1 : kMoves)
      for (ClassicalMove q2 : kMoves)
        for (ClassicalMove pm : kMoves) {
          // final faces computed independently, bit by bit
          int q_bit = initial[0] ^ (q1 == ClassicalMove::Flip) ^ (q2 == ClassicalMove::Flip);
          int p_bit = initial[1] ^ (pm == ClassicalMove::Flip);
          const PennyFace qf = q_bit == 0 ? PennyFace::Head : PennyFace::Tail;
          const PennyFace pf = p_bit == 0 ? PennyFace::Head : PennyFace::Tail;
          // in the entangled game's adjudication matching bits favor Q
          const ReductionWinner expected = matching_pennies_payoff(pf, qf).p == 1
                                               ? ReductionWinner::QWins
                                               : ReductionWinner::PWins;
          CHECK(classical_reduction(initial, {q1, q2}, pm) == expected);
        }
}
