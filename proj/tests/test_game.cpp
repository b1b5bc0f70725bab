#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "test_helpers.hpp"

using namespace pennyflip;
using namespace pennyflip::testing;

namespace {

const Strategy kHadamardBoth = QuantumStrategy{hadamard_params(), hadamard_params()};

Mat4 cnot_q0_q1() {
  Mat4 m;
  m(0, 0) = 1.0;
  m(1, 1) = 1.0;
  m(2, 3) = 1.0;
  m(3, 2) = 1.0;
  return m;
}

// Independent replay of a transcript: state-vector simulation of the
// Bell preparation, then the density-matrix pipeline for the moves.
DensityMatrix replay_transcript(const CircuitTranscript& lines) {
  std::array<Complex, 4> amp{1.0, 0.0, 0.0, 0.0};
  auto apply4 = [&](const Mat4& g) {
    std::array<Complex, 4> out{};
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) out[i] += g(i, j) * amp[j];
    amp = out;
  };

  std::size_t k = 0;
  for (; k < lines.size(); ++k) {
    const std::string& line = lines[k];
    if (line == "H q0") apply4(kron(gate_h(), gate_i()));
    else if (line == "CNOT q0 q1") apply4(cnot_q0_q1());
    else if (line == "X q1") apply4(kron(gate_i(), gate_x()));
    else if (line == "Y q1") apply4(kron(gate_i(), gate_y()));
    else if (line == "Z q0") apply4(kron(gate_z(), gate_i()));
    else break;  // end of preparation
  }

  DensityMatrix rho = density_from_state(StateVector(amp));
  for (; k < lines.size(); ++k) {
    const std::string& line = lines[k];
    if (line.rfind("U(", 0) == 0) {
      double t, f, fp;
      REQUIRE(std::sscanf(line.c_str(), "U(%lf,%lf,%lf) q0", &t, &f, &fp) == 3);
      rho = apply_local_unitary(rho, su2({t, f, fp}), Side::QubitQ);
    } else if (line.rfind("FLIP? p=", 0) == 0) {
      double p;
      REQUIRE(std::sscanf(line.c_str(), "FLIP? p=%lf q1", &p) == 1);
      rho = flip_channel(rho, p);
    } else {
      REQUIRE(line == "MEASURE-CONCURRENCE q0 q1");
    }
  }
  return rho;
}

}  // namespace

TEST_CASE("pure play: Q wins against both classical moves") {
  const GameRecord flip = play_entangled_pure(ClassicalMove::Flip, kHadamardBoth);
  CHECK(flip.concurrence.value == Catch::Approx(1.0).margin(1e-9));
  CHECK(flip.outcome == Outcome::QWins);
  // final state (|11> - |00>)/sqrt(2) up to global phase
  const double s = 1.0 / std::numbers::sqrt2;
  const DensityMatrix expected = density_from_state(StateVector({-s, 0.0, 0.0, s}));
  CHECK(max_abs_diff(flip.final_state.mat(), expected.mat()) < 1e-12);

  const GameRecord stay = play_entangled_pure(ClassicalMove::NoFlip, kHadamardBoth);
  CHECK(stay.concurrence.value == Catch::Approx(1.0).margin(1e-9));
  CHECK(stay.outcome == Outcome::QWins);
  // H, I, H composes to the identity, so the singlet comes back unchanged
  CHECK(max_abs_diff(stay.final_state.mat(),
                     density_from_state(bell_state(BellKind::PsiMinus)).mat()) < 1e-12);
}

TEST_CASE("pure play: identity-like moves keep the state maximally entangled") {
  const Strategy identity_like = QuantumStrategy{{0, 0, 0}, {0, 0, 0}};
  const GameRecord rec = play_entangled_pure(ClassicalMove::Flip, identity_like);
  CHECK(rec.concurrence.value == Catch::Approx(1.0).margin(1e-9));
  CHECK(rec.outcome == Outcome::QWins);
}

TEST_CASE("pure play rejects non-quantum strategies") {
  CHECK_THROWS_AS(play_entangled_pure(ClassicalMove::Flip, Strategy{ClassicalMixed{0.5}}),
                  WrongStrategyKind);
}

TEST_CASE("mixed play endpoints and the p = 1/2 defeat") {
  const GameRecord half = play_entangled_mixed(0.5, kHadamardBoth);
  CHECK(half.concurrence.value < 1e-9);
  CHECK(half.outcome == Outcome::PWins);

  const GameRecord zero = play_entangled_mixed(0.0, kHadamardBoth);
  CHECK(zero.concurrence.value == Catch::Approx(1.0).margin(1e-9));
  CHECK(zero.outcome == Outcome::QWins);

  CHECK_THROWS_AS(play_entangled_mixed(-0.01, kHadamardBoth), ProbabilityOutOfRange);

  std::mt19937_64 rng(41);
  for (int it = 0; it < 100; ++it) {
    const Strategy q = QuantumStrategy{random_params(rng), random_params(rng)};
    REQUIRE(play_entangled_mixed(0.5, q).outcome == Outcome::PWins);
  }
}

TEST_CASE("mixed play at p in {0,1} matches pure play") {
  std::mt19937_64 rng(42);
  for (int it = 0; it < 20; ++it) {
    const Strategy q = QuantumStrategy{random_params(rng), random_params(rng)};
    CHECK(max_abs_diff(play_entangled_mixed(0.0, q).final_state.mat(),
                       play_entangled_pure(ClassicalMove::NoFlip, q).final_state.mat()) < 1e-12);
    CHECK(max_abs_diff(play_entangled_mixed(1.0, q).final_state.mat(),
                       play_entangled_pure(ClassicalMove::Flip, q).final_state.mat()) < 1e-12);
  }
}

TEST_CASE("adjudication and payoffs") {
  CHECK(adjudicate(Concurrence{1.0}) == Outcome::QWins);
  CHECK(adjudicate(Concurrence{0.0}) == Outcome::PWins);
  CHECK(adjudicate(Concurrence{0.3}) == Outcome::Draw);
  CHECK_THROWS_AS(adjudicate(Concurrence{0.3}, -1.0, 1e-6), BadTolerance);

  for (Outcome o : {Outcome::QWins, Outcome::PWins, Outcome::Draw}) {
    const Payoffs pay = payoffs_for(o);
    CHECK(pay.p + pay.q == 0.0);
  }
  CHECK(payoffs_for(Outcome::QWins).q == 1.0);
  CHECK(payoffs_for(Outcome::PWins).p == 1.0);
}

TEST_CASE("records stay consistent with their classification") {
  std::mt19937_64 rng(43);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int it = 0; it < 50; ++it) {
    const Strategy q = QuantumStrategy{random_params(rng), random_params(rng)};
    const GameRecord rec = play_entangled_mixed(unit(rng), q);
    CHECK(rec.outcome == adjudicate(rec.concurrence));
    CHECK(rec.payoffs.p + rec.payoffs.q == 0.0);
  }
}

TEST_CASE("Meyer's game: Q wins against both moves") {
  for (ClassicalMove m : {ClassicalMove::Flip, ClassicalMove::NoFlip}) {
    const MeyerResult r = play_meyer(m);
    CHECK(r.winner == MeyerWinner::Q);
    CHECK(std::norm(r.final_state[0]) > 1.0 - 1e-10);
  }
}

TEST_CASE("circuit transcript shape") {
  const CircuitTranscript lines = game_to_circuit(0.5, kHadamardBoth);
  REQUIRE(lines.size() == 7);
  CHECK(lines[0] == "H q0");
  CHECK(lines[1] == "CNOT q0 q1");
  CHECK(lines[4] == "FLIP? p=0.5 q1");
  CHECK(lines[6] == "MEASURE-CONCURRENCE q0 q1");

  // the flip line is emitted even when it is a no-op
  CHECK(game_to_circuit(0.0, kHadamardBoth)[4] == "FLIP? p=0 q1");

  CHECK_THROWS_AS(game_to_circuit(2.0, kHadamardBoth), ProbabilityOutOfRange);
  CHECK_THROWS_AS(game_to_circuit(0.5, Strategy{ClassicalPure{ClassicalMove::Flip}}),
                  WrongStrategyKind);
}

namespace {

// the transcript format carries 12 significant digits per angle
double quantize12(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return std::strtod(buf, nullptr);
}

UnitaryParams quantize12(const UnitaryParams& u) {
  return {quantize12(u.theta), quantize12(u.phi), quantize12(u.phi_prime)};
}

}  // namespace

TEST_CASE("replaying a transcript reproduces the engine's final state") {
  std::mt19937_64 rng(44);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int it = 0; it < 20; ++it) {
    const double p = unit(rng);
    const Strategy q = QuantumStrategy{random_params(rng), random_params(rng)};
    const DensityMatrix replayed = replay_transcript(game_to_circuit(p, q));

    // against the engine run at the angles as written in the transcript
    const auto& qs = std::get<QuantumStrategy>(q);
    const Strategy q12 = QuantumStrategy{quantize12(qs.first), quantize12(qs.second)};
    const DensityMatrix at_written = play_entangled_mixed(quantize12(p), q12).final_state;
    REQUIRE(max_abs_diff(replayed.mat(), at_written.mat()) < 1e-12);

    // against the original game, limited only by the angle quantization
    const DensityMatrix direct = play_entangled_mixed(p, q).final_state;
    REQUIRE(max_abs_diff(replayed.mat(), direct.mat()) < 1e-10);
  }
}
