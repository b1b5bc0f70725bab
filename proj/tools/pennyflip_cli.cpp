// Command-line front end for the entangled penny flip simulator.
//
// Exit codes: 0 success, 1 usage error, 2 numerical-invariant violation.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pennyflip/pennyflip.hpp"

namespace {

using namespace pennyflip;

double to_double(const std::string& tok) {
  try {
    return std::stod(tok);
  } catch (const std::exception&) {
    throw CLI::ValidationError("number", "cannot parse '" + tok + "'");
  }
}

std::vector<double> parse_csv_doubles(const std::string& s) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(to_double(tok));
  return out;
}

Strategy parse_strategy(const std::string& literal) {
  if (literal == "pure:flip") return ClassicalPure{ClassicalMove::Flip};
  if (literal == "pure:noflip") return ClassicalPure{ClassicalMove::NoFlip};
  if (literal.rfind("mixed:", 0) == 0) return ClassicalMixed{to_double(literal.substr(6))};
  if (literal.rfind("quantum:", 0) == 0) {
    const auto v = parse_csv_doubles(literal.substr(8));
    if (v.size() != 6)
      throw CLI::ValidationError("strategy", "quantum literal needs 6 angles: "
                                             "quantum:<t1>,<f1>,<f1p>,<t2>,<f2>,<f2p>");
    return QuantumStrategy{{v[0], v[1], v[2]}, {v[3], v[4], v[5]}};
  }
  throw CLI::ValidationError("strategy", "expected pure:flip|pure:noflip|mixed:<p>|quantum:<6 angles>");
}

QuantumStrategy require_quantum(const Strategy& s) {
  if (const auto* q = std::get_if<QuantumStrategy>(&s)) return *q;
  throw CLI::ValidationError("strategy", "a quantum:<...> strategy is required here");
}

std::ostream& open_out(std::ofstream& file, const std::string& path) {
  if (path.empty()) return std::cout;
  file.open(path);
  if (!file) throw CLI::ValidationError("--out", "cannot open " + path);
  return file;
}

void print_record(const GameRecord& rec) {
  std::cout << "concurrence: " << detail::fmt12(rec.concurrence.value) << "\n"
            << "outcome: "
            << (rec.outcome == Outcome::QWins ? "QWins"
                : rec.outcome == Outcome::PWins ? "PWins" : "Draw")
            << "\n"
            << "payoffs (P,Q): (" << rec.payoffs.p << "," << rec.payoffs.q << ")\n";
  std::cout << "final density matrix:\n";
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      const Complex e = rec.final_state.mat()(i, j);
      std::cout << "  (" << detail::fmt12(e.real()) << "," << detail::fmt12(e.imag()) << ")";
    }
    std::cout << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Entangled quantum penny flip simulator"};
  app.require_subcommand(1);

  std::string q_literal = "quantum:0.785398163397448,0,0,0.785398163397448,0,0";
  std::string p_literal = "mixed:0.5";
  std::string out_path;
  std::string var_name = "theta1";
  std::string game_name = "matching-pennies";
  std::string profile_literal = "0.5,0.5";
  std::string initial = "10";
  std::string q_moves = "NN";
  std::string p_move = "noflip";
  double tol_sep = 1e-6, tol_max = 1e-6, nash_tol = 1e-9;
  double p_fixed = 0.5, start = 0.0, stop = 1.0;
  int steps = 101, audit_n = 500;
  std::uint64_t seed = 0;
  bool seed_given = false;

  auto* play = app.add_subcommand("play", "Play one entangled penny flip game");
  play->add_option("--p-strategy", p_literal, "P's strategy: pure:flip|pure:noflip|mixed:<p>");
  play->add_option("--q-strategy", q_literal,
                   "Q's strategy: quantum:<t1>,<f1>,<f1p>,<t2>,<f2>,<f2p> (default Hadamard/Hadamard)");
  play->add_option("--tol-sep", tol_sep, "separability tolerance");
  play->add_option("--tol-max", tol_max, "maximal-entanglement tolerance");

  auto* sweep_p_cmd = app.add_subcommand("sweep-p", "Sweep the flip probability p");
  sweep_p_cmd->add_option("--steps", steps, "grid points (default 101)");
  sweep_p_cmd->add_option("--start", start, "grid start (default 0)");
  sweep_p_cmd->add_option("--stop", stop, "grid stop (default 1)");
  sweep_p_cmd->add_option("--q-strategy", q_literal, "Q's fixed quantum strategy");
  sweep_p_cmd->add_option("--out", out_path, "CSV output path (default stdout)");
  sweep_p_cmd->add_option("--tol-sep", tol_sep, "separability tolerance");
  sweep_p_cmd->add_option("--tol-max", tol_max, "maximal-entanglement tolerance");
  sweep_p_cmd->add_option("--seed", seed, "recorded in the CSV header comment");

  auto* sweep_a = app.add_subcommand("sweep-angles", "Sweep one of Q's six unitary angles");
  sweep_a->add_option("--var", var_name,
                      "swept angle: theta1|theta2|phi1|phi2|phi1_prime|phi2_prime");
  sweep_a->add_option("--p", p_fixed, "fixed flip probability (default 0.5)");
  sweep_a->add_option("--steps", steps, "grid points (default 101)");
  sweep_a->add_option("--start", start, "grid start (default 0)");
  double stop_angle = 2.0 * std::numbers::pi;
  sweep_a->add_option("--stop", stop_angle, "grid stop (default 2*pi)");
  sweep_a->add_option("--q-strategy", q_literal, "fixed values for the non-swept angles");
  sweep_a->add_option("--out", out_path, "CSV output path (default stdout)");
  sweep_a->add_option("--tol-sep", tol_sep, "separability tolerance");
  sweep_a->add_option("--tol-max", tol_max, "maximal-entanglement tolerance");
  sweep_a->add_option("--seed", seed, "recorded in the CSV header comment");

  auto* audit = app.add_subcommand(
      "audit", "Random-unitary audit of the p=1/2 defeat claim. Angles are drawn "
               "uniformly over the (theta, phi, phi') box [0, 2*pi)^3, not Haar-uniform; "
               "the claim holds across the whole parameter box.");
  audit->add_option("--n", audit_n, "number of random (U1,U2) pairs (default 500)");
  audit->add_option("--seed", seed, "RNG seed (mt19937_64)");

  auto* nash = app.add_subcommand("nash", "Verify a mixed profile is a Nash equilibrium");
  nash->add_option("--game", game_name, "matching-pennies|pq-penny-flip");
  nash->add_option("--profile", profile_literal,
                   "matching-pennies: <p_head_P>,<p_head_Q>; "
                   "pq-penny-flip: <p_flip_P>,<wNN>,<wNF>,<wFN>,<wFF>");
  nash->add_option("--tol", nash_tol, "deviation-gain tolerance (default 1e-9)");

  auto* reduce = app.add_subcommand("reduce", "Classical-limit reduction to matching pennies");
  reduce->add_option("--initial", initial, "initial bits: 10|01");
  reduce->add_option("--q-moves", q_moves, "Q's two moves: NN|NF|FN|FF");
  reduce->add_option("--p-move", p_move, "P's move: flip|noflip");

  auto* circuit = app.add_subcommand("circuit", "Print the gate-list transcript of a game");
  circuit->add_option("--p", p_fixed, "P's flip probability (default 0.5)");
  circuit->add_option("--q-strategy", q_literal, "Q's quantum strategy");
  circuit->add_option("--out", out_path, "output path (default stdout)");

  std::string meyer_move = "both";
  auto* meyer = app.add_subcommand("meyer", "Play Meyer's single-qubit penny flip");
  meyer->add_option("--p-move", meyer_move, "P's move: flip|noflip|both (default both)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 1;
  }

  try {
    seed_given = sweep_p_cmd->count("--seed") > 0 || sweep_a->count("--seed") > 0;

    if (*play) {
      const Strategy q = parse_strategy(q_literal);
      const Strategy p = parse_strategy(p_literal);
      const Tolerances tol{tol_sep, tol_max};
      if (const auto* pure = std::get_if<ClassicalPure>(&p)) {
        print_record(play_entangled_pure(pure->move, q, tol));
      } else if (const auto* mixed = std::get_if<ClassicalMixed>(&p)) {
        print_record(play_entangled_mixed(mixed->p, q, tol));
      } else {
        throw CLI::ValidationError("--p-strategy", "P must play pure:<move> or mixed:<p>");
      }
    } else if (*sweep_p_cmd) {
      SweepConfig cfg;
      cfg.variable = SweepVariable::P;
      cfg.start = start;
      cfg.stop = stop;
      cfg.steps = steps;
      cfg.q = require_quantum(parse_strategy(q_literal));
      cfg.tol = {tol_sep, tol_max};
      cfg.seed = seed;
      std::ofstream file;
      write_csv(sweep_p(cfg), open_out(file, out_path),
                seed_given ? std::optional<std::uint64_t>(seed) : std::nullopt);
    } else if (*sweep_a) {
      SweepConfig cfg;
      if (var_name == "theta1") cfg.variable = SweepVariable::Theta1;
      else if (var_name == "theta2") cfg.variable = SweepVariable::Theta2;
      else if (var_name == "phi1") cfg.variable = SweepVariable::Phi1;
      else if (var_name == "phi2") cfg.variable = SweepVariable::Phi2;
      else if (var_name == "phi1_prime") cfg.variable = SweepVariable::Phi1Prime;
      else if (var_name == "phi2_prime") cfg.variable = SweepVariable::Phi2Prime;
      else throw CLI::ValidationError("--var", "unknown sweep variable " + var_name);
      cfg.start = start;
      cfg.stop = stop_angle;
      cfg.steps = steps;
      cfg.p = p_fixed;
      cfg.q = require_quantum(parse_strategy(q_literal));
      cfg.tol = {tol_sep, tol_max};
      cfg.seed = seed;
      std::ofstream file;
      write_csv(sweep_angle(cfg), open_out(file, out_path),
                seed_given ? std::optional<std::uint64_t>(seed) : std::nullopt);
    } else if (*audit) {
      const AuditResult r = audit_p_half(audit_n, seed);
      std::cout << "n=" << audit_n << " seed=" << seed << " rng=" << kRngName << "\n"
                << "max_concurrence: " << detail::fmt12(r.max_concurrence) << "\n"
                << "worst_params: quantum:" << detail::fmt12(r.worst_params.first.theta) << ","
                << detail::fmt12(r.worst_params.first.phi) << ","
                << detail::fmt12(r.worst_params.first.phi_prime) << ","
                << detail::fmt12(r.worst_params.second.theta) << ","
                << detail::fmt12(r.worst_params.second.phi) << ","
                << detail::fmt12(r.worst_params.second.phi_prime) << "\n";
    } else if (*nash) {
      const auto vals = parse_csv_doubles(profile_literal);
      MixedProfile profile = [&]() -> MixedProfile {
        if (game_name == "matching-pennies") {
          if (vals.size() != 2)
            throw CLI::ValidationError("--profile", "matching-pennies needs 2 probabilities");
          return MatchingPenniesProfile{vals[0], vals[1]};
        }
        if (game_name == "pq-penny-flip") {
          if (vals.size() != 5)
            throw CLI::ValidationError("--profile", "pq-penny-flip needs p_flip + 4 weights");
          return PqPennyFlipProfile{vals[0], {vals[1], vals[2], vals[3], vals[4]}};
        }
        throw CLI::ValidationError("--game", "expected matching-pennies|pq-penny-flip");
      }();
      const NashReport report = verify_nash(profile, nash_tol);
      const ExpectedPayoff e = expected_payoff(profile);
      std::cout << "equilibrium: " << (report.is_equilibrium ? "yes" : "no") << ", payoff ("
                << detail::fmt12(e.p) << "," << detail::fmt12(e.q) << ")\n";
      if (!report.is_equilibrium)
        std::cout << "best deviation: " << report.best_deviation << " (gain "
                  << detail::fmt12(report.best_gain) << ")\n";
    } else if (*reduce) {
      if (initial != "10" && initial != "01")
        throw CLI::ValidationError("--initial", "expected 10 or 01");
      auto parse_move = [](char c) {
        return c == 'F' || c == 'f' ? ClassicalMove::Flip : ClassicalMove::NoFlip;
      };
      if (q_moves.size() != 2)
        throw CLI::ValidationError("--q-moves", "expected two of N/F, e.g. FN");
      const ReductionWinner w = classical_reduction(
          {initial[0] - '0', initial[1] - '0'},
          {parse_move(q_moves[0]), parse_move(q_moves[1])},
          p_move == "flip" ? ClassicalMove::Flip : ClassicalMove::NoFlip);
      std::cout << (w == ReductionWinner::QWins ? "QWins" : "PWins") << "\n";
    } else if (*circuit) {
      std::ofstream file;
      std::ostream& out = open_out(file, out_path);
      for (const std::string& line : game_to_circuit(p_fixed, parse_strategy(q_literal)))
        out << line << "\n";
    } else if (*meyer) {
      auto report = [](ClassicalMove m) {
        const MeyerResult r = play_meyer(m);
        std::cout << (m == ClassicalMove::Flip ? "flip" : "noflip") << ": winner "
                  << (r.winner == MeyerWinner::Q ? "Q" : "P") << ", final ("
                  << detail::fmt12(r.final_state[0].real()) << ","
                  << detail::fmt12(r.final_state[0].imag()) << ") |0> + ("
                  << detail::fmt12(r.final_state[1].real()) << ","
                  << detail::fmt12(r.final_state[1].imag()) << ") |1>\n";
      };
      if (meyer_move == "both") {
        report(ClassicalMove::NoFlip);
        report(ClassicalMove::Flip);
      } else {
        report(meyer_move == "flip" ? ClassicalMove::Flip : ClassicalMove::NoFlip);
      }
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
