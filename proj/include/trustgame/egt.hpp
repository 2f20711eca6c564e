#pragma once

#include <Eigen/Dense>
#include <cstdint>

#include "trustgame/game.hpp"

namespace trustgame {

// Finite-population stochastic baseline over the 8 monomorphic profiles.
// Each role is its own population; mutations are rare enough that the system
// is monomorphic almost always, so the dynamics reduce to a Markov chain
// whose states are the 8 profiles. Transitions use the pairwise-comparison
// (Fermi) fixation probability of a single mutant within one role.

using TransitionMatrix = Eigen::Matrix<double, 8, 8>;
using StateVector = Eigen::Matrix<double, 8, 1>;

struct EgtConfig {
  int population_size = 100;         // Z, per role
  double selection_intensity = 1.0;  // beta
  TrustMode mode = TrustMode::Conditional;
  GameParams params;

  // Throws std::invalid_argument on Z < 2, beta < 0, or invalid params.
  void validate() const;
};

struct StationaryResult {
  StateVector distribution;     // ordered per enumerate_profiles()
  TransitionMatrix transition;  // row-stochastic embedded chain
};

// Fixation probability of one mutant with constant payoff advantage delta:
//   rho = (1 - e^{-beta*delta}) / (1 - e^{-Z*beta*delta})
// with the neutral limit 1/Z at beta*delta = 0. Large |beta*delta*Z| is
// resolved to the analytic tail instead of overflowing. Result in (0, 1).
double fixation_probability(double delta, int population_size,
                            double selection_intensity);

// Small-mutation-limit embedded chain. States in enumerate_profiles() order;
// each single-role deviation s -> s' carries probability rho/3 (mutant role
// picked uniformly among the three), the diagonal absorbs the rest.
TransitionMatrix build_transition_matrix(const EgtConfig& config);

// Left eigenvector of the chain for eigenvalue 1, normalized to sum 1.
// Solved as the least-squares system {pi (P - I) = 0, sum pi = 1}; throws
// std::runtime_error if the residual ||pi P - pi||_inf exceeds 1e-9.
StateVector stationary_distribution(const TransitionMatrix& matrix);

StationaryResult analyze(const EgtConfig& config);

// Monte Carlo walk over the chain; returns empirical visit frequencies.
// Deterministic given the seed (fixed xoshiro-free uniform mapping, no
// distribution objects). Starts from state 0.
StateVector simulate_chain(const TransitionMatrix& matrix, std::uint64_t steps,
                           std::uint64_t seed);
StateVector simulate_chain(const EgtConfig& config, std::uint64_t steps,
                           std::uint64_t seed);

}  // namespace trustgame
