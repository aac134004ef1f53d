#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "hudn/hypergraph.hpp"

namespace hudn {

/// Distributed channel-selection game over an interference hypergraph.
/// Players are vertices; two players are adjacent when they share a
/// hyperedge, counted once however many edges they share.
struct ChannelGameState {
  int num_channels = 1;
  std::vector<std::vector<VertexId>> adjacency;  // per player, sorted
  std::vector<int> profile;                      // per player, channel in [0, K)
  std::uint64_t seed = 0;
  std::mt19937_64 rng;

  int player_count() const { return static_cast<int>(profile.size()); }
};

/// Seeds the rng and draws a uniform initial channel profile from it.
ChannelGameState make_game_state(const Hypergraph& h, int num_channels, std::uint64_t seed);

/// Negative count of adjacent players currently on `channel`; always <= 0.
int utility(const ChannelGameState& state, VertexId player, int channel);

/// Per-player utilities across all channels.
std::vector<int> channel_utilities(const ChannelGameState& state, VertexId player);

enum class ProbabilityRule {
  Softmax,      // p_k proportional to exp(beta * u_k)
  LinearShift,  // p_k proportional to u_k - min(u) + 1
};

/// Channel access probabilities, monotone in utility, summing to 1 within
/// 1e-12. Requires beta > 0 and at least one channel.
std::vector<double> access_probabilities(const std::vector<int>& utilities, double beta,
                                         ProbabilityRule rule = ProbabilityRule::Softmax);

/// One asynchronous stochastic round: players in seeded random order resample
/// their channel from access_probabilities against the current profile.
void play_round_stochastic(ChannelGameState& state, double beta,
                           ProbabilityRule rule = ProbabilityRule::Softmax);

/// One best-response round in ascending player order; each player switches to
/// its maximum-utility channel (keeping the current channel on ties,
/// otherwise taking the lowest index). Returns true iff any player switched.
bool play_round_best_response(ChannelGameState& state);

/// Number of unordered adjacent pairs sharing a channel. Each player's
/// utility change under a unilateral deviation equals the negated potential
/// change, so best-response play descends this exactly.
long long potential(const ChannelGameState& state);

/// True iff no player has a channel with strictly higher utility.
bool is_nash_equilibrium(const ChannelGameState& state);

struct PotentialTrace {
  std::vector<std::pair<int, long long>> points;  // (round, potential); round 0 is initial
};

enum class GameMode { Stochastic, BestResponse };

struct GameRunResult {
  ChannelGameState state;
  PotentialTrace trace;
  int rounds = 0;
};

/// Best-response mode stops at the first round without a switch (a pure Nash
/// equilibrium) or after max_rounds. Stochastic mode plays max_rounds and
/// returns the minimum-potential profile seen.
GameRunResult run_to_convergence(ChannelGameState state, GameMode mode, int max_rounds,
                                 double beta, ProbabilityRule rule = ProbabilityRule::Softmax);

}  // namespace hudn
