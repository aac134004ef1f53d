#include "hudn/game.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "hudn/rng.hpp"

namespace hudn {

ChannelGameState make_game_state(const Hypergraph& h, int num_channels, std::uint64_t seed) {
  if (num_channels < 1) {
    throw std::invalid_argument("game state: need at least one channel");
  }
  ChannelGameState state;
  state.num_channels = num_channels;
  state.seed = seed;
  state.rng.seed(seed);
  state.adjacency.resize(h.vertex_count());
  for (int v = 0; v < h.vertex_count(); ++v) {
    state.adjacency[v] = adjacent_vertices(h, v);
  }
  state.profile.resize(h.vertex_count());
  for (auto& channel : state.profile) channel = uniform_int(state.rng, num_channels);
  return state;
}

int utility(const ChannelGameState& state, VertexId player, int channel) {
  int same = 0;
  for (VertexId u : state.adjacency[player]) {
    if (state.profile[u] == channel) ++same;
  }
  return -same;
}

std::vector<int> channel_utilities(const ChannelGameState& state, VertexId player) {
  std::vector<int> utils(state.num_channels, 0);
  for (VertexId u : state.adjacency[player]) utils[state.profile[u]] -= 1;
  return utils;
}

std::vector<double> access_probabilities(const std::vector<int>& utilities, double beta,
                                         ProbabilityRule rule) {
  if (utilities.empty()) {
    throw std::invalid_argument("access probabilities: no channels");
  }
  if (!(beta > 0.0)) {
    throw std::invalid_argument("access probabilities: beta must be positive");
  }
  std::vector<double> probs(utilities.size());
  if (rule == ProbabilityRule::Softmax) {
    int shift = *std::max_element(utilities.begin(), utilities.end());
    double sum = 0.0;
    for (size_t i = 0; i < utilities.size(); ++i) {
      probs[i] = std::exp(beta * static_cast<double>(utilities[i] - shift));
      sum += probs[i];
    }
    for (auto& p : probs) p /= sum;
  } else {
    int lo = *std::min_element(utilities.begin(), utilities.end());
    double sum = 0.0;
    for (size_t i = 0; i < utilities.size(); ++i) {
      probs[i] = static_cast<double>(utilities[i] - lo + 1);
      sum += probs[i];
    }
    for (auto& p : probs) p /= sum;
  }
  return probs;
}

void play_round_stochastic(ChannelGameState& state, double beta, ProbabilityRule rule) {
  std::vector<int> order(state.player_count());
  std::iota(order.begin(), order.end(), 0);
  shuffle_vec(order, state.rng);
  for (int player : order) {
    auto probs = access_probabilities(channel_utilities(state, player), beta, rule);
    state.profile[player] = sample_index(state.rng, probs);
  }
}

bool play_round_best_response(ChannelGameState& state) {
  bool improved = false;
  for (int player = 0; player < state.player_count(); ++player) {
    auto utils = channel_utilities(state, player);
    int current = state.profile[player];
    int best = current;
    for (int c = 0; c < state.num_channels; ++c) {
      if (utils[c] > utils[best]) best = c;
    }
    // Keep the current channel on ties; otherwise take the lowest index
    // among maximizers.
    if (utils[best] > utils[current]) {
      for (int c = 0; c < best; ++c) {
        if (utils[c] == utils[best]) {
          best = c;
          break;
        }
      }
      state.profile[player] = best;
      improved = true;
    }
  }
  return improved;
}

long long potential(const ChannelGameState& state) {
  long long phi = 0;
  for (int v = 0; v < state.player_count(); ++v) {
    for (VertexId u : state.adjacency[v]) {
      if (u > v && state.profile[u] == state.profile[v]) ++phi;
    }
  }
  return phi;
}

bool is_nash_equilibrium(const ChannelGameState& state) {
  for (int player = 0; player < state.player_count(); ++player) {
    auto utils = channel_utilities(state, player);
    int current = utils[state.profile[player]];
    for (int c = 0; c < state.num_channels; ++c) {
      if (utils[c] > current) return false;
    }
  }
  return true;
}

GameRunResult run_to_convergence(ChannelGameState state, GameMode mode, int max_rounds,
                                 double beta, ProbabilityRule rule) {
  if (max_rounds < 1) {
    throw std::invalid_argument("run_to_convergence: max_rounds must be >= 1");
  }
  GameRunResult result;
  result.trace.points.emplace_back(0, potential(state));

  if (mode == GameMode::BestResponse) {
    for (int round = 1; round <= max_rounds; ++round) {
      bool improved = play_round_best_response(state);
      result.trace.points.emplace_back(round, potential(state));
      result.rounds = round;
      if (!improved) break;
    }
    result.state = std::move(state);
  } else {
    std::vector<int> best_profile = state.profile;
    long long best_phi = result.trace.points.front().second;
    for (int round = 1; round <= max_rounds; ++round) {
      play_round_stochastic(state, beta, rule);
      long long phi = potential(state);
      result.trace.points.emplace_back(round, phi);
      if (phi < best_phi) {
        best_phi = phi;
        best_profile = state.profile;
      }
      result.rounds = round;
    }
    state.profile = std::move(best_profile);
    result.state = std::move(state);
  }
  return result;
}

}  // namespace hudn
