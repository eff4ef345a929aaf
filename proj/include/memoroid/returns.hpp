// Copyright 2026 The memoroid Authors. Apache 2.0 License.
#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "memoroid/memoroid.hpp"
#include "memoroid/scan.hpp"

namespace memo::returns {

// Accumulated (decay, discounted sum) pair: combining (a, r) with (a', r')
// gives (a·a', a·r' + r), so a left fold over lifts (γ, r_t) carries
// (γ^n, Σ γ^i r_i).
struct ReturnElement {
  double a{1.0};
  double r{0.0};
};

// Same algebra for GAE: g accumulates discounted TD residuals under γλ decay.
struct GaeElement {
  double a{1.0};
  double g{0.0};
};

Monoid<ReturnElement> return_monoid(double gamma);
Monoid<GaeElement> gae_monoid(double gamma, double lambda);

inline ReturnElement lift_reward(double gamma, double reward) { return {gamma, reward}; }

// The discounted return as a memoroid over scalar observations: lift (γ, o),
// readout the running discounted sum.
Memoroid<ReturnElement> return_memoroid(double gamma);

// Prefix form: position t holds Σ_{i<=t} γ^i r_i.
std::vector<double> discounted_return_prefix(std::span<const double> rewards, double gamma,
                                             const ScanSchedule& sched);

// Per-timestep return-to-go G_t = Σ_{l>=t} γ^{l-t} r_l, truncated at each
// episode's terminal step. Computed by scanning the reversed sequence with
// the flipped resettable return monoid; in reversed order a terminal
// transition is the first element of its episode, so done flags become the
// reset flags. The sequence must be whole episodes: the final element needs
// done = 1.
std::vector<double> return_to_go(std::span<const double> rewards,
                                 std::span<const std::uint8_t> dones, double gamma,
                                 const ScanSchedule& sched);

// GAE advantages: delta_t = r_t + γ(1-d_t)V(s_{t+1}) - V(s_t) and
// A_t = Σ_l (γλ)^l delta_{t+l}, truncated at episode ends via the same
// reversed resettable scan.
std::vector<double> gae(std::span<const double> rewards, std::span<const double> values,
                        std::span<const double> next_values,
                        std::span<const std::uint8_t> dones, double gamma, double lambda,
                        const ScanSchedule& sched);

// Reference backward loops, kept independent of the scan path. Used by tests
// and the throughput benchmark only.
std::vector<double> naive_return_to_go(std::span<const double> rewards,
                                       std::span<const std::uint8_t> dones, double gamma);
std::vector<double> naive_gae(std::span<const double> rewards, std::span<const double> values,
                              std::span<const double> next_values,
                              std::span<const std::uint8_t> dones, double gamma, double lambda);

}  // namespace memo::returns
