// Copyright 2026 The memoroid Authors. Apache 2.0 License.
#include "memoroid/returns.hpp"

#include <algorithm>
#include <stdexcept>

namespace memo::returns {
namespace {

void check_unit_interval(double v, const char* name) {
  if (!(v >= 0.0 && v <= 1.0)) {
    throw std::invalid_argument(std::string(name) + " must lie in [0, 1]");
  }
}

// Shared reversed-resettable-scan core for return-to-go style suffix sums.
// E is ReturnElement or GaeElement; accum points at the accumulated payload
// field. lift_decay is γ (returns) or γλ (GAE).
template <class E, double E::* accum>
std::vector<double> suffix_scan(const Monoid<E>& base, std::span<const double> signal,
                                std::span<const std::uint8_t> dones, double lift_decay,
                                const ScanSchedule& sched) {
  const std::size_t n = signal.size();
  if (n == 0) return {};
  if (dones.size() != n) throw std::invalid_argument("dones length mismatch");
  if (dones.back() != 1) {
    throw std::invalid_argument("sequence must end on a terminal transition (done = 1)");
  }

  // Flipping the combine turns the prefix fold into a suffix fold once the
  // sequence is reversed; the proof-case algebra is unchanged.
  const auto op = make_resettable(flipped(base));

  std::vector<Resettable<E>> elems(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = n - 1 - i;
    elems[i] = {E{lift_decay, signal[j]}, dones[j]};
  }
  const auto scanned = scan_parallel(op, std::span<const Resettable<E>>(elems), sched);

  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[n - 1 - i] = scanned[i].value.*accum;
  return out;
}

}  // namespace

Monoid<ReturnElement> return_monoid(double gamma) {
  check_unit_interval(gamma, "gamma");
  return {ReturnElement{1.0, 0.0}, [](const ReturnElement& x, const ReturnElement& y) {
            return ReturnElement{x.a * y.a, x.a * y.r + x.r};
          }};
}

Monoid<GaeElement> gae_monoid(double gamma, double lambda) {
  check_unit_interval(gamma, "gamma");
  check_unit_interval(lambda, "lambda");
  return {GaeElement{1.0, 0.0}, [](const GaeElement& x, const GaeElement& y) {
            return GaeElement{x.a * y.a, x.a * y.g + x.g};
          }};
}

Memoroid<ReturnElement> return_memoroid(double gamma) {
  Memoroid<ReturnElement> m;
  m.monoid = return_monoid(gamma);
  m.lift = [gamma](const PartialTransition& p) {
    return lift_reward(gamma, p.obs.at(0));
  };
  m.readout = [](const ReturnElement& h, const PartialTransition&) {
    return std::vector<double>{h.r};
  };
  return m;
}

std::vector<double> discounted_return_prefix(std::span<const double> rewards, double gamma,
                                             const ScanSchedule& sched) {
  const Monoid<ReturnElement> op = return_monoid(gamma);
  std::vector<ReturnElement> elems(rewards.size());
  for (std::size_t i = 0; i < rewards.size(); ++i) elems[i] = lift_reward(gamma, rewards[i]);
  const auto scanned = scan_parallel(op, std::span<const ReturnElement>(elems), sched);
  std::vector<double> out(rewards.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = scanned[i].r;
  return out;
}

std::vector<double> return_to_go(std::span<const double> rewards,
                                 std::span<const std::uint8_t> dones, double gamma,
                                 const ScanSchedule& sched) {
  return suffix_scan<ReturnElement, &ReturnElement::r>(return_monoid(gamma), rewards, dones,
                                                       gamma, sched);
}

std::vector<double> gae(std::span<const double> rewards, std::span<const double> values,
                        std::span<const double> next_values,
                        std::span<const std::uint8_t> dones, double gamma, double lambda,
                        const ScanSchedule& sched) {
  check_unit_interval(gamma, "gamma");
  check_unit_interval(lambda, "lambda");
  const std::size_t n = rewards.size();
  if (values.size() != n || next_values.size() != n) {
    throw std::invalid_argument("values/next_values must align with rewards");
  }
  std::vector<double> deltas(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double not_done = dones[i] ? 0.0 : 1.0;
    deltas[i] = rewards[i] + gamma * not_done * next_values[i] - values[i];
  }
  return suffix_scan(deltas, dones, gamma * lambda, sched);
}

std::vector<double> naive_return_to_go(std::span<const double> rewards,
                                       std::span<const std::uint8_t> dones, double gamma) {
  const std::size_t n = rewards.size();
  std::vector<double> out(n);
  double acc = 0.0;
  for (std::size_t i = n; i-- > 0;) {
    if (dones[i]) acc = 0.0;
    acc = rewards[i] + gamma * acc;
    out[i] = acc;
  }
  return out;
}

std::vector<double> naive_gae(std::span<const double> rewards, std::span<const double> values,
                              std::span<const double> next_values,
                              std::span<const std::uint8_t> dones, double gamma, double lambda) {
  const std::size_t n = rewards.size();
  std::vector<double> out(n);
  double acc = 0.0;
  for (std::size_t i = n; i-- > 0;) {
    const double not_done = dones[i] ? 0.0 : 1.0;
    const double delta = rewards[i] + gamma * not_done * next_values[i] - values[i];
    if (dones[i]) acc = 0.0;
    acc = delta + gamma * lambda * acc;
    out[i] = acc;
  }
  return out;
}

}  // namespace memo::returns
