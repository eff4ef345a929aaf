// Copyright 2026 The memoroid Authors. Apache 2.0 License.
#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

#include "memoroid/scan.hpp"

namespace memo {

// What the agent sees while navigating: an observation plus the begin flag
// marking the first step of an episode.
struct PartialTransition {
  std::vector<double> obs;
  std::uint8_t begin{0};
};

// A monoid extended with a lift (partial transition -> recurrent element) and
// a readout (recurrent state + partial transition -> Markov state). Running
// an inclusive scan over lifted inputs yields the recurrent states
//   h_t = e_I • lift(p_0) • ... • lift(p_t),
// and the readout maps each (h_t, p_t) to a Markov state vector.
template <class S>
struct Memoroid {
  Monoid<S> monoid;
  std::function<S(const PartialTransition&)> lift;
  std::function<std::vector<double>(const S&, const PartialTransition&)> readout;
};

template <class S>
struct ApplyResult {
  std::vector<S> states;
  std::vector<std::vector<double>> markov;
};

// Single-episode execution: begin flags are ignored. Lift and readout are
// applied once per position (each parallelizable) and the recurrent states
// come from scan_parallel.
template <class S>
ApplyResult<S> apply(const Memoroid<S>& m, std::span<const PartialTransition> ps,
                     const ScanSchedule& sched) {
  ApplyResult<S> result;
  if (ps.empty()) return result;

  std::vector<S> lifted(ps.size(), m.monoid.identity);
  parallel_for(ps.size(), sched.worker_budget, [&](std::size_t i0, std::size_t i1) {
    for (std::size_t i = i0; i < i1; ++i) lifted[i] = m.lift(ps[i]);
  });

  result.states = scan_parallel(m.monoid, std::span<const S>(lifted), sched);

  result.markov.resize(ps.size());
  parallel_for(ps.size(), sched.worker_budget, [&](std::size_t i0, std::size_t i1) {
    for (std::size_t i = i0; i < i1; ++i) {
      result.markov[i] = m.readout(result.states[i], ps[i]);
    }
  });
  return result;
}

// A base-monoid element paired with a reset flag.
template <class S>
struct Resettable {
  S value;
  std::uint8_t flag{0};
};

// The resettable transformation: any monoid (H, •, e_I) lifts to a monoid
// over (A, b) pairs with
//   identity (e_I, 0),
//   (A, b) ∘ (A', b') = ((A·(1-b') + e_I·b') • A', b ∨ b').
// The select between A and e_I is an exact branch on b', not an arithmetic
// blend, so discarded operands never contaminate the result (they may hold
// NaN/Inf). When b' = 1 the left factor is e_I and the identity law gives
// e_I • A' = A', which we return directly.
template <class S>
Monoid<Resettable<S>> make_resettable(const Monoid<S>& base) {
  Monoid<Resettable<S>> out;
  out.identity = Resettable<S>{base.identity, 0};
  out.combine = [base](const Resettable<S>& a, const Resettable<S>& b) {
    const std::uint8_t flag = a.flag > b.flag ? a.flag : b.flag;
    if (b.flag) return Resettable<S>{b.value, flag};
    return Resettable<S>{base.combine(a.value, b.value), flag};
  };
  return out;
}

// Multi-episode execution over one flat sequence. Position t contributes the
// element (lift(p_t), begin_t); the scan over the transformed monoid matches
// running apply() independently on every episode slice.
template <class S>
ApplyResult<S> apply_resettable(const Memoroid<S>& m,
                                std::span<const PartialTransition> ps,
                                const ScanSchedule& sched) {
  ApplyResult<S> result;
  if (ps.empty()) return result;
  if (!ps.front().begin) {
    throw std::invalid_argument(
        "apply_resettable: sequence must start at an episode boundary (begin flag 1)");
  }

  const Monoid<Resettable<S>> op = make_resettable(m.monoid);
  std::vector<Resettable<S>> lifted(ps.size(), op.identity);
  parallel_for(ps.size(), sched.worker_budget, [&](std::size_t i0, std::size_t i1) {
    for (std::size_t i = i0; i < i1; ++i) {
      lifted[i] = Resettable<S>{m.lift(ps[i]), ps[i].begin};
    }
  });

  std::vector<Resettable<S>> scanned =
      scan_parallel(op, std::span<const Resettable<S>>(lifted), sched);

  result.states.reserve(ps.size());
  for (auto& e : scanned) result.states.push_back(std::move(e.value));

  result.markov.resize(ps.size());
  parallel_for(ps.size(), sched.worker_budget, [&](std::size_t i0, std::size_t i1) {
    for (std::size_t i = i0; i < i1; ++i) {
      result.markov[i] = m.readout(result.states[i], ps[i]);
    }
  });
  return result;
}

// Rollout-time single-step form: one combine (or a reset) per call. No
// batching, no parallelism; just enough for acting in an environment.
template <class S>
class MemoroidStepper {
 public:
  explicit MemoroidStepper(Memoroid<S> m) : m_(std::move(m)), state_(m_.monoid.identity) {}

  // Returns the Markov state for this step and advances the recurrent state.
  std::vector<double> step(const PartialTransition& p) {
    const S lifted = m_.lift(p);
    state_ = p.begin ? lifted : m_.monoid.combine(state_, lifted);
    return m_.readout(state_, p);
  }

  const S& state() const { return state_; }
  void reset() { state_ = m_.monoid.identity; }

 private:
  Memoroid<S> m_;
  S state_;
};

}  // namespace memo
