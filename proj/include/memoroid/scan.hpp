// Copyright 2026 The memoroid Authors. Apache 2.0 License.
#pragma once

#include <atomic>
#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "memoroid/parallel.hpp"

namespace memo {

// A monoid over H: an identity element plus a closed associative binary
// operator. Associativity and the identity laws are the caller's contract;
// the property suites sample-check them for every operator we register.
template <class H>
struct Monoid {
  H identity;
  std::function<H(const H&, const H&)> combine;
};

// combine(a, b) with the argument order swapped. Associativity and identity
// are preserved, so suffix-style scans can reuse the machinery below.
template <class H>
Monoid<H> flipped(const Monoid<H>& m) {
  return Monoid<H>{m.identity, [combine = m.combine](const H& a, const H& b) {
                     return combine(b, a);
                   }};
}

// Wraps a monoid so that every combine call bumps `counter`. The counter is
// atomic because scan_parallel may combine from several workers at once.
template <class H>
Monoid<H> counting(const Monoid<H>& m, std::atomic<long>& counter) {
  return Monoid<H>{m.identity,
                   [combine = m.combine, &counter](const H& a, const H& b) {
                     counter.fetch_add(1, std::memory_order_relaxed);
                     return combine(a, b);
                   }};
}

// worker_budget controls how many threads execute the scan; block_size fixes
// the shape of the combining tree. Results are a pure function of
// (sequence length, block_size) -- never of worker_budget -- so floating
// point outputs are reproducible across budgets.
struct ScanSchedule {
  int worker_budget{1};
  std::size_t block_size{256};

  void validate() const {
    if (block_size < 1) throw std::invalid_argument("ScanSchedule: block_size must be >= 1");
    if (worker_budget < 1) throw std::invalid_argument("ScanSchedule: worker_budget must be >= 1");
  }
};

// Inclusive left-fold scan: y_t = x_0 • x_1 • ... • x_t. Exactly n-1 combine
// calls for n >= 1.
template <class H>
std::vector<H> scan_sequential(const Monoid<H>& op, std::span<const H> xs) {
  std::vector<H> out;
  out.reserve(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i == 0) {
      out.push_back(xs[0]);
    } else {
      out.push_back(op.combine(out.back(), xs[i]));
    }
  }
  return out;
}

template <class H>
std::vector<H> scan_sequential(const Monoid<H>& op, const std::vector<H>& xs) {
  return scan_sequential(op, std::span<const H>(xs));
}

namespace detail {

// Classic Blelloch up-sweep/down-sweep computing the exclusive prefix scan of
// `a` in place. `a` is padded with identity elements to a power of two, so
// the tree shape depends only on a.size().
template <class H>
void blelloch_exclusive_inplace(const Monoid<H>& op, std::vector<H>& a) {
  std::size_t n = 1;
  while (n < a.size()) n *= 2;
  a.resize(n, op.identity);
  // Up-sweep: build the reduction tree.
  for (std::size_t stride = 1; stride < n; stride *= 2) {
    for (std::size_t i = 2 * stride - 1; i < n; i += 2 * stride) {
      a[i] = op.combine(a[i - stride], a[i]);
    }
  }
  // Down-sweep: root becomes identity, then prefixes propagate to the leaves.
  a[n - 1] = op.identity;
  for (std::size_t stride = n / 2; stride >= 1; stride /= 2) {
    for (std::size_t i = 2 * stride - 1; i < n; i += 2 * stride) {
      H left = std::move(a[i - stride]);
      a[i - stride] = a[i];
      a[i] = op.combine(left, a[i]);
    }
  }
}

}  // namespace detail

// Work-efficient inclusive parallel scan, element-wise identical to
// scan_sequential. Three phases:
//   1. each block of `block_size` elements is scanned sequentially (parallel
//      over blocks),
//   2. a Blelloch up/down-sweep over the block totals yields the exclusive
//      prefix of every block,
//   3. each element combines its block's exclusive prefix with its in-block
//      inclusive value (parallel over blocks).
// Block 0 has the identity prefix and is copied rather than combined, which
// both saves calls and keeps the first block bitwise equal to the sequential
// scan. Total combine calls are <= 2n + 4·ceil(n/block_size).
template <class H>
std::vector<H> scan_parallel(const Monoid<H>& op, std::span<const H> xs,
                             const ScanSchedule& sched) {
  sched.validate();
  const std::size_t n = xs.size();
  if (n == 0) return {};

  const std::size_t bs = sched.block_size;
  const std::size_t nblocks = (n + bs - 1) / bs;

  std::vector<H> out(xs.begin(), xs.end());
  std::vector<H> block_totals(nblocks, op.identity);

  parallel_for(nblocks, sched.worker_budget, [&](std::size_t b0, std::size_t b1) {
    for (std::size_t b = b0; b < b1; ++b) {
      const std::size_t lo = b * bs;
      const std::size_t hi = std::min(lo + bs, n);
      for (std::size_t i = lo + 1; i < hi; ++i) {
        out[i] = op.combine(out[i - 1], out[i]);
      }
      block_totals[b] = out[hi - 1];
    }
  });

  if (nblocks > 1) {
    detail::blelloch_exclusive_inplace(op, block_totals);
    parallel_for(nblocks - 1, sched.worker_budget, [&](std::size_t b0, std::size_t b1) {
      // Block 0 keeps its leaf scan untouched; blocks 1.. fold in the prefix.
      for (std::size_t b = b0 + 1; b < b1 + 1; ++b) {
        const std::size_t lo = b * bs;
        const std::size_t hi = std::min(lo + bs, n);
        for (std::size_t i = lo; i < hi; ++i) {
          out[i] = op.combine(block_totals[b], out[i]);
        }
      }
    });
  }
  return out;
}

template <class H>
std::vector<H> scan_parallel(const Monoid<H>& op, const std::vector<H>& xs,
                             const ScanSchedule& sched) {
  return scan_parallel(op, std::span<const H>(xs), sched);
}

}  // namespace memo
