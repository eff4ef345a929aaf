// Copyright 2026 The memoroid Authors. Apache 2.0 License.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <atomic>
#include <cstring>
#include <vector>

#include "memoroid/memoroid.hpp"
#include "memoroid/scan.hpp"
#include "test_util.hpp"

using namespace memo;
using namespace memo::test;

TEST_CASE("sequential scan matches the hand-evaluated left fold") {
  const std::vector<long> xs = {1, 2, 3, 4};
  const auto ys = scan_sequential(int_add_monoid(), xs);
  CHECK(ys == std::vector<long>{1, 3, 6, 10});
}

TEST_CASE("sequential scan edge cases") {
  const auto op = int_add_monoid();
  CHECK(scan_sequential(op, std::vector<long>{}).empty());
  CHECK(scan_sequential(op, std::vector<long>{7}) == std::vector<long>{7});
}

TEST_CASE("sequential scan uses exactly n-1 combines") {
  std::atomic<long> calls{0};
  const auto op = counting(int_add_monoid(), calls);
  std::vector<long> xs(137, 1);
  scan_sequential(op, xs);
  CHECK(calls.load() == 136);
}

TEST_CASE("parallel scan equals sequential scan for integer payloads") {
  Rng rng(11);
  for (const auto& op : {int_add_monoid(), int_max_monoid()}) {
    for (std::size_t n : scan_lengths()) {
      std::vector<long> xs(n);
      for (auto& x : xs) x = rng.uniform_int(-1000, 1000);
      const auto expect = scan_sequential(op, xs);
      for (int workers : {1, 4}) {
        const auto got = scan_parallel(op, xs, ScanSchedule{workers, 256});
        CHECK(got == expect);
      }
    }
  }
}

TEST_CASE("parallel scan equals sequential scan for 2x2 matrix product") {
  Rng rng(12);
  const auto op = mat2_monoid();
  std::vector<Mat2> xs(257);
  for (auto& x : xs) x = random_mat2(rng);
  const auto expect = scan_sequential(op, xs);
  const auto got = scan_parallel(op, xs, ScanSchedule{4, 32});
  REQUIRE(got.size() == expect.size());
  for (std::size_t i = 0; i < got.size(); ++i) {
    for (int j = 0; j < 4; ++j) {
      CHECK(rel_close(got[i].m[j], expect[i].m[j], 1e-6, 1e-12));
    }
  }
}

TEST_CASE("parallel scan trivial cases") {
  const auto op = int_add_monoid();
  CHECK(scan_parallel(op, std::vector<long>{}, ScanSchedule{8, 256}).empty());
  CHECK(scan_parallel(op, std::vector<long>{5}, ScanSchedule{8, 256}) ==
        std::vector<long>{5});
}

TEST_CASE("worker budget never changes floating results bitwise") {
  Rng rng(13);
  const auto op = mat2_monoid();
  for (std::size_t n : {5ul, 100ul, 999ul, 2048ul}) {
    std::vector<Mat2> xs(n);
    for (auto& x : xs) x = random_mat2(rng);
    const auto a = scan_parallel(op, xs, ScanSchedule{1, 64});
    const auto b = scan_parallel(op, xs, ScanSchedule{16, 64});
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(std::memcmp(a[i].m.data(), b[i].m.data(), sizeof(a[i].m)) == 0);
    }
  }
}

TEST_CASE("block size changes the tree but not exact payload results") {
  Rng rng(14);
  const auto op = int_add_monoid();
  std::vector<long> xs(1337);
  for (auto& x : xs) x = rng.uniform_int(-5, 5);
  const auto expect = scan_sequential(op, xs);
  for (std::size_t bs : {1ul, 2ul, 7ul, 64ul, 2048ul}) {
    CHECK(scan_parallel(op, xs, ScanSchedule{3, bs}) == expect);
  }
}

TEST_CASE("parallel combine-call count stays linear") {
  for (std::size_t n : {64ul, 1000ul, 4096ul}) {
    std::atomic<long> calls{0};
    const auto op = counting(int_add_monoid(), calls);
    std::vector<long> xs(n, 1);
    scan_parallel(op, xs, ScanSchedule{4, 256});
    CHECK(calls.load() <= static_cast<long>(3 * n));
  }
}

TEST_CASE("invalid schedules are rejected") {
  const auto op = int_add_monoid();
  std::vector<long> xs = {1, 2};
  CHECK_THROWS_AS(scan_parallel(op, xs, ScanSchedule{0, 256}), std::invalid_argument);
  CHECK_THROWS_AS(scan_parallel(op, xs, ScanSchedule{1, 0}), std::invalid_argument);
}

TEST_CASE("flipped monoid computes suffix-style products") {
  // flipped(add over strings) reverses concatenation order.
  Monoid<std::string> cat{std::string{},
                          [](const std::string& a, const std::string& b) { return a + b; }};
  const auto rev = flipped(cat);
  const std::vector<std::string> xs = {"a", "b", "c"};
  const auto ys = scan_sequential(rev, xs);
  CHECK(ys == std::vector<std::string>{"a", "ba", "cba"});
}
