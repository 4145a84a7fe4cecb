#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "qqesd/root_finding.hpp"

namespace qqesd {
namespace {

TEST(Bisect, LinearRoot) {
  const BisectionResult r = bisect([](double v) { return 3.0 * v - 0.9; }, 0.0, 1.0, 1e-12);
  EXPECT_NEAR(r.root, 0.3, 1e-12);
  EXPECT_LE(r.hi - r.lo, 1e-12);
}

TEST(Bisect, ExactEndpointZero) {
  const BisectionResult r = bisect([](double v) { return v; }, 0.0, 1.0, 1e-12);
  EXPECT_EQ(r.root, 0.0);
}

TEST(Bisect, NoBracketThrows) {
  EXPECT_THROW(bisect([](double v) { return v * v + 1.0; }, -1.0, 1.0, 1e-9), DomainError);
}

TEST(Bisect, BracketInvariantOnRandomCubics) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.05, 0.95);
  for (int trial = 0; trial < 200; ++trial) {
    const double a = u(rng);
    auto f = [a](double v) { return (v - a) * (1.0 + v * v); };
    const BisectionResult r = bisect(f, 0.0, 1.0, 1e-11);
    EXPECT_LE(r.lo, r.hi);
    EXPECT_LE(r.f_lo * r.f_hi, 0.0);
    EXPECT_LE(r.lo, a);
    EXPECT_GE(r.hi, a);
    EXPECT_NEAR(r.root, a, 1e-11);
  }
}

TEST(ScanRoots, FindsAllSignChanges) {
  auto f = [](double v) { return (v - 0.2) * (v - 0.5) * (v - 0.77); };
  const auto roots = scan_roots(f, 0.0, 1.0, 1000, 1e-12);
  ASSERT_EQ(roots.size(), 3u);
  EXPECT_NEAR(roots[0], 0.2, 1e-12);
  EXPECT_NEAR(roots[1], 0.5, 1e-12);
  EXPECT_NEAR(roots[2], 0.77, 1e-12);
}

TEST(ScanRoots, TouchingZeroOnGridIsReported) {
  // Double root exactly on a sample point.
  const auto roots = scan_roots([](double v) { return (v - 0.5) * (v - 0.5); }, 0.0, 1.0, 10, 1e-12);
  ASSERT_EQ(roots.size(), 1u);
  EXPECT_EQ(roots[0], 0.5);
}

TEST(ScanRoots, VanishingStretchIsSkipped) {
  auto f = [](double v) { return v < 0.3 ? v - 0.3 : (v > 0.6 ? v - 0.6 : 0.0); };
  EXPECT_TRUE(scan_roots(f, 0.0, 1.0, 100, 1e-12).empty());
}

TEST(ScanRoots, RejectsEmptyRange) {
  EXPECT_THROW(scan_roots([](double v) { return v; }, 1.0, 1.0, 10, 1e-9), DomainError);
  EXPECT_THROW(scan_roots([](double v) { return v; }, 0.0, 1.0, 0, 1e-9), DomainError);
}

}  // namespace
}  // namespace qqesd
