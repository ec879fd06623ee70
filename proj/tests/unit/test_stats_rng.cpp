#include <algorithm>
#include <cmath>
#include <set>
#include <vector>

#include "decarb/rng.hpp"
#include "decarb/stats.hpp"
#include "doctest.h"

using namespace decarb;

TEST_SUITE("stats") {

TEST_CASE("quantile rule: linear interpolation at 1 + (n-1)q") {
  const std::vector<double> xs = {1.0, 2.0, 3.0, 4.0};
  CHECK(quantile_sorted(xs, 0.5) == doctest::Approx(2.5).epsilon(1e-15));
  CHECK(quantile_sorted(xs, 0.25) == doctest::Approx(1.75).epsilon(1e-15));
  CHECK(quantile_sorted(xs, 0.75) == doctest::Approx(3.25).epsilon(1e-15));
  CHECK(quantile_sorted(xs, 0.0) == 1.0);
  CHECK(quantile_sorted(xs, 1.0) == 4.0);
}

TEST_CASE("mean and deviations") {
  const std::vector<double> xs = {2.0, 4.0, 4.0, 4.0, 5.0, 5.0, 7.0, 9.0};
  CHECK(mean_of(xs) == doctest::Approx(5.0).epsilon(1e-15));
  CHECK(biased_variance(xs) == doctest::Approx(4.0).epsilon(1e-15));
  CHECK(sample_std(xs) == doctest::Approx(std::sqrt(32.0 / 7.0)).epsilon(1e-15));
}

}  // TEST_SUITE

TEST_SUITE("rng") {

TEST_CASE("normal quantile matches reference values to 1e-9") {
  struct Case {
    double p, z;
  };
  // reference values of the standard normal inverse CDF
  const Case cases[] = {
      {1e-9, -5.9978070150076865}, {0.001, -3.090232306167813},
      {0.025, -1.9599639845400545}, {0.05, -1.6448536269514729},
      {0.25, -0.6744897501960817}, {0.5, 0.0},
      {0.75, 0.6744897501960817},  {0.95, 1.6448536269514722},
      {0.975, 1.959963984540054},  {0.999, 3.090232306167813},
      {0.999999999, 5.997807019601637},
  };
  for (const auto& c : cases) {
    CAPTURE(c.p);
    CHECK(std::abs(normal_quantile(c.p) - c.z) <= 1e-9);
  }
  CHECK_THROWS((void)normal_quantile(0.0));
  CHECK_THROWS((void)normal_quantile(1.0));
}

TEST_CASE("substreams are deterministic and decorrelated") {
  SplitMix64 a = substream(42, 7);
  SplitMix64 b = substream(42, 7);
  SplitMix64 c = substream(42, 8);
  SplitMix64 d = substream(43, 7);
  bool same_ab = true, same_ac = true, same_ad = true;
  std::uint64_t first_a = 0;
  for (int i = 0; i < 64; ++i) {
    const std::uint64_t va = a.next();
    if (i == 0) first_a = va;
    same_ab &= va == b.next();
    same_ac &= va == c.next();
    same_ad &= va == d.next();
  }
  CHECK(same_ab);
  CHECK_FALSE(same_ac);
  CHECK_FALSE(same_ad);
  CHECK(first_a == substream(42, 7).next());
}

TEST_CASE("uniform draws stay in range") {
  SplitMix64 rng(2024);
  for (int i = 0; i < 10000; ++i) {
    const double u = rng.next_unit();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
    const double v = rng.next_open_unit();
    CHECK(v > 0.0);
    CHECK(v < 1.0);
    const auto idx = rng.next_index(126);
    CHECK(idx < 126);
  }
}

TEST_CASE("index draws cover the range roughly uniformly") {
  SplitMix64 rng(5);
  std::vector<int> counts(10, 0);
  const int draws = 100000;
  for (int i = 0; i < draws; ++i) ++counts[rng.next_index(10)];
  for (int c : counts) {
    CHECK(c > draws / 10 - 600);
    CHECK(c < draws / 10 + 600);
  }
}

TEST_CASE("normal samples have the right first two moments") {
  SplitMix64 rng(7);
  const int n = 200000;
  double sum = 0.0, sumsq = 0.0;
  for (int i = 0; i < n; ++i) {
    const double z = rng.next_normal();
    sum += z;
    sumsq += z * z;
  }
  const double mean = sum / n;
  const double var = sumsq / n - mean * mean;
  CHECK(std::abs(mean) < 0.01);        // ~4.5 sigma of the mean estimator
  CHECK(std::abs(var - 1.0) < 0.02);
}

}  // TEST_SUITE
