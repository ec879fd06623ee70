#include <cmath>
#include <vector>

#include "decarb/error.hpp"
#include "decarb/lognormal.hpp"
#include "decarb/rng.hpp"
#include "doctest.h"

using namespace decarb;

namespace {

// Simpson quadrature of the density over x = exp(y), y in [mu - 12s, mu + 12s];
// independent check that the closed-form density integrates to one.
double integrate_pdf(const LognormalFit& fit) {
  const double s = std::sqrt(fit.s2);
  const double lo = fit.mu - 12.0 * s;
  const double hi = fit.mu + 12.0 * s;
  const int n = 20000;  // even
  const double h = (hi - lo) / n;
  auto g = [&](double y) {
    const double x = std::exp(y);
    return lognormal_pdf(x, fit) * x;  // change of variables
  };
  double sum = g(lo) + g(hi);
  for (int i = 1; i < n; ++i) sum += (i % 2 == 1 ? 4.0 : 2.0) * g(lo + h * i);
  return sum * h / 3.0;
}

std::vector<double> sample_lognormal(const LognormalFit& fit, std::size_t m, std::uint64_t seed) {
  SplitMix64 rng(seed);
  const double s = std::sqrt(fit.s2);
  std::vector<double> xs(m);
  for (auto& x : xs) x = std::exp(fit.mu + s * rng.next_normal());
  return xs;
}

}  // namespace

TEST_SUITE("lognormal") {

TEST_CASE("MLE closed forms") {
  SUBCASE("two-point sample by hand") {
    const std::vector<double> xs = {std::exp(-3.0), std::exp(-2.0)};
    const auto fit = lognormal_mle(xs);
    CHECK(fit.mu == doctest::Approx(-2.5).epsilon(1e-14));
    CHECK(fit.s2 == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(fit.n == 2);
  }
  SUBCASE("constant sample") {
    const std::vector<double> xs(8, 0.07);
    const auto fit = lognormal_mle(xs);
    CHECK(fit.mu == doctest::Approx(std::log(0.07)).epsilon(1e-14));
    CHECK(fit.s2 == doctest::Approx(0.0).scale(1.0).epsilon(1e-28));
  }
  SUBCASE("variance uses divisor n, not n-1") {
    const std::vector<double> xs = {std::exp(-1.0), std::exp(1.0)};
    CHECK(lognormal_mle(xs).s2 == doctest::Approx(1.0).epsilon(1e-14));  // not 2.0
  }
  SUBCASE("rejects non-positive values and tiny samples") {
    CHECK_THROWS_AS((void)lognormal_mle(std::vector<double>{0.1}), Error);
    CHECK_THROWS_AS((void)lognormal_mle(std::vector<double>{0.1, 0.0}), Error);
    CHECK_THROWS_AS((void)lognormal_mle(std::vector<double>{0.1, -0.2}), Error);
  }
}

TEST_CASE("density") {
  const LognormalFit fit{-2.87, 0.48, 126};
  SUBCASE("value at the median") {
    const double x = std::exp(fit.mu);
    const double expected = 1.0 / (x * std::sqrt(fit.s2) * std::sqrt(2.0 * 3.14159265358979323846));
    CHECK(lognormal_pdf(x, fit) == doctest::Approx(expected).epsilon(1e-12));
  }
  SUBCASE("spot value") {
    CHECK(lognormal_pdf(0.057, fit) == doctest::Approx(10.10187297111343).epsilon(1e-10));
  }
  SUBCASE("integrates to one") {
    CHECK(std::abs(integrate_pdf(fit) - 1.0) <= 1e-6);
  }
  SUBCASE("domain errors") {
    CHECK_THROWS_AS((void)lognormal_pdf(0.0, fit), Error);
    CHECK_THROWS_AS((void)lognormal_pdf(-1.0, fit), Error);
    CHECK_THROWS_AS((void)lognormal_pdf(1.0, LognormalFit{0.0, 0.0, 5}), Error);
  }
}

TEST_CASE("closed-form statistics") {
  const LognormalFit fit{-2.87, 0.48, 126};
  const auto st = lognormal_stats(fit);
  CHECK(st.mean == doctest::Approx(0.0720784622387661).epsilon(1e-12));
  CHECK(st.median == doctest::Approx(0.0566989265798469).epsilon(1e-12));
  CHECK(st.p25 == doctest::Approx(0.03553275945007655).epsilon(1e-9));
  CHECK(st.p75 == doctest::Approx(0.0904733638777369).epsilon(1e-9));
  CHECK(st.variance == doctest::Approx(0.003200694248786244).epsilon(1e-12));

  SUBCASE("quantile symmetry: p25 * p75 = median^2") {
    CHECK(std::abs(st.p25 * st.p75 / (st.median * st.median) - 1.0) <= 1e-12);
  }
  SUBCASE("zero variance degenerates to a point mass") {
    const auto d = lognormal_stats(LognormalFit{-2.0, 0.0, 10});
    CHECK(d.mean == doctest::Approx(std::exp(-2.0)).epsilon(1e-14));
    CHECK(d.median == d.mean);
    CHECK(d.p25 == d.mean);
    CHECK(d.variance == 0.0);
  }
}

TEST_CASE("MLE recovery from a large sample") {
  const LognormalFit truth{-2.87, 0.48, 0};
  const std::size_t m = 100000;
  const auto xs = sample_lognormal(truth, m, 2026);
  const auto fit = lognormal_mle(xs);
  CHECK(std::abs(fit.mu - truth.mu) <= 3.0 / std::sqrt(double(m)));
  CHECK(std::abs(fit.s2 - truth.s2) <= 5.0 / std::sqrt(double(m)));
}

TEST_CASE("closed-form mean matches Monte Carlo") {
  const LognormalFit fit{-2.87, 0.48, 0};
  const auto xs = sample_lognormal(fit, 1000000, 7);
  double sum = 0.0;
  for (double x : xs) sum += x;
  const double mc = sum / double(xs.size());
  CHECK(std::abs(mc / lognormal_stats(fit).mean - 1.0) <= 0.005);
}

TEST_CASE("parametric bootstrap") {
  const LognormalFit fit{-2.87, 0.48, 126};
  SUBCASE("deterministic across thread counts") {
    const auto a = parametric_bootstrap(fit, 126, 2000, Statistic::median, 42, 1);
    const auto b = parametric_bootstrap(fit, 126, 2000, Statistic::median, 42, 8);
    CHECK(a.lo == b.lo);
    CHECK(a.hi == b.hi);
    CHECK(a.resample_mean == b.resample_mean);
  }
  SUBCASE("median interval sits around the fitted median") {
    const auto r = parametric_bootstrap(fit, 126, 5000, Statistic::median, 42, 4);
    CHECK(std::abs(r.lo - 0.051) <= 0.003);
    CHECK(std::abs(r.hi - 0.063) <= 0.003);
    CHECK(r.point == doctest::Approx(0.0566989).epsilon(1e-5));
  }
  SUBCASE("mean interval") {
    const auto r = parametric_bootstrap(fit, 126, 5000, Statistic::mean, 42, 4);
    CHECK(std::abs(r.lo - 0.065) <= 0.003);
    CHECK(std::abs(r.hi - 0.079) <= 0.003);
  }
  SUBCASE("tiny variance collapses the interval") {
    const auto r = parametric_bootstrap(LognormalFit{-2.87, 1e-12, 126}, 126, 1000,
                                        Statistic::median, 1, 1);
    CHECK(r.lo == doctest::Approx(r.point).epsilon(1e-5));
    CHECK(r.hi == doctest::Approx(r.point).epsilon(1e-5));
  }
  SUBCASE("zero variance is rejected") {
    CHECK_THROWS_AS(
        (void)parametric_bootstrap(LognormalFit{0.0, 0.0, 5}, 126, 1000, Statistic::mean, 1),
        Error);
  }
}

}  // TEST_SUITE
