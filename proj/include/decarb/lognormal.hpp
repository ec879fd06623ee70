#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

#include "decarb/ensemble.hpp"

namespace decarb {

struct LognormalFit {
  double mu = 0;
  double s2 = 0;  // MLE variance of ln(theta), divisor n
  std::size_t n = 0;
};

// Closed-form MLE: mu = mean of ln(x), s2 = biased variance of ln(x).
LognormalFit lognormal_mle(std::span<const double> thetas);

double lognormal_pdf(double x, const LognormalFit& fit);

struct LognormalStats {
  double mean = 0, median = 0, p25 = 0, p75 = 0, variance = 0;
};

// mean = exp(mu + s2/2), var = (exp(s2)-1)exp(2mu+s2), quantile q =
// exp(mu + s * z_q).
LognormalStats lognormal_stats(const LognormalFit& fit);

// Each resample draws n i.i.d. lognormal(mu, s2) variates from
// substream(seed, k). The point estimate is the fitted closed-form value of
// the statistic.
BootstrapResult parametric_bootstrap(const LognormalFit& fit, std::size_t n, int n_resamples,
                                     Statistic statistic, std::uint64_t seed, int threads = 1);

}  // namespace decarb
