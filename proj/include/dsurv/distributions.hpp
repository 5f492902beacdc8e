#ifndef DSURV_DISTRIBUTIONS_HPP
#define DSURV_DISTRIBUTIONS_HPP

#include <array>

#include "dsurv/random.hpp"

namespace dsurv {

struct MixtureComponent {
  double weight;
  double mean;
  double variance;
};

/// Ten-component normal mixture table. Weights sum to one, variances are
/// strictly positive.
struct MixtureTable {
  std::array<MixtureComponent, 10> components;
};

/// Mixture approximation of the standard Gumbel density
/// p(e) = exp(-e - exp(-e)), i.e. the law of -log of a unit exponential.
/// Constants are the published ten-component table, stored at full published
/// precision with the weights normalized to sum exactly to one.
const MixtureTable& gumbel_mixture_table();

/// Mixture approximation of the log chi-squared(1) density, used by the
/// stochastic volatility block.
const MixtureTable& log_chisq1_mixture_table();

/// Parameters of the generalized inverse Gaussian law with density
/// proportional to x^(p-1) exp(-(a x + b / x) / 2) on x > 0.
struct GigParams {
  double p;
  double a;
  double b;
};

/// True iff the density is normalizable: (a>0, b>=0, p>0), (a>=0, b>0, p<0)
/// or (a>0, b>0).
bool gig_params_valid(const GigParams& params);

/// Unnormalized log density (p-1) log x - (a x + b / x) / 2.
double gig_log_kernel(double x, const GigParams& params);

/// Exact GIG draw. Rejection constants are recomputed per call; near-degenerate
/// rates below 1e-12 fall back to the gamma / inverse-gamma limits.
double sample_gig(const GigParams& params, RandomStream& rng);

/// Draw kappa with kappa/2 ~ F(2a, 2c).
double sample_f_scaled(double a, double c, RandomStream& rng);

/// Draw x in (0, 1/2) with 2x ~ Beta(alpha, beta).
double sample_scaled_beta(double alpha, double beta, RandomStream& rng);

// log densities used in Metropolis-Hastings targets and tests

double log_normal_density(double x, double mean, double variance);
double log_gamma_density(double x, double shape, double rate);
double log_beta_density(double x, double a, double b);

/// Log density of the F(d1, d2) distribution.
double log_f_density(double x, double d1, double d2);

}  // namespace dsurv

#endif
