#pragma once

#include <cstdint>
#include <span>

namespace poissoncap {

// Log-probability (nats) of a Poisson law with the given mean at count y.
// Computed through the log-gamma function, never through powers or
// factorials. rate = 0 denotes the point mass at zero.
double poisson_log_pmf(double rate, std::int64_t y);

// P[Y >= n] for Y ~ Poisson(rate), computed as one minus the head sum with
// compensated summation. Exactly 1 at n = 0.
double poisson_tail(double rate, std::int64_t n);

// Smallest y_max such that the Poisson tail mass beyond y_max is at most
// tol, i.e. poisson_tail(rate, y_max + 1) <= tol. Sums over y in
// [0, y_max] then capture all but tol of the mass.
std::int64_t poisson_truncation(double rate, double tol);

// Upper incomplete gamma integral of t^(a-1) e^-t over [xi, inf),
// non-normalized. Series below xi = a + 1, continued fraction above.
double upper_incomplete_gamma(double a, double xi);

// log(sum_i exp(v_i)) with max-shift stabilization; -inf entries are
// absorbed. The input must be nonempty.
double log_sum_exp(std::span<const double> values);

}  // namespace poissoncap
