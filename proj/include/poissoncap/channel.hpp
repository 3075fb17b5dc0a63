#pragma once

#include <limits>
#include <vector>

namespace poissoncap {

// Dark-current specification: a constant level, or one proportional to the
// average power of the scenario it is attached to.
struct DarkCurrent {
  enum class Kind { Constant, Proportional };

  Kind kind = Kind::Constant;
  double value = 0.0;  // lambda when Constant, c when Proportional

  static DarkCurrent constant(double lambda);
  static DarkCurrent proportional(double c);

  // Effective lambda at average power E.
  double resolve(double avg_power) const;
};

// Power-constrained channel scenario. peak is +infinity when the input has
// no almost-sure bound.
struct ChannelScenario {
  DarkCurrent dark;
  double avg_power = 0.0;
  double peak = std::numeric_limits<double>::infinity();

  double effective_dark() const { return dark.resolve(avg_power); }
  bool peak_finite() const;
  void validate() const;
};

// Finite-support input law. Construction sorts the support, merges
// duplicate levels, drops zero-probability points and checks that the
// probabilities sum to one within 1e-12.
class DiscreteInput {
 public:
  struct Point {
    double level;
    double prob;
  };

  explicit DiscreteInput(std::vector<Point> points);

  const std::vector<Point>& points() const { return points_; }
  double mean() const;
  double max_level() const;

  // Throws unless every level is within the peak bound and the mean power
  // is within the average bound of the scenario.
  void check_feasible(const ChannelScenario& scenario) const;

 private:
  std::vector<Point> points_;
};

// On-off keying: level 0 with probability 1-p, level zeta with
// probability p.
struct BinaryInput {
  double zeta;
  double p;

  BinaryInput(double zeta, double p);
  double mean() const { return p * zeta; }
  DiscreteInput to_discrete() const;
};

// KL divergence (nats) between Poisson laws of means alpha and beta:
// alpha log(alpha/beta) - alpha + beta, with 0 log 0 = 0. Infinite when
// beta = 0 < alpha.
double kl_poisson(double alpha, double beta);

// Mutual information (nats) of the Poisson channel with dark current
// lambda under the given input law, computed as the input-weighted average
// of per-letter divergences from the exact output mixture. Each divergence
// series is truncated with neglected tail mass at most tol_tail.
double mutual_information(const DiscreteInput& input, double lambda,
                          double tol_tail = 1e-15);
double mutual_information(const BinaryInput& input, double lambda,
                          double tol_tail = 1e-15);

// Split of the binary-input mutual information at output zero:
// binary_mi_head is the exact y = 0 contribution, binary_mi_tail the
// y >= 1 series. Their sum equals mutual_information(BinaryInput{zeta, p}).
double binary_mi_head(double lambda, double zeta, double p);
double binary_mi_tail(double lambda, double zeta, double p,
                      double tol_tail = 1e-15);

}  // namespace poissoncap
