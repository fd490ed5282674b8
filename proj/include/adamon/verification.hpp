#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "adamon/optimizer.hpp"
#include "adamon/problem.hpp"

namespace adamon {

// Everything a step contributes to the auxiliary-sequence identity check.
struct StepSnapshot {
  long t = 0;
  double alpha_t = 0.0;
  double beta1_t = 0.0;
  Vector g;
  Vector m;
  Vector vhat;
  Vector eff;      // alpha_t / sqrt(vhat_t); traces are epsilon = 0 runs
  Vector x_after;  // x_{t+1}
};

struct RunTrace {
  Vector x1;
  OptimizerConfig config;
  std::vector<StepSnapshot> steps;
};

// Runs the optimizer on seeded stochastic gradients and records a full trace.
RunTrace record_trace(const Problem& problem, const OptimizerConfig& config,
                      const Vector& x1, long iters, std::uint64_t seed);

// z_t = x_t + beta_{1,t}/(1-beta_{1,t}) (x_t - x_{t-1}); the update identity
// relates z_{t+1} - z_t to the momentum-weighted oscillation terms. This is
// an exact identity, so residuals beyond rounding noise mean a broken engine.
struct ZTrace {
  std::vector<double> residual;  // ||(z_{t+1}-z_t) - RHS_t||, t = 1..T
  std::vector<double> z_norm;    // ||z_t||
  double max_rel_residual = 0.0; // max residual_t / (1 + ||z_t||)

  bool holds(double tol = 1e-10) const { return max_rel_residual <= tol; }
};

ZTrace check_z_identity(const RunTrace& trace);

struct SeqCheck {
  double lhs = 0.0;
  double rhs = 0.0;
  bool holds = false;
};

// b_i = sum_{k=1}^i beta^{i-k} sum_{l=k+1}^i a_l, evaluated by the literal
// double sum; checks sum b_i^2 <= (1/(1-beta))^2 (beta/(1-beta))^2 sum a_i^2.
SeqCheck check_seq_exp(const std::vector<double>& a, double beta);

// checks sum_t a_t / (sum_{i<=t} a_i) <= 1 - log a_1 + log sum a_i
SeqCheck check_seq_adagrad(const std::vector<double>& a);

// Least-squares fit of a running-min series against the (1/sqrt(T),
// log T/sqrt(T)) basis, plus an intercept inflation that makes the curve a
// one-sided upper envelope of the data.
struct RateFit {
  double q1 = 0.0;
  double q2 = 0.0;
  double q1_envelope = 0.0;
  double max_rel_residual = 0.0;

  double evaluate(double T) const;
  double evaluate_envelope(double T) const;
};

// checkpoints are (T, running_min) pairs with strictly increasing T; at least
// five are required
RateFit fit_rate(const std::vector<std::pair<double, double>>& checkpoints);

}  // namespace adamon
