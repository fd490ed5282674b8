#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>

#include "adamon/rng.hpp"
#include "adamon/vec.hpp"

namespace adamon {

struct ProblemConstants {
  std::optional<double> H;       // bound on full and stochastic gradient norms
                                 // over the declared region
  std::optional<double> L;       // Lipschitz constant of the full gradient
  std::optional<double> f_star;  // optimal value, when known
  std::optional<Vector> x_star;  // a minimizer, when known
};

// Objective with a true gradient and a seeded stochastic gradient oracle.
// Stochastic draws are unbiased for the full gradient; distinct rng states
// give independent draws. Immutable after construction.
class Problem {
 public:
  virtual ~Problem() = default;

  const std::string& name() const { return name_; }
  std::size_t dim() const { return dim_; }
  // declared bounded test region, per coordinate
  double region_lo() const { return region_lo_; }
  double region_hi() const { return region_hi_; }
  const ProblemConstants& constants() const { return constants_; }

  virtual double value(const Vector& x) const = 0;
  virtual Vector full_gradient(const Vector& x) const = 0;
  virtual Vector stochastic_gradient(const Vector& x, SplitMix64& rng) const {
    (void)rng;
    return full_gradient(x);
  }

  // finite-sum structure; 0 means the objective is not a finite sum
  virtual std::size_t num_components() const { return 0; }
  virtual Vector component_gradient(std::size_t i, const Vector& x) const;

  // nonsmooth problems exclude points within `margin` of their kinks from
  // finite-difference checks; smooth problems accept everything
  virtual bool near_kink(const Vector& x, double margin) const {
    (void)x;
    (void)margin;
    return false;
  }

 protected:
  Problem(std::string name, std::size_t dim, double lo, double hi,
          ProblemConstants constants)
      : name_(std::move(name)),
        dim_(dim),
        region_lo_(lo),
        region_hi_(hi),
        constants_(std::move(constants)) {}

  // for constants that need the subclass fully built first
  void set_constants(ProblemConstants c) { constants_ = std::move(c); }

 private:
  std::string name_;
  std::size_t dim_;
  double region_lo_;
  double region_hi_;
  ProblemConstants constants_;
};

// f(x) = 100 x^2 for |x| <= b, 200 b |x| - 100 b^2 for |x| > b. Deterministic.
// At the kink the gradient takes the inner (quadratic-branch) value.
std::unique_ptr<Problem> piecewise_quadratic(double b = 10.0);

// Eleven-component finite sum in one dimension whose only stationary point is
// the origin; component 0 (the steep one) has slope 11, the other ten have
// slope -1. Stochastic draws pick a component uniformly and rescale by 11 so
// they stay unbiased for the full (summed) gradient.
std::unique_ptr<Problem> term_b_counterexample();

// f(x) = 100 x^2, gradient 200 x, plus optional uniform noise on
// [-noise_scale, noise_scale] in the stochastic oracle.
std::unique_ptr<Problem> quadratic_100(double noise_scale = 0.0);

// Mean of n least-squares components f_i(x) = 0.5 (a_i . x - b_i)^2 with
// entries of a_i, b_i drawn uniformly from [-1,1] using the given seed.
// Stochastic draws average `batch_size` distinct components sampled without
// replacement; batch_size = n reproduces the full gradient exactly.
std::unique_ptr<Problem> synthetic_finite_sum(std::size_t n_components,
                                              std::size_t dim, std::uint64_t seed,
                                              std::size_t batch_size = 1);

// central difference, coordinatewise: (f(x + h e_j) - f(x - h e_j)) / (2h)
Vector finite_difference_gradient(const Problem& problem, const Vector& x, double h);

}  // namespace adamon
