#pragma once

#include <string>
#include <vector>

namespace adamon {

// Stepsize sequence alpha_t, t >= 1. All values must be strictly positive.
class StepSchedule {
 public:
  enum class Kind { Constant, InverseSqrt, Table };

  static StepSchedule constant(double alpha);
  // alpha_t = c / sqrt(t)
  static StepSchedule inverse_sqrt(double c);
  // explicit values; evaluation past the end repeats the last entry
  static StepSchedule table(std::vector<double> values);

  double at(long t) const;
  Kind kind() const { return kind_; }
  double base() const { return base_; }
  bool non_increasing() const;

 private:
  StepSchedule(Kind kind, double base, std::vector<double> values);
  Kind kind_;
  double base_ = 0.0;
  std::vector<double> values_;
};

// Momentum sequence beta_{1,t}: non-increasing, in [0,1).
class Beta1Schedule {
 public:
  enum class Kind { Constant, Table, GeometricDecay };

  static Beta1Schedule constant(double beta1);
  static Beta1Schedule table(std::vector<double> values);
  // beta_{1,t} = limit + (beta1 - limit) * rate^(t-1), limit in [0, beta1]
  static Beta1Schedule geometric_decay(double beta1, double limit, double rate);

  double at(long t) const;
  // smallest upper bound beta_1 >= beta_{1,t} for all t
  double cap() const;
  Kind kind() const { return kind_; }

 private:
  Beta1Schedule(Kind kind, double b1, double limit, double rate,
                std::vector<double> values);
  Kind kind_;
  double beta1_ = 0.0;
  double limit_ = 0.0;
  double rate_ = 0.0;
  std::vector<double> values_;
};

}  // namespace adamon
