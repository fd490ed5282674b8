#pragma once

#include <string>

#include "adamon/schedule.hpp"
#include "adamon/vec.hpp"

namespace adamon {

// One engine drives every variant; they differ only in the second-moment rule
// h_t and in the momentum schedule conventionally paired with it:
//
//   SGD, HeavyBall    vhat_t = 1
//   AdaGrad, AdaFom   vhat_t = (1/t) sum_{i<=t} g_i^2   (incremental form)
//   AMSGrad           v_t = b2*v_{t-1} + (1-b2)*g_t^2, vhat_t = max(vhat_{t-1}, v_t)
//   RMSProp, Adam     vhat_t = b2*vhat_{t-1} + (1-b2)*g_t^2
//
// The engine accepts any valid beta1 schedule on any variant; the canonical
// pairings (beta1 = 0 for SGD/AdaGrad/RMSProp, constant for HeavyBall/Adam)
// are defaults, not hard constraints.
enum class Variant { SGD, HeavyBall, AdaGrad, AdaFom, AMSGrad, RMSProp, Adam };

Variant variant_from_string(const std::string& name);
std::string to_string(Variant v);

// true for variants whose h_t consumes beta2
bool uses_beta2(Variant v);
// true for variants with vhat identically one
bool unit_second_moment(Variant v);

struct OptimizerConfig {
  Variant variant = Variant::SGD;
  StepSchedule alpha = StepSchedule::constant(0.01);
  Beta1Schedule beta1 = Beta1Schedule::constant(0.0);
  double beta2 = 0.0;    // required in [0,1) for AMSGrad/RMSProp/Adam, ignored otherwise
  double epsilon = 0.0;  // added to sqrt(vhat) in the update denominator
  std::size_t dim = 1;

  void validate() const;  // throws std::invalid_argument
};

struct OptimizerState {
  long t = 0;
  Vector x;         // current iterate (x_{t+1} after t completed steps)
  Vector x_prev;    // previous iterate, x_0 == x_1 by convention
  Vector m;         // first moment m_t
  Vector v;         // EMA second moment v_t (AMSGrad only)
  Vector vhat;      // weighting vhat_t; zero at initialization
  Vector eff_step;  // last applied alpha_t/(sqrt(vhat_t)+eps); zero at t=0
};

// t = 0, m = v = vhat = eff_step = 0, x = x_prev = x1
OptimizerState init(const OptimizerConfig& config, const Vector& x1);

// One S1-S3 update. Throws NumericError on non-finite gradient input, a zero
// update denominator, or a non-finite result.
void step(OptimizerState& state, const Vector& g, const OptimizerConfig& config);

// h_t dispatch shared by step() and the equivalence tests; updates vhat (and
// v for AMSGrad) in place given the gradient at iteration t >= 1.
void update_second_moment(Variant variant, Vector& vhat, Vector& v,
                          const Vector& g, double beta2, long t);

// true iff ||eff_step ⊙ m|| <= G for the last completed step
bool bounded_update_check(const OptimizerState& state, double G);

}  // namespace adamon
