#pragma once

#include <limits>
#include <optional>
#include <vector>

#include "adamon/optimizer.hpp"
#include "adamon/problem.hpp"

namespace adamon {

// Per-iteration quantities of the sufficient-condition bound. Increments are
// defined at every t; the t = 1 oscillation increments use the convention
// that the effective stepsize before the first step is zero and are excluded
// from the cumulative sums (which run from t = 2).
struct MonitorRecord {
  long t = 0;
  double f_x = 0.0;          // objective at the pre-step iterate x_t
  double grad_norm_sq = 0.0; // squared norm of the true gradient at x_t, or of
                             // g_t when no problem is attached (surrogate)
  double termA_inc = 0.0;    // ||alpha_t g_t / (sqrt(vhat_t)+eps)||^2
  double termA_cum = 0.0;
  double termB_inc = 0.0;    // l1 oscillation of the effective stepsize
  double termB_cum = 0.0;
  double termC_inc = 0.0;    // squared-l2 oscillation
  double termC_cum = 0.0;
  double gamma_t = 0.0;      // min coordinate of the realized effective stepsize
  double gamma_cum = 0.0;
  double eff_step_min = 0.0;
  double eff_step_max = 0.0;
  double x_norm = 0.0;       // ||x_t||
  double min_grad_sq_running = 0.0;
  bool grad_surrogate = false;
};

// Declared problem/algorithm constants feeding the closed-form bound
// constants; every field is optional and missing inputs simply disable the
// dependent outputs.
struct TheoryDecl {
  std::optional<double> H;      // gradient bound
  std::optional<double> L;      // Lipschitz constant
  std::optional<double> G;      // update-norm bound; realized max if absent
  std::optional<double> beta1;  // cap of the momentum schedule
  std::optional<double> f_star;
  std::optional<double> c;      // min_j sqrt(vhat_1)_j; realized if absent
  std::optional<double> gamma_analytic_cum;  // caller-computed sum of alpha_t/H
  std::optional<Variant> variant;            // selects the Q1/Q2 closed form
  std::size_t d = 0;
};

struct TheoryConstants {
  std::optional<double> C1, C2, C3, C4;
  std::optional<double> Q1, Q2;
};

enum class Verdict { Converging, Suspect, Diverging };
const char* to_string(Verdict v);

struct ConvergenceReport {
  long T = 0;
  double termA_cum = 0.0, termB_cum = 0.0, termC_cum = 0.0, gamma_cum = 0.0;
  double min_grad_sq = 0.0;
  // log-log regression slopes over the last half of iterations (>= 50 points
  // when available); flat or all-zero series fit as slope 0
  double slope_termA = 0.0, slope_termB = 0.0, slope_termC = 0.0;
  double slope_gamma = 0.0;
  double slope_s1 = 0.0;  // slope of termA_cum + termB_cum + termC_cum
  // dyadic growth exponents log2(increment over [T/2,T] / increment over
  // [T/4,T/2]); immune to cumulative offsets left behind by transients, so
  // certification uses these. 0 marks a series that saturated in the window.
  double growth_s1 = 0.0;
  double growth_gamma = 0.0;
  double ratio_const = 1.0;
  double ratio_final = 0.0;
  double ratio_min_last_half = 0.0;
  double ratio_max_last_half = 0.0;
  bool grad_surrogate = false;
  double G_realized = 0.0;
  double c_realized = 0.0;  // min_j sqrt(vhat_1)_j
  std::optional<double> gamma_analytic_cum;
  TheoryConstants theory;
};

// Single-writer online monitor bound to one run.
class Monitor {
 public:
  explicit Monitor(const Problem* problem = nullptr) : problem_(problem) {}

  // States must be consecutive (next.t == prev.t + 1). `keep` controls
  // whether the record is retained for the report series; cumulative sums are
  // maintained over every observed step regardless.
  MonitorRecord observe(const OptimizerState& prev, const OptimizerState& next,
                        const Vector& g, bool keep = true);

  ConvergenceReport finalize(const TheoryDecl& decl = {}) const;

  // finalize over an externally kept record subset (e.g. strided CSV rows)
  // while still using this monitor's captured run quantities
  ConvergenceReport finalize_with(const std::vector<MonitorRecord>& records,
                                  const TheoryDecl& decl) const;

  const std::vector<MonitorRecord>& records() const { return records_; }
  double min_grad_sq_running() const { return min_grad_sq_; }
  double G_realized() const { return G_realized_; }

 private:
  const Problem* problem_;
  std::vector<MonitorRecord> records_;
  long t_seen_ = 0;
  double termA_cum_ = 0.0, termB_cum_ = 0.0, termC_cum_ = 0.0, gamma_cum_ = 0.0;
  double min_grad_sq_ = std::numeric_limits<double>::infinity();
  double G_realized_ = 0.0;
  double c_sqrt_vhat1_ = 0.0;
  double eff1_l1_ = 0.0;
  double f_x1_ = std::numeric_limits<double>::quiet_NaN();
};

// Stateless form of finalize for externally collected records; captured
// run quantities (c, G, ||alpha_1/sqrt(vhat_1)||_1, f(x_1)) must be supplied
// through `decl` or the dependent constants are omitted.
ConvergenceReport finalize(const std::vector<MonitorRecord>& records,
                           const TheoryDecl& decl, double eff1_l1 = 0.0,
                           double f_x1 = std::numeric_limits<double>::quiet_NaN(),
                           double G_realized = 0.0, double c_realized = 0.0);

// Converging when the s1 proxy grows at least `threshold` slope units slower
// than gamma_cum; Diverging when the slopes match within the threshold and
// the ratio series stays bounded away from zero over the fit window; Suspect
// otherwise. Requires T >= 100.
Verdict certify(const ConvergenceReport& report, double threshold = 0.1);

}  // namespace adamon
