#pragma once

#include <cstddef>

// Elementwise update kernels and reductions, each with a serial reference and
// an OpenMP implementation. Reductions accumulate left-to-right inside fixed
// 4096-element blocks and combine the block partials left-to-right, so both
// paths produce bit-identical results for any thread count. That ordering is
// part of the output contract (CSV logs must be byte-stable across reruns).

namespace adamon::kernels {

inline constexpr std::size_t kBlock = 4096;
// below this size the OpenMP paths are not worth the fork/join overhead
inline constexpr std::size_t kParallelCutoff = 2 * kBlock;

void set_parallel(bool on);
bool parallel_enabled();

namespace serial {

// m = beta*m + (1-beta)*g
void ema_update(double* m, const double* g, double beta, std::size_t n);
// v = beta*v + (1-beta)*g^2
void ema_sq_update(double* v, const double* g, double beta, std::size_t n);
// vhat = (1-1/t)*vhat + (1/t)*g^2
void mean_sq_update(double* vhat, const double* g, long t, std::size_t n);
// vhat = max(vhat, v)
void max_update(double* vhat, const double* v, std::size_t n);
// eff = alpha / (sqrt(vhat) + eps)
void effective_step(double* eff, const double* vhat, double alpha, double eps,
                    std::size_t n);
// x -= eff*m
void apply_update(double* x, const double* eff, const double* m,
                  std::size_t n);

double sum(const double* x, std::size_t n);
double sum_sq(const double* x, std::size_t n);
double sum_abs(const double* x, std::size_t n);
double sum_abs_diff(const double* a, const double* b, std::size_t n);
double sum_sq_diff(const double* a, const double* b, std::size_t n);
double sum_sq_prod(const double* a, const double* b, std::size_t n);
double dot(const double* a, const double* b, std::size_t n);
double min(const double* x, std::size_t n);
double max(const double* x, std::size_t n);
double max_abs_diff(const double* a, const double* b, std::size_t n);
bool all_finite(const double* x, std::size_t n);

}  // namespace serial

namespace par {

void ema_update(double* m, const double* g, double beta, std::size_t n);
void ema_sq_update(double* v, const double* g, double beta, std::size_t n);
void mean_sq_update(double* vhat, const double* g, long t, std::size_t n);
void max_update(double* vhat, const double* v, std::size_t n);
void effective_step(double* eff, const double* vhat, double alpha, double eps,
                    std::size_t n);
void apply_update(double* x, const double* eff, const double* m,
                  std::size_t n);

double sum(const double* x, std::size_t n);
double sum_sq(const double* x, std::size_t n);
double sum_abs(const double* x, std::size_t n);
double sum_abs_diff(const double* a, const double* b, std::size_t n);
double sum_sq_diff(const double* a, const double* b, std::size_t n);
double sum_sq_prod(const double* a, const double* b, std::size_t n);
double dot(const double* a, const double* b, std::size_t n);
double min(const double* x, std::size_t n);
double max(const double* x, std::size_t n);
double max_abs_diff(const double* a, const double* b, std::size_t n);
bool all_finite(const double* x, std::size_t n);

}  // namespace par

// dispatching entry points used by the library
void ema_update(double* m, const double* g, double beta, std::size_t n);
void ema_sq_update(double* v, const double* g, double beta, std::size_t n);
void mean_sq_update(double* vhat, const double* g, long t, std::size_t n);
void max_update(double* vhat, const double* v, std::size_t n);
void effective_step(double* eff, const double* vhat, double alpha, double eps,
                    std::size_t n);
void apply_update(double* x, const double* eff, const double* m,
                  std::size_t n);

double sum(const double* x, std::size_t n);
double sum_sq(const double* x, std::size_t n);
double sum_abs(const double* x, std::size_t n);
double sum_abs_diff(const double* a, const double* b, std::size_t n);
double sum_sq_diff(const double* a, const double* b, std::size_t n);
double sum_sq_prod(const double* a, const double* b, std::size_t n);
double dot(const double* a, const double* b, std::size_t n);
double min(const double* x, std::size_t n);
double max(const double* x, std::size_t n);
double max_abs_diff(const double* a, const double* b, std::size_t n);
bool all_finite(const double* x, std::size_t n);

}  // namespace adamon::kernels
