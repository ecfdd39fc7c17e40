// NEON kernel variants for aarch64 (NEON is baseline there, no extra flags needed).

#include "smt/kernels.hpp"

#if defined(SMT_HAVE_NEON)

#include <arm_neon.h>

#include <cassert>
#include <cmath>
#include <cstddef>

namespace smt::kernels::detail {

namespace {

double dot_neon(std::span<const double> a, std::span<const double> b) {
  assert(a.size() == b.size());
  const std::size_t n = a.size();
  float64x2_t acc = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2)
    acc = vfmaq_f64(acc, vld1q_f64(a.data() + i), vld1q_f64(b.data() + i));
  double sum = vaddvq_f64(acc);
  for (; i < n; ++i) sum += a[i] * b[i];
  return sum;
}

double dot3_neon(std::span<const double> a, std::span<const double> b,
                 std::span<const double> c) {
  assert(a.size() == b.size() && a.size() == c.size());
  const std::size_t n = a.size();
  float64x2_t acc = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const float64x2_t ab = vmulq_f64(vld1q_f64(a.data() + i), vld1q_f64(b.data() + i));
    acc = vfmaq_f64(acc, ab, vld1q_f64(c.data() + i));
  }
  double sum = vaddvq_f64(acc);
  for (; i < n; ++i) sum += a[i] * b[i] * c[i];
  return sum;
}

void axpy_neon(double alpha, std::span<const double> x, std::span<double> y) {
  assert(x.size() == y.size());
  const std::size_t n = x.size();
  const float64x2_t va = vdupq_n_f64(alpha);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2)
    vst1q_f64(y.data() + i, vfmaq_f64(vld1q_f64(y.data() + i), va, vld1q_f64(x.data() + i)));
  for (; i < n; ++i) y[i] += alpha * x[i];
}

void lincomb3_neon(double c1, std::span<const double> a, double c2, std::span<const double> b,
                   double c3, std::span<const double> c, std::span<double> out) {
  assert(a.size() == b.size() && a.size() == c.size() && a.size() == out.size());
  const std::size_t n = a.size();
  const float64x2_t v1 = vdupq_n_f64(c1);
  const float64x2_t v2 = vdupq_n_f64(c2);
  const float64x2_t v3 = vdupq_n_f64(c3);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    float64x2_t acc = vmulq_f64(v1, vld1q_f64(a.data() + i));
    acc = vfmaq_f64(acc, v2, vld1q_f64(b.data() + i));
    acc = vfmaq_f64(acc, v3, vld1q_f64(c.data() + i));
    vst1q_f64(out.data() + i, acc);
  }
  for (; i < n; ++i) out[i] = c1 * a[i] + c2 * b[i] + c3 * c[i];
}

void radial_stencil_neon(std::span<const double> u, double s2, std::span<const double> c1,
                         std::span<const double> p, std::span<double> out) {
  assert(u.size() == c1.size() && u.size() == out.size());
  assert(p.empty() || p.size() == u.size());
  const std::size_t n = u.size();
  if (n < 3) return;
  const float64x2_t vs2 = vdupq_n_f64(s2);
  const float64x2_t two = vdupq_n_f64(2.0);
  std::size_t i = 1;
  for (; i + 2 <= n - 1; i += 2) {
    const float64x2_t um = vld1q_f64(u.data() + i - 1);
    const float64x2_t u0 = vld1q_f64(u.data() + i);
    const float64x2_t up = vld1q_f64(u.data() + i + 1);
    const float64x2_t lap = vsubq_f64(vaddq_f64(up, um), vmulq_f64(two, u0));
    const float64x2_t grad = vsubq_f64(up, um);
    float64x2_t acc = vmulq_f64(vs2, lap);
    acc = vfmaq_f64(acc, vld1q_f64(c1.data() + i), grad);
    if (!p.empty()) acc = vfmaq_f64(acc, vld1q_f64(p.data() + i), u0);
    vst1q_f64(out.data() + i, acc);
  }
  for (; i + 1 < n; ++i) {
    double v = s2 * (u[i + 1] - 2.0 * u[i] + u[i - 1]) + c1[i] * (u[i + 1] - u[i - 1]);
    if (!p.empty()) v += p[i] * u[i];
    out[i] = v;
  }
}

double max_abs_neon(std::span<const double> v) {
  const std::size_t n = v.size();
  float64x2_t acc = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) acc = vmaxq_f64(acc, vabsq_f64(vld1q_f64(v.data() + i)));
  double m = vmaxvq_f64(acc);
  for (; i < n; ++i) m = std::max(m, std::abs(v[i]));
  return m;
}

}  // namespace

const Impl& neon_impl() {
  static const Impl impl{dot_neon,      dot3_neon,          axpy_neon,
                         lincomb3_neon, radial_stencil_neon, max_abs_neon};
  return impl;
}

}  // namespace smt::kernels::detail

#endif  // SMT_HAVE_NEON
