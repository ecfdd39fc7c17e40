#include "smt/kernels.hpp"

#include <cassert>
#include <cmath>
#include <cstddef>

namespace smt::kernels {

namespace {

double dot_scalar(std::span<const double> a, std::span<const double> b) {
  assert(a.size() == b.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

double dot3_scalar(std::span<const double> a, std::span<const double> b,
                   std::span<const double> c) {
  assert(a.size() == b.size() && a.size() == c.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i] * c[i];
  return acc;
}

void axpy_scalar(double alpha, std::span<const double> x, std::span<double> y) {
  assert(x.size() == y.size());
  for (std::size_t i = 0; i < x.size(); ++i) y[i] += alpha * x[i];
}

void lincomb3_scalar(double c1, std::span<const double> a, double c2, std::span<const double> b,
                     double c3, std::span<const double> c, std::span<double> out) {
  assert(a.size() == b.size() && a.size() == c.size() && a.size() == out.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = c1 * a[i] + c2 * b[i] + c3 * c[i];
}

void radial_stencil_scalar(std::span<const double> u, double s2, std::span<const double> c1,
                           std::span<const double> p, std::span<double> out) {
  assert(u.size() == c1.size() && u.size() == out.size());
  assert(p.empty() || p.size() == u.size());
  const std::size_t n = u.size();
  if (n < 3) return;
  if (p.empty()) {
    for (std::size_t i = 1; i + 1 < n; ++i)
      out[i] = s2 * (u[i + 1] - 2.0 * u[i] + u[i - 1]) + c1[i] * (u[i + 1] - u[i - 1]);
  } else {
    for (std::size_t i = 1; i + 1 < n; ++i)
      out[i] = s2 * (u[i + 1] - 2.0 * u[i] + u[i - 1]) + c1[i] * (u[i + 1] - u[i - 1]) +
               p[i] * u[i];
  }
}

double max_abs_scalar(std::span<const double> v) {
  double acc = 0.0;
  for (double x : v) acc = std::max(acc, std::abs(x));
  return acc;
}

Backend detect_backend() {
#if defined(SMT_HAVE_AVX2)
  if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma")) return Backend::avx2;
#endif
#if defined(SMT_HAVE_NEON)
  return Backend::neon;
#endif
  return Backend::scalar;
}

std::optional<Backend>& forced_backend() {
  static std::optional<Backend> forced;
  return forced;
}

const detail::Impl& impl_for(Backend b) {
  switch (b) {
#if defined(SMT_HAVE_AVX2)
    case Backend::avx2:
      return detail::avx2_impl();
#endif
#if defined(SMT_HAVE_NEON)
    case Backend::neon:
      return detail::neon_impl();
#endif
    default:
      return detail::scalar_impl();
  }
}

const detail::Impl& active_impl() {
  if (forced_backend()) return impl_for(*forced_backend());
  static const detail::Impl& detected = impl_for(detect_backend());
  return detected;
}

}  // namespace

const detail::Impl& detail::scalar_impl() {
  static const Impl impl{dot_scalar,      dot3_scalar,          axpy_scalar,
                         lincomb3_scalar, radial_stencil_scalar, max_abs_scalar};
  return impl;
}

Backend active_backend() {
  if (forced_backend()) {
    const Backend b = *forced_backend();
#if !defined(SMT_HAVE_AVX2)
    if (b == Backend::avx2) return Backend::scalar;
#endif
#if !defined(SMT_HAVE_NEON)
    if (b == Backend::neon) return Backend::scalar;
#endif
    return b;
  }
  return detect_backend();
}

const char* backend_name(Backend b) {
  switch (b) {
    case Backend::avx2:
      return "avx2";
    case Backend::neon:
      return "neon";
    default:
      return "scalar";
  }
}

void force_backend(std::optional<Backend> b) { forced_backend() = b; }

double dot(std::span<const double> a, std::span<const double> b) {
  return active_impl().dot(a, b);
}

double dot3(std::span<const double> a, std::span<const double> b, std::span<const double> c) {
  return active_impl().dot3(a, b, c);
}

void axpy(double alpha, std::span<const double> x, std::span<double> y) {
  active_impl().axpy(alpha, x, y);
}

void lincomb3(double c1, std::span<const double> a, double c2, std::span<const double> b,
              double c3, std::span<const double> c, std::span<double> out) {
  active_impl().lincomb3(c1, a, c2, b, c3, c, out);
}

void radial_stencil(std::span<const double> u, double s2, std::span<const double> c1,
                    std::span<const double> p, std::span<double> out) {
  active_impl().radial_stencil(u, s2, c1, p, out);
}

double max_abs(std::span<const double> v) { return active_impl().max_abs(v); }

}  // namespace smt::kernels
