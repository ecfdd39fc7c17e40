// AVX2+FMA kernel variants. This translation unit is compiled with -mavx2 -mfma;
// the dispatcher only routes here after a runtime CPU check.

#include "smt/kernels.hpp"

#if defined(SMT_HAVE_AVX2)

#include <immintrin.h>

#include <cassert>
#include <cmath>
#include <cstddef>

namespace smt::kernels::detail {

namespace {

double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(lo, _mm_unpackhi_pd(lo, lo)));
}

double dot_avx2(std::span<const double> a, std::span<const double> b) {
  assert(a.size() == b.size());
  const std::size_t n = a.size();
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    acc = _mm256_fmadd_pd(_mm256_loadu_pd(a.data() + i), _mm256_loadu_pd(b.data() + i), acc);
  double sum = hsum(acc);
  for (; i < n; ++i) sum += a[i] * b[i];
  return sum;
}

double dot3_avx2(std::span<const double> a, std::span<const double> b,
                 std::span<const double> c) {
  assert(a.size() == b.size() && a.size() == c.size());
  const std::size_t n = a.size();
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d ab =
        _mm256_mul_pd(_mm256_loadu_pd(a.data() + i), _mm256_loadu_pd(b.data() + i));
    acc = _mm256_fmadd_pd(ab, _mm256_loadu_pd(c.data() + i), acc);
  }
  double sum = hsum(acc);
  for (; i < n; ++i) sum += a[i] * b[i] * c[i];
  return sum;
}

void axpy_avx2(double alpha, std::span<const double> x, std::span<double> y) {
  assert(x.size() == y.size());
  const std::size_t n = x.size();
  const __m256d va = _mm256_set1_pd(alpha);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d vy =
        _mm256_fmadd_pd(va, _mm256_loadu_pd(x.data() + i), _mm256_loadu_pd(y.data() + i));
    _mm256_storeu_pd(y.data() + i, vy);
  }
  for (; i < n; ++i) y[i] += alpha * x[i];
}

void lincomb3_avx2(double c1, std::span<const double> a, double c2, std::span<const double> b,
                   double c3, std::span<const double> c, std::span<double> out) {
  assert(a.size() == b.size() && a.size() == c.size() && a.size() == out.size());
  const std::size_t n = a.size();
  const __m256d v1 = _mm256_set1_pd(c1);
  const __m256d v2 = _mm256_set1_pd(c2);
  const __m256d v3 = _mm256_set1_pd(c3);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d acc = _mm256_mul_pd(v1, _mm256_loadu_pd(a.data() + i));
    acc = _mm256_fmadd_pd(v2, _mm256_loadu_pd(b.data() + i), acc);
    acc = _mm256_fmadd_pd(v3, _mm256_loadu_pd(c.data() + i), acc);
    _mm256_storeu_pd(out.data() + i, acc);
  }
  for (; i < n; ++i) out[i] = c1 * a[i] + c2 * b[i] + c3 * c[i];
}

void radial_stencil_avx2(std::span<const double> u, double s2, std::span<const double> c1,
                         std::span<const double> p, std::span<double> out) {
  assert(u.size() == c1.size() && u.size() == out.size());
  assert(p.empty() || p.size() == u.size());
  const std::size_t n = u.size();
  if (n < 3) return;
  const __m256d vs2 = _mm256_set1_pd(s2);
  const __m256d two = _mm256_set1_pd(2.0);
  std::size_t i = 1;
  for (; i + 4 <= n - 1; i += 4) {
    const __m256d um = _mm256_loadu_pd(u.data() + i - 1);
    const __m256d u0 = _mm256_loadu_pd(u.data() + i);
    const __m256d up = _mm256_loadu_pd(u.data() + i + 1);
    const __m256d lap = _mm256_sub_pd(_mm256_add_pd(up, um), _mm256_mul_pd(two, u0));
    const __m256d grad = _mm256_sub_pd(up, um);
    __m256d acc = _mm256_mul_pd(vs2, lap);
    acc = _mm256_fmadd_pd(_mm256_loadu_pd(c1.data() + i), grad, acc);
    if (!p.empty()) acc = _mm256_fmadd_pd(_mm256_loadu_pd(p.data() + i), u0, acc);
    _mm256_storeu_pd(out.data() + i, acc);
  }
  for (; i + 1 < n; ++i) {
    double v = s2 * (u[i + 1] - 2.0 * u[i] + u[i - 1]) + c1[i] * (u[i + 1] - u[i - 1]);
    if (!p.empty()) v += p[i] * u[i];
    out[i] = v;
  }
}

double max_abs_avx2(std::span<const double> v) {
  const std::size_t n = v.size();
  const __m256d sign_mask = _mm256_set1_pd(-0.0);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    acc = _mm256_max_pd(acc, _mm256_andnot_pd(sign_mask, _mm256_loadu_pd(v.data() + i)));
  __m128d lo = _mm256_castpd256_pd128(acc);
  __m128d hi = _mm256_extractf128_pd(acc, 1);
  lo = _mm_max_pd(lo, hi);
  double m = _mm_cvtsd_f64(_mm_max_sd(lo, _mm_unpackhi_pd(lo, lo)));
  for (; i < n; ++i) m = std::max(m, std::abs(v[i]));
  return m;
}

}  // namespace

const Impl& avx2_impl() {
  static const Impl impl{dot_avx2,      dot3_avx2,          axpy_avx2,
                         lincomb3_avx2, radial_stencil_avx2, max_abs_avx2};
  return impl;
}

}  // namespace smt::kernels::detail

#endif  // SMT_HAVE_AVX2
