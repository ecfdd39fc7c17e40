#pragma once

#include <optional>
#include <span>

namespace smt::kernels {

// The inner arithmetic loops (quadrature sums, stencil sweeps, leapfrog updates)
// run through these kernels. A scalar reference implementation always exists;
// on x86-64 an AVX2+FMA variant and on aarch64 a NEON variant are selected at
// runtime when the CPU supports them. SIMD results may differ from scalar by
// reassociation roundoff only; the test suite checks equivalence.

enum class Backend { scalar, avx2, neon };

Backend active_backend();
const char* backend_name(Backend b);

// Test hook: pin a backend (nullopt restores runtime detection). Requesting an
// unavailable backend falls back to scalar.
void force_backend(std::optional<Backend> b);

// sum_i a[i] * b[i]
double dot(std::span<const double> a, std::span<const double> b);

// sum_i a[i] * b[i] * c[i]
double dot3(std::span<const double> a, std::span<const double> b, std::span<const double> c);

// y[i] += alpha * x[i]
void axpy(double alpha, std::span<const double> x, std::span<double> y);

// out[i] = c1*a[i] + c2*b[i] + c3*c[i]
void lincomb3(double c1, std::span<const double> a, double c2, std::span<const double> b,
              double c3, std::span<const double> c, std::span<double> out);

// Interior radial stencil, i in [1, n-2]:
//   out[i] = s2*(u[i+1] - 2u[i] + u[i-1]) + c1[i]*(u[i+1] - u[i-1]) + p[i]*u[i]
// p may be empty (treated as zero). Endpoints are left untouched.
void radial_stencil(std::span<const double> u, double s2, std::span<const double> c1,
                    std::span<const double> p, std::span<double> out);

// max_i |v[i]|
double max_abs(std::span<const double> v);

}  // namespace smt::kernels

namespace smt::kernels::detail {

// Per-backend entry points; exposed for the equivalence tests.
struct Impl {
  double (*dot)(std::span<const double>, std::span<const double>);
  double (*dot3)(std::span<const double>, std::span<const double>, std::span<const double>);
  void (*axpy)(double, std::span<const double>, std::span<double>);
  void (*lincomb3)(double, std::span<const double>, double, std::span<const double>, double,
                   std::span<const double>, std::span<double>);
  void (*radial_stencil)(std::span<const double>, double, std::span<const double>,
                         std::span<const double>, std::span<double>);
  double (*max_abs)(std::span<const double>);
};

const Impl& scalar_impl();
#if defined(SMT_HAVE_AVX2)
const Impl& avx2_impl();
#endif
#if defined(SMT_HAVE_NEON)
const Impl& neon_impl();
#endif

}  // namespace smt::kernels::detail
