#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <optional>
#include <vector>

#include "smt/errors.hpp"

namespace smt {

// Point in R^n, n in {2,3}; 2-D points keep z = 0.
using Point = std::array<double, 3>;

inline double norm(const Point& p) {
  return std::sqrt(p[0] * p[0] + p[1] * p[1] + p[2] * p[2]);
}

inline Point operator+(const Point& a, const Point& b) {
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
}

inline Point scaled(const Point& p, double s) { return {s * p[0], s * p[1], s * p[2]}; }

// Harmonic mode: degree m and within-degree index l in ambient dimension n.
//   l_m = 1 for m = 0; n = 2: cos/sin pair (l_m = 2) for m >= 1; n = 3: l_m = 2m+1.
struct ModeIndex {
  int n = 2;
  int m = 0;
  int l = 1;

  void validate() const;
};

// l_m for degree m in dimension n. Throws InputError for n outside {2,3} or m < 0.
int mode_count(int n, int m);

// Uniformly spaced ascending grid with `count` nodes spanning [lo, hi].
std::vector<double> uniform_grid(double lo, double hi, std::size_t count);

// Sampled radial coefficient on a uniform ascending grid.
// Stores f_ml(r) in the solid-harmonic normalization f = sum f_ml(r) r^m Y^m_l(theta),
// and is reused for central traces g_ml(0,s) and diagnostic profiles.
struct RadialProfile {
  ModeIndex mode;
  std::vector<double> radii;
  std::vector<double> values;

  RadialProfile() = default;
  RadialProfile(ModeIndex mode_, std::vector<double> radii_, std::vector<double> values_)
      : mode(mode_), radii(std::move(radii_)), values(std::move(values_)) {
    validate();
  }

  std::size_t size() const { return radii.size(); }
  double dr() const { return size() > 1 ? radii[1] - radii[0] : 0.0; }
  double r_min() const { return radii.front(); }
  double r_max() const { return radii.back(); }

  // Cubic (4-point Lagrange) interpolation; throws InputError outside [r_min, r_max].
  double interpolate(double r) const;

  // Grid uniform within 1e-12, ascending, lengths match.
  void validate() const;
};

// Annulus Ann(a,A) with optional prior regions Ann(r0,a] (interior) and [A,R_ext) (exterior).
struct AnnulusGeometry {
  double a = 1.0;
  double A = 2.0;
  double r0 = 0.0;
  std::optional<double> R_ext;

  void validate() const;  // enforces 0 <= r0 < a < A (< R_ext when present)
};

// Evaluatable function on R^n. Fields flagged with a finite support annulus
// evaluate to 0 outside it (compactly supported extension).
struct ScalarField {
  int n = 2;
  bool entire_space = true;
  double support_lo = 0.0;
  double support_hi = std::numeric_limits<double>::infinity();
  std::function<double(const Point&)> eval;

  double operator()(const Point& x) const {
    if (!entire_space) {
      const double r = norm(x);
      if (r < support_lo || r > support_hi) return 0.0;
    }
    return eval(x);
  }
};

// One spherical mean value: average of the field over the sphere S(center, t).
struct SphericalMeanSample {
  Point center{0.0, 0.0, 0.0};
  double t = 0.0;
  double value = 0.0;
};

struct SphericalMeanDataset {
  int n = 2;
  AnnulusGeometry geometry;
  std::vector<SphericalMeanSample> samples;
  // True iff every sample lies in the admissible region A of the annulus geometry.
  bool annulus_admissible = false;
};

// One-sided derivative data (u(anchor), u'(anchor), ..., u^(m-1)(anchor)).
struct BoundaryJet {
  double anchor = 0.0;
  std::vector<double> derivs;

  std::size_t order() const { return derivs.size(); }
};

}  // namespace smt
