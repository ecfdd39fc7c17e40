#include "smt/types.hpp"

#include <cmath>

#include "smt/numerics.hpp"

namespace smt {

int mode_count(int n, int m) {
  if (n != 2 && n != 3) throw InputError("unsupported dimension n=" + std::to_string(n));
  if (m < 0) throw InputError("negative harmonic degree m=" + std::to_string(m));
  if (m == 0) return 1;
  return n == 2 ? 2 : 2 * m + 1;
}

void ModeIndex::validate() const {
  const int lm = mode_count(n, m);
  if (l < 1 || l > lm)
    throw InputError("mode index l=" + std::to_string(l) + " outside 1.." + std::to_string(lm) +
                     " for (n=" + std::to_string(n) + ", m=" + std::to_string(m) + ")");
}

std::vector<double> uniform_grid(double lo, double hi, std::size_t count) {
  if (count < 2 || !(hi > lo)) throw InputError("uniform_grid needs hi > lo and >= 2 nodes");
  std::vector<double> g(count);
  const double h = (hi - lo) / static_cast<double>(count - 1);
  for (std::size_t i = 0; i < count; ++i) g[i] = lo + h * static_cast<double>(i);
  g.back() = hi;
  return g;
}

void RadialProfile::validate() const {
  if (radii.size() != values.size())
    throw InputError("radial profile: radii/values length mismatch");
  if (radii.size() < 2) throw InputError("radial profile needs at least 2 nodes");
  const double h = radii[1] - radii[0];
  if (!(h > 0.0)) throw InputError("radial profile grid must ascend");
  const double scale = std::max(std::abs(radii.front()), std::abs(radii.back()));
  for (std::size_t i = 1; i < radii.size(); ++i) {
    const double step = radii[i] - radii[i - 1];
    if (std::abs(step - h) > 1e-12 * std::max(1.0, scale))
      throw InputError("radial profile grid not uniform");
  }
}

double RadialProfile::interpolate(double r) const { return num::interp_cubic(radii, values, r); }

void AnnulusGeometry::validate() const {
  if (!(r0 >= 0.0) || !(r0 < a) || !(a < A))
    throw GeometryError("annulus geometry requires 0 <= r0 < a < A (got r0=" +
                        std::to_string(r0) + ", a=" + std::to_string(a) +
                        ", A=" + std::to_string(A) + ")");
  if (R_ext && !(*R_ext > A))
    throw GeometryError("exterior bound requires A < R_ext (got A=" + std::to_string(A) +
                        ", R_ext=" + std::to_string(*R_ext) + ")");
}

}  // namespace smt
