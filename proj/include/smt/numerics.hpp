#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace smt::num {

// 4-point Lagrange interpolation on a uniform ascending grid (exact for cubics).
// x must lie within [grid.front(), grid.back()].
double interp_cubic(std::span<const double> grid, std::span<const double> values, double x);

// Finite-difference weights on arbitrary nodes (Fornberg's recursion).
// Returns w[k][j] such that u^(k)(x0) ~= sum_j w[k][j] u(nodes[j]) for k = 0..max_order.
std::vector<std::vector<double>> fd_weights(std::span<const double> nodes, double x0,
                                            int max_order);

// Gauss-Legendre nodes and weights on [-1, 1].
void gauss_legendre(int count, std::vector<double>& nodes, std::vector<double>& weights);

// Value at x of the least-squares polynomial of given degree fitted to
// (grid[i], values[i]); used to extend profiles slightly past their grid.
double polyfit_eval(std::span<const double> grid, std::span<const double> values, int degree,
                    double x);

}  // namespace smt::num
