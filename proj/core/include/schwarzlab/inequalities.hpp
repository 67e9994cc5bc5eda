// Coefficient inequalities for Schwarz and Caratheodory functions, each as a
// checkable predicate that reports its slack.

#pragma once

#include <array>
#include <string>
#include <vector>

#include "schwarzlab/families.hpp"
#include "schwarzlab/series.hpp"

namespace schwarzlab {

/// Absolute tolerance below which a negative slack still counts as satisfied.
inline constexpr double kBoundTolerance = 1e-9;
/// |slack| at or below this flags an equality case.
inline constexpr double kEqualityTolerance = 1e-8;
/// Tolerance of the closed-form pointwise |w(z)| <= |z| check.
inline constexpr double kPointwiseTolerance = 1e-12;

/// Outcome of one inequality lhs <= rhs.
///
/// satisfied == (slack >= -tol).  equality implies satisfied.  A report with
/// applicable == false records an unmet hypothesis; it is vacuously
/// satisfied and never an equality.
struct BoundReport {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
  double tol = kBoundTolerance;
  bool satisfied = true;
  bool equality = false;
  bool applicable = true;

  static BoundReport make(std::string name, double lhs, double rhs,
                          double tol = kBoundTolerance,
                          double eq_tol = kEqualityTolerance);
  static BoundReport not_applicable(std::string name, double lhs, double rhs);
};

/// |c_s - c_t c_{s-t}| <= 2 for 1 <= t < s <= order (Livingston).
BoundReport livingston_gap(const TruncatedSeries& p, int s, int t);

/// |b_k| <= 1 for k = 1..N.
std::vector<BoundReport> check_coefficient_bounds(const TruncatedSeries& w);

/// |b_2| <= 1 - |b_1|^2.
BoundReport check_b2_bound(const TruncatedSeries& w);

/// |b_3| <= 1 - |b_1|^3.
BoundReport check_b3_bound(const TruncatedSeries& w);

/// |w(z)| <= |z| at z = r e^{2 pi i j / angles_per_radius}, evaluated in
/// closed form.
std::vector<BoundReport> check_schwarz_pointwise(
    const SchwarzGenerator& g, const std::vector<double>& radii,
    int angles_per_radius);

/// If |c_k| >= 2 - tol, sets theta = arg(c_k / 2) and reports
/// |c_{nk} - 2 e^{i n theta}| <= 0 (within tol) for every nk <= N.
/// Otherwise returns a single not-applicable report.
std::vector<BoundReport> check_boundary_propagation(const TruncatedSeries& p,
                                                    int k,
                                                    double tol = kBoundTolerance);

/// The two b_4 inequalities obtained from the gaps c_4 - c_1 c_3 and
/// c_4 - c_2^2 of the Cayley transform with angle theta:
///   [0]: |b4 + e^{it} b2^2 - e^{2it} b1^2 b2 - e^{3it} b1^4| <= 1
///   [1]: |b4 + 2 e^{it} b1 b3 - e^{it} b2^2 - e^{2it} b1^2 b2
///         - e^{3it} b1^4| <= 1
std::array<BoundReport, 2> b4_functionals(const TruncatedSeries& w,
                                          double theta);

/// Inner expressions of b4_functionals without the modulus, taking the
/// coefficients directly.
Complex b4_gap_c1c3(Complex b1, Complex b2, Complex b3, Complex b4,
                    double theta);
Complex b4_gap_c2c2(Complex b1, Complex b2, Complex b3, Complex b4,
                    double theta);

}  // namespace schwarzlab
