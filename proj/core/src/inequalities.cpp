#include "schwarzlab/inequalities.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace schwarzlab {
namespace {

void require_schwarz(const TruncatedSeries& w, std::size_t min_order,
                     const char* who) {
  if (w[0] != Complex(0.0)) {
    throw InputError(std::string(who) + ": w(0) must be 0");
  }
  if (w.order() < min_order) {
    throw IndexError(std::string(who) + ": order must be >= " +
                     std::to_string(min_order));
  }
}

void require_caratheodory(const TruncatedSeries& p, const char* who) {
  if (std::abs(p[0] - 1.0) > kGeneratorTolerance) {
    throw InputError(std::string(who) + ": p(0) must be 1");
  }
}

}  // namespace

BoundReport BoundReport::make(std::string name, double lhs, double rhs,
                              double tol, double eq_tol) {
  BoundReport r;
  r.name = std::move(name);
  r.lhs = lhs;
  r.rhs = rhs;
  r.slack = rhs - lhs;
  r.tol = tol;
  r.satisfied = r.slack >= -tol;
  r.equality = r.satisfied && std::abs(r.slack) <= eq_tol;
  return r;
}

BoundReport BoundReport::not_applicable(std::string name, double lhs,
                                        double rhs) {
  BoundReport r;
  r.name = std::move(name);
  r.lhs = lhs;
  r.rhs = rhs;
  r.slack = rhs - lhs;
  r.applicable = false;
  return r;
}

BoundReport livingston_gap(const TruncatedSeries& p, int s, int t) {
  require_caratheodory(p, "livingston_gap");
  if (t < 1 || t >= s || static_cast<std::size_t>(s) > p.order()) {
    throw IndexError("livingston_gap: need 1 <= t < s <= order, got s=" +
                     std::to_string(s) + " t=" + std::to_string(t));
  }
  const double gap = std::abs(p[s] - p[t] * p[s - t]);
  return BoundReport::make(
      "livingston(s=" + std::to_string(s) + ",t=" + std::to_string(t) + ")",
      gap, 2.0);
}

std::vector<BoundReport> check_coefficient_bounds(const TruncatedSeries& w) {
  require_schwarz(w, 0, "check_coefficient_bounds");
  std::vector<BoundReport> out;
  out.reserve(w.order());
  for (std::size_t k = 1; k <= w.order(); ++k) {
    out.push_back(BoundReport::make("|b" + std::to_string(k) + "|<=1",
                                    std::abs(w[k]), 1.0));
  }
  return out;
}

BoundReport check_b2_bound(const TruncatedSeries& w) {
  require_schwarz(w, 2, "check_b2_bound");
  const double b1 = std::abs(w[1]);
  return BoundReport::make("|b2|<=1-|b1|^2", std::abs(w[2]), 1.0 - b1 * b1);
}

BoundReport check_b3_bound(const TruncatedSeries& w) {
  require_schwarz(w, 3, "check_b3_bound");
  const double b1 = std::abs(w[1]);
  return BoundReport::make("|b3|<=1-|b1|^3", std::abs(w[3]),
                           1.0 - b1 * b1 * b1);
}

std::vector<BoundReport> check_schwarz_pointwise(
    const SchwarzGenerator& g, const std::vector<double>& radii,
    int angles_per_radius) {
  validate(g);
  if (angles_per_radius < 1) {
    throw InputError("check_schwarz_pointwise: need >= 1 angle per radius");
  }
  std::vector<BoundReport> out;
  out.reserve(radii.size() * static_cast<std::size_t>(angles_per_radius));
  for (double r : radii) {
    if (!(r > 0.0 && r < 1.0)) {
      throw InputError("check_schwarz_pointwise: radii must lie in (0,1)");
    }
    for (int j = 0; j < angles_per_radius; ++j) {
      const double angle = 2.0 * std::numbers::pi * j / angles_per_radius;
      const Complex z = std::polar(r, angle);
      out.push_back(BoundReport::make(
          "|w(z)|<=|z|@r=" + std::to_string(r) + ",j=" + std::to_string(j),
          std::abs(evaluate_schwarz(g, z)), r, kPointwiseTolerance));
    }
  }
  return out;
}

std::vector<BoundReport> check_boundary_propagation(const TruncatedSeries& p,
                                                    int k, double tol) {
  require_caratheodory(p, "check_boundary_propagation");
  if (k < 1 || static_cast<std::size_t>(k) > p.order()) {
    throw IndexError("check_boundary_propagation: need 1 <= k <= order");
  }
  const double ck = std::abs(p[k]);
  if (ck < 2.0 - tol) {
    return {BoundReport::not_applicable("|c" + std::to_string(k) + "|=2",
                                        ck, 2.0)};
  }
  const double theta = std::arg(p[k] / 2.0);
  std::vector<BoundReport> out;
  for (std::size_t n = 1; n * k <= p.order(); ++n) {
    const Complex expected = std::polar(2.0, static_cast<double>(n) * theta);
    out.push_back(BoundReport::make(
        "c" + std::to_string(n * k) + "=2e^{i" + std::to_string(n) + "t}",
        std::abs(p[n * k] - expected), 0.0, tol, tol));
  }
  return out;
}

Complex b4_gap_c1c3(Complex b1, Complex b2, Complex /*b3*/, Complex b4,
                    double theta) {
  const Complex e1 = std::polar(1.0, theta);
  const Complex e2 = std::polar(1.0, 2.0 * theta);
  const Complex e3 = std::polar(1.0, 3.0 * theta);
  return b4 + e1 * b2 * b2 - e2 * b1 * b1 * b2 - e3 * b1 * b1 * b1 * b1;
}

Complex b4_gap_c2c2(Complex b1, Complex b2, Complex b3, Complex b4,
                    double theta) {
  const Complex e1 = std::polar(1.0, theta);
  const Complex e2 = std::polar(1.0, 2.0 * theta);
  const Complex e3 = std::polar(1.0, 3.0 * theta);
  return b4 + 2.0 * e1 * b1 * b3 - e1 * b2 * b2 - e2 * b1 * b1 * b2 -
         e3 * b1 * b1 * b1 * b1;
}

std::array<BoundReport, 2> b4_functionals(const TruncatedSeries& w,
                                          double theta) {
  require_schwarz(w, 4, "b4_functionals");
  return {
      BoundReport::make("b4:c4-c1c3",
                        std::abs(b4_gap_c1c3(w[1], w[2], w[3], w[4], theta)),
                        1.0),
      BoundReport::make("b4:c4-c2^2",
                        std::abs(b4_gap_c2c2(w[1], w[2], w[3], w[4], theta)),
                        1.0),
  };
}

}  // namespace schwarzlab
