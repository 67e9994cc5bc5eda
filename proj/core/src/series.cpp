#include "schwarzlab/series.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace schwarzlab {
namespace {

constexpr double kInvertibilityThreshold = 1e-300;

bool is_finite(Complex c) {
  return std::isfinite(c.real()) && std::isfinite(c.imag());
}

void require_same_order(const TruncatedSeries& f, const TruncatedSeries& g,
                        const char* op) {
  if (f.order() != g.order()) {
    throw OrderMismatch(std::string(op) + ": orders " +
                        std::to_string(f.order()) + " and " +
                        std::to_string(g.order()) + " differ");
  }
}

}  // namespace

TruncatedSeries::TruncatedSeries(std::size_t order) : coeffs_(order + 1) {}

TruncatedSeries::TruncatedSeries(std::vector<Complex> coeffs)
    : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) {
    throw InputError("TruncatedSeries: coefficient list is empty");
  }
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (!is_finite(coeffs_[k])) {
      throw InputError("TruncatedSeries: coefficient " + std::to_string(k) +
                       " is not finite");
    }
  }
}

TruncatedSeries TruncatedSeries::constant(Complex value, std::size_t order) {
  TruncatedSeries s(order);
  s[0] = value;
  return s;
}

TruncatedSeries TruncatedSeries::identity(std::size_t order) {
  return monomial(1.0, 1, order);
}

TruncatedSeries TruncatedSeries::monomial(Complex c, std::size_t k,
                                          std::size_t order) {
  TruncatedSeries s(order);
  if (k <= order) s[k] = c;
  return s;
}

Complex TruncatedSeries::at(std::size_t k) const {
  if (k >= coeffs_.size()) {
    throw IndexError("coefficient index " + std::to_string(k) +
                     " exceeds order " + std::to_string(order()));
  }
  return coeffs_[k];
}

Complex TruncatedSeries::evaluate(Complex z) const {
  Complex acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * z + *it;
  }
  return acc;
}

TruncatedSeries add_scaled(const TruncatedSeries& f, const TruncatedSeries& g,
                           Complex alpha) {
  require_same_order(f, g, "add_scaled");
  TruncatedSeries out(f.order());
  for (std::size_t k = 0; k <= f.order(); ++k) out[k] = f[k] + alpha * g[k];
  return out;
}

TruncatedSeries scale(const TruncatedSeries& f, Complex alpha) {
  TruncatedSeries out(f.order());
  for (std::size_t k = 0; k <= f.order(); ++k) out[k] = alpha * f[k];
  return out;
}

TruncatedSeries mul(const TruncatedSeries& f, const TruncatedSeries& g) {
  require_same_order(f, g, "mul");
  const std::size_t n = f.order();
  TruncatedSeries out(n);
  for (std::size_t k = 0; k <= n; ++k) {
    Complex acc = 0.0;
    for (std::size_t j = 0; j <= k; ++j) acc += f[j] * g[k - j];
    out[k] = acc;
  }
  return out;
}

TruncatedSeries compose(const TruncatedSeries& outer,
                        const TruncatedSeries& inner) {
  require_same_order(outer, inner, "compose");
  if (inner[0] != Complex(0.0)) {
    throw CompositionDomainError(
        "compose: inner series must have zero constant term");
  }
  const std::size_t n = outer.order();
  TruncatedSeries acc = TruncatedSeries::constant(outer[n], n);
  for (std::size_t k = n; k-- > 0;) {
    acc = mul(acc, inner);
    acc[0] += outer[k];
  }
  return acc;
}

TruncatedSeries reciprocal(const TruncatedSeries& f) {
  if (std::abs(f[0]) < kInvertibilityThreshold) {
    throw NotInvertible("reciprocal: constant term is zero");
  }
  const std::size_t n = f.order();
  TruncatedSeries g(n);
  g[0] = 1.0 / f[0];
  for (std::size_t k = 1; k <= n; ++k) {
    Complex acc = 0.0;
    for (std::size_t j = 1; j <= k; ++j) acc += f[j] * g[k - j];
    g[k] = -acc / f[0];
  }
  return g;
}

double max_abs_diff(const TruncatedSeries& f, const TruncatedSeries& g) {
  require_same_order(f, g, "max_abs_diff");
  double worst = 0.0;
  for (std::size_t k = 0; k <= f.order(); ++k) {
    worst = std::max(worst, std::abs(f[k] - g[k]));
  }
  return worst;
}

}  // namespace schwarzlab
