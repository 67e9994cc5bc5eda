// Truncated complex power series.
//
// A TruncatedSeries of order N stores c_0..c_N, the coefficients of
// 1, z, ..., z^N.  Every operation is exact modulo z^{N+1} up to
// floating-point rounding.  Operands must share the same order; nothing is
// promoted implicitly.

#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "schwarzlab/errors.hpp"

namespace schwarzlab {

using Complex = std::complex<double>;

/// Default truncation order used throughout the library and the CLI.
inline constexpr std::size_t kDefaultOrder = 12;

class TruncatedSeries {
 public:
  /// Zero series of the given order.
  explicit TruncatedSeries(std::size_t order);

  /// Takes ownership of `coeffs` (index k = coefficient of z^k).  Throws
  /// InputError if `coeffs` is empty or holds a non-finite value.
  explicit TruncatedSeries(std::vector<Complex> coeffs);

  static TruncatedSeries constant(Complex value, std::size_t order);
  /// The series z.
  static TruncatedSeries identity(std::size_t order);
  /// c z^k, or the zero series when k > order.
  static TruncatedSeries monomial(Complex c, std::size_t k, std::size_t order);

  std::size_t order() const { return coeffs_.size() - 1; }

  const Complex& operator[](std::size_t k) const { return coeffs_[k]; }
  Complex& operator[](std::size_t k) { return coeffs_[k]; }
  Complex at(std::size_t k) const;

  std::span<const Complex> coeffs() const { return coeffs_; }

  /// Evaluates the truncated polynomial at z (Horner).
  Complex evaluate(Complex z) const;

  bool operator==(const TruncatedSeries&) const = default;

 private:
  std::vector<Complex> coeffs_;
};

/// f + alpha * g.
TruncatedSeries add_scaled(const TruncatedSeries& f, const TruncatedSeries& g,
                           Complex alpha);

/// alpha * f.
TruncatedSeries scale(const TruncatedSeries& f, Complex alpha);

/// Cauchy product truncated at the common order.
TruncatedSeries mul(const TruncatedSeries& f, const TruncatedSeries& g);

/// sum_k outer_k inner^k, evaluated by Horner's rule in the series ring.
/// The inner constant term must be exactly zero.
TruncatedSeries compose(const TruncatedSeries& outer,
                        const TruncatedSeries& inner);

/// Multiplicative inverse via g_0 = 1/f_0,
/// g_k = -(sum_{j=1..k} f_j g_{k-j}) / f_0.
TruncatedSeries reciprocal(const TruncatedSeries& f);

/// Largest componentwise |f_k - g_k|.
double max_abs_diff(const TruncatedSeries& f, const TruncatedSeries& g);

}  // namespace schwarzlab
