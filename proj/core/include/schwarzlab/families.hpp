// Generators for Schwarz functions (analytic self-maps w of the unit disk
// with w(0) = 0) and Caratheodory functions (p(0) = 1, Re p > 0), plus the
// Cayley bridge w -> (1 + e^{i theta} w) / (1 - e^{i theta} w) between them.
//
// Generators are symbolic descriptions.  expand_* turns them into truncated
// series; evaluate_* computes closed-form point values, which is what the
// pointwise Schwarz-lemma check uses.

#pragma once

#include <cstdint>
#include <memory>
#include <variant>
#include <vector>

#include "schwarzlab/series.hpp"

namespace schwarzlab {

struct SchwarzGenerator;
struct CaratheodoryGenerator;

/// e^{i theta} z^k.
struct MonomialRotation {
  int power = 1;
  double theta = 0.0;
};

/// Extremal family for |b_2| <= 1 - |b_1|^2:
///   (b_1 z + e^{i theta} z^2) / (1 + e^{i theta} conj(b_1) z)  when |b_1| < 1,
///   e^{i arg b_1} z                                             when |b_1| = 1.
struct B2Extremal {
  Complex b1 = 0.0;
  double theta = 0.0;
};

/// e^{i phi} z^m prod_j (|a_j|/a_j) (z - a_j) / (1 - conj(a_j) z).
/// A factor with a_j = 0 is taken to be z.
struct FiniteBlaschke {
  double phi = 0.0;
  int m = 1;
  std::vector<Complex> zeros;
};

/// e^{-i theta} (p - 1) / (p + 1).
struct InverseCayley {
  std::shared_ptr<const CaratheodoryGenerator> inner;
  double theta = 0.0;
};

struct SchwarzGenerator {
  std::variant<MonomialRotation, B2Extremal, FiniteBlaschke, InverseCayley>
      kind;
};

/// One extreme point (1 + e^{i angle} z) / (1 - e^{i angle} z) of the class,
/// with convex weight `weight`.
struct HerglotzAtom {
  double weight = 1.0;
  double angle = 0.0;
};

/// Convex combination of Herglotz atoms; c_k = sum_j 2 weight_j e^{i k angle_j}.
struct HerglotzAtoms {
  std::vector<HerglotzAtom> atoms;
};

/// (1 + e^{i theta} w) / (1 - e^{i theta} w).
struct CayleyOfSchwarz {
  std::shared_ptr<const SchwarzGenerator> inner;
  double theta = 0.0;
};

struct CaratheodoryGenerator {
  std::variant<HerglotzAtoms, CayleyOfSchwarz> kind;
};

SchwarzGenerator make_inverse_cayley(CaratheodoryGenerator inner,
                                     double theta);
CaratheodoryGenerator make_cayley(SchwarzGenerator inner, double theta);

/// Tolerance on |b_1| = 1 for the unimodular branch of B2Extremal, and on
/// the Herglotz weight sum.
inline constexpr double kGeneratorTolerance = 1e-12;
/// Largest admissible Blaschke zero modulus.
inline constexpr double kMaxBlaschkeZeroModulus = 0.95;
/// Radius of the disk Blaschke zeros are sampled from.
inline constexpr double kSampledZeroRadius = 0.9;
/// Largest atom count produced by sample_herglotz.
inline constexpr int kMaxSampledAtoms = 8;

/// Throws InvalidGenerator on any invariant violation, recursing into
/// nested generators.
void validate(const SchwarzGenerator& g);
void validate(const CaratheodoryGenerator& g);

/// p = compose([1, 2, 2, ...], e^{i theta} w).  Requires w_0 = 0.
TruncatedSeries cayley_from_schwarz(const TruncatedSeries& w, double theta);

/// w = e^{-i theta} (p - 1) reciprocal(p + 1).  Requires p_0 = 1.
TruncatedSeries inverse_cayley(const TruncatedSeries& p, double theta);

TruncatedSeries expand_schwarz(const SchwarzGenerator& g, std::size_t order);
TruncatedSeries expand_caratheodory(const CaratheodoryGenerator& g,
                                    std::size_t order);

/// Closed-form values.  |z| < 1 is assumed.
Complex evaluate_schwarz(const SchwarzGenerator& g, Complex z);
Complex evaluate_caratheodory(const CaratheodoryGenerator& g, Complex z);

/// Total degree m + #zeros of a FiniteBlaschke generator; 0 for other kinds.
int blaschke_degree(const SchwarzGenerator& g);

/// Seed-reproducible FiniteBlaschke corpus: m uniform in {1, 2} (capped at
/// max_degree), zero count uniform in {0..max_degree - m}, zeros uniform in
/// the disk of radius 0.9, phi uniform in [0, 2 pi).
std::vector<SchwarzGenerator> sample_schwarz(std::uint64_t seed, int count,
                                             int max_degree);

/// Seed-reproducible HerglotzAtoms corpus: 1..8 atoms, Dirichlet(1,...,1)
/// weights, angles uniform in [0, 2 pi).
std::vector<CaratheodoryGenerator> sample_herglotz(std::uint64_t seed,
                                                   int count);

/// A Caratheodory function with c_k = 2 e^{i theta}: k equal-weight atoms at
/// the k-th roots (theta + 2 pi j) / k.
CaratheodoryGenerator boundary_atoms(int k, double theta);

}  // namespace schwarzlab
