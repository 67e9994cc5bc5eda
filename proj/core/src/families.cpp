#include "schwarzlab/families.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "schwarzlab/random.hpp"

namespace schwarzlab {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

Complex unit(double angle) { return std::polar(1.0, angle); }

bool unimodular_b1(Complex b1) {
  return std::abs(std::abs(b1) - 1.0) <= kGeneratorTolerance;
}

// [1, 2, 2, ..., 2]: the series of (1 + z) / (1 - z).
TruncatedSeries mobius_series(std::size_t order) {
  TruncatedSeries s(order);
  s[0] = 1.0;
  for (std::size_t k = 1; k <= order; ++k) s[k] = 2.0;
  return s;
}

// (|a|/a) (z - a) / (1 - conj(a) z), or z when a = 0.
TruncatedSeries blaschke_factor(Complex a, std::size_t order) {
  if (a == Complex(0.0)) return TruncatedSeries::identity(order);
  const Complex normalizer = std::abs(a) / a;
  TruncatedSeries numerator(order);
  numerator[0] = -normalizer * a;
  if (order >= 1) numerator[1] = normalizer;
  TruncatedSeries denominator = TruncatedSeries::constant(1.0, order);
  if (order >= 1) denominator[1] = -std::conj(a);
  return mul(numerator, reciprocal(denominator));
}

Complex blaschke_factor_value(Complex a, Complex z) {
  if (a == Complex(0.0)) return z;
  return (std::abs(a) / a) * (z - a) / (1.0 - std::conj(a) * z);
}

}  // namespace

SchwarzGenerator make_inverse_cayley(CaratheodoryGenerator inner,
                                     double theta) {
  return SchwarzGenerator{InverseCayley{
      std::make_shared<const CaratheodoryGenerator>(std::move(inner)), theta}};
}

CaratheodoryGenerator make_cayley(SchwarzGenerator inner, double theta) {
  return CaratheodoryGenerator{CayleyOfSchwarz{
      std::make_shared<const SchwarzGenerator>(std::move(inner)), theta}};
}

void validate(const SchwarzGenerator& g) {
  std::visit(
      Overloaded{
          [](const MonomialRotation& m) {
            if (m.power < 1) {
              throw InvalidGenerator("monomial: power must be >= 1");
            }
          },
          [](const B2Extremal& e) {
            if (std::abs(e.b1) > 1.0 + kGeneratorTolerance) {
              throw InvalidGenerator("extremal1: |b1| must be <= 1");
            }
          },
          [](const FiniteBlaschke& b) {
            if (b.m < 1) throw InvalidGenerator("blaschke: m must be >= 1");
            for (const Complex& a : b.zeros) {
              if (!(std::abs(a) <= kMaxBlaschkeZeroModulus)) {
                throw InvalidGenerator(
                    "blaschke: zero modulus exceeds " +
                    std::to_string(kMaxBlaschkeZeroModulus));
              }
            }
          },
          [](const InverseCayley& ic) {
            if (!ic.inner) throw InvalidGenerator("invcayley: missing inner");
            validate(*ic.inner);
          },
      },
      g.kind);
}

void validate(const CaratheodoryGenerator& g) {
  std::visit(
      Overloaded{
          [](const HerglotzAtoms& h) {
            if (h.atoms.empty()) {
              throw InvalidGenerator("herglotz: atom list is empty");
            }
            double total = 0.0;
            for (const HerglotzAtom& atom : h.atoms) {
              if (!(atom.weight > 0.0)) {
                throw InvalidGenerator("herglotz: weights must be positive");
              }
              total += atom.weight;
            }
            if (std::abs(total - 1.0) > kGeneratorTolerance) {
              throw InvalidGenerator("herglotz: weights must sum to 1");
            }
          },
          [](const CayleyOfSchwarz& c) {
            if (!c.inner) throw InvalidGenerator("cayley: missing inner");
            validate(*c.inner);
          },
      },
      g.kind);
}

TruncatedSeries cayley_from_schwarz(const TruncatedSeries& w, double theta) {
  if (w[0] != Complex(0.0)) {
    throw CompositionDomainError("cayley_from_schwarz: w(0) must be 0");
  }
  return compose(mobius_series(w.order()), scale(w, unit(theta)));
}

TruncatedSeries inverse_cayley(const TruncatedSeries& p, double theta) {
  if (std::abs(p[0] - 1.0) > kGeneratorTolerance) {
    throw InputError("inverse_cayley: p(0) must be 1");
  }
  const std::size_t n = p.order();
  const TruncatedSeries one = TruncatedSeries::constant(1.0, n);
  TruncatedSeries w = mul(add_scaled(p, one, -1.0),
                          reciprocal(add_scaled(p, one, 1.0)));
  w = scale(w, unit(-theta));
  w[0] = 0.0;
  return w;
}

TruncatedSeries expand_schwarz(const SchwarzGenerator& g, std::size_t order) {
  validate(g);
  return std::visit(
      Overloaded{
          [order](const MonomialRotation& m) {
            return TruncatedSeries::monomial(unit(m.theta),
                                             static_cast<std::size_t>(m.power),
                                             order);
          },
          [order](const B2Extremal& e) {
            if (unimodular_b1(e.b1)) {
              return TruncatedSeries::monomial(e.b1 / std::abs(e.b1), 1,
                                               order);
            }
            const Complex rot = unit(e.theta);
            TruncatedSeries numerator(order);
            TruncatedSeries denominator = TruncatedSeries::constant(1.0, order);
            if (order >= 1) {
              numerator[1] = e.b1;
              denominator[1] = rot * std::conj(e.b1);
            }
            if (order >= 2) numerator[2] = rot;
            return mul(numerator, reciprocal(denominator));
          },
          [order](const FiniteBlaschke& b) {
            TruncatedSeries acc = TruncatedSeries::monomial(
                unit(b.phi), static_cast<std::size_t>(b.m), order);
            for (const Complex& a : b.zeros) {
              acc = mul(acc, blaschke_factor(a, order));
            }
            return acc;
          },
          [order](const InverseCayley& ic) {
            return inverse_cayley(expand_caratheodory(*ic.inner, order),
                                  ic.theta);
          },
      },
      g.kind);
}

TruncatedSeries expand_caratheodory(const CaratheodoryGenerator& g,
                                    std::size_t order) {
  validate(g);
  return std::visit(
      Overloaded{
          [order](const HerglotzAtoms& h) {
            TruncatedSeries p = TruncatedSeries::constant(1.0, order);
            for (std::size_t k = 1; k <= order; ++k) {
              Complex acc = 0.0;
              for (const HerglotzAtom& atom : h.atoms) {
                acc += std::polar(2.0 * atom.weight,
                                  static_cast<double>(k) * atom.angle);
              }
              p[k] = acc;
            }
            return p;
          },
          [order](const CayleyOfSchwarz& c) {
            return cayley_from_schwarz(expand_schwarz(*c.inner, order),
                                       c.theta);
          },
      },
      g.kind);
}

Complex evaluate_schwarz(const SchwarzGenerator& g, Complex z) {
  return std::visit(
      Overloaded{
          [z](const MonomialRotation& m) {
            return unit(m.theta) * std::pow(z, m.power);
          },
          [z](const B2Extremal& e) {
            if (unimodular_b1(e.b1)) return e.b1 / std::abs(e.b1) * z;
            const Complex rot = unit(e.theta);
            return (e.b1 * z + rot * z * z) / (1.0 + rot * std::conj(e.b1) * z);
          },
          [z](const FiniteBlaschke& b) {
            Complex acc = unit(b.phi) * std::pow(z, b.m);
            for (const Complex& a : b.zeros) acc *= blaschke_factor_value(a, z);
            return acc;
          },
          [z](const InverseCayley& ic) {
            const Complex p = evaluate_caratheodory(*ic.inner, z);
            return unit(-ic.theta) * (p - 1.0) / (p + 1.0);
          },
      },
      g.kind);
}

Complex evaluate_caratheodory(const CaratheodoryGenerator& g, Complex z) {
  return std::visit(
      Overloaded{
          [z](const HerglotzAtoms& h) {
            Complex acc = 0.0;
            for (const HerglotzAtom& atom : h.atoms) {
              const Complex u = unit(atom.angle) * z;
              acc += atom.weight * (1.0 + u) / (1.0 - u);
            }
            return acc;
          },
          [z](const CayleyOfSchwarz& c) {
            const Complex u = unit(c.theta) * evaluate_schwarz(*c.inner, z);
            return (1.0 + u) / (1.0 - u);
          },
      },
      g.kind);
}

int blaschke_degree(const SchwarzGenerator& g) {
  if (const auto* b = std::get_if<FiniteBlaschke>(&g.kind)) {
    return b->m + static_cast<int>(b->zeros.size());
  }
  return 0;
}

std::vector<SchwarzGenerator> sample_schwarz(std::uint64_t seed, int count,
                                             int max_degree) {
  if (count < 1) throw InputError("sample_schwarz: count must be >= 1");
  if (max_degree < 1) {
    throw InputError("sample_schwarz: max_degree must be >= 1");
  }
  Rng rng(seed);
  std::vector<SchwarzGenerator> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    FiniteBlaschke b;
    b.m = rng.uniform_int(1, std::min(2, max_degree));
    const int zero_count = rng.uniform_int(0, max_degree - b.m);
    b.zeros.reserve(static_cast<std::size_t>(zero_count));
    for (int j = 0; j < zero_count; ++j) {
      const double r = kSampledZeroRadius * std::sqrt(rng.uniform());
      b.zeros.push_back(std::polar(r, kTwoPi * rng.uniform()));
    }
    b.phi = kTwoPi * rng.uniform();
    out.push_back(SchwarzGenerator{std::move(b)});
  }
  return out;
}

std::vector<CaratheodoryGenerator> sample_herglotz(std::uint64_t seed,
                                                   int count) {
  if (count < 1) throw InputError("sample_herglotz: count must be >= 1");
  Rng rng(seed);
  std::vector<CaratheodoryGenerator> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    const int n = rng.uniform_int(1, kMaxSampledAtoms);
    HerglotzAtoms h;
    double total = 0.0;
    for (int j = 0; j < n; ++j) {
      // Exponential draws are strictly positive except on a 2^-53 event.
      const double w = std::max(rng.exponential(), 1e-300);
      h.atoms.push_back({w, kTwoPi * rng.uniform()});
      total += w;
    }
    for (HerglotzAtom& atom : h.atoms) atom.weight /= total;
    out.push_back(CaratheodoryGenerator{std::move(h)});
  }
  return out;
}

CaratheodoryGenerator boundary_atoms(int k, double theta) {
  if (k < 1) throw InvalidGenerator("boundary_atoms: k must be >= 1");
  HerglotzAtoms h;
  for (int j = 0; j < k; ++j) {
    h.atoms.push_back({1.0 / k, (theta + kTwoPi * j) / k});
  }
  return CaratheodoryGenerator{std::move(h)};
}

}  // namespace schwarzlab
