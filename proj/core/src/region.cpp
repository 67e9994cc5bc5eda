#include "schwarzlab/region.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "schwarzlab/families.hpp"

namespace schwarzlab {
namespace {

// Cells whose center is within this distance of a row interval endpoint are
// decided by the direct disk test instead of the interval.
constexpr double kIntervalGuard = 1e-9;

bool inside_all(const DiskConstraintFamily& family, Complex x) {
  for (const Complex& c : family.centers) {
    if (std::abs(x - c) > family.radius) return false;
  }
  return true;
}

void append(DiskConstraintFamily& into, const DiskConstraintFamily& from) {
  into.centers.insert(into.centers.end(), from.centers.begin(),
                      from.centers.end());
}

}  // namespace

Complex BoundingBox::cell_center(int row, int col) const {
  const double h = cell_size();
  return {center.real() - half_width + (col + 0.5) * h,
          center.imag() - half_width + (row + 0.5) * h};
}

std::optional<std::pair<int, int>> BoundingBox::cell_of(Complex x) const {
  const double h = cell_size();
  const double u = (x.real() - (center.real() - half_width)) / h;
  const double v = (x.imag() - (center.imag() - half_width)) / h;
  if (u < 0.0 || v < 0.0 || u >= resolution || v >= resolution) {
    return std::nullopt;
  }
  return std::pair{static_cast<int>(v), static_cast<int>(u)};
}

bool RegionEstimate::contains_near(Complex x) const {
  const auto cell = box.cell_of(x);
  if (!cell) return false;
  for (int dr = -1; dr <= 1; ++dr) {
    for (int dc = -1; dc <= 1; ++dc) {
      const int r = cell->first + dr;
      const int c = cell->second + dc;
      if (r < 0 || c < 0 || r >= box.resolution || c >= box.resolution) {
        continue;
      }
      if (feasible(r, c)) return true;
    }
  }
  return false;
}

std::vector<std::pair<int, int>> RegionEstimate::boundary_cells() const {
  std::vector<std::pair<int, int>> out;
  const int n = box.resolution;
  auto open = [&](int r, int c) {
    return r < 0 || c < 0 || r >= n || c >= n || !feasible(r, c);
  };
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      if (!feasible(r, c)) continue;
      if (open(r - 1, c) || open(r + 1, c) || open(r, c - 1) ||
          open(r, c + 1)) {
        out.emplace_back(r, c);
      }
    }
  }
  return out;
}

std::vector<std::vector<std::pair<int, int>>> RegionEstimate::row_runs()
    const {
  const int n = box.resolution;
  std::vector<std::vector<std::pair<int, int>>> rows(
      static_cast<std::size_t>(n));
  for (int r = 0; r < n; ++r) {
    int c = 0;
    while (c < n) {
      if (!feasible(r, c)) {
        ++c;
        continue;
      }
      const int start = c;
      while (c < n && feasible(r, c)) ++c;
      rows[static_cast<std::size_t>(r)].emplace_back(start, c - start);
    }
  }
  return rows;
}

std::vector<double> uniform_angles(int count) {
  std::vector<double> out(static_cast<std::size_t>(count));
  const double two_pi = 2.0 * std::numbers::pi;
  for (int j = 0; j < count; ++j) out[static_cast<std::size_t>(j)] = two_pi * j / count;
  return out;
}

RegionEstimate intersect_disk_family(const DiskConstraintFamily& family,
                                     const BoundingBox& box) {
  if (family.centers.empty()) {
    throw InputError("intersect_disk_family: empty disk family");
  }
  if (box.resolution < kMinResolution) {
    throw InputError("intersect_disk_family: resolution must be >= 16");
  }
  if (!(box.half_width > 0.0)) {
    throw InputError("intersect_disk_family: half-width must be positive");
  }
  const int n = box.resolution;
  const double r2 = family.radius * family.radius;

  RegionEstimate est;
  est.box = box;
  est.cells.assign(static_cast<std::size_t>(n) * n, 0);
  est.quantization = box.half_width * std::numbers::sqrt2 / n;

  for (int row = 0; row < n; ++row) {
    const double y = box.cell_center(row, 0).imag();
    // Each disk cuts the horizontal line at height y in an interval; the
    // feasible part of the row is their intersection.
    double lo = -std::numeric_limits<double>::infinity();
    double hi = std::numeric_limits<double>::infinity();
    for (const Complex& c : family.centers) {
      const double dy = y - c.imag();
      const double d2 = r2 - dy * dy;
      if (d2 < -kIntervalGuard) {
        lo = 1.0;
        hi = -1.0;
        break;
      }
      const double h = std::sqrt(std::max(d2, 0.0));
      lo = std::max(lo, c.real() - h);
      hi = std::min(hi, c.real() + h);
    }
    if (lo > hi + kIntervalGuard) continue;
    for (int col = 0; col < n; ++col) {
      const Complex x = box.cell_center(row, col);
      if (x.real() < lo - kIntervalGuard || x.real() > hi + kIntervalGuard) {
        continue;
      }
      const bool interior =
          x.real() > lo + kIntervalGuard && x.real() < hi - kIntervalGuard;
      if (interior || inside_all(family, x)) {
        est.cells[static_cast<std::size_t>(row) * n + col] = 1;
        ++est.feasible_area_cells;
        est.max_modulus = std::max(est.max_modulus, std::abs(x));
      }
    }
  }
  return est;
}

BoundingBox first_disk_box(const DiskConstraintFamily& family,
                           int resolution) {
  if (family.centers.empty()) {
    throw InputError("first_disk_box: empty disk family");
  }
  return BoundingBox{family.centers.front(), family.radius, resolution};
}

DiskConstraintFamily b3_family(Complex b1, int angles) {
  if (angles < 3) throw InputError("b3_family: need at least 3 angles");
  DiskConstraintFamily family;
  const Complex cube = b1 * b1 * b1;
  for (double t : uniform_angles(angles)) {
    family.centers.push_back(std::polar(1.0, 2.0 * t) * cube);
  }
  return family;
}

RegionEstimate b3_region(Complex b1, int angles, int resolution) {
  if (std::abs(b1) > 1.0 + kGeneratorTolerance) {
    throw InputError("b3_region: |b1| must be <= 1");
  }
  const DiskConstraintFamily family = b3_family(b1, angles);
  RegionEstimate est =
      intersect_disk_family(family, first_disk_box(family, resolution));
  est.samples_used = angles;
  return est;
}

DiskConstraintFamily b4_family_c1c3(Complex b1, Complex b2, int angles) {
  if (angles < 3) throw InputError("b4_family: need at least 3 angles");
  DiskConstraintFamily family;
  const Complex b1sq = b1 * b1;
  for (double t : uniform_angles(angles)) {
    const Complex e1 = std::polar(1.0, t);
    const Complex e2 = std::polar(1.0, 2.0 * t);
    const Complex e3 = std::polar(1.0, 3.0 * t);
    family.centers.push_back(-e1 * b2 * b2 + e2 * b1sq * b2 +
                             e3 * b1sq * b1sq);
  }
  return family;
}

DiskConstraintFamily b4_family_c2c2(Complex b1, Complex b2, Complex b3,
                                    int angles) {
  if (angles < 3) throw InputError("b4_family: need at least 3 angles");
  DiskConstraintFamily family;
  const Complex b1sq = b1 * b1;
  for (double t : uniform_angles(angles)) {
    const Complex e1 = std::polar(1.0, t);
    const Complex e2 = std::polar(1.0, 2.0 * t);
    const Complex e3 = std::polar(1.0, 3.0 * t);
    family.centers.push_back(-2.0 * e1 * b1 * b3 + e1 * b2 * b2 +
                             e2 * b1sq * b2 + e3 * b1sq * b1sq);
  }
  return family;
}

DiskConstraintFamily b4_family(Complex b1, Complex b2, Complex b3, int angles,
                               B4Mode mode) {
  switch (mode) {
    case B4Mode::kC4MinusC1C3:
      return b4_family_c1c3(b1, b2, angles);
    case B4Mode::kC4MinusC2Squared:
      return b4_family_c2c2(b1, b2, b3, angles);
    case B4Mode::kBoth: {
      DiskConstraintFamily family = b4_family_c1c3(b1, b2, angles);
      append(family, b4_family_c2c2(b1, b2, b3, angles));
      return family;
    }
  }
  throw InputError("b4_family: unknown mode");
}

RegionEstimate b4_feasible_region(Complex b1, Complex b2, Complex b3,
                                  int angles, int resolution, B4Mode mode) {
  const DiskConstraintFamily family = b4_family(b1, b2, b3, angles, mode);
  double reach = 0.0;
  for (const Complex& c : family.centers) reach = std::max(reach, std::abs(c));
  RegionEstimate est = intersect_disk_family(
      family, BoundingBox{0.0, family.radius + reach, resolution});
  est.samples_used = angles;
  return est;
}

double family_margin(const DiskConstraintFamily& family, Complex x) {
  if (family.centers.empty()) {
    throw InputError("family_margin: empty disk family");
  }
  double margin = std::numeric_limits<double>::infinity();
  for (const Complex& c : family.centers) {
    margin = std::min(margin, family.radius - std::abs(x - c));
  }
  return margin;
}

bool region_contains(const RegionEstimate& estimate,
                     const DiskConstraintFamily& family, Complex x) {
  return estimate.contains_near(x) ||
         family_margin(family, x) >= -kMembershipTolerance;
}

double b4_membership_margin(const std::array<Complex, 4>& b, int angles) {
  return family_margin(b4_family(b[0], b[1], b[2], angles, B4Mode::kBoth),
                       b[3]);
}

ScanResult attainability_scan(std::uint64_t seed, int count, int angles,
                              std::size_t order, int max_degree) {
  if (order < 4) throw InputError("attainability_scan: order must be >= 4");
  const auto corpus = sample_schwarz(seed, count, max_degree);

  ScanResult result;
  result.worst_margin = std::numeric_limits<double>::infinity();
  result.frontier.resize(kFrontierBins);
  for (int i = 0; i < kFrontierBins; ++i) {
    FrontierBin& bin = result.frontier[static_cast<std::size_t>(i)];
    bin.b1_lo = static_cast<double>(i) / kFrontierBins;
    bin.b1_hi = static_cast<double>(i + 1) / kFrontierBins;
    bin.reference = 1.0 - std::pow(bin.b1_lo, 4);
  }

  result.entries.reserve(corpus.size());
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const TruncatedSeries w = expand_schwarz(corpus[i], order);
    ScanEntry entry;
    entry.index = static_cast<int>(i);
    entry.b = {w[1], w[2], w[3], w[4]};
    entry.margin = b4_membership_margin(entry.b, angles);
    entry.member = entry.margin >= -kMembershipTolerance;
    if (!entry.member) ++result.violations;
    result.worst_margin = std::min(result.worst_margin, entry.margin);

    const double a1 = std::abs(entry.b[0]);
    const int slot = std::clamp(static_cast<int>(a1 * kFrontierBins), 0,
                                kFrontierBins - 1);
    FrontierBin& bin = result.frontier[static_cast<std::size_t>(slot)];
    ++bin.count;
    bin.max_abs_b4 = std::max(bin.max_abs_b4, std::abs(entry.b[3]));
    result.entries.push_back(entry);
  }
  return result;
}

}  // namespace schwarzlab
