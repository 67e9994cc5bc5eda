// Feasible regions cut out by theta-parameterized families of closed disks
// {x : |x - gamma(theta)| <= R}, rasterized on a square occupancy grid.

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "schwarzlab/series.hpp"

namespace schwarzlab {

/// Default number of uniform angle samples theta_j = 2 pi j / M.
inline constexpr int kDefaultAngles = 4096;
/// Default grid resolution (cells per side).
inline constexpr int kDefaultResolution = 1024;
inline constexpr int kMinResolution = 16;
/// Margin below which a point still counts as a member of a disk family.
inline constexpr double kMembershipTolerance = 1e-6;

/// Disk centers gamma(theta_j) sampled at theta_j = 2 pi j / M, common radius.
struct DiskConstraintFamily {
  std::vector<Complex> centers;
  double radius = 1.0;
};

/// Square [center - half_width, center + half_width]^2 split into
/// resolution x resolution cells.  Row i spans imaginary parts, column j
/// real parts, both increasing with the index.
struct BoundingBox {
  Complex center = 0.0;
  double half_width = 1.0;
  int resolution = kDefaultResolution;

  double cell_size() const { return 2.0 * half_width / resolution; }
  Complex cell_center(int row, int col) const;
  /// Cell containing x, or nullopt outside the box.
  std::optional<std::pair<int, int>> cell_of(Complex x) const;
};

struct RegionEstimate {
  BoundingBox box;
  /// Row-major occupancy, 1 = feasible.
  std::vector<std::uint8_t> cells;
  /// Largest |x| over feasible cell centers; 0 when no cell is feasible.
  double max_modulus = 0.0;
  std::int64_t feasible_area_cells = 0;
  /// Number of angle samples behind the constraint family.
  int samples_used = 0;
  /// Cell-center quantization of max_modulus: half_width sqrt(2) / resolution.
  double quantization = 0.0;

  bool empty() const { return feasible_area_cells == 0; }
  bool feasible(int row, int col) const {
    return cells[static_cast<std::size_t>(row) * box.resolution + col] != 0;
  }
  /// True if the cell holding x, or one of its 8 neighbours, is feasible.
  bool contains_near(Complex x) const;
  /// Feasible cells with at least one infeasible or out-of-box neighbour.
  std::vector<std::pair<int, int>> boundary_cells() const;
  /// Run-length encoding of each row as (start column, length) pairs.
  std::vector<std::vector<std::pair<int, int>>> row_runs() const;
};

enum class B4Mode { kC4MinusC1C3, kC4MinusC2Squared, kBoth };

/// Uniform angles 2 pi j / M, j = 0..M-1.
std::vector<double> uniform_angles(int count);

/// Marks a cell feasible iff its center x satisfies |x - gamma_j| <= R for
/// every j.  Throws InputError on an empty family or resolution < 16.
RegionEstimate intersect_disk_family(const DiskConstraintFamily& family,
                                     const BoundingBox& box);

/// The box around the first disk of the family, which contains the whole
/// intersection.
BoundingBox first_disk_box(const DiskConstraintFamily& family, int resolution);

/// gamma(theta) = e^{2 i theta} b1^3, R = 1.
DiskConstraintFamily b3_family(Complex b1, int angles);

/// The constraint set for b3 given b1; its max modulus tends to 1 - |b1|^3.
RegionEstimate b3_region(Complex b1, int angles = kDefaultAngles,
                         int resolution = kDefaultResolution);

/// gamma1(theta) = -e^{it} b2^2 + e^{2it} b1^2 b2 + e^{3it} b1^4.
DiskConstraintFamily b4_family_c1c3(Complex b1, Complex b2, int angles);
/// gamma2(theta) = -2 e^{it} b1 b3 + e^{it} b2^2 + e^{2it} b1^2 b2
///                 + e^{3it} b1^4.
DiskConstraintFamily b4_family_c2c2(Complex b1, Complex b2, Complex b3,
                                    int angles);
DiskConstraintFamily b4_family(Complex b1, Complex b2, Complex b3, int angles,
                               B4Mode mode);

/// Constraint set for b4 given (b1, b2, b3).  The box is centered at 0 with
/// half-width 1 + max_j |gamma_j|.
RegionEstimate b4_feasible_region(Complex b1, Complex b2, Complex b3,
                                  int angles = kDefaultAngles,
                                  int resolution = kDefaultResolution,
                                  B4Mode mode = B4Mode::kBoth);

/// min_j (R - |x - gamma_j|); non-negative iff x lies in every disk.
double family_margin(const DiskConstraintFamily& family, Complex x);

/// Membership of x in a rasterized region: a feasible cell at or next to x,
/// or, for regions thinner than a cell, an analytic margin of at least
/// -kMembershipTolerance.
bool region_contains(const RegionEstimate& estimate,
                     const DiskConstraintFamily& family, Complex x);

struct ScanEntry {
  int index = 0;
  std::array<Complex, 4> b{};
  bool member = false;
  double margin = 0.0;
};

struct FrontierBin {
  double b1_lo = 0.0;
  double b1_hi = 0.0;
  int count = 0;
  double max_abs_b4 = 0.0;
  /// 1 - b1_lo^4, emitted for comparison only.
  double reference = 0.0;
};

struct ScanResult {
  std::vector<ScanEntry> entries;
  std::vector<FrontierBin> frontier;
  int violations = 0;
  double worst_margin = 0.0;
};

inline constexpr int kScanMaxDegree = 6;
inline constexpr int kFrontierBins = 10;

/// Margin of b4 against both b4 disk families at `angles` samples.
double b4_membership_margin(const std::array<Complex, 4>& b, int angles);

/// Samples Schwarz functions, expands each to `order` (>= 4) and checks that
/// b4 lies in the b4 constraint set of its (b1, b2, b3) within 1e-6.
ScanResult attainability_scan(std::uint64_t seed, int count,
                              int angles = kDefaultAngles,
                              std::size_t order = kDefaultOrder,
                              int max_degree = kScanMaxDegree);

}  // namespace schwarzlab
