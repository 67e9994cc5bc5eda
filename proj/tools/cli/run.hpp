#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "schwarzlab/region.hpp"
#include "schwarzlab/series.hpp"

namespace schwarzlab::cli {

enum class Command { kExpand, kVerify, kRegion, kScan };
enum class Format { kJson, kCsv };
enum class Target { kB3, kB4 };

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Largest Blaschke degree in the verify corpus.
inline constexpr int kVerifyMaxDegree = 6;
/// Largest s in the Livingston pairs checked by verify.
inline constexpr int kVerifyLivingstonMax = 10;
/// Number of Cayley angles sampled for the b4 functionals in verify.
inline constexpr int kVerifyB4Angles = 64;
/// Identity tolerance of the Cayley roundtrip check.
inline constexpr double kRoundtripTolerance = 1e-12;

struct RunConfig {
  Command command = Command::kExpand;
  std::size_t order = kDefaultOrder;
  std::uint64_t seed = 42;
  int samples = 1000;
  double tol = 1e-9;
  Format format = Format::kJson;
  std::optional<std::string> output_path;
  Complex b1 = 0.0;
  Complex b2 = 0.0;
  Complex b3 = 0.0;
  Target target = Target::kB3;
  B4Mode mode = B4Mode::kBoth;
  int angles = kDefaultAngles;
  int resolution = kDefaultResolution;
  /// Generator expression for `expand`.
  std::string generator;
};

/// Executes one command, writing the report to `out` and diagnostics to
/// `err`.  Returns 0 on success, 1 if a check failed, 2 on invalid input.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// "re+imi" with shortest round-trip formatting.
std::string format_complex(Complex c);

}  // namespace schwarzlab::cli
