#include "run.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <numbers>
#include <ostream>
#include <vector>

#include <json.hpp>

#include "grammar.hpp"
#include "schwarzlab/families.hpp"
#include "schwarzlab/inequalities.hpp"

namespace schwarzlab::cli {
namespace {

using Json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string format_double(double x) {
  if (x == 0.0) x = 0.0;  // drop the sign of -0
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, ptr);
}

Json complex_json(Complex c) {
  return Json::array({c.real() == 0.0 ? 0.0 : c.real(),
                      c.imag() == 0.0 ? 0.0 : c.imag()});
}

const char* command_name(Command c) {
  switch (c) {
    case Command::kExpand: return "expand";
    case Command::kVerify: return "verify";
    case Command::kRegion: return "region";
    case Command::kScan: return "scan";
  }
  return "?";
}

const char* mode_name(B4Mode m) {
  switch (m) {
    case B4Mode::kC4MinusC1C3: return "eq1";
    case B4Mode::kC4MinusC2Squared: return "eq2";
    case B4Mode::kBoth: return "both";
  }
  return "?";
}

Json config_json(const RunConfig& c) {
  Json j;
  j["order"] = c.order;
  j["seed"] = c.seed;
  j["samples"] = c.samples;
  j["tol"] = c.tol;
  j["format"] = c.format == Format::kJson ? "json" : "csv";
  j["generator"] = c.generator;
  j["b1"] = complex_json(c.b1);
  j["b2"] = complex_json(c.b2);
  j["b3"] = complex_json(c.b3);
  j["target"] = c.target == Target::kB3 ? "b3" : "b4";
  j["mode"] = mode_name(c.mode);
  j["angles"] = c.angles;
  j["resolution"] = c.resolution;
  return j;
}

void validate_config(const RunConfig& c) {
  if (c.command != Command::kExpand && c.order < 4) {
    throw UsageError("--order must be >= 4 for this command");
  }
  if (c.order < 1) throw UsageError("--order must be >= 1");
  if (c.samples < 1) throw UsageError("--samples must be >= 1");
  if (!(c.tol >= 0.0)) throw UsageError("--tol must be non-negative");
  if (c.angles < 3) throw UsageError("--angles must be >= 3");
  if (c.resolution < kMinResolution) {
    throw UsageError("--resolution must be >= 16");
  }
  if (c.command == Command::kExpand && c.generator.empty()) {
    throw UsageError("expand needs a generator expression");
  }
}

void emit(const RunConfig& c, Json results, std::optional<double> worst_slack,
          int status, std::ostream& out, Json extra = Json()) {
  Json report;
  report["command"] = command_name(c.command);
  report["config"] = config_json(c);
  report["results"] = std::move(results);
  if (!extra.is_null()) {
    for (auto& [key, value] : extra.items()) report[key] = value;
  }
  report["worst_slack"] = worst_slack ? Json(*worst_slack) : Json(nullptr);
  report["exit_status"] = status;
  out << report.dump() << '\n';
}

// expand ------------------------------------------------------------------

int run_expand(const RunConfig& c, std::ostream& out) {
  const Generator g = parse_generator(c.generator);
  const bool schwarz = std::holds_alternative<SchwarzGenerator>(g);
  const TruncatedSeries s =
      schwarz ? expand_schwarz(std::get<SchwarzGenerator>(g), c.order)
              : expand_caratheodory(std::get<CaratheodoryGenerator>(g),
                                    c.order);
  const char prefix = schwarz ? 'b' : 'c';
  if (c.format == Format::kCsv) {
    out << "name,value\n";
    for (std::size_t k = 1; k <= s.order(); ++k) {
      out << prefix << k << ',' << format_complex(s[k]) << '\n';
    }
    return kExitOk;
  }
  Json results = Json::array();
  for (std::size_t k = 1; k <= s.order(); ++k) {
    Json row;
    row["name"] = std::string(1, prefix) + std::to_string(k);
    row["value"] = complex_json(s[k]);
    results.push_back(std::move(row));
  }
  emit(c, std::move(results), std::nullopt, kExitOk, out);
  return kExitOk;
}

// verify ------------------------------------------------------------------

struct Group {
  explicit Group(std::string n, bool is_identity = false)
      : name(std::move(n)), identity(is_identity) {}

  std::string name;
  bool identity = false;  // identity groups track an error, not a slack
  std::int64_t checks = 0;
  std::int64_t failures = 0;
  double worst = std::numeric_limits<double>::infinity();
  int worst_sample = -1;
  std::string worst_detail;
  int first_failure_sample = -1;
  double first_failure_value = 0.0;

  void slack(double s, double tol, int sample, const std::string& detail) {
    ++checks;
    if (s < worst) {
      worst = s;
      worst_sample = sample;
      worst_detail = detail;
    }
    if (s < -tol) fail(sample, s);
  }

  void error(double e, double tol, int sample, const std::string& detail) {
    ++checks;
    if (worst_sample < 0 || e > worst) {
      worst = e;
      worst_sample = sample;
      worst_detail = detail;
    }
    if (!(e <= tol)) fail(sample, e);
  }

  void fail(int sample, double value) {
    if (failures++ == 0) {
      first_failure_sample = sample;
      first_failure_value = value;
    }
  }
};

std::vector<double> verify_radii() {
  std::vector<double> radii;
  for (int j = 0; j < 8; ++j) radii.push_back(0.1 + 0.8 * j / 7.0);
  return radii;
}

int run_verify(const RunConfig& c, std::ostream& out, std::ostream& err) {
  Group coeff{"schwarz:|b_k|<=1"};
  Group b2{"schwarz:|b2|<=1-|b1|^2"};
  Group b3{"schwarz:|b3|<=1-|b1|^3"};
  Group pointwise{"schwarz:|w(z)|<=|z|"};
  Group e1{"schwarz:b4 gap c4-c1c3"};
  Group e2{"schwarz:b4 gap c4-c2^2"};
  Group cayley_gap{"cayley:livingston"};
  Group roundtrip{"cayley:roundtrip", /*is_identity=*/true};
  Group cara_coeff{"herglotz:|c_k|<=2"};
  Group livingston{"herglotz:livingston"};

  const int s_max = static_cast<int>(
      std::min<std::size_t>(kVerifyLivingstonMax, c.order));
  auto gap_pairs = [&](const TruncatedSeries& p, Group& group, int sample) {
    for (int s = 2; s <= s_max; ++s) {
      for (int t = 1; t < s; ++t) {
        const BoundReport r = livingston_gap(p, s, t);
        group.slack(r.slack, c.tol, sample, r.name);
      }
    }
  };

  const std::vector<double> radii = verify_radii();
  const std::array<double, 4> cayley_angles{0.0, 1.0, 2.0, std::numbers::pi};
  const auto schwarz = sample_schwarz(c.seed, c.samples, kVerifyMaxDegree);
  for (std::size_t i = 0; i < schwarz.size(); ++i) {
    const int idx = static_cast<int>(i);
    const TruncatedSeries w = expand_schwarz(schwarz[i], c.order);
    for (const BoundReport& r : check_coefficient_bounds(w)) {
      coeff.slack(r.slack, c.tol, idx, r.name);
    }
    const BoundReport r2 = check_b2_bound(w);
    b2.slack(r2.slack, c.tol, idx, r2.name);
    const BoundReport r3 = check_b3_bound(w);
    b3.slack(r3.slack, c.tol, idx, r3.name);
    for (const BoundReport& r : check_schwarz_pointwise(schwarz[i], radii, 16)) {
      pointwise.slack(r.slack, c.tol, idx, r.name);
    }
    for (double theta : uniform_angles(kVerifyB4Angles)) {
      const auto pair = b4_functionals(w, theta);
      e1.slack(pair[0].slack, c.tol, idx, "theta=" + format_double(theta));
      e2.slack(pair[1].slack, c.tol, idx, "theta=" + format_double(theta));
    }
    for (double theta : cayley_angles) {
      const TruncatedSeries p = cayley_from_schwarz(w, theta);
      gap_pairs(p, cayley_gap, idx);
      roundtrip.error(max_abs_diff(inverse_cayley(p, theta), w),
                      kRoundtripTolerance, idx,
                      "theta=" + format_double(theta));
    }
  }

  // Offset keeps the Herglotz stream distinct from the Schwarz stream.
  const auto herglotz = sample_herglotz(c.seed + 1, c.samples);
  for (std::size_t i = 0; i < herglotz.size(); ++i) {
    const int idx = static_cast<int>(i);
    const TruncatedSeries p = expand_caratheodory(herglotz[i], c.order);
    for (std::size_t k = 1; k <= p.order(); ++k) {
      cara_coeff.slack(2.0 - std::abs(p[k]), c.tol, idx,
                       "c" + std::to_string(k));
    }
    gap_pairs(p, livingston, idx);
  }

  const std::vector<const Group*> groups{&coeff, &b2,         &b3,
                                         &pointwise, &e1,     &e2,
                                         &cayley_gap, &roundtrip,
                                         &cara_coeff, &livingston};
  double worst_slack = std::numeric_limits<double>::infinity();
  int status = kExitOk;
  for (const Group* g : groups) {
    if (!g->identity) worst_slack = std::min(worst_slack, g->worst);
    if (g->failures > 0) {
      status = kExitCheckFailed;
      err << "check failed: " << g->name << " sample "
          << g->first_failure_sample << " (seed " << c.seed << ") "
          << (g->identity ? "error " : "slack ")
          << format_double(g->first_failure_value) << '\n';
    }
  }

  if (c.format == Format::kCsv) {
    out << "bound,kind,checks,failures,worst,worst_sample,worst_detail\n";
    for (const Group* g : groups) {
      out << g->name << ',' << (g->identity ? "identity" : "inequality")
          << ',' << g->checks << ',' << g->failures << ','
          << format_double(g->worst) << ',' << g->worst_sample << ','
          << g->worst_detail << '\n';
    }
    return status;
  }
  Json results = Json::array();
  for (const Group* g : groups) {
    Json row;
    row["bound"] = g->name;
    row["kind"] = g->identity ? "identity" : "inequality";
    row["checks"] = g->checks;
    row["failures"] = g->failures;
    row[g->identity ? "max_error" : "worst_slack"] = g->worst;
    row["worst_sample"] = g->worst_sample;
    row["worst_detail"] = g->worst_detail;
    if (g->failures > 0) {
      row["first_failure_sample"] = g->first_failure_sample;
      row["first_failure_value"] = g->first_failure_value;
    }
    results.push_back(std::move(row));
  }
  emit(c, std::move(results), worst_slack, status, out);
  return status;
}

// region ------------------------------------------------------------------

int run_region(const RunConfig& c, std::ostream& out) {
  const RegionEstimate est =
      c.target == Target::kB3
          ? b3_region(c.b1, c.angles, c.resolution)
          : b4_feasible_region(c.b1, c.b2, c.b3, c.angles, c.resolution,
                               c.mode);
  const double b3_bound = 1.0 - std::pow(std::abs(c.b1), 3);

  if (c.format == Format::kCsv) {
    out << "key,value\n";
    out << "target," << (c.target == Target::kB3 ? "b3" : "b4") << '\n';
    out << "max_modulus," << format_double(est.max_modulus) << '\n';
    if (c.target == Target::kB3) {
      out << "b3_bound," << format_double(b3_bound) << '\n';
    }
    out << "feasible_area_cells," << est.feasible_area_cells << '\n';
    out << "samples_used," << est.samples_used << '\n';
    out << "quantization," << format_double(est.quantization) << '\n';
    out << "box_center," << format_complex(est.box.center) << '\n';
    out << "box_half_width," << format_double(est.box.half_width) << '\n';
    out << "resolution," << est.box.resolution << '\n';
    out << '\n' << "boundary_re,boundary_im\n";
    for (const auto& [row, col] : est.boundary_cells()) {
      const Complex x = est.box.cell_center(row, col);
      out << format_double(x.real()) << ',' << format_double(x.imag()) << '\n';
    }
    return kExitOk;
  }

  Json result;
  result["target"] = c.target == Target::kB3 ? "b3" : "b4";
  if (c.target == Target::kB4) result["mode"] = mode_name(c.mode);
  result["max_modulus"] = est.max_modulus;
  if (c.target == Target::kB3) result["b3_bound"] = b3_bound;
  result["feasible_area_cells"] = est.feasible_area_cells;
  result["empty"] = est.empty();
  result["samples_used"] = est.samples_used;
  result["quantization"] = est.quantization;
  Json box;
  box["center"] = complex_json(est.box.center);
  box["half_width"] = est.box.half_width;
  box["resolution"] = est.box.resolution;
  result["box"] = std::move(box);
  Json rows = Json::array();
  for (const auto& runs : est.row_runs()) {
    Json row = Json::array();
    for (const auto& [start, length] : runs) {
      row.push_back(Json::array({start, length}));
    }
    rows.push_back(std::move(row));
  }
  result["rows"] = std::move(rows);
  emit(c, Json::array({std::move(result)}), std::nullopt, kExitOk, out);
  return kExitOk;
}

// scan --------------------------------------------------------------------

int run_scan(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const ScanResult scan =
      attainability_scan(c.seed, c.samples, c.angles, c.order);
  const int status = scan.violations == 0 ? kExitOk : kExitCheckFailed;
  for (const ScanEntry& e : scan.entries) {
    if (!e.member) {
      err << "check failed: b4 outside constraint region, sample " << e.index
          << " (seed " << c.seed << ") margin " << format_double(e.margin)
          << '\n';
    }
  }

  if (c.format == Format::kCsv) {
    out << "index,b1,b2,b3,b4,member,margin\n";
    for (const ScanEntry& e : scan.entries) {
      out << e.index;
      for (const Complex& b : e.b) out << ',' << format_complex(b);
      out << ',' << (e.member ? "true" : "false") << ','
          << format_double(e.margin) << '\n';
    }
    out << '\n' << "b1_lo,b1_hi,count,max_abs_b4,reference_1_minus_b1_lo_4\n";
    for (const FrontierBin& f : scan.frontier) {
      out << format_double(f.b1_lo) << ',' << format_double(f.b1_hi) << ','
          << f.count << ',' << format_double(f.max_abs_b4) << ','
          << format_double(f.reference) << '\n';
    }
    return status;
  }

  Json results = Json::array();
  for (const ScanEntry& e : scan.entries) {
    Json row;
    row["index"] = e.index;
    Json b = Json::array();
    for (const Complex& v : e.b) b.push_back(complex_json(v));
    row["b"] = std::move(b);
    row["member"] = e.member;
    row["margin"] = e.margin;
    results.push_back(std::move(row));
  }
  Json frontier = Json::array();
  for (const FrontierBin& f : scan.frontier) {
    Json bin;
    bin["b1_lo"] = f.b1_lo;
    bin["b1_hi"] = f.b1_hi;
    bin["count"] = f.count;
    bin["max_abs_b4"] = f.max_abs_b4;
    bin["reference_1_minus_b1_lo_4"] = f.reference;
    frontier.push_back(std::move(bin));
  }
  Json extra;
  extra["violations"] = scan.violations;
  extra["frontier"] = std::move(frontier);
  emit(c, std::move(results), scan.worst_margin, status, out,
       std::move(extra));
  return status;
}

}  // namespace

std::string format_complex(Complex c) {
  const double im = c.imag() == 0.0 ? 0.0 : c.imag();
  std::string s = format_double(c.real());
  if (std::signbit(im)) {
    s += '-';
    s += format_double(-im);
  } else {
    s += '+';
    s += format_double(im);
  }
  s += 'i';
  return s;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    validate_config(config);
    switch (config.command) {
      case Command::kExpand: return run_expand(config, out);
      case Command::kVerify: return run_verify(config, out, err);
      case Command::kRegion: return run_region(config, out);
      case Command::kScan: return run_scan(config, out, err);
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
  }
  return kExitUsage;
}

}  // namespace schwarzlab::cli
