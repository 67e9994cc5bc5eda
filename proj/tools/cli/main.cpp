#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "grammar.hpp"
#include "run.hpp"

namespace {

using schwarzlab::B4Mode;
using namespace schwarzlab::cli;

// Adds a "re,im" complex option stored as text, parsed after CLI11 is done.
void add_complex(CLI::App& app, const std::string& flag, std::string& text,
                 const std::string& help) {
  app.add_option(flag, text, help + " (\"re\" or \"re,im\")");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"schwarzlab: coefficient inequalities for Schwarz and "
               "Caratheodory functions"};
  app.require_subcommand(1);

  RunConfig config;
  std::string format = "json";
  std::string out_path;
  std::string b1 = "0", b2 = "0", b3 = "0";
  std::string target = "b3";
  std::string mode = "both";

  auto common = [&](CLI::App* sub) {
    sub->add_option("--order", config.order, "Truncation order")
        ->capture_default_str();
    sub->add_option("--seed", config.seed, "Corpus seed")->capture_default_str();
    sub->add_option("--samples", config.samples, "Corpus size")
        ->capture_default_str();
    sub->add_option("--tol", config.tol, "Slack tolerance")
        ->capture_default_str();
    sub->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    sub->add_option("--out", out_path, "Write the report to PATH");
    add_complex(*sub, "--b1", b1, "First coefficient");
    add_complex(*sub, "--b2", b2, "Second coefficient");
    add_complex(*sub, "--b3", b3, "Third coefficient");
    sub->add_option("--target", target, "Region target")
        ->check(CLI::IsMember({"b3", "b4"}))
        ->capture_default_str();
    sub->add_option("--mode", mode, "b4 constraint families")
        ->check(CLI::IsMember({"eq1", "eq2", "both"}))
        ->capture_default_str();
    sub->add_option("--angles", config.angles, "Angle samples M")
        ->capture_default_str();
    sub->add_option("--resolution", config.resolution, "Grid cells per side")
        ->capture_default_str();
  };

  const std::map<std::string, Command> commands{
      {"expand", Command::kExpand},
      {"verify", Command::kVerify},
      {"region", Command::kRegion},
      {"scan", Command::kScan},
  };
  std::map<std::string, CLI::App*> subs;
  subs["expand"] = app.add_subcommand("expand", "Print series coefficients");
  subs["verify"] = app.add_subcommand("verify", "Check all bounds on a corpus");
  subs["region"] = app.add_subcommand("region", "Rasterize a b3/b4 region");
  subs["scan"] = app.add_subcommand("scan", "Check sampled b4 membership");
  for (auto& [name, sub] : subs) common(sub);
  subs["expand"]->add_option("generator", config.generator,
                             "Generator expression")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  for (const auto& [name, sub] : subs) {
    if (sub->parsed()) config.command = commands.at(name);
  }
  config.format = format == "csv" ? Format::kCsv : Format::kJson;
  config.target = target == "b4" ? Target::kB4 : Target::kB3;
  config.mode = mode == "eq1"   ? B4Mode::kC4MinusC1C3
                : mode == "eq2" ? B4Mode::kC4MinusC2Squared
                                : B4Mode::kBoth;
  try {
    config.b1 = parse_complex(b1);
    config.b2 = parse_complex(b2);
    config.b3 = parse_complex(b3);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitUsage;
  }

  if (out_path.empty()) return run(config, std::cout, std::cerr);
  config.output_path = out_path;
  std::ofstream file(out_path, std::ios::binary);
  if (!file) {
    std::cerr << "cannot open " << out_path << " for writing\n";
    return kExitUsage;
  }
  return run(config, file, std::cerr);
}
