#include "regrade/commands.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

namespace {

regrade::DegreeWindow parse_window(const std::string& text) {
  const auto colon = text.find(':', 1);
  if (colon == std::string::npos) throw CLI::ValidationError("--window", "expected LO:HI");
  regrade::DegreeWindow w{std::stoi(text.substr(0, colon)), std::stoi(text.substr(colon + 1))};
  if (w.lo > w.hi) throw CLI::ValidationError("--window", "LO must not exceed HI");
  return w;
}

regrade::Field parse_field(const std::string& text) {
  try {
    return regrade::Field::parse(text);
  } catch (const std::invalid_argument& e) {
    throw CLI::ValidationError("--field", e.what());
  }
}

}  // namespace

int main(int argc, char** argv) {
  namespace cmd = regrade::commands;
  CLI::App app{"Regrade weighted quiver presentations to degree 1 and check the functors between "
               "their graded representations"};
  app.require_subcommand(1);

  std::string file;
  std::optional<std::string> output;
  std::string arrow;
  std::string field_text = regrade::Field::default_prime().to_string();
  std::string window_text = "-2:10";
  std::optional<std::string> vertex;
  cmd::HilbertArgs hilbert;
  cmd::VerifyArgs verify;
  int result = cmd::kOk;

  auto* validate = app.add_subcommand("validate", "Check a presentation file");
  validate->add_option("FILE", file)->required();
  validate->callback([&] { result = cmd::validate(file, std::cout, std::cerr); });

  auto* discrepancy = app.add_subcommand("discrepancy", "Print the weight discrepancy D(Q)");
  discrepancy->add_option("FILE", file)->required();
  discrepancy->callback([&] { result = cmd::discrepancy(file, std::cout, std::cerr); });

  auto* split = app.add_subcommand("split", "Split one arrow and print the new presentation");
  split->add_option("FILE", file)->required();
  split->add_option("--arrow", arrow, "Arrow of degree >= 2 to split")->required();
  split->callback([&] { result = cmd::split(file, arrow, std::cout, std::cerr); });

  auto* regrade = app.add_subcommand("regrade", "Split until every arrow has degree 1");
  regrade->add_option("FILE", file)->required();
  regrade->add_option("-o,--output", output, "Write to this file instead of stdout");
  regrade->callback([&] { result = cmd::regrade(file, output, std::cout, std::cerr); });

  auto* hil = app.add_subcommand("hilbert", "Print dim (kQ/I)_d for d = 0..D");
  hil->add_option("FILE", hilbert.path)->required();
  hil->add_option("--max-degree", hilbert.max_degree)->required();
  hil->add_option("--vertex", vertex, "Only paths starting at this vertex");
  hil->add_option("--field", field_text, "q or pN")->capture_default_str();
  hil->add_option("--degree-limit", hilbert.degree_limit)->capture_default_str();
  hil->add_option("--max-paths", hilbert.max_paths)->capture_default_str();
  hil->callback([&] {
    hilbert.vertex = vertex;
    hilbert.field = parse_field(field_text);
    result = cmd::hilbert(hilbert, std::cout, std::cerr);
  });

  auto* ver = app.add_subcommand("verify", "Run the seeded property suites");
  ver->add_option("FILE", verify.path)->required();
  ver->add_option("--suite", verify.suite, "split, functor, hilbert or all")->capture_default_str();
  ver->add_option("--trials", verify.config.trials)->capture_default_str()->check(CLI::PositiveNumber);
  ver->add_option("--seed", verify.config.master_seed)->capture_default_str();
  ver->add_option("--window", window_text, "LO:HI")->capture_default_str();
  ver->add_option("--max-dim", verify.config.max_dim)->capture_default_str();
  ver->add_option("--field", field_text, "q or pN")->capture_default_str();
  ver->add_option("--max-degree", verify.config.max_degree, "Top degree for Hilbert checks")
      ->capture_default_str();
  ver->add_flag("--json", verify.json, "Machine-readable report");
  ver->add_flag("--timing", verify.config.timing, "Include wall time in the report");
  ver->callback([&] {
    verify.config.window = parse_window(window_text);
    verify.config.field = parse_field(field_text);
    result = cmd::verify(verify, std::cout, std::cerr);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e, std::cout, std::cerr);
    return cmd::kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cmd::kUsage;
  }
  return result;
}
