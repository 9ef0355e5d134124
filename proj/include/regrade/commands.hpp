#pragma once

// Command implementations behind the `regrade` tool.  Each takes already
// parsed options plus output streams and returns the process exit code:
// 0 success, 1 validation/verification failure, 2 usage or input error.

#include "regrade/hilbert.hpp"
#include "regrade/split.hpp"
#include "regrade/text_format.hpp"
#include "regrade/verify.hpp"

#include <cstddef>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

namespace regrade::commands {

inline constexpr int kOk = 0;
inline constexpr int kFailure = 1;
inline constexpr int kUsage = 2;

inline std::optional<std::string> read_file(const std::string& path, std::ostream& err) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    err << "error: cannot read '" << path << "'\n";
    return std::nullopt;
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Parses `path`; prints diagnostics as FILE:LINE:COL: message.
inline std::optional<PresentationFile> load(const std::string& path, std::ostream& err, int& code,
                                            Field field = Field::rationals()) {
  const auto text = read_file(path, err);
  if (!text) {
    code = kUsage;
    return std::nullopt;
  }
  ParseOutcome r = parse_presentation(*text, field);
  if (!r.ok()) {
    for (const Diagnostic& d : r.diagnostics) err << path << ":" << d.to_string() << '\n';
    code = kFailure;
    return std::nullopt;
  }
  return std::move(r.presentation);
}

inline int validate(const std::string& path, std::ostream& out, std::ostream& err) {
  int code = kOk;
  const auto p = load(path, err, code);
  if (!p) return code;
  out << "ok: " << p->quiver.vertices().size() << " vertices, " << p->quiver.arrows().size()
      << " arrows, " << p->ideal.generators.size() << " relations\n";
  return kOk;
}

inline int discrepancy(const std::string& path, std::ostream& out, std::ostream& err) {
  int code = kOk;
  const auto p = load(path, err, code);
  if (!p) return code;
  out << weight_discrepancy(p->quiver) << '\n';
  return kOk;
}

inline int split(const std::string& path, const std::string& arrow, std::ostream& out,
                 std::ostream& err) {
  int code = kOk;
  const auto p = load(path, err, code);
  if (!p) return code;
  try {
    const SplitTrace t = split_arrow(p->quiver, ArrowId{arrow});
    out << serialize_presentation(t.after, rewrite_ideal(t, p->ideal), {describe_split(t)});
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kOk;
}

/// The text `regrade` writes: trace comments followed by the presentation.
inline std::string regrade_text(const PresentationFile& p) {
  const RegradeResult r = regrade(p.quiver, p.ideal);
  std::vector<std::string> comments{"regrade: " + std::to_string(r.trace.size()) +
                                    " split(s), weight discrepancy " +
                                    std::to_string(weight_discrepancy(p.quiver)) + " -> 0"};
  for (const SplitTrace& t : r.trace) comments.push_back(describe_split(t));
  return serialize_presentation(r.final_quiver, r.final_ideal, comments);
}

inline int regrade(const std::string& path, const std::optional<std::string>& output,
                   std::ostream& out, std::ostream& err) {
  int code = kOk;
  const auto p = load(path, err, code);
  if (!p) return code;
  const std::string text = regrade_text(*p);
  if (!output) {
    out << text;
    return kOk;
  }
  std::ofstream file(*output, std::ios::binary);
  if (!(file << text)) {
    err << "error: cannot write '" << *output << "'\n";
    return kUsage;
  }
  return kOk;
}

struct HilbertArgs {
  std::string path;
  int max_degree = 0;
  std::optional<std::string> vertex;
  Field field = Field::default_prime();
  int degree_limit = 12;
  std::size_t max_paths = 200000;
};

inline int hilbert(const HilbertArgs& args, std::ostream& out, std::ostream& err) {
  if (args.max_degree < 0 || args.max_degree > args.degree_limit) {
    err << "error: --max-degree must lie in 0.." << args.degree_limit
        << " (raise --degree-limit to go further)\n";
    return kUsage;
  }
  int code = kOk;
  const auto p = load(args.path, err, code);
  if (!p) return code;
  HilbertOptions opts{args.field, std::nullopt, args.max_paths};
  if (args.vertex) {
    if (!p->quiver.has_vertex(VertexId{*args.vertex})) {
      err << "error: unknown vertex '" << *args.vertex << "'\n";
      return kUsage;
    }
    opts.vertex = VertexId{*args.vertex};
  }
  try {
    const IdealPresentation ideal = to_field(p->ideal, args.field);
    const auto table = hilbert_table(p->quiver, ideal, args.max_degree, opts);
    out << "# field " << args.field.to_string();
    if (args.vertex) out << ", paths starting at " << *args.vertex;
    out << "\ndegree dim\n";
    for (std::size_t d = 0; d < table.size(); ++d) out << d << ' ' << table[d] << '\n';
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kOk;
}

struct VerifyArgs {
  std::string path;
  std::string suite = "all";
  SuiteConfig config;
  bool json = false;
};

inline int verify(const VerifyArgs& args, std::ostream& out, std::ostream& err) {
  if (args.suite != "split" && args.suite != "functor" && args.suite != "hilbert" &&
      args.suite != "all") {
    err << "error: --suite must be split, functor, hilbert or all\n";
    return kUsage;
  }
  int code = kOk;
  const auto p = load(args.path, err, code);
  if (!p) return code;
  SuiteConfig cfg = args.config;
  cfg.extra = *p;
  const auto reports = run_suites(args.suite, cfg);
  bool passed = true;
  if (args.json) {
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (const auto& r : reports) j.push_back(to_json(r));
    out << j.dump(2) << '\n';
  } else {
    for (const auto& r : reports) out << render_text(r);
  }
  for (const auto& r : reports) passed = passed && r.passed();
  return passed ? kOk : kFailure;
}

}  // namespace regrade::commands
