#pragma once
/**
 * @file cli.hpp
 * @brief Command-line front end: certificate suites, JSON reports, SVG.
 *
 * Five subcommands over the core libraries:
 *
 *   verify    — run the full certificate suite (16 named checks);
 *   locus     — render the real degeneracy curves and the diagonal to SVG,
 *               with a JSON companion listing the exact diagonal punctures;
 *   blowup    — serialize the compactified parameter surface: centers,
 *               charts, divisors, intersection matrix, incidence data, and
 *               the exact limit formulas on the exceptional curves;
 *   strata    — the boundary-stratum table with equalizer statuses;
 *   classify  — place one parameter point against the degeneracy locus.
 *
 * Every command produces a single JSON document (stable key order, exact
 * values as strings).  `elapsed_ms` is the one field that varies between
 * identical runs.  Exit codes: 0 success / all certificates pass,
 * 1 certificate failure, 2 usage or internal error.
 */

#include "exactfield/rational.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace cli {

using Json = nlohmann::ordered_json;
using exactfield::Rat;

inline constexpr const char* kTool = "per4";
inline constexpr const char* kVersion = "1.0.0";
inline constexpr const char* kSchemaVersion = "1";

/// Bad command-line input (malformed point, degenerate window, …); the
/// driver prints the message plus usage and exits with code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// One verification check: a name, a verdict, and its exact certificate.
struct CheckResult {
  std::string name;
  std::string status;  ///< "pass" | "fail" | "flagged"
  Json certificate;
};

/// The full certificate suite, sorted by check name.  `corrupt_z4` swaps in
/// the deliberately broken curve registry to demonstrate failure reporting.
std::vector<CheckResult> run_all_checks(bool corrupt_z4 = false);

/// Rational window for the locus rendering.
struct Window {
  Rat xmin, xmax, ymin, ymax;
};

/// Parse "xmin,xmax,ymin,ymax" with exact rational entries.
Window parse_window(const std::string& text);

/// Result of one command: the JSON document, the rendered SVG (locus only),
/// and the process exit code.
struct CommandOutput {
  Json json;
  std::string svg;
  int exit_code = 0;
};

CommandOutput cmd_verify(bool corrupt_z4 = false);
CommandOutput cmd_locus(const Window& window, int samples);
CommandOutput cmd_blowup();
CommandOutput cmd_strata();
CommandOutput cmd_classify(const std::string& x_token,
                           const std::string& y_token);

/// The SVG rendering on its own: six lines, four curves (exact solved
/// forms), and the diagonal — eleven <path> elements.
std::string render_locus_svg(const Window& window, int samples);

/// Wrap a command payload in the standard report envelope.  The payload's
/// own keys follow "command" and "input"; "elapsed_ms" is appended last.
Json report_document(const std::string& command, const Json& input,
                     const Json& payload, double elapsed_ms);

}  // namespace cli
