/**
 * per4 — exact certificates for a marked quadratic family, its degeneracy
 * locus, and its compactified parameter surface.
 *
 * Exit codes: 0 success (all checks pass), 1 a verification check failed,
 * 2 usage or internal error.
 */
#include "cli/cli.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>

namespace {

int emit(const cli::CommandOutput& out, const std::string& json_out,
         const std::string& svg_out) {
  if (!svg_out.empty()) {
    std::ofstream f(svg_out);
    f << out.svg;
    if (!f) {
      std::cerr << "error: cannot write " << svg_out << "\n";
      return 2;
    }
  }
  const std::string text = out.json.dump(2) + "\n";
  if (!json_out.empty()) {
    std::ofstream f(json_out);
    f << text;
    if (!f) {
      std::cerr << "error: cannot write " << json_out << "\n";
      return 2;
    }
  } else {
    std::cout << text;
  }
  return out.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "exact certificates for a marked quadratic family and its "
      "compactified parameter surface"};
  app.require_subcommand(1);

  std::string json_out, svg_out;
  std::string window_text = "-2,3,-2,3";
  int samples = 201;
  bool corrupt_z4 = false;
  std::string x_token, y_token;

  auto* verify =
      app.add_subcommand("verify", "run the full exact certificate suite");
  verify->add_option("--json-out", json_out, "write the JSON report to PATH");
  verify
      ->add_flag("--corrupt-z4", corrupt_z4,
                 "test fixture: drop the constant term of the fourth curve")
      ->group("");  // hidden: exists so the failure path is demonstrable

  auto* locus = app.add_subcommand(
      "locus", "render the degeneracy locus and diagonal as SVG");
  locus->add_option("--json-out", json_out, "write the JSON report to PATH");
  locus->add_option("--svg-out", svg_out, "write the SVG drawing to PATH");
  locus->add_option("--window", window_text,
                    "view window xmin,xmax,ymin,ymax (rationals)");
  locus->add_option("--samples", samples, "sample count per curve (>= 2)");

  auto* blowup = app.add_subcommand(
      "blowup", "report the compactified surface: charts, divisors, "
                "intersections, limits");
  blowup->add_option("--json-out", json_out, "write the JSON report to PATH");

  auto* strata = app.add_subcommand(
      "strata", "enumerate the boundary strata and the equalizer verdicts");
  strata->add_option("--json-out", json_out, "write the JSON report to PATH");

  auto* classify = app.add_subcommand(
      "classify", "locate one parameter point relative to the degeneracy locus");
  classify->add_option("x", x_token, "x coordinate (rational or inf)")
      ->required();
  classify->add_option("y", y_token, "y coordinate (rational or inf)")
      ->required();
  classify->add_option("--json-out", json_out, "write the JSON report to PATH");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    cli::CommandOutput out;
    if (verify->parsed())
      out = cli::cmd_verify(corrupt_z4);
    else if (locus->parsed())
      out = cli::cmd_locus(cli::parse_window(window_text), samples);
    else if (blowup->parsed())
      out = cli::cmd_blowup();
    else if (strata->parsed())
      out = cli::cmd_strata();
    else if (classify->parsed())
      out = cli::cmd_classify(x_token, y_token);
    return emit(out, json_out, svg_out);
  } catch (const cli::UsageError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
}
