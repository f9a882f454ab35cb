#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>

#include "cruv/cli.hpp"

using namespace cruv;

namespace {

void write_json(const std::string& path, const json& j) {
  if (path == "-") {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream f(path);
  if (!f) throw Error(Err::Usage, "cannot write " + path);
  f << j.dump(2) << "\n";
}

void print_check(const CheckResult& c) {
  std::cout << std::left << std::setw(8) << status_name(c.status) << std::setw(44) << c.id << std::right
            << std::fixed << std::setprecision(1) << std::setw(10) << c.duration_ms << " ms  " << c.anchor << "\n";
  if (c.status != Status::Pass)
    for (const auto& d : c.details) std::cout << "        " << d << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification kernel for a spherical CR uniformization of the figure eight knot complement"};
  app.require_subcommand(1);
  app.fallthrough();
  unsigned max_bits = 4096;
  std::string radicands = "2,3,5,7";
  app.add_option("--max-precision-bits", max_bits, "cap on interval refinement")->check(CLI::Range(64u, 1u << 20));
  app.add_option("--radicands", radicands, "square roots available to the field");

  auto* verify = app.add_subcommand("verify", "run a check suite");
  std::string suite = "all", json_path;
  verify->add_option("--suite", suite, "all|algebra|domain|tables|meridian")->check(CLI::IsMember(suite_names()));
  verify->add_option("--json", json_path, "write the report here ('-' for stdout)");

  auto* figure = app.add_subcommand("figure", "emit figure data");
  std::string fig_id, format = "csv", out = "-", fig_json;
  int samples = 256;
  figure->add_option("--id", fig_id, "4a|4b|7|8|9a|9b")->required()->check(CLI::IsMember(figure_ids()));
  figure->add_option("--samples", samples, "samples per curve branch, at least 16");
  figure->add_option("--format", format, "csv|svg")->check(CLI::IsMember({"csv", "svg"}));
  figure->add_option("--out", out, "output file ('-' for stdout)");
  figure->add_option("--json", fig_json, "write the figure check report here");

  auto* rep = app.add_subcommand("rep", "print representation data");
  std::string rep_id = "rho2", rep_json = "-";
  rep->add_option("--id", rep_id, "rho1|rho2|rho3");
  rep->add_option("--json", rep_json, "output file ('-' for stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    auto& cfg = default_field_config();
    cfg.max_precision_bits = max_bits;
    cfg.radicands = parse_radicands(radicands);

    if (*verify) {
      Report r = run_suite(suite, cfg);
      for (const auto& c : r.checks) print_check(c);
      std::cout << "suite " << suite << ": " << r.count(Status::Pass) << " pass, " << r.count(Status::Fail) << " fail, "
                << r.count(Status::Error) << " error, " << r.count(Status::Skipped) << " skipped\n";
      if (!json_path.empty()) write_json(json_path, to_json(r));
      return exit_code(r);
    }
    if (*figure) {
      CurveSample s = sample_figure(fig_id, samples);
      std::string body = format == "svg" ? to_svg(s) : to_csv(s);
      if (out == "-") {
        std::cout << body;
      } else {
        std::ofstream f(out);
        if (!f) throw Error(Err::Usage, "cannot write " + out);
        f << body;
      }
      Report r;
      r.suite = "figure." + fig_id;
      r.checks = {s.check};
      r.config = {{"samples", samples}, {"format", format}};
      if (!fig_json.empty()) write_json(fig_json, to_json(r));
      if (out != "-") print_check(s.check);
      return exit_code(r);
    }
    if (*rep) {
      write_json(rep_json, representation_json(rep_id));
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return e.kind() == Err::Usage ? 2 : 3;
  } catch (const std::exception& e) {
    std::cerr << "internal: " << e.what() << "\n";
    return 3;
  }
  return 3;
}
