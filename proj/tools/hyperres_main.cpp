#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "hyperres/errors.hpp"
#include "hyperres/jobs.hpp"

namespace {

int exit_code_for(const hyperres::AlgebraError& err) {
  switch (err.kind()) {
    case hyperres::errc::config_error:
    case hyperres::errc::budget_exceeded:
      return 2;
    default:
      return 3;
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    hyperres::fail(hyperres::errc::config_error,
                   "cannot read config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

} // namespace

int main(int argc, char** argv) {
  using namespace hyperres;

  CLI::App app{
      "graded free resolutions over hypersurface rings: Frobenius sweeps, "
      "tail checks, matrix factorizations, reference-table reproduction"};
  std::string config_path, selector, json_path;
  std::uint32_t e_max = 1;
  std::size_t max_position = 4;
  std::uint64_t seed = 0;
  bool allow_large_e = false;

  app.add_option("--config", config_path, "job config JSON file");
  app.add_option("--reproduce", selector,
                 "recompute an embedded reference table and diff it "
                 "(section0 | example44_p5 | example44_p2)");
  app.add_option("--e-max", e_max,
                 "run exponents e = 0..N (overrides the config list)");
  app.add_option("--max-position", max_position,
                 "last homological position to compute");
  app.add_option("--seed", seed, "seed for the normalization search");
  app.add_option("--json", json_path, "also write the JSON bundle to a file");
  app.add_flag("--allow-large-e", allow_large_e,
               "override the per-table feasibility budget");
  CLI11_PARSE(app, argc, argv);

  try {
    if (!selector.empty()) {
      ReproduceResult r = reproduce_reference(selector, e_max, allow_large_e);
      std::cout << render_reproduce(r);
      return r.passed ? 0 : 1;
    }
    if (config_path.empty()) {
      std::cerr << "error: one of --config or --reproduce is required\n";
      return 2;
    }
    JobConfig cfg = parse_job_config(read_file(config_path));
    if (app.count("--e-max")) {
      cfg.exponents.clear();
      for (std::uint32_t e = 0; e <= e_max; ++e) cfg.exponents.push_back(e);
    }
    if (app.count("--max-position")) cfg.max_position = max_position;
    if (app.count("--seed")) cfg.seed = seed;

    ReportBundle bundle = run(cfg);
    if (cfg.format == "json")
      std::cout << bundle_to_json(bundle) << "\n";
    else
      std::cout << render_bundle(bundle);
    if (!json_path.empty()) {
      std::ofstream out(json_path);
      if (!out) {
        std::cerr << "error: cannot write '" << json_path << "'\n";
        return 2;
      }
      out << bundle_to_json(bundle) << "\n";
    }
    for (const ExponentReport& r : bundle.rows)
      if (!r.ok) return 3;
    return bundle.all_passed ? 0 : 1;
  } catch (const AlgebraError& err) {
    std::cerr << "error: " << errc_name(err.kind()) << ": " << err.what()
              << "\n";
    return exit_code_for(err);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
