#include <cstdio>
#include <exception>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "decarb/error.hpp"
#include "decarb/jsonfmt.hpp"
#include "decarb/report.hpp"

namespace {

using namespace decarb;

void print_warnings(const std::vector<IngestWarning>& warnings) {
  for (const auto& w : warnings) {
    std::cerr << "warning: ";
    if (!w.model.empty() || !w.scenario.empty()) std::cerr << w.model << "/" << w.scenario << ": ";
    std::cerr << w.reason << "\n";
  }
}

IngestConfig ingest_config(const RunConfig& cfg) {
  IngestConfig ic;
  ic.region = cfg.region;
  ic.start_year = cfg.start_year;
  return ic;
}

void ensure_out_dir(const RunConfig& cfg) {
  std::error_code ec;
  std::filesystem::create_directories(cfg.output_dir, ec);
  if (ec) fail(Errc::io_error, "cannot create " + cfg.output_dir.string());
}

int cmd_ingest(const RunConfig& cfg) {
  validate(cfg);
  auto result = load_scenario_csv(cfg.input_path, ingest_config(cfg));
  print_warnings(result.warnings);
  ensure_out_dir(cfg);
  if (cfg.write_csv) write_text_file(cfg.output_dir / "scenarios.csv", table_to_csv(result.table));
  if (cfg.write_json)
    write_text_file(cfg.output_dir / "scenarios.json", table_to_json(result.table));
  std::cout << result.table.records.size() << " scenarios, " << result.warnings.size()
            << " warnings\n";
  return 0;
}

int cmd_fit(const RunConfig& cfg) {
  validate(cfg);
  auto ingested = load_scenario_csv(cfg.input_path, ingest_config(cfg));
  auto fit = fit_scenarios(ingested.table, std::move(ingested.warnings), cfg);
  print_warnings(fit.warnings);
  ensure_out_dir(cfg);
  if (cfg.write_csv) write_text_file(cfg.output_dir / "estimates.csv", estimates_to_csv(fit));
  if (cfg.write_json) write_text_file(cfg.output_dir / "estimates.json", estimates_to_json(fit));
  std::cout << fit.estimates.size() << " estimates, u_max = " << format_double(fit.u_max.value)
            << " (" << fit.u_max.key.model << "/" << fit.u_max.key.raw_name << " at "
            << fit.u_max.year << "), used " << format_double(fit.u_max_used) << "\n";
  return 0;
}

int cmd_stats(const RunConfig& cfg) {
  RunReport report = compute_report(cfg);
  print_warnings(report.fit.warnings);
  ensure_out_dir(cfg);
  if (cfg.write_json) {
    write_text_file(cfg.output_dir / "summary.json", summary_to_json(report));
    write_text_file(cfg.output_dir / "histogram.json", histogram_to_json(report.hist));
  }
  if (cfg.write_csv) {
    write_text_file(cfg.output_dir / "summary.csv", summary_to_csv(report));
    write_text_file(cfg.output_dir / "histogram.csv", histogram_to_csv(report.hist));
  }
  std::cout << "n = " << report.summary.n << ", mean = " << format_double(report.summary.mean)
            << ", median = " << format_double(report.summary.median) << ", seed = " << cfg.seed
            << "\n";
  return 0;
}

int cmd_lognormal(const RunConfig& cfg) {
  RunReport report = compute_report(cfg);
  print_warnings(report.fit.warnings);
  ensure_out_dir(cfg);
  write_text_file(cfg.output_dir / "lognormal.json", lognormal_to_json(report));
  std::cout << "mu = " << format_double(report.lognormal.mu)
            << ", s2 = " << format_double(report.lognormal.s2) << "\n";
  return 0;
}

int cmd_report(const RunConfig& cfg) {
  RunReport report = run_pipeline(cfg);
  print_warnings(report.fit.warnings);
  std::cout << report.fit.estimates.size() << " estimates written to " << cfg.output_dir.string()
            << ", u_max = " << format_double(report.fit.u_max.value) << ", used "
            << format_double(report.fit.u_max_used) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decarbonization-speed estimation for IAM scenario ensembles"};
  app.require_subcommand(1);

  RunConfig cfg;
  double u_max_flag = 0.0;
  std::string format = "json,csv";

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--input", cfg.input_path, "wide-format scenario CSV")->required();
    sub->add_option("--region", cfg.region, "REGION filter")->capture_default_str();
    sub->add_option("--start-year", cfg.start_year, "first grid year of the analysis")
        ->capture_default_str();
    sub->add_option("--time-unit-years", cfg.time_unit_years, "time unit of theta in years")
        ->capture_default_str();
    sub->add_option("--u-max", u_max_flag, "override the ensemble maximum decarbonization rate")
        ->check(CLI::PositiveNumber);
    sub->add_option("--seed", cfg.seed, "bootstrap RNG seed")
        ->envname("DECARB_SEED")
        ->capture_default_str();
    sub->add_option("--bootstrap-samples", cfg.bootstrap_samples, "bootstrap resamples (>= 1000)")
        ->capture_default_str();
    sub->add_option("--out", cfg.output_dir, "output directory")->capture_default_str();
    sub->add_option("--format", format, "comma-separated subset of {json, csv}")
        ->capture_default_str();
    sub->add_option("--threads", cfg.threads, "worker threads (0 = auto)")->capture_default_str();
  };

  auto* ingest = app.add_subcommand("ingest", "validate and normalize a scenario CSV");
  auto* fit = app.add_subcommand("fit", "estimate theta for every scenario");
  auto* stats = app.add_subcommand("stats", "ensemble summary and bootstrap intervals");
  auto* lognormal = app.add_subcommand("lognormal", "lognormal MLE fit and parametric bootstrap");
  auto* report = app.add_subcommand("report", "full pipeline, all artifacts");
  for (auto* sub : {ingest, fit, stats, lognormal, report}) add_common(sub);

  CLI11_PARSE(app, argc, argv);

  try {
    cfg.write_json = cfg.write_csv = false;
    std::string token;
    for (std::size_t i = 0; i <= format.size(); ++i) {
      if (i == format.size() || format[i] == ',') {
        if (token == "json") cfg.write_json = true;
        else if (token == "csv") cfg.write_csv = true;
        else if (!token.empty())
          decarb::fail(decarb::Errc::invalid_config, "unknown format '" + token + "'");
        token.clear();
      } else if (!std::isspace(static_cast<unsigned char>(format[i]))) {
        token += format[i];
      }
    }
    if (u_max_flag > 0.0) cfg.u_max_override = u_max_flag;

    if (ingest->parsed()) return cmd_ingest(cfg);
    if (fit->parsed()) return cmd_fit(cfg);
    if (stats->parsed()) return cmd_stats(cfg);
    if (lognormal->parsed()) return cmd_lognormal(cfg);
    return cmd_report(cfg);
  } catch (const decarb::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return decarb::exit_code(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
