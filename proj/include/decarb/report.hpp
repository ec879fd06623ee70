#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "decarb/ensemble.hpp"
#include "decarb/ingest.hpp"
#include "decarb/lognormal.hpp"
#include "decarb/speedfit.hpp"

namespace decarb {

struct RunConfig {
  std::filesystem::path input_path;
  std::string region = "World";
  int start_year = 2010;
  double time_unit_years = 5.0;
  std::optional<double> u_max_override;
  std::uint64_t seed = 42;
  int bootstrap_samples = 5000;
  std::filesystem::path output_dir = "out";
  bool write_json = true;
  bool write_csv = true;
  int threads = 0;  // 0 = hardware concurrency
};

// bootstrap_samples >= 1000, start_year in [2005, 2050], time unit > 0.
void validate(const RunConfig& config);

struct BucketRow {
  AmbitionBucket bucket = AmbitionBucket::lt10;
  std::size_t count = 0;
  std::string ssps;    // "all", "n.a." or e.g. "SSP2/3/4/5"
  std::string rcps;    // e.g. "RCP19/26/34", "RCP60/Baseline", "n.a."
  std::string models;  // "all", "n.a." or '/'-joined names
};

std::vector<BucketRow> bucket_counts(const std::vector<ThetaEstimate>& estimates);

struct ScatterDatum {
  int ssp_ordinal = 0;   // 1..5
  int rcp_ordinal = 0;   // 1..6 = 19, 26, 34, 45, 60, Baseline
  double offset = 0.0;   // in [-0.3, 0.3]
  double theta = 0.0;
  std::string model;
};

// Per SSPxRCP cell the k-th model (alphabetical, 0-based) of m occupants
// gets offset (k - (m-1)/2) * 0.1; output sorted by (ssp, rcp, model).
std::vector<ScatterDatum> scatter_grid(const std::vector<ThetaEstimate>& estimates);

struct FitOutcome {
  ScenarioTable table;
  std::vector<IngestWarning> warnings;   // ingest drops + per-scenario fit drops
  UMax u_max;                            // empirical, over usable scenarios
  double u_max_used = 0;                 // override or empirical
  std::vector<ThetaEstimate> estimates;  // sorted by (model, scenario)
};

FitOutcome fit_scenarios(const ScenarioTable& table, std::vector<IngestWarning> warnings,
                         const RunConfig& config);

struct RunReport {
  FitOutcome fit;
  EnsembleSummary summary;
  HalvingYears summary_years;
  std::vector<BootstrapResult> bootstrap;  // mean, median, p25, p75
  std::vector<HalvingTableRow> halving_table;
  Histogram hist;
  LognormalFit lognormal;
  LognormalStats lognormal_statistics;
  std::vector<BootstrapResult> lognormal_bootstrap;
  std::vector<HalvingTableRow> lognormal_halving_table;
  std::vector<BucketRow> buckets;
  std::vector<ScatterDatum> scatter;
};

RunReport compute_report(const RunConfig& config);

// Writes estimates.csv/json, summary.json, histogram.json, scatter.json,
// lognormal.json, buckets.csv into config.output_dir (per enabled formats).
void write_report(const RunReport& report, const RunConfig& config);

// compute_report + write_report.
RunReport run_pipeline(const RunConfig& config);

// Individual artifact writers (also used by the CLI subcommands).
std::string estimates_to_csv(const FitOutcome& fit);
std::string estimates_to_json(const FitOutcome& fit);
std::string summary_to_json(const RunReport& report);
std::string summary_to_csv(const RunReport& report);
std::string histogram_to_json(const Histogram& hist);
std::string histogram_to_csv(const Histogram& hist);
std::string scatter_to_json(const std::vector<ScatterDatum>& points);
std::string lognormal_to_json(const RunReport& report);
std::string buckets_to_csv(const std::vector<BucketRow>& rows);

}  // namespace decarb
