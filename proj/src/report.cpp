#include "decarb/report.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <set>
#include <string>

#include "decarb/error.hpp"
#include "decarb/jsonfmt.hpp"
#include "decarb/parallel.hpp"

namespace decarb {

namespace {

using nlohmann::json;

const Statistic kReportStatistics[] = {Statistic::mean, Statistic::median, Statistic::p25,
                                       Statistic::p75};

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += sep;
    out += parts[i];
  }
  return out;
}

json bootstrap_to_json(const BootstrapResult& b) {
  json entry;
  entry["statistic"] = std::string(statistic_name(b.statistic));
  entry["point"] = b.point;
  entry["lo"] = b.lo;
  entry["hi"] = b.hi;
  entry["resample_mean"] = b.resample_mean;
  entry["B"] = b.n_resamples;
  entry["seed"] = b.seed;
  return entry;
}

json halving_rows_to_json(const std::vector<HalvingTableRow>& rows) {
  json arr = json::array();
  for (const auto& row : rows) {
    json entry;
    entry["statistic"] = std::string(statistic_name(row.statistic));
    entry["years"] = row.years;
    entry["years_lo"] = row.years_lo;
    entry["years_hi"] = row.years_hi;
    arr.push_back(std::move(entry));
  }
  return arr;
}

json u_max_to_json(const FitOutcome& fit) {
  json u;
  u["value"] = fit.u_max.value;
  u["model"] = fit.u_max.key.model;
  u["scenario"] = fit.u_max.key.raw_name;
  u["year"] = fit.u_max.year;
  u["used"] = fit.u_max_used;
  return u;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

void validate(const RunConfig& config) {
  if (config.bootstrap_samples < 1000)
    fail(Errc::invalid_config, "bootstrap samples must be >= 1000");
  if (config.start_year < 2005 || config.start_year > 2050)
    fail(Errc::invalid_config, "start year must lie in [2005, 2050]");
  if (!(config.time_unit_years > 0.0))
    fail(Errc::invalid_config, "time unit must be positive");
  if (config.u_max_override && !(*config.u_max_override > 0.0))
    fail(Errc::invalid_config, "u_max override must be positive");
  if (!config.write_json && !config.write_csv)
    fail(Errc::invalid_config, "at least one output format required");
}

std::vector<BucketRow> bucket_counts(const std::vector<ThetaEstimate>& estimates) {
  struct Group {
    std::size_t count = 0;
    std::set<Ssp> ssps;
    std::set<Rcp> rcps;
    std::set<std::string> models;
  };
  Group groups[kAmbitionBucketCount];
  std::set<std::string> model_universe;
  for (const auto& est : estimates) {
    auto& g = groups[static_cast<int>(ambition_bucket(est.halving_years))];
    ++g.count;
    g.ssps.insert(est.key.ssp);
    g.rcps.insert(est.key.rcp);
    g.models.insert(est.key.model);
    model_universe.insert(est.key.model);
  }

  std::vector<BucketRow> rows;
  rows.reserve(kAmbitionBucketCount);
  for (int b = 0; b < kAmbitionBucketCount; ++b) {
    const Group& g = groups[b];
    BucketRow row;
    row.bucket = static_cast<AmbitionBucket>(b);
    row.count = g.count;
    if (g.count == 0) {
      row.ssps = row.rcps = row.models = "n.a.";
      rows.push_back(std::move(row));
      continue;
    }
    if (g.ssps.size() == 5) {
      row.ssps = "all";
    } else {
      std::string s = "SSP";
      bool first = true;
      for (Ssp ssp : g.ssps) {
        if (!first) s += '/';
        s += std::to_string(ordinal(ssp));
        first = false;
      }
      row.ssps = s;
    }
    {
      std::vector<std::string> numeric;
      bool baseline = false;
      for (Rcp rcp : g.rcps) {
        if (rcp == Rcp::baseline) baseline = true;
        else numeric.push_back(std::string(to_string(rcp)).substr(3));
      }
      std::string s = numeric.empty() ? "" : "RCP" + join(numeric, "/");
      if (baseline) s += s.empty() ? "Baseline" : "/Baseline";
      row.rcps = s;
    }
    if (g.models == model_universe) {
      row.models = "all";
    } else {
      row.models = join(std::vector<std::string>(g.models.begin(), g.models.end()), "/");
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<ScatterDatum> scatter_grid(const std::vector<ThetaEstimate>& estimates) {
  std::map<std::pair<int, int>, std::vector<std::pair<std::string, double>>> cells;
  for (const auto& est : estimates)
    cells[{ordinal(est.key.ssp), ordinal(est.key.rcp)}].emplace_back(est.key.model, est.theta);

  std::vector<ScatterDatum> points;
  points.reserve(estimates.size());
  for (auto& [cell, members] : cells) {
    std::sort(members.begin(), members.end());
    const double m = double(members.size());
    for (std::size_t k = 0; k < members.size(); ++k) {
      ScatterDatum d;
      d.ssp_ordinal = cell.first;
      d.rcp_ordinal = cell.second;
      d.offset = (double(k) - (m - 1.0) / 2.0) * 0.1;
      d.model = members[k].first;
      d.theta = members[k].second;
      points.push_back(std::move(d));
    }
  }
  return points;
}

FitOutcome fit_scenarios(const ScenarioTable& table, std::vector<IngestWarning> warnings,
                         const RunConfig& config) {
  FitConfig fit_config;
  fit_config.time_unit_years = config.time_unit_years;
  fit_config.start_year = config.start_year;

  FitOutcome outcome;
  outcome.table = table;
  outcome.warnings = std::move(warnings);

  std::vector<ScenarioRecord> usable;
  std::vector<RatePath> rates;
  for (const auto& record : table.records) {
    try {
      ScenarioRecord aligned =
          align_to_start_year(record, config.start_year, fit_config.min_valid_points);
      rates.push_back(decarb_rate(carbon_intensity(aligned)));
      usable.push_back(std::move(aligned));
    } catch (const Error& e) {
      outcome.warnings.push_back({record.key.model, record.key.raw_name, e.what()});
    }
  }

  outcome.u_max = global_u_max(rates);
  outcome.u_max_used = config.u_max_override.value_or(outcome.u_max.value);

  std::vector<std::optional<ThetaEstimate>> fitted(usable.size());
  std::vector<std::optional<IngestWarning>> failures(usable.size());
  parallel_for(usable.size(), config.threads, [&](std::size_t i) {
    try {
      fitted[i] = fit_theta(usable[i], outcome.u_max_used, fit_config);
    } catch (const Error& e) {
      failures[i] = IngestWarning{usable[i].key.model, usable[i].key.raw_name, e.what()};
    }
  });
  for (std::size_t i = 0; i < usable.size(); ++i) {
    if (fitted[i]) outcome.estimates.push_back(*fitted[i]);
    if (failures[i]) outcome.warnings.push_back(*failures[i]);
  }

  std::sort(outcome.warnings.begin(), outcome.warnings.end(),
            [](const IngestWarning& a, const IngestWarning& b) {
              return std::tie(a.model, a.scenario, a.reason) <
                     std::tie(b.model, b.scenario, b.reason);
            });
  return outcome;
}

RunReport compute_report(const RunConfig& config) {
  validate(config);
  IngestConfig ingest_config;
  ingest_config.region = config.region;
  ingest_config.start_year = config.start_year;
  auto ingested = load_scenario_csv(config.input_path, ingest_config);

  RunReport report;
  report.fit = fit_scenarios(ingested.table, std::move(ingested.warnings), config);

  std::vector<double> thetas;
  thetas.reserve(report.fit.estimates.size());
  for (const auto& est : report.fit.estimates) thetas.push_back(est.theta);

  report.summary = summary_stats(thetas);
  report.summary_years =
      halving_translation(report.summary, report.fit.u_max_used, config.time_unit_years);
  for (Statistic stat : kReportStatistics)
    report.bootstrap.push_back(
        bootstrap_ci(thetas, stat, config.bootstrap_samples, config.seed, config.threads));
  report.halving_table = halving_time_table(report.summary, report.bootstrap,
                                            report.fit.u_max_used, config.time_unit_years);
  report.hist = histogram(thetas, 10);

  report.lognormal = lognormal_mle(thetas);
  report.lognormal_statistics = lognormal_stats(report.lognormal);
  for (Statistic stat : kReportStatistics)
    report.lognormal_bootstrap.push_back(parametric_bootstrap(report.lognormal, thetas.size(),
                                                              config.bootstrap_samples, stat,
                                                              config.seed, config.threads));
  {
    EnsembleSummary closed;
    closed.n = report.lognormal.n;
    closed.mean = report.lognormal_statistics.mean;
    closed.median = report.lognormal_statistics.median;
    closed.p25 = report.lognormal_statistics.p25;
    closed.p75 = report.lognormal_statistics.p75;
    closed.std_dev = std::sqrt(report.lognormal_statistics.variance);
    report.lognormal_halving_table = halving_time_table(
        closed, report.lognormal_bootstrap, report.fit.u_max_used, config.time_unit_years);
  }

  report.buckets = bucket_counts(report.fit.estimates);
  report.scatter = scatter_grid(report.fit.estimates);
  return report;
}

std::string estimates_to_csv(const FitOutcome& fit) {
  std::string out = "model,scenario,ssp,rcp,theta,objective,halving_years,bucket,converged\n";
  for (const auto& est : fit.estimates) {
    out += csv_escape(est.key.model) + ',' + csv_escape(est.key.raw_name) + ',' +
           std::string(to_string(est.key.ssp)) + ',' + std::string(to_string(est.key.rcp)) + ',' +
           format_double(est.theta) + ',' + format_double(est.objective) + ',' +
           format_double(est.halving_years) + ',' +
           csv_escape(std::string(bucket_label(ambition_bucket(est.halving_years)))) + ',' +
           (est.converged ? "true" : "false") + '\n';
  }
  return out;
}

std::string estimates_to_json(const FitOutcome& fit) {
  json rows = json::array();
  for (const auto& est : fit.estimates) {
    json row;
    row["model"] = est.key.model;
    row["scenario"] = est.key.raw_name;
    row["ssp"] = std::string(to_string(est.key.ssp));
    row["rcp"] = std::string(to_string(est.key.rcp));
    row["theta"] = est.theta;
    row["objective"] = est.objective;
    row["halving_years"] = est.halving_years;
    row["bucket"] = std::string(bucket_label(ambition_bucket(est.halving_years)));
    row["converged"] = est.converged;
    rows.push_back(std::move(row));
  }
  json doc;
  doc["estimates"] = std::move(rows);
  doc["u_max"] = u_max_to_json(fit);
  return dump_json(doc);
}

std::string summary_to_json(const RunReport& report) {
  json theta;
  theta["mean"] = report.summary.mean;
  theta["median"] = report.summary.median;
  theta["std"] = report.summary.std_dev;
  theta["min"] = report.summary.min;
  theta["max"] = report.summary.max;
  theta["p25"] = report.summary.p25;
  theta["p75"] = report.summary.p75;

  json years;
  years["mean"] = report.summary_years.mean;
  years["median"] = report.summary_years.median;
  years["std"] = report.summary_years.std_dev;
  years["min"] = report.summary_years.min;
  years["max"] = report.summary_years.max;
  years["p25"] = report.summary_years.p25;
  years["p75"] = report.summary_years.p75;

  json bootstrap = json::array();
  for (const auto& b : report.bootstrap) bootstrap.push_back(bootstrap_to_json(b));

  json warnings = json::array();
  for (const auto& w : report.fit.warnings)
    warnings.push_back(json{{"model", w.model}, {"scenario", w.scenario}, {"reason", w.reason}});

  json doc;
  doc["n"] = report.summary.n;
  doc["summary"] = json{{"theta", std::move(theta)}, {"halving_years", std::move(years)}};
  doc["bootstrap"] = std::move(bootstrap);
  doc["halving_time_table"] = halving_rows_to_json(report.halving_table);
  doc["u_max"] = u_max_to_json(report.fit);
  doc["warnings"] = std::move(warnings);
  return dump_json(doc);
}

std::string summary_to_csv(const RunReport& report) {
  std::string out = "statistic,point,lo,hi,resample_mean,years,years_lo,years_hi\n";
  for (std::size_t i = 0; i < report.bootstrap.size(); ++i) {
    const auto& b = report.bootstrap[i];
    const auto& h = report.halving_table[i];
    out += std::string(statistic_name(b.statistic)) + ',' + format_double(b.point) + ',' +
           format_double(b.lo) + ',' + format_double(b.hi) + ',' +
           format_double(b.resample_mean) + ',' + format_double(h.years) + ',' +
           format_double(h.years_lo) + ',' + format_double(h.years_hi) + '\n';
  }
  return out;
}

std::string histogram_to_json(const Histogram& hist) {
  json doc;
  doc["edges"] = hist.edges;
  doc["counts"] = hist.counts;
  return dump_json(doc);
}

std::string histogram_to_csv(const Histogram& hist) {
  std::string out = "bin_lo,bin_hi,count\n";
  for (std::size_t i = 0; i < hist.counts.size(); ++i)
    out += format_double(hist.edges[i]) + ',' + format_double(hist.edges[i + 1]) + ',' +
           std::to_string(hist.counts[i]) + '\n';
  return out;
}

std::string scatter_to_json(const std::vector<ScatterDatum>& points) {
  json arr = json::array();
  for (const auto& p : points) {
    json entry;
    entry["ssp_ordinal"] = p.ssp_ordinal;
    entry["rcp_ordinal"] = p.rcp_ordinal;
    entry["offset"] = p.offset;
    entry["theta"] = p.theta;
    entry["model"] = p.model;
    arr.push_back(std::move(entry));
  }
  return dump_json(json{{"points", std::move(arr)}});
}

std::string lognormal_to_json(const RunReport& report) {
  json doc;
  doc["fit"] = json{{"mu", report.lognormal.mu},
                    {"s2", report.lognormal.s2},
                    {"n", report.lognormal.n}};
  doc["stats"] = json{{"mean", report.lognormal_statistics.mean},
                      {"median", report.lognormal_statistics.median},
                      {"p25", report.lognormal_statistics.p25},
                      {"p75", report.lognormal_statistics.p75},
                      {"variance", report.lognormal_statistics.variance}};
  json bootstrap = json::array();
  for (const auto& b : report.lognormal_bootstrap) bootstrap.push_back(bootstrap_to_json(b));
  doc["bootstrap"] = std::move(bootstrap);
  doc["halving_time_table"] = halving_rows_to_json(report.lognormal_halving_table);

  // Fig-8-style density curve, log-spaced over mu +- 3s.
  json xs = json::array();
  json fs = json::array();
  if (report.lognormal.s2 > 0.0) {
    const double s = std::sqrt(report.lognormal.s2);
    const double lo = report.lognormal.mu - 3.0 * s;
    const double hi = report.lognormal.mu + 3.0 * s;
    constexpr int kPoints = 201;
    for (int i = 0; i < kPoints; ++i) {
      const double x = std::exp(lo + (hi - lo) * double(i) / double(kPoints - 1));
      xs.push_back(x);
      fs.push_back(lognormal_pdf(x, report.lognormal));
    }
  }
  doc["density"] = json{{"x", std::move(xs)}, {"f", std::move(fs)}};
  return dump_json(doc);
}

std::string buckets_to_csv(const std::vector<BucketRow>& rows) {
  std::string out = "bucket,count,ssps,rcps,models\n";
  for (const auto& row : rows) {
    out += csv_escape(std::string(bucket_label(row.bucket))) + ',' + std::to_string(row.count) +
           ',' + csv_escape(row.ssps) + ',' + csv_escape(row.rcps) + ',' + csv_escape(row.models) +
           '\n';
  }
  return out;
}

void write_report(const RunReport& report, const RunConfig& config) {
  std::error_code ec;
  std::filesystem::create_directories(config.output_dir, ec);
  if (ec) fail(Errc::io_error, "cannot create " + config.output_dir.string());

  const auto& dir = config.output_dir;
  if (config.write_json) {
    write_text_file(dir / "estimates.json", estimates_to_json(report.fit));
    write_text_file(dir / "summary.json", summary_to_json(report));
    write_text_file(dir / "histogram.json", histogram_to_json(report.hist));
    write_text_file(dir / "scatter.json", scatter_to_json(report.scatter));
    write_text_file(dir / "lognormal.json", lognormal_to_json(report));
  }
  if (config.write_csv) {
    write_text_file(dir / "estimates.csv", estimates_to_csv(report.fit));
    write_text_file(dir / "buckets.csv", buckets_to_csv(report.buckets));
  }
}

RunReport run_pipeline(const RunConfig& config) {
  RunReport report = compute_report(config);
  write_report(report, config);
  return report;
}

}  // namespace decarb
