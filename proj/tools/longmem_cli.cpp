// longmem: generate, estimate, forecast, plot, data and bench subcommands.
// JSON reports go to stdout, files to disk. Exit codes: 0 ok, 2 invalid
// arguments or parameters, 3 numerical failure, 4 I/O or missing data.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "longmem/longmem.hpp"

using json = nlohmann::json;
using namespace longmem;

namespace {

constexpr int exit_validation = 2;
constexpr int exit_numerical = 3;
constexpr int exit_io = 4;

struct InputOptions {
  std::string data;
  std::string input;
  std::string column;
};

void add_input_options(CLI::App *cmd, InputOptions &in) {
  auto *d = cmd->add_option("--data", in.data, "builtin dataset")
                ->check(CLI::IsMember({"nile", "nhtemp"}));
  auto *i = cmd->add_option("--input", in.input, "CSV file with a header row");
  d->excludes(i);
  cmd->add_option("--column", in.column, "CSV column (default: last column)");
}

Series load_input(const InputOptions &in) {
  if (!in.data.empty())
    return builtin_series(in.data);
  if (in.input.empty())
    throw domain_error("no input: pass --data or --input");
  if (!in.column.empty())
    return load_csv(in.input, in.column);
  const auto table = load_csv_table(in.input);
  if (table.rows() == 0)
    throw empty_request_error(in.input + ": no data rows");
  return table.series(table.column_order.back());
}

json input_json(const InputOptions &in, const Series &x) {
  json j{{"length", x.size()}};
  if (!in.data.empty())
    j["data"] = in.data;
  else
    j["input"] = in.input;
  if (x.label)
    j["label"] = *x.label;
  return j;
}

json estimate_json(const MemoryEstimate &e) {
  json j{{"method", to_string(e.method)},
         {"d_hat", e.d_hat},
         {"bandwidth_m", e.bandwidth_m},
         {"br_order", e.br_order}};
  if (e.asy_variance) {
    j["asy_variance"] = *e.asy_variance;
    j["std_error"] = e.std_error();
  }
  if (e.method == EstimateMethod::lw || e.method == EstimateMethod::elw) {
    j["boundary_hit"] = e.aux.boundary_hit;
    j["objective"] = e.aux.objective;
  }
  return j;
}

json scaling_json(const ScalingRegression &r) {
  return {{"method", r.method == ScalingMethod::log_variance ? "log_var" : "rs"},
          {"d_hat", r.implied_d},
          {"slope", r.slope},
          {"intercept", r.intercept},
          {"points", r.log_sizes.size()}};
}

json fi_json(const FIParams &p) {
  return {{"d", p.d}, {"sigma", p.sigma}, {"boundary_hit", p.boundary_hit}};
}

json csa_json(const CSAParams &p) {
  return {{"p", p.p},
          {"q", p.q},
          {"sigma", p.sigma},
          {"marginal_scale", p.marginal_scale},
          {"implied_d", p.implied_d()},
          {"p_at_lower", p.p_at_lower},
          {"boundary_hit", p.boundary_hit()},
          {"converged", p.converged}};
}

json har_json(const HARModel &m) {
  return {{"lags", m.lags}, {"coefficients", m.coefficients}, {"sigma", m.sigma},
          {"rows", m.rows}};
}

void emit_plot(const PlotSpec &spec, const std::string &svg, const std::string &dump,
               json &files) {
  if (!svg.empty()) {
    write_text(svg, render_svg(spec));
    files["svg"] = svg;
  }
  if (!dump.empty()) {
    write_text(dump, dump_csv(spec));
    files["dump"] = dump;
  }
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Long-memory time series: simulation, estimation, forecasting"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(version));

  std::string command_line;
  for (int i = 0; i < argc; ++i)
    command_line += (i ? " " : "") + std::string(argv[i]);

  json params = json::object();
  json results = json::object();
  std::optional<std::uint64_t> seed_used;

  // generate ---------------------------------------------------------------
  auto *gen = app.add_subcommand("generate", "simulate a long-memory series");
  std::string gen_kind;
  std::size_t gen_n = 1000, gen_N = 1000;
  double gen_d = 0.3, gen_p = 1.3, gen_q = 1.5, gen_sigma = 1.0;
  std::uint64_t gen_seed = 1234;
  std::string gen_out;
  gen->add_option("kind", gen_kind, "generator")
      ->required()
      ->check(CLI::IsMember({"fi", "csa", "csa-finite", "sds"}));
  gen->add_option("--n", gen_n, "series length")->check(CLI::PositiveNumber);
  gen->add_option("--d", gen_d, "memory parameter (fi, sds)");
  gen->add_option("--p", gen_p, "aggregation parameter p (csa)");
  gen->add_option("--q", gen_q, "aggregation parameter q (csa)");
  gen->add_option("--N", gen_N, "number of aggregated AR(1) paths (csa-finite)");
  gen->add_option("--sigma", gen_sigma, "innovation standard deviation");
  gen->add_option("--seed", gen_seed, "random seed");
  gen->add_option("--out", gen_out, "CSV output path (column x)");

  // estimate ---------------------------------------------------------------
  auto *est = app.add_subcommand("estimate", "estimate the memory parameter or a model");
  std::string est_method;
  InputOptions est_in;
  std::size_t est_m = 0, est_br = 0, est_k = 300;
  double est_bexp = 0.8;
  std::vector<std::size_t> est_lags{1, 5, 22};
  est->add_option("method", est_method, "estimator")
      ->required()
      ->check(CLI::IsMember({"gph", "lw", "elw", "fi-mle", "csa-mle", "har", "logvar", "rs"}));
  add_input_options(est, est_in);
  est->add_option("--m", est_m, "bandwidth (gph/lw/elw) or block-size count (logvar)");
  est->add_option("--bandwidth-exp", est_bexp, "bandwidth exponent when --m is not given");
  est->add_option("--br", est_br, "bias-reduction order for gph");
  est->add_option("--lags", est_lags, "HAR horizons, comma separated")->delimiter(',');
  est->add_option("--k", est_k, "window-size count for rs");

  // forecast ---------------------------------------------------------------
  auto *fc = app.add_subcommand("forecast", "h-step forecasts with 95% bands");
  // --h is the horizon, so help is long-form only here.
  fc->set_help_flag("--help", "Print this help message and exit");
  std::string fc_model;
  InputOptions fc_in;
  std::size_t fc_h = 0, fc_tail = 100;
  std::optional<double> fc_d, fc_sigma, fc_p, fc_q;
  bool fc_fit = false, fc_demean = false;
  std::vector<std::size_t> fc_lags{1, 5, 22};
  std::string fc_plot, fc_dump;
  fc->add_option("model", fc_model, "model")->required()->check(CLI::IsMember({"fi", "csa", "har"}));
  add_input_options(fc, fc_in);
  fc->add_option("--h", fc_h, "horizon")->required()->check(CLI::PositiveNumber);
  fc->add_option("--d", fc_d, "FI memory parameter");
  fc->add_option("--sigma", fc_sigma, "innovation standard deviation");
  fc->add_option("--p", fc_p, "aggregation parameter p");
  fc->add_option("--q", fc_q, "aggregation parameter q");
  fc->add_flag("--fit", fc_fit, "estimate the model parameters first");
  fc->add_flag("--demean", fc_demean, "forecast the demeaned series (fi, csa)");
  fc->add_option("--lags", fc_lags, "HAR horizons, comma separated")->delimiter(',');
  fc->add_option("--plot", fc_plot, "SVG output path");
  fc->add_option("--dump", fc_dump, "plot data CSV output path");
  fc->add_option("--tail", fc_tail, "observations shown before the forecast");

  // plot -------------------------------------------------------------------
  auto *pl = app.add_subcommand("plot", "diagnostic plots as SVG");
  std::string pl_kind, pl_out, pl_dump;
  InputOptions pl_in;
  std::size_t pl_lags = 0, pl_m = 0, pl_k = 300;
  bool pl_slopes = false;
  pl->add_option("kind", pl_kind, "plot kind; replay re-renders a --dump file given as --input")
      ->required()
      ->check(CLI::IsMember({"acf", "periodogram", "logvar", "rs", "lm", "replay"}));
  add_input_options(pl, pl_in);
  pl->add_option("--out", pl_out, "SVG output path");
  pl->add_option("--dump", pl_dump, "plot data CSV output path");
  pl->add_option("--lags", pl_lags, "ACF lags (default min(T-1, 50))");
  pl->add_option("--m", pl_m, "log-variance block-size count (default min(T/2, 300))");
  pl->add_option("--k", pl_k, "R/S window-size count");
  pl->add_flag("--slopes", pl_slopes, "draw fitted and reference slopes");

  // data -------------------------------------------------------------------
  auto *dt = app.add_subcommand("data", "inspect or export a builtin dataset");
  std::string dt_name, dt_out;
  dt->add_option("name", dt_name, "dataset")->required()->check(CLI::IsMember({"nile", "nhtemp"}));
  dt->add_option("--out", dt_out, "write the dataset as CSV");

  // bench ------------------------------------------------------------------
  auto *bn = app.add_subcommand("bench", "relative timing suites");
  std::string bn_suite;
  std::size_t bn_n = 10000, bn_reps = 5;
  std::uint64_t bn_seed = 1234;
  bn->add_option("suite", bn_suite, "suite")->required()->check(CLI::IsMember(bench_suites()));
  bn->add_option("--n", bn_n, "sample size");
  bn->add_option("--reps", bn_reps, "timed repetitions")->check(CLI::PositiveNumber);
  bn->add_option("--seed", bn_seed, "random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : exit_validation;
  }

  const auto t0 = std::chrono::steady_clock::now();
  std::string sub;
  try {
    if (*gen) {
      sub = "generate";
      seed_used = gen_seed;
      const RngSpec rng{gen_seed};
      Series s;
      if (gen_kind == "fi")
        s = fi_gen(gen_n, gen_d, gen_sigma, rng);
      else if (gen_kind == "csa")
        s = csa_gen(gen_n, gen_p, gen_q, gen_sigma, rng);
      else if (gen_kind == "csa-finite")
        s = csa_gen_finite(gen_n, gen_N, gen_p, gen_q, gen_sigma, rng);
      else
        s = sds_gen(gen_n, gen_d, gen_sigma, rng);
      params = {{"kind", gen_kind}, {"n", gen_n}, {"sigma", gen_sigma}};
      if (gen_kind == "fi" || gen_kind == "sds")
        params["d"] = gen_d;
      else
        params.update({{"p", gen_p}, {"q", gen_q}});
      if (gen_kind == "csa-finite")
        params["N"] = gen_N;
      results = {{"length", s.size()}, {"mean", detail::mean(s.values)}};
      if (gen_out.empty()) {
        results["values"] = s.values;
      } else {
        write_csv(gen_out, {"x"}, {std::span<const double>(s.values)});
        results["out"] = gen_out;
      }
    } else if (*est) {
      sub = "estimate";
      const auto x = load_input(est_in);
      params = {{"method", est_method}, {"source", input_json(est_in, x)}};
      if (est_method == "gph") {
        params.update({{"m", est_m}, {"bandwidth_exp", est_bexp}, {"br", est_br}});
        results = estimate_json(gph_est(x, {est_m, est_bexp, est_br}));
      } else if (est_method == "lw") {
        params.update({{"m", est_m}, {"bandwidth_exp", est_bexp}});
        results = estimate_json(whittle_est(x, {est_m, est_bexp}));
      } else if (est_method == "elw") {
        params.update({{"m", est_m}, {"bandwidth_exp", est_bexp}});
        results = estimate_json(exact_whittle_est(x, {est_m, est_bexp}));
      } else if (est_method == "fi-mle") {
        results = fi_json(fi_mle_est(x));
      } else if (est_method == "csa-mle") {
        results = csa_json(csa_mle_est(x));
      } else if (est_method == "har") {
        params["lags"] = est_lags;
        results = har_json(har_est(x, est_lags));
      } else if (est_method == "logvar") {
        const std::size_t m = est_m ? est_m : default_logvar_m(x.size());
        params["m"] = m;
        results = scaling_json(log_variance_est(x, m));
      } else {
        params["k"] = est_k;
        results = scaling_json(rescaled_range_est(x, est_k));
      }
    } else if (*fc) {
      sub = "forecast";
      const auto x = load_input(fc_in);
      params = {{"model", fc_model}, {"h", fc_h}, {"fit", fc_fit}, {"demean", fc_demean},
                {"source", input_json(fc_in, x)}};
      ForecastOptions opt;
      if (fc_demean && fc_model != "har")
        opt.mean = detail::mean(x.values);
      Forecast f;
      if (fc_model == "fi") {
        if (fc_fit) {
          const auto p = fi_mle_est(x);
          fc_d = p.d;
          fc_sigma = p.sigma;
          results["fit"] = fi_json(p);
        }
        if (!fc_d || !fc_sigma)
          throw domain_error("forecast fi needs --d and --sigma, or --fit");
        f = fi_forecast(x, fc_h, *fc_d, *fc_sigma, opt);
        params.update({{"d", *fc_d}, {"sigma", *fc_sigma}});
      } else if (fc_model == "csa") {
        if (fc_fit) {
          const auto p = csa_mle_est(x);
          fc_p = p.p;
          fc_q = p.q;
          fc_sigma = p.sigma;
          results["fit"] = csa_json(p);
        }
        if (!fc_p || !fc_q || !fc_sigma)
          throw domain_error("forecast csa needs --p, --q and --sigma, or --fit");
        f = csa_forecast(x, fc_h, *fc_p, *fc_q, *fc_sigma, opt);
        params.update({{"p", *fc_p}, {"q", *fc_q}, {"sigma", *fc_sigma}});
      } else {
        f = har_forecast(x, fc_h, fc_lags);
        params["lags"] = fc_lags;
        results["fit"] = har_json(std::get<HARModel>(f.model));
      }
      results["horizon"] = f.horizon;
      results["history_length"] = f.history_length;
      results["point"] = f.point;
      results["lower"] = f.lower;
      results["upper"] = f.upper;
      if (f.mean)
        results["mean"] = *f.mean;
      json files = json::object();
      if (!fc_plot.empty() || !fc_dump.empty())
        emit_plot(forecast_plot(x, f, fc_tail, "Forecast (" + fc_model + ")"), fc_plot, fc_dump,
                  files);
      if (!files.empty())
        results["files"] = files;
    } else if (*pl) {
      sub = "plot";
      if (pl_out.empty() && pl_dump.empty())
        throw domain_error("plot needs --out and/or --dump");
      PlotSpec spec;
      params = {{"kind", pl_kind}};
      if (pl_kind == "replay") {
        if (pl_in.input.empty())
          throw domain_error("plot replay needs --input with a dump file");
        spec = load_plot_csv(detail::read_file(pl_in.input));
        params["input"] = pl_in.input;
      } else {
        const auto x = load_input(pl_in);
        params["source"] = input_json(pl_in, x);
        const std::size_t T = x.size();
        if (pl_kind == "acf") {
          const std::size_t K = pl_lags ? pl_lags : default_acf_lags(T);
          params["lags"] = K;
          spec = single_panel(acf_panel(x, K));
        } else if (pl_kind == "periodogram") {
          spec = single_panel(periodogram_panel(x));
        } else if (pl_kind == "logvar") {
          const std::size_t m = pl_m ? pl_m : default_logvar_m(T);
          params["m"] = m;
          spec = single_panel(logvar_panel(x, m, pl_slopes));
        } else if (pl_kind == "rs") {
          params["k"] = pl_k;
          spec = single_panel(rs_panel(x, pl_k, pl_slopes));
        } else {
          spec = lm_plot(x, pl_in.data.empty() ? "Long-memory diagnostics"
                                               : "Long-memory diagnostics: " + pl_in.data);
        }
      }
      json files = json::object();
      emit_plot(spec, pl_out, pl_dump, files);
      std::size_t nseries = 0;
      for (const auto &p : spec.panels)
        nseries += p.series.size();
      results = {{"panels", spec.panels.size()}, {"series", nseries}, {"files", files}};
    } else if (*dt) {
      sub = "data";
      params = {{"name", dt_name}};
      const auto ds = dt_name == "nile" ? nile_data() : nhtemp_data();
      json cols = json::object();
      for (const auto &c : ds.column_order) {
        const auto &v = ds.column(c);
        cols[c] = {{"mean", detail::mean(v)},
                   {"min", *std::min_element(v.begin(), v.end())},
                   {"max", *std::max_element(v.begin(), v.end())}};
      }
      results = {{"rows", ds.rows()},
                 {"columns", cols},
                 {"source_note", ds.source_note},
                 {"sha256", sha256_hex(detail::read_file(data_dir() /
                                                         (dt_name == "nile" ? "NileMin.csv"
                                                                            : "nhtemp.csv")))}};
      if (!dt_out.empty()) {
        std::vector<std::span<const double>> spans;
        for (const auto &c : ds.column_order)
          spans.emplace_back(ds.column(c));
        write_csv(dt_out, ds.column_order, spans);
        results["out"] = dt_out;
      }
    } else if (*bn) {
      sub = "bench";
      seed_used = bn_seed;
      params = {{"suite", bn_suite}, {"n", bn_n}, {"reps", bn_reps}};
      const auto rep = run_bench_suite(bn_suite, bn_n, bn_reps, bn_seed);
      json rows = json::array();
      for (const auto &r : rep.results)
        rows.push_back({{"name", r.name},
                        {"sample_size", r.sample_size},
                        {"reps", r.reps},
                        {"mean_ns", r.mean_ns},
                        {"median_ns", r.median_ns},
                        {"min_ns", r.min_ns}});
      json checks = json::array();
      bool all = true;
      for (const auto &c : rep.checks) {
        checks.push_back({{"name", c.name}, {"passed", c.passed}, {"value", c.value}});
        all = all && c.passed;
      }
      results = {{"timings", rows}, {"checks", checks}, {"all_passed", all}};
    }
  } catch (const io_error &e) {
    std::cerr << "longmem " << sub << ": " << e.what() << "\n";
    return exit_io;
  } catch (const numerical_error &e) {
    std::cerr << "longmem " << sub << ": " << e.what() << "\n";
    return exit_numerical;
  } catch (const longmem::error &e) {
    std::cerr << "longmem " << sub << ": " << e.what() << "\n";
    return exit_validation;
  } catch (const std::exception &e) {
    std::cerr << "longmem " << sub << ": unexpected failure: " << e.what() << "\n";
    return exit_numerical;
  }
  const auto t1 = std::chrono::steady_clock::now();

  json report{{"command", command_line},
              {"subcommand", sub},
              {"parameters", params},
              {"results", results},
              {"timings", {{"elapsed_ms", std::chrono::duration<double, std::milli>(t1 - t0).count()}}},
              {"version", version},
              {"seed", seed_used ? json(*seed_used) : json(nullptr)}};
  std::cout << report.dump(2) << "\n";
  return 0;
}
