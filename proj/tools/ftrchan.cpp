#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "ftr/commands.hpp"
#include "ftr/numeric_error.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidationFailure = 1;
constexpr int kExitInvalidArguments = 2;
constexpr int kExitNumericFailure = 3;

struct CliOptions {
  ftr::cli::RunConfig config;
  std::string format = "csv";
  std::string out_path;
  std::string grid_spec;
  std::string log_grid_spec;
};

void parse_colon_triple(const std::string& text, double& a, double& b, double& c) {
  std::stringstream ss(text);
  std::string part;
  double* slots[3] = {&a, &b, &c};
  for (int i = 0; i < 3; ++i) {
    if (!std::getline(ss, part, ':'))
      throw CLI::ValidationError("grid", "expected lo:hi:step");
    *slots[i] = std::stod(part);
  }
}

void apply_grid_options(CliOptions& opts) {
  if (!opts.grid_spec.empty()) {
    parse_colon_triple(opts.grid_spec, opts.config.grid.lo, opts.config.grid.hi,
                       opts.config.grid.step);
  }
  if (!opts.log_grid_spec.empty()) {
    double ppd = opts.config.log_grid.points_per_decade;
    parse_colon_triple(opts.log_grid_spec, opts.config.log_grid.lo,
                       opts.config.log_grid.hi, ppd);
    opts.config.log_grid.points_per_decade = static_cast<int>(ppd);
    opts.config.use_log_grid = true;
  }
}

void add_shared_options(CLI::App* cmd, CliOptions& opts) {
  cmd->add_option("--gamma-bar", opts.config.gamma_bar, "Mean power of the fading model");
  cmd->add_option("--m", opts.config.m, "Specular fluctuation shape m > 0");
  cmd->add_option("--k", opts.config.k, "Specular-to-diffuse power ratio K >= 0");
  cmd->add_option("--delta", opts.config.delta, "Specular similarity in [0, 1]");
  cmd->add_option("--lambda", opts.config.lambda, "Shadowing shape lambda > 1");
  cmd->add_option("--z-bar", opts.config.z_bar, "Composite mean power");
  cmd->add_option("--grid", opts.grid_spec, "Linear abscissa grid lo:hi:step");
  cmd->add_option("--log-grid", opts.log_grid_spec, "Log abscissa grid lo:hi:ppd");
  cmd->add_option("--samples", opts.config.samples, "Monte Carlo sample count");
  cmd->add_option("--seed", opts.config.seed, "Monte Carlo seed");
  cmd->add_option("--streams", opts.config.streams, "Deterministic substream count");
  cmd->add_option("--format", opts.format, "Output format: csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--out", opts.out_path, "Output path (default stdout)");
  cmd->add_option("--preset", opts.config.preset, "Figure preset: fig1, fig2 or fig3")
      ->check(CLI::IsMember({"fig1", "fig2", "fig3"}));
}

int emit(const ftr::cli::CurveTable& table, const CliOptions& opts) {
  if (!opts.out_path.empty()) {
    std::ofstream file(opts.out_path);
    if (!file) {
      std::cerr << "ftrchan: cannot open output path: " << opts.out_path << "\n";
      return kExitInvalidArguments;
    }
    if (opts.format == "json")
      table.write_json(file);
    else
      table.write_csv(file);
    return kExitOk;
  }
  if (opts.format == "json")
    table.write_json(std::cout);
  else
    table.write_csv(std::cout);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"FTR / Rician-shadowed fading statistics, composite IG fading and outage"};
  app.require_subcommand(1);

  CliOptions opts;
  std::string active;

  auto* pdf = app.add_subcommand("pdf", "Power PDF curve (FTR or RS)");
  auto* cdf = app.add_subcommand("cdf", "Power CDF curve (FTR or RS)");
  auto* gmgf = app.add_subcommand("gmgf", "Generalized MGF values on an (n, s) grid");
  auto* comp = app.add_subcommand("composite", "Composite shadowed-fading PDF/CDF curve");
  auto* outage = app.add_subcommand("outage", "Exact and asymptotic outage probability");
  auto* simulate = app.add_subcommand("simulate", "Monte Carlo sampling summary");
  auto* validate = app.add_subcommand("validate", "Cross-module invariant checks");

  for (CLI::App* cmd : {pdf, cdf, gmgf, comp, outage, simulate, validate})
    add_shared_options(cmd, opts);

  pdf->add_option("--model", opts.config.model, "ftr or rs")
      ->check(CLI::IsMember({"ftr", "rs"}));
  cdf->add_option("--model", opts.config.model, "ftr or rs")
      ->check(CLI::IsMember({"ftr", "rs"}));
  simulate->add_option("--model", opts.config.model, "ftr or composite")
      ->check(CLI::IsMember({"ftr", "composite"}));
  comp->add_option("--domain", opts.config.domain, "power or amplitude")
      ->check(CLI::IsMember({"power", "amplitude"}));
  gmgf->add_option("--orders", opts.config.orders, "GMGF orders n >= 0");
  gmgf->add_option("--s-values", opts.config.s_values, "GMGF arguments s <= 0");
  outage->add_option("--m-values", opts.config.m_values, "m values for the (m, K) sweep");
  outage->add_option("--k-values", opts.config.k_values, "K values for the (m, K) sweep");
  validate->add_flag("--inject-fault", opts.config.inject_fault,
                     "Perturb one closed-form coefficient (harness sanity hook)");

  for (CLI::App* cmd :
       {pdf, cdf, gmgf, comp, outage, simulate, validate})
    cmd->callback([&active, cmd]() { active = cmd->get_name(); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInvalidArguments;
  }

  try {
    apply_grid_options(opts);
    ftr::cli::CurveTable table;
    if (active == "pdf") {
      table = ftr::cli::cmd_pdf(opts.config);
    } else if (active == "cdf") {
      table = ftr::cli::cmd_cdf(opts.config);
    } else if (active == "gmgf") {
      table = ftr::cli::cmd_gmgf(opts.config);
    } else if (active == "composite") {
      table = ftr::cli::cmd_composite(opts.config);
    } else if (active == "outage") {
      if (!opts.log_grid_spec.empty()) opts.config.use_log_grid = true;
      table = ftr::cli::cmd_outage(opts.config);
    } else if (active == "simulate") {
      table = ftr::cli::cmd_simulate(opts.config);
    } else if (active == "validate") {
      // Desk-scale Monte Carlo default for the check battery; --samples wins.
      if (validate->count("--samples") == 0) opts.config.samples = 200000;
      table = ftr::cli::cmd_validate(opts.config);
      const int emit_code = emit(table, opts);
      if (emit_code != kExitOk) return emit_code;
      return ftr::cli::all_checks_passed(table) ? kExitOk : kExitValidationFailure;
    }
    return emit(table, opts);
  } catch (const ftr::NumericFailure& e) {
    std::cerr << "ftrchan: numeric failure: " << e.what() << "\n";
    return kExitNumericFailure;
  } catch (const std::invalid_argument& e) {
    std::cerr << "ftrchan: " << e.what() << "\n";
    return kExitInvalidArguments;
  } catch (const std::exception& e) {
    std::cerr << "ftrchan: " << e.what() << "\n";
    return kExitNumericFailure;
  }
}
