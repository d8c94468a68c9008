#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "airs/cli.hpp"

namespace airs::cli {

namespace {

constexpr const char* kDefaultSweep = "10:1400:log:50";

struct Options {
  std::string config_path;
  std::vector<std::string> overrides;
};

SystemParams resolve_params(const Options& opts, std::ostream& err) {
  SystemParams p = opts.config_path.empty() ? SystemParams{} : load_config(opts.config_path);
  for (const std::string& kv : opts.overrides) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) throw ConfigError("--set expects key=value, got '" + kv + "'");
    apply_setting(p, std::string_view(kv).substr(0, eq), std::string_view(kv).substr(eq + 1));
  }
  const auto diags = validate(p);
  for (const Diagnostic& d : diags) err << to_string(d.severity) << ": " << d.message << '\n';
  if (has_errors(diags)) throw ConfigError("invalid configuration");
  return p;
}

void print_eval(std::ostream& out, const EvalRow& row) {
  const DeploymentSolution& s = row.solution;
  const bool wit = row.mode == Mode::wit;
  const char* name = wit ? "snr" : "power";
  const char* unit = wit ? "db" : "dbm";
  out << "mode = " << to_string(row.mode) << '\n';
  out << "np = " << row.np << '\n';
  out << "l_star = " << s.index << '\n';
  out << "case = " << to_string(s.case_label) << '\n';
  if (s.relaxed_index) out << "relaxed_index = " << format_number(*s.relaxed_index) << '\n';
  out << name << "_linear = " << format_number(s.objective.value) << '\n';
  out << name << '_' << unit << " = " << format_number(s.objective.db()) << '\n';
  out << "middle_" << unit << " = " << format_number(row.middle_db) << '\n';
  out << "all_pirs_" << unit << " = " << format_number(row.all_pirs_db) << '\n';
  out << "brute_force_l = " << s.brute_force_index << '\n';
  out << "agrees = " << (s.brute_force_agrees ? "true" : "false") << '\n';
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Active/passive IRS cascade: optimal active-surface placement, SNR and power"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opts;
  app.add_option("--config", opts.config_path, "Flat key = value scenario file");
  app.add_option("--set", opts.overrides, "Override a config key (key=value), repeatable");

  std::string mode_text = "wit";
  std::optional<int> eval_np;
  bool eval_csv = false;
  auto* eval = app.add_subcommand("eval", "Evaluate one configuration");
  eval->add_option("--mode", mode_text, "wit or wpt");
  eval->add_option("--np", eval_np, "Passive elements per surface");
  eval->add_flag("--csv", eval_csv, "Print a sweep-format CSV row instead of key = value lines");

  std::string sweep_text = kDefaultSweep;
  std::string out_path;
  auto* sweep = app.add_subcommand("sweep", "Sweep Np and write CSV");
  sweep->add_option("--mode", mode_text, "wit or wpt");
  sweep->add_option("--np", sweep_text, "min:max:scale:count");
  sweep->add_option("--out", out_path, "Output file (default stdout)");

  auto* check = app.add_subcommand("validate", "Check the closed-form placements against brute force");

  std::string out_dir = ".";
  auto* figures = app.add_subcommand("figures", "Write fig2.csv, fig3.csv and fig4.csv");
  figures->add_option("--np", sweep_text, "min:max:scale:count");
  figures->add_option("--out-dir", out_dir, "Output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    SystemParams params = resolve_params(opts, err);
    const Mode mode = parse_mode(mode_text);

    if (*eval) {
      if (eval_np) params = with_passive_count(params, *eval_np);
      const EvalRow row = evaluate(params, mode);
      if (eval_csv) {
        out << csv_header() << '\n' << csv_row(row) << '\n';
      } else {
        print_eval(out, row);
      }
    } else if (*sweep) {
      const SweepSpec spec = parse_sweep(sweep_text);
      const std::vector<int> nps = sweep_values(spec);
      if (out_path.empty()) {
        write_sweep(out, params, mode, nps);
      } else {
        std::ofstream file(out_path, std::ios::binary);
        if (!file) throw IoError("cannot write '" + out_path + "'");
        write_sweep(file, params, mode, nps);
        file.close();
        if (!file) throw IoError("failed writing '" + out_path + "'");
      }
    } else if (*check) {
      const GridReport r = check_placements(placement_grid(params));
      out << "configs = " << r.configs << '\n';
      out << "wit_mismatches = " << r.wit_mismatches << '\n';
      out << "wpt_mismatches = " << r.wpt_mismatches << '\n';
      out << "wpt_not_last = " << r.wpt_not_last << '\n';
      const bool ok = r.wit_mismatches == 0 && r.wpt_mismatches == 0 && r.wpt_not_last == 0;
      out << (ok ? "OK" : "MISMATCH") << '\n';
      return ok ? 0 : 1;
    } else if (*figures) {
      write_figures(out_dir, params, sweep_values(parse_sweep(sweep_text)));
    }
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return 3;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::logic_error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

}  // namespace airs::cli
