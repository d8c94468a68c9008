#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>
#include <string>

#include "airs/cli.hpp"

namespace airs::cli {

SweepSpec parse_sweep(std::string_view text) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto colon = text.find(':', start);
    parts.push_back(text.substr(start, colon == std::string_view::npos ? colon : colon - start));
    if (colon == std::string_view::npos) break;
    start = colon + 1;
  }
  if (parts.size() != 4) throw ConfigError("sweep spec must be min:max:scale:count, got '" + std::string(text) + "'");

  auto integer = [&](std::string_view s, const char* what) {
    int v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
      throw ConfigError(std::string("sweep ") + what + " is not an integer: '" + std::string(s) + "'");
    }
    return v;
  };

  SweepSpec spec;
  spec.min = integer(parts[0], "min");
  spec.max = integer(parts[1], "max");
  if (parts[2] == "lin" || parts[2] == "linear") {
    spec.scale = SweepScale::linear;
  } else if (parts[2] == "log") {
    spec.scale = SweepScale::log;
  } else if (parts[2] == "step") {
    spec.scale = SweepScale::step;
  } else {
    throw ConfigError("sweep scale must be lin, log or step, got '" + std::string(parts[2]) + "'");
  }
  spec.count = integer(parts[3], "count");

  if (spec.min < 1 || spec.max < spec.min) throw ConfigError("sweep needs 1 <= min <= max");
  if (spec.scale == SweepScale::step ? spec.count < 1 : spec.count < 2) {
    throw ConfigError("sweep needs count >= 2 (or step >= 1)");
  }
  return spec;
}

std::vector<int> sweep_values(const SweepSpec& spec) {
  std::vector<int> out;
  if (spec.scale == SweepScale::step) {
    for (long v = spec.min; v <= spec.max; v += spec.count) out.push_back(static_cast<int>(v));
    return out;
  }
  const double lo = spec.min;
  const double hi = spec.max;
  for (int i = 0; i < spec.count; ++i) {
    const double t = static_cast<double>(i) / (spec.count - 1);
    const double v = spec.scale == SweepScale::log ? std::exp(std::log(lo) + t * (std::log(hi) - std::log(lo)))
                                                   : lo + t * (hi - lo);
    out.push_back(std::clamp(static_cast<int>(std::lround(v)), spec.min, spec.max));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string format_number(double v) {
  std::array<char, 64> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::general, 10);
  return ec == std::errc{} ? std::string(buf.data(), ptr) : std::string("nan");
}

SystemParams with_passive_count(SystemParams p, int np) {
  p.passive = ArrayShape::square_ish(np);
  return p;
}

EvalRow evaluate(const SystemParams& p, Mode mode) {
  const CascadeModel m = CascadeModel::from(p);
  EvalRow row;
  row.np = p.np();
  row.mode = mode;
  row.solution = optimal_index(m, mode);
  row.middle_db = scheme_middle(m, mode).db();
  row.all_pirs_db = scheme_all_pirs(m, mode).db();
  return row;
}

std::string csv_header() {
  return "np,mode,l_star,case,objective_linear,objective_db,mid_objective_db,all_pirs_objective_db,"
         "brute_force_l,agrees";
}

std::string csv_row(const EvalRow& row) {
  const DeploymentSolution& s = row.solution;
  std::string out;
  out += std::to_string(row.np) + ',';
  out += to_string(row.mode) + ',';
  out += std::to_string(s.index) + ',';
  out += to_string(s.case_label) + ',';
  out += format_number(s.objective.value) + ',';
  out += format_number(s.objective.db()) + ',';
  out += format_number(row.middle_db) + ',';
  out += format_number(row.all_pirs_db) + ',';
  out += std::to_string(s.brute_force_index) + ',';
  out += s.brute_force_agrees ? "true" : "false";
  return out;
}

void write_sweep(std::ostream& out, const SystemParams& p, Mode mode, const std::vector<int>& nps) {
  out << csv_header() << '\n';
  for (int np : nps) out << csv_row(evaluate(with_passive_count(p, np), mode)) << '\n';
}

namespace {

std::ofstream open_output(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write '" + path.string() + "'");
  return out;
}

void close_output(std::ofstream& out, const std::filesystem::path& path) {
  out.close();
  if (!out) throw IoError("failed writing '" + path.string() + "'");
}

}  // namespace

void write_figures(const std::filesystem::path& dir, const SystemParams& p, const std::vector<int>& nps) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create '" + dir.string() + "': " + ec.message());

  const auto fig2_path = dir / "fig2.csv";
  const auto fig3_path = dir / "fig3.csv";
  const auto fig4_path = dir / "fig4.csv";
  std::ofstream fig2 = open_output(fig2_path);
  std::ofstream fig3 = open_output(fig3_path);
  std::ofstream fig4 = open_output(fig4_path);

  fig2 << "np,l_star_wit,l_star_wpt,case_wit\n";
  fig3 << "np,l_star,snr_optimal_db,snr_last_db,snr_middle_db,snr_all_pirs_db\n";
  fig4 << "np,l_star,power_optimal_dbm,power_last_dbm,power_middle_dbm,power_all_pirs_dbm\n";

  for (int np : nps) {
    const CascadeModel m = CascadeModel::from(with_passive_count(p, np));
    const DeploymentSolution wit = optimal_index_wit(m);
    const DeploymentSolution wpt = optimal_index_wpt(m);
    const int J = m.num_irs;

    fig2 << np << ',' << wit.index << ',' << wpt.index << ',' << to_string(wit.case_label) << '\n';
    fig3 << np << ',' << wit.index << ',' << format_number(wit.objective.db()) << ','
         << format_number(objective(m, J, Mode::wit).db()) << ','
         << format_number(scheme_middle(m, Mode::wit).db()) << ','
         << format_number(scheme_all_pirs(m, Mode::wit).db()) << '\n';
    fig4 << np << ',' << wpt.index << ',' << format_number(wpt.objective.db()) << ','
         << format_number(objective(m, J, Mode::wpt).db()) << ','
         << format_number(scheme_middle(m, Mode::wpt).db()) << ','
         << format_number(scheme_all_pirs(m, Mode::wpt).db()) << '\n';
  }
  close_output(fig2, fig2_path);
  close_output(fig3, fig3_path);
  close_output(fig4, fig4_path);
}

std::vector<SystemParams> placement_grid(const SystemParams& base) {
  const double offsets_db[] = {-20.0, 0.0, 20.0};
  std::vector<SystemParams> grid;
  for (int J = 1; J <= 9; ++J) {
    for (int e = 1; e <= 10; ++e) {
      for (double pa_db : offsets_db) {
        for (double pt_db : offsets_db) {
          for (double na_db : offsets_db) {
            SystemParams p = base;
            p.num_irs = J;
            p.passive = ArrayShape::square_ish(1 << e);
            p.amp_power = base.amp_power * db_to_linear(pa_db);
            p.tx_power = base.tx_power * db_to_linear(pt_db);
            const int na = std::max(1, static_cast<int>(std::lround(base.na() * db_to_linear(na_db))));
            p.active = ArrayShape::square_ish(na);
            if (derive_link_budget(p).gain_decreasing()) grid.push_back(p);
          }
        }
      }
    }
  }
  return grid;
}

GridReport check_placements(const std::vector<SystemParams>& grid) {
  GridReport r;
  for (const SystemParams& p : grid) {
    const CascadeModel m = CascadeModel::from(p);
    ++r.configs;
    const DeploymentSolution wit = optimal_index_wit(m);
    if (wit.index != brute_force_index(m, Mode::wit).index) ++r.wit_mismatches;
    const DeploymentSolution wpt = optimal_index_wpt(m);
    if (wpt.index != brute_force_index(m, Mode::wpt).index) ++r.wpt_mismatches;
    if (wpt.index != m.num_irs) ++r.wpt_not_last;
  }
  return r;
}

}  // namespace airs::cli
