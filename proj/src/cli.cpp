#include "floqlat/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "floqlat/domain_wall.hpp"
#include "floqlat/doubling.hpp"
#include "floqlat/error.hpp"
#include "floqlat/floquet.hpp"
#include "floqlat/scaling.hpp"

namespace floqlat {
namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitNumerical = 3;

// Phase-diagram window: the representative lines sit just inside [0, pi/2].
constexpr double kPhaseMargin = 0.05;

using Cell = std::variant<std::monostate, double, long long, std::string>;
using KeyValues = std::vector<std::pair<std::string, Cell>>;

struct Table {
  std::string command;
  KeyValues params;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  KeyValues summary;
};

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.11e", v);
  return buf;
}

std::string csv_cell(const Cell& c) {
  if (std::holds_alternative<double>(c)) return format_number(std::get<double>(c));
  if (std::holds_alternative<long long>(c)) return std::to_string(std::get<long long>(c));
  if (std::holds_alternative<std::string>(c)) return std::get<std::string>(c);
  return "";
}

nlohmann::json json_cell(const Cell& c) {
  if (std::holds_alternative<double>(c)) {
    const double v = std::get<double>(c);
    return std::isfinite(v) ? nlohmann::json(v) : nlohmann::json(nullptr);
  }
  if (std::holds_alternative<long long>(c)) return std::get<long long>(c);
  if (std::holds_alternative<std::string>(c)) return std::get<std::string>(c);
  return nullptr;
}

std::string key_values(const KeyValues& kv) {
  std::string s;
  for (const auto& [k, v] : kv) s += " " + k + "=" + csv_cell(v);
  return s;
}

std::string render_csv(const Table& t) {
  std::ostringstream os;
  os << "# floqlat version=" << FLOQLAT_VERSION << " command=" << t.command << key_values(t.params) << "\n";
  for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << t.columns[i];
  os << "\n";
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_cell(row[i]);
    os << "\n";
  }
  if (!t.summary.empty()) os << "# summary" << key_values(t.summary) << "\n";
  return os.str();
}

std::string render_json(const Table& t) {
  nlohmann::json j;
  j["tool"] = "floqlat";
  j["version"] = FLOQLAT_VERSION;
  j["command"] = t.command;
  nlohmann::json params = nlohmann::json::object();
  for (const auto& [k, v] : t.params) params[k] = json_cell(v);
  j["parameters"] = params;
  j["columns"] = t.columns;
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : t.rows) {
    nlohmann::json r = nlohmann::json::array();
    for (const auto& c : row) r.push_back(json_cell(c));
    rows.push_back(r);
  }
  j["rows"] = rows;
  nlohmann::json summary = nlohmann::json::object();
  for (const auto& [k, v] : t.summary) summary[k] = json_cell(v);
  j["summary"] = summary;
  return j.dump(2) + "\n";
}

void emit(const Table& t, const std::string& format, const std::string& path, std::ostream& out) {
  const std::string text = format == "json" ? render_json(t) : render_csv(t);
  if (path.empty()) {
    out << text;
    return;
  }
  const std::filesystem::path target(path);
  std::filesystem::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw Error(ErrorCode::kInvalidArgument, "cannot open " + tmp.string() + " for writing");
    f << text;
    if (!f.flush()) throw Error(ErrorCode::kInvalidArgument, "failed writing " + tmp.string());
  }
  std::filesystem::rename(tmp, target);
}

BoundaryCondition parse_bc(const std::string& s) {
  return s == "obc" ? BoundaryCondition::kOpen : BoundaryCondition::kPeriodic;
}

StaticModel parse_target(const std::string& s) { return s == "wd" ? StaticModel::kWD : StaticModel::kSSH; }

// Options shared by every subcommand.
struct CommonOptions {
  std::string format = "csv";
  std::string out_path;
};

void add_common(CLI::App* cmd, CommonOptions& common) {
  cmd->add_option("--format", common.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--out", common.out_path, "Output path (stdout when omitted)");
}

Table spectrum_table(const std::string& theta0_text, const std::string& theta1_text, int cells,
                     const std::string& bc_text, const std::string& map_text) {
  const DriveParams params{parse_angle(theta0_text), parse_angle(theta1_text), cells, parse_bc(bc_text)};
  params.validate();

  std::optional<PoleSpectrum> poles;
  if (!map_text.empty()) {
    if (cells % 4 != 0) {
      throw Error(ErrorCode::kNMod4, "--map needs N % 4 == 0 (got N = " + std::to_string(cells) + ")");
    }
    if (params.bc != BoundaryCondition::kPeriodic) {
      throw Error(ErrorCode::kInvalidArgument, "--map needs --bc pbc");
    }
    if (std::abs(params.theta0 - kPi / 4) > 1e-12) throw Error(ErrorCode::kNotOnLine, "--map needs theta0 = pi/4");
    const double eta = params.theta1 - kPi / 4;
    poles = double_poles(static_spectrum(parse_target(map_text), eta, cells, params.bc));
  }

  const QuasienergySpectrum eps = floquet_spectrum(params);
  std::optional<QuasienergySpectrum> analytic;
  if (params.bc == BoundaryCondition::kPeriodic) analytic = analytic_spectrum(params.theta0, params.theta1, cells);

  Table t;
  t.command = "spectrum";
  t.params = {{"theta0", params.theta0}, {"theta1", params.theta1}, {"cells", (long long)cells}, {"bc", bc_text}};
  if (poles) t.params.emplace_back("map", map_text);
  t.columns = {"index", "quasienergy", "analytic"};
  if (poles) t.columns.push_back("pole");
  for (std::size_t i = 0; i < eps.size(); ++i) {
    std::vector<Cell> row{(long long)i, eps.values[i], analytic ? Cell(analytic->values[i]) : Cell{}};
    if (poles) row.emplace_back(poles->values[i]);
    t.rows.push_back(std::move(row));
  }
  return t;
}

Table phase_table(int grid, int cells) {
  if (grid < 4) throw Error(ErrorCode::kInvalidArgument, "--grid must be >= 4");
  if (cells < 2) throw Error(ErrorCode::kInvalidArgument, "--cells must be >= 2");
  const auto scan = scan_phase_diagram(grid, cells, kPhaseMargin, kPi / 2 - kPhaseMargin);
  Table t;
  t.command = "phase-diagram";
  t.params = {{"grid", (long long)grid}, {"cells", (long long)cells}, {"lo", kPhaseMargin}, {"hi", kPi / 2 - kPhaseMargin}};
  t.columns = {"theta0", "theta1", "label", "n_zero", "n_pi"};
  for (const PhaseCell& c : scan) {
    if (c.label) {
      t.rows.push_back({c.theta0, c.theta1, std::string(phase_name(c.label->label)), (long long)c.label->n_zero_modes,
                        (long long)c.label->n_pi_modes});
    } else {
      t.rows.push_back({c.theta0, c.theta1, std::string("BOUNDARY"), Cell{}, Cell{}});
    }
  }
  return t;
}

Table map_table(const std::string& eta_text, int cells, const std::string& target_text) {
  const double eta = parse_angle(eta_text);
  if (cells % 4 != 0 || cells < 4) {
    throw Error(ErrorCode::kNMod4, "map needs N % 4 == 0 (got N = " + std::to_string(cells) + ")");
  }
  const DriveParams params{kPi / 4, kPi / 4 + eta, cells, BoundaryCondition::kPeriodic};
  params.validate();
  const StaticModel target = parse_target(target_text);

  const QuasienergySpectrum tilde = partition_tilde(params);
  const EnergySpectrum energies = static_spectrum(target, eta, cells, BoundaryCondition::kPeriodic);
  const PoleSpectrum poles = double_poles(energies);
  const QuasienergySpectrum eps = floquet_spectrum(params);
  const EnergySpectrum sine = sine_transform(tilde);

  Table t;
  t.command = "map";
  t.params = {{"eta", eta}, {"cells", (long long)cells}, {"target", target_text}};
  t.columns = {"index", "tilde_quasienergy", "sine_energy", "static_energy", "pole", "floquet_quasienergy"};
  for (std::size_t i = 0; i < eps.size(); ++i) {
    const bool half = i < tilde.size();
    t.rows.push_back({(long long)i, half ? Cell(tilde.values[i]) : Cell{}, half ? Cell(sine.values[i]) : Cell{},
                      half ? Cell(energies.values[i]) : Cell{}, poles.values[i], eps.values[i]});
  }
  if (target == StaticModel::kSSH) {
    const SSHParams p = solve_ssh_params(eta, Branch::kPlus);
    t.summary = {{"u", p.u}, {"v", p.v}, {"sites", (long long)cells}};
  } else {
    const WDParams p = solve_wd_params(eta, Branch::kMinus);
    t.summary = {{"m", p.m}, {"R", p.r}, {"sites", (long long)(cells / 2)}};
  }
  t.summary.emplace_back("metric", compare_spectra(poles.values, eps.values));
  return t;
}

Table domainwall_table(const std::string& eta_text, int cells, const std::string& model_text) {
  const double eta = parse_angle(eta_text);
  if (!(eta > 0.0 && eta < kPi / 4)) throw Error(ErrorCode::kEtaRange, "domainwall needs 0 < eta < pi/4");
  if (cells < 8 || cells % 2 != 0) throw Error(ErrorCode::kInvalidArgument, "--cells must be even and >= 8");

  Table t;
  t.command = "domainwall";
  t.params = {{"eta", eta}, {"cells", (long long)cells}, {"model", model_text}};
  t.columns = {"state", "energy", "peak_site", "xi_left", "xi_right", "analytic_xi"};
  const DomainWallProfile profile{WallModel::kWD, -eta, eta, std::nullopt};

  auto add_row = [&](const std::string& name, const BoundState& s, Cell analytic) {
    t.rows.push_back({name, s.energy, (long long)s.peak_site, s.xi_left, s.xi_right, std::move(analytic)});
  };

  if (model_text == "wd") {
    const HermitianOperator h = build_wd_wall(profile, cells);
    const BoundState analytic = analytic_wd_zero_mode(eta, -1, 1);
    add_row("zero", extract_wall_state(h, 2, profile.wall_site(cells)), analytic.xi_right);
    t.summary = {{"analytic_residual", analytic_wd_residual(eta, cells)}};
  } else if (model_text == "ssh") {
    const HermitianOperator h = build_ssh_wall(profile, cells / 2);
    add_row("zero", extract_wall_state(h, 1, profile.wall_site(cells)), Cell{});
  } else {
    const FloquetDrive drive = floquet_wall_drive(profile, cells);
    const int wall = profile.wall_site(2 * cells);
    constexpr double kModeWindow = 0.05;
    add_row("zero", extract_floquet_wall_state(drive, wall, 0.0, kModeWindow), Cell{});
    add_row("pi", extract_floquet_wall_state(drive, wall, kPi, kModeWindow), Cell{});
  }
  return t;
}

Table scaling_table(const std::string& config_text, const std::string& eta_text, const std::string& target_text,
                    const std::vector<int>& sizes) {
  if (sizes.size() < 4) throw Error(ErrorCode::kInvalidArgument, "scaling needs at least 4 sizes for the power-law fit");
  const double eta = parse_angle(eta_text);
  const ScalingConfig config = config_text == "wall"  ? ScalingConfig::kDomainWall
                               : config_text == "pbc" ? ScalingConfig::kPeriodic
                                                      : ScalingConfig::kOpen;
  const ScalingRun run = run_scaling(config, eta, parse_target(target_text), sizes);

  Table t;
  t.command = "scaling";
  std::string size_list;
  for (int n : sizes) size_list += (size_list.empty() ? "" : ";") + std::to_string(n);
  t.params = {{"config", config_text}, {"eta", eta}, {"target", target_text}, {"sizes", size_list}};
  t.columns = {"N", "metric"};
  for (std::size_t i = 0; i < run.sizes.size(); ++i) t.rows.push_back({(long long)run.sizes[i], run.metric_values[i]});
  if (config != ScalingConfig::kPeriodic) {
    const PowerLawFit fit = fit_power_law(run);
    t.summary = {{"exponent", fit.exponent}, {"prefactor", fit.prefactor}, {"r_squared", fit.r_squared}};
  } else {
    double worst = 0.0;
    for (double m : run.metric_values) worst = std::max(worst, m);
    t.summary = {{"max_metric", worst}};
  }
  return t;
}

}  // namespace

double parse_angle(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (c != ' ') s.push_back(c);
  }
  if (s.empty()) throw Error(ErrorCode::kInvalidArgument, "empty angle");

  const auto bad = [&] { return Error(ErrorCode::kInvalidArgument, "cannot parse angle '" + std::string(text) + "'"); };
  const auto pi_at = s.find("pi");
  if (pi_at == std::string::npos) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(s, &used);
    } catch (const std::exception&) {
      throw bad();
    }
    if (used != s.size() || !std::isfinite(v)) throw bad();
    return v;
  }

  std::string coeff = s.substr(0, pi_at);
  if (!coeff.empty() && coeff.back() == '*') coeff.pop_back();
  double factor = 1.0;
  if (coeff == "-") {
    factor = -1.0;
  } else if (coeff == "+" || coeff.empty()) {
    factor = 1.0;
  } else {
    std::size_t used = 0;
    try {
      factor = std::stod(coeff, &used);
    } catch (const std::exception&) {
      throw bad();
    }
    if (used != coeff.size()) throw bad();
  }

  const std::string rest = s.substr(pi_at + 2);
  double divisor = 1.0;
  if (!rest.empty()) {
    if (rest.front() != '/') throw bad();
    std::size_t used = 0;
    try {
      divisor = std::stod(rest.substr(1), &used);
    } catch (const std::exception&) {
      throw bad();
    }
    if (used != rest.size() - 1 || divisor == 0.0) throw bad();
  }
  return factor * kPi / divisor;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Floquet insulator spectra and their lattice-fermion doubling map", "floqlat"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(FLOQLAT_VERSION));

  CommonOptions common;
  std::string theta0 = "pi/4", theta1 = "3pi/8", eta = "pi/8", bc = "pbc", target = "ssh", map_target, model = "wd",
              config = "obc";
  int cells = 8, grid = 8;
  std::vector<int> sizes = default_scaling_sizes();

  auto* spectrum = app.add_subcommand("spectrum", "Quasienergy spectrum of the driven chain");
  spectrum->add_option("--theta0", theta0, "t0/T, radians or pi fraction");
  spectrum->add_option("--theta1", theta1, "t1/T, radians or pi fraction");
  spectrum->add_option("--cells", cells, "Number of unit cells N (2N sites)");
  spectrum->add_option("--bc", bc)->check(CLI::IsMember({"pbc", "obc"}));
  spectrum->add_option("--map", map_target, "Also list doubled poles of the mapped static model")
      ->check(CLI::IsMember({"ssh", "wd"}));
  add_common(spectrum, common);

  auto* phase = app.add_subcommand("phase-diagram", "Classify a grid of drive parameters by boundary modes");
  phase->add_option("--grid", grid, "Points per axis");
  phase->add_option("--cells", cells, "Number of unit cells N");
  add_common(phase, common);

  auto* map = app.add_subcommand("map", "Map the theta0 = pi/4 spectrum onto a static SSH or Wilson-Dirac model");
  map->add_option("--eta", eta, "theta1 - pi/4");
  map->add_option("--cells", cells, "Number of Floquet unit cells N (multiple of 4)");
  map->add_option("--target", target)->check(CLI::IsMember({"ssh", "wd"}));
  add_common(map, common);

  auto* wall = app.add_subcommand("domainwall", "Bound states at a domain wall where eta changes sign");
  wall->add_option("--eta", eta, "|eta| on either side of the wall");
  wall->add_option("--cells", cells, "Chain size: sites for ssh/wd, unit cells for floquet");
  wall->add_option("--model", model)->check(CLI::IsMember({"floquet", "ssh", "wd"}));
  add_common(wall, common);

  auto* scaling = app.add_subcommand("scaling", "Finite-size scaling of the Floquet/static spectral difference");
  scaling->add_option("--config", config)->check(CLI::IsMember({"obc", "wall", "pbc"}));
  scaling->add_option("--eta", eta);
  scaling->add_option("--target", target)->check(CLI::IsMember({"ssh", "wd"}));
  scaling->add_option("--sizes", sizes, "Comma-separated list of N")->delimiter(',');
  add_common(scaling, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << FLOQLAT_VERSION << "\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    std::string msg = e.what();
    for (char& c : msg) {
      if (c == '\n') c = ' ';
    }
    err << "floqlat: " << msg << "\n";
    return kExitValidation;
  }

  try {
    Table table;
    if (app.got_subcommand(spectrum)) {
      table = spectrum_table(theta0, theta1, cells, bc, map_target);
    } else if (app.got_subcommand(phase)) {
      table = phase_table(grid, cells);
    } else if (app.got_subcommand(map)) {
      table = map_table(eta, cells, target);
    } else if (app.got_subcommand(wall)) {
      table = domainwall_table(eta, cells, model);
    } else {
      table = scaling_table(config, eta, target, sizes);
    }
    emit(table, common.format, common.out_path, out);
  } catch (const Error& e) {
    err << "floqlat: " << e.what() << "\n";
    return e.is_validation() ? kExitValidation : kExitNumerical;
  } catch (const std::exception& e) {
    err << "floqlat: " << e.what() << "\n";
    return kExitNumerical;
  }
  return kExitOk;
}

}  // namespace floqlat
