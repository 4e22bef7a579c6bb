// Reproduction harness: each subcommand sweeps one family of protocol
// quantities and emits machine-readable tables (CSV or JSON).
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "catwva/errors.hpp"
#include "catwva/fisher_info.hpp"
#include "catwva/phase_dist.hpp"
#include "catwva/protocol.hpp"
#include "catwva/version.hpp"
#include "catwva/wigner_dist.hpp"

namespace {

using std::numbers::pi;

constexpr int kExitOk = 0;
constexpr int kExitParameter = 2;
constexpr int kExitIo = 3;
constexpr int kExitCheck = 4;

struct IoFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string format_double(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.15e", value);
  return buffer;
}

struct Table {
  std::vector<std::pair<std::string, std::string>> meta;  // parameter set
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

void write_table(const std::filesystem::path& path, const Table& table,
                 const std::string& format) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoFailure("cannot open " + path.string());

  if (format == "csv") {
    out << "# catwva " << catwva::kVersion << "\n";
    for (const auto& [key, value] : table.meta)
      out << "# " << key << ": " << value << "\n";
    for (std::size_t c = 0; c < table.columns.size(); ++c)
      out << table.columns[c] << (c + 1 < table.columns.size() ? "," : "\n");
    for (const auto& row : table.rows) {
      for (std::size_t c = 0; c < row.size(); ++c)
        out << format_double(row[c]) << (c + 1 < row.size() ? "," : "\n");
    }
  } else {
    nlohmann::json meta;
    meta["version"] = catwva::kVersion;
    for (const auto& [key, value] : table.meta) meta[key] = value;
    nlohmann::json doc;
    doc["meta"] = meta;
    doc["columns"] = table.columns;
    doc["rows"] = table.rows;
    out << doc.dump(2) << "\n";
  }
  if (!out) throw IoFailure("write failed for " + path.string());
}

std::filesystem::path prepare_output_dir(const std::string& out_dir) {
  std::filesystem::path dir(out_dir);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec || !std::filesystem::is_directory(dir))
    throw IoFailure("cannot create output directory " + dir.string());
  return dir;
}

std::string file_stem(const std::string& base, const std::string& format) {
  return base + (format == "csv" ? ".csv" : ".json");
}

// ---- shared option block -------------------------------------------------

struct CommonOptions {
  int n_atoms = 10;
  double omega = pi / 100.0;
  std::optional<double> gamma;
  std::vector<double> gamma_list;
  bool degrees = false;
  std::string out_dir = ".";
  std::string format = "csv";
  int n_alpha = 0;  // 0 = automatic
  int n_beta = 0;
  bool check = false;

  void to_radians() {
    if (!degrees) return;
    const double scale = pi / 180.0;
    omega *= scale;
    if (gamma) *gamma *= scale;
    for (double& g : gamma_list) g *= scale;
  }

  std::vector<double> gammas_or(const std::vector<double>& fallback) const {
    if (!gamma_list.empty()) return gamma_list;
    if (gamma) return {*gamma};
    return fallback;
  }
};

void add_common_options(CLI::App* cmd, CommonOptions* opt, int default_n) {
  opt->n_atoms = default_n;
  cmd->add_option("--n", opt->n_atoms, "Number of atoms N (j = N/2)")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--omega", opt->omega, "Accumulated interaction phase");
  cmd->add_option("--gamma", opt->gamma, "Single post-selection angle");
  cmd->add_option("--gamma-list", opt->gamma_list,
                  "Explicit list of post-selection angles");
  cmd->add_flag("--degrees", opt->degrees, "Angles are given in degrees");
  cmd->add_option("--out", opt->out_dir, "Output directory");
  cmd->add_option("--format", opt->format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--n-alpha", opt->n_alpha, "Polar quadrature nodes");
  cmd->add_option("--n-beta", opt->n_beta, "Azimuthal nodes");
  cmd->add_flag("--check", opt->check, "Run inline cross-checks");
}

const std::vector<double> kDefaultGammaList = {0.5 * pi, pi / 30.0, pi / 60.0,
                                               pi / 100.0, 0.0};

catwva::ProtocolParams equatorial(int n_atoms, double omega, double gamma) {
  return {catwva::SpinJ{n_atoms}, catwva::BlochAngles{0.5 * pi, 0.0}, omega,
          gamma};
}

// ---- wigner --------------------------------------------------------------

int run_wigner(const CommonOptions& opt) {
  const auto dir = prepare_output_dir(opt.out_dir);
  const int two_j = opt.n_atoms;
  const int n_alpha = opt.n_alpha > 0 ? opt.n_alpha : std::max(two_j + 2, 40);
  const int n_beta = opt.n_beta > 0 ? opt.n_beta : std::max(2 * two_j + 2, 80);
  const auto gammas = opt.gammas_or(kDefaultGammaList);

  bool checks_ok = true;
  Table summary;
  summary.meta = {{"subcommand", "wigner"},
                  {"n_atoms", std::to_string(two_j)},
                  {"omega", format_double(opt.omega)},
                  {"n_alpha", std::to_string(n_alpha)},
                  {"n_beta", std::to_string(n_beta)}};
  summary.columns = {"panel", "gamma", "min_w", "negativity_volume",
                     "integral"};

  struct Panel {
    std::string label;
    std::optional<double> gamma;
  };
  std::vector<Panel> panels = {{"coherent", std::nullopt}};
  for (std::size_t i = 0; i < gammas.size(); ++i)
    panels.push_back({"cat_" + std::to_string(i + 1), gammas[i]});

  int panel_index = 0;
  for (const auto& panel : panels) {
    const catwva::DickeVector state =
        panel.gamma
            ? catwva::make_cat(equatorial(two_j, opt.omega, *panel.gamma))
                  .vector
            : catwva::coherent_state({two_j}, {0.5 * pi, 0.0});
    const auto decomp = catwva::decompose(state);
    const auto field = catwva::sample_grid(decomp, n_alpha, n_beta);

    const double integral = catwva::sphere_integral(field);
    const double volume = catwva::negativity_volume(field);
    const double min_w = field.values.minCoeff();

    if (std::abs(integral - 1.0) > 1e-8) {
      std::cerr << "check failed: normalization integral of " << panel.label
                << " = " << format_double(integral) << "\n";
      checks_ok = false;
    }
    if (field.max_imag_residual > 1e-10) {
      std::cerr << "check failed: imaginary residual of " << panel.label
                << " = " << format_double(field.max_imag_residual) << "\n";
      checks_ok = false;
    }
    if (opt.check) {
      double parseval = 0.0;
      for (int k = 0; k <= two_j; ++k)
        for (int q = -k; q <= k; ++q) parseval += std::norm(decomp.coeff(k, q));
      if (std::abs(parseval - 1.0) > 1e-10) {
        std::cerr << "check failed: multipole purity of " << panel.label
                  << " = " << format_double(parseval) << "\n";
        checks_ok = false;
      }
    }

    Table table;
    table.meta = summary.meta;
    table.meta.push_back({"panel", panel.label});
    table.meta.push_back(
        {"gamma", panel.gamma ? format_double(*panel.gamma) : "none"});
    table.columns = {"alpha", "beta", "w"};
    for (int i = 0; i < field.alphas.size(); ++i)
      for (int b = 0; b < field.betas.size(); ++b)
        table.rows.push_back(
            {field.alphas(i), field.betas(b), field.values(i, b)});
    write_table(dir / file_stem("wigner_" + panel.label, opt.format), table,
                opt.format);

    summary.rows.push_back({static_cast<double>(panel_index),
                            panel.gamma ? *panel.gamma
                                        : std::nan(""),
                            min_w, volume, integral});
    std::cout << panel.label << ": min_w=" << format_double(min_w)
              << " negativity=" << format_double(volume)
              << " integral=" << format_double(integral) << "\n";
    ++panel_index;
  }

  write_table(dir / file_stem("wigner_summary", opt.format), summary,
              opt.format);
  return checks_ok ? kExitOk : kExitCheck;
}

// ---- phase ---------------------------------------------------------------

int run_phase(const CommonOptions& opt, int n_phi) {
  const auto dir = prepare_output_dir(opt.out_dir);
  const int two_j = opt.n_atoms;
  const auto gammas = opt.gammas_or(kDefaultGammaList);

  bool checks_ok = true;
  Table table;
  table.meta = {{"subcommand", "phase"},
                {"n_atoms", std::to_string(two_j)},
                {"omega", format_double(opt.omega)},
                {"n_phi", std::to_string(n_phi)},
                {"window", "[-pi/2, pi/2]"}};
  table.columns = {"gamma", "phi", "p"};

  for (const double gamma : gammas) {
    const auto profile = catwva::sample_phase(
        equatorial(two_j, opt.omega, gamma), -0.5 * pi, 0.5 * pi, n_phi);
    for (int i = 0; i < profile.phis.size(); ++i)
      table.rows.push_back({gamma, profile.phis(i), profile.values(i)});

    if (opt.check) {
      // vector route against the half-angle product closed form
      const auto cat = catwva::make_cat(equatorial(two_j, opt.omega, gamma));
      const double w_plus = std::sin(gamma - 0.25 * pi);
      const double w_minus = std::cos(gamma - 0.25 * pi);
      double max_deviation = 0.0;
      for (int i = 0; i < profile.phis.size(); ++i) {
        const double phi = profile.phis(i);
        const double amp =
            w_plus * std::pow(std::cos(0.5 * (phi - opt.omega)), two_j) +
            w_minus * std::pow(std::cos(0.5 * (phi + opt.omega)), two_j);
        const double closed = amp * amp / (2.0 * cat.norm_sq);
        max_deviation =
            std::max(max_deviation, std::abs(closed - profile.values(i)));
      }
      std::cout << "phase route deviation at gamma=" << format_double(gamma)
                << ": " << format_double(max_deviation) << "\n";
      if (max_deviation > 1e-10) {
        std::cerr << "check failed: phase route deviation "
                  << format_double(max_deviation) << "\n";
        checks_ok = false;
      }
    }
  }

  write_table(dir / file_stem("phase", opt.format), table, opt.format);
  return checks_ok ? kExitOk : kExitCheck;
}

// ---- shift ---------------------------------------------------------------

int run_shift(const CommonOptions& opt, bool n_given, int sweep_points) {
  const auto dir = prepare_output_dir(opt.out_dir);

  std::vector<double> gammas = opt.gammas_or({});
  if (gammas.empty()) {
    gammas.reserve(sweep_points);
    for (int i = 0; i < sweep_points; ++i)
      gammas.push_back(pi / 100.0 +
                       (0.5 * pi - pi / 100.0) * i / (sweep_points - 1));
  }
  for (const double gamma : gammas)
    if (!(gamma > 0.0 && gamma <= 0.5 * pi + 1e-12))
      throw std::invalid_argument("shift: gamma sweep must lie in (0, pi/2]");

  const std::vector<int> sizes =
      n_given ? std::vector<int>{opt.n_atoms} : std::vector<int>{10, 100};

  bool checks_ok = true;
  Table table;
  table.meta = {{"subcommand", "shift"},
                {"omega", format_double(opt.omega)},
                {"sweep_points", std::to_string(gammas.size())}};
  table.columns = {"n_atoms", "gamma", "scaled_shift"};

  for (const int n : sizes) {
    for (const double gamma : gammas) {
      const auto report =
          catwva::find_peaks(equatorial(n, opt.omega, gamma));
      table.rows.push_back({static_cast<double>(n), gamma,
                            report.scaled_shift});

      if (opt.check) {
        // the refined peak must be an interior maximum of the density
        const auto params = equatorial(n, opt.omega, gamma);
        const double h = 1e-6;
        const double here =
            catwva::phase_density(params, report.left_peak_phi);
        if (catwva::phase_density(params, report.left_peak_phi + h) > here ||
            catwva::phase_density(params, report.left_peak_phi - h) > here) {
          std::cerr << "check failed: reported peak is not a maximum at n="
                    << n << " gamma=" << format_double(gamma) << "\n";
          checks_ok = false;
        }
      }
      if (std::abs(gamma - pi / 100.0) < 1e-12) {
        std::cout << "scaled shift at gamma=pi/100, N=" << n << ": "
                  << format_double(report.scaled_shift) << "\n";
      }
    }
  }

  write_table(dir / file_stem("shift", opt.format), table, opt.format);
  return checks_ok ? kExitOk : kExitCheck;
}

// ---- fisher ----------------------------------------------------------------

int run_fisher(const CommonOptions& opt, int sweep_points) {
  const auto dir = prepare_output_dir(opt.out_dir);
  const int n = opt.n_atoms;

  std::vector<double> gammas = opt.gammas_or({});
  if (gammas.empty()) {
    gammas.reserve(sweep_points);
    for (int i = 0; i < sweep_points; ++i)
      gammas.push_back(0.5 * pi * i / (sweep_points - 1));
  }

  bool checks_ok = true;
  double worst_qfi = 0.0, worst_classical = 0.0;

  Table table;
  table.meta = {{"subcommand", "fisher"},
                {"n_atoms", std::to_string(n)},
                {"omega", format_double(opt.omega)}};
  table.columns = {"gamma", "qfi_postselected", "p", "f_post", "p_times_qfi",
                   "information_sum"};

  for (const double gamma : gammas) {
    const auto report = catwva::fisher_report(n, opt.omega, gamma);
    table.rows.push_back({gamma, report.i_postselected, report.p,
                          report.f_post,
                          report.p * report.i_postselected,
                          report.p * report.i_postselected + report.f_post});

    if (opt.check) {
      const double qfi_fd =
          catwva::qfi_postselected_numeric(n, opt.omega, gamma);
      const double classical_fd =
          catwva::classical_fisher_post_numeric(n, opt.omega, gamma);
      // near-zero values compare absolutely on the 1e-4 N scale
      const double floor = 1e-4 * n;
      worst_qfi = std::max(
          worst_qfi, std::abs(report.i_postselected - qfi_fd) /
                         std::max(std::abs(qfi_fd), floor));
      worst_classical = std::max(
          worst_classical, std::abs(report.f_post - classical_fd) /
                               std::max(std::abs(classical_fd), floor));
    }
  }

  if (opt.check) {
    const double joint_fd = catwva::qfi_joint_numeric(n, opt.omega);
    const double joint_err = std::abs(joint_fd - n) / n;
    std::cout << "fisher check: max QFI deviation "
              << format_double(worst_qfi) << ", max classical deviation "
              << format_double(worst_classical) << ", joint deviation "
              << format_double(joint_err) << "\n";
    if (worst_qfi > 1e-4 || worst_classical > 1e-5 || joint_err > 1e-4) {
      std::cerr << "check failed: finite-difference oracles disagree\n";
      checks_ok = false;
    }
  }

  write_table(dir / file_stem("fisher", opt.format), table, opt.format);

  // the unbiased-angle row is a fixed landmark when present
  for (const auto& row : table.rows) {
    if (std::abs(row[0] - 0.25 * pi) < 1e-12)
      std::cout << "gamma=pi/4 row: I=" << format_double(row[1])
                << " p=" << format_double(row[2])
                << " f_post=" << format_double(row[3]) << "\n";
  }
  return checks_ok ? kExitOk : kExitCheck;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Post-selected atomic cat states: Wigner functions, phase "
               "distributions, peak shifts, and Fisher information"};
  app.require_subcommand(1);

  CommonOptions wigner_opt, phase_opt, shift_opt, fisher_opt;
  int n_phi = 2001;
  int shift_sweep = 50;
  int fisher_sweep = 101;

  auto* wigner_cmd =
      app.add_subcommand("wigner", "Wigner function panels on the sphere");
  add_common_options(wigner_cmd, &wigner_opt, 10);

  auto* phase_cmd =
      app.add_subcommand("phase", "Phase distribution curves");
  add_common_options(phase_cmd, &phase_opt, 10);
  phase_cmd->add_option("--n-phi", n_phi, "Samples across the phase window")
      ->check(CLI::Range(2, 2000000));

  auto* shift_cmd =
      app.add_subcommand("shift", "Scaled left-peak shift versus gamma");
  add_common_options(shift_cmd, &shift_opt, 10);
  shift_cmd->add_option("--sweep-points", shift_sweep,
                        "Number of gamma sweep points")
      ->check(CLI::Range(1, 100000));

  auto* fisher_cmd = app.add_subcommand(
      "fisher", "Quantum and classical Fisher information versus gamma");
  add_common_options(fisher_cmd, &fisher_opt, 100);
  fisher_cmd->add_option("--sweep-points", fisher_sweep,
                         "Number of gamma sweep points")
      ->check(CLI::Range(1, 100000));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParameter;
  }

  try {
    if (app.got_subcommand(wigner_cmd)) {
      wigner_opt.to_radians();
      return run_wigner(wigner_opt);
    }
    if (app.got_subcommand(phase_cmd)) {
      phase_opt.to_radians();
      return run_phase(phase_opt, n_phi);
    }
    if (app.got_subcommand(shift_cmd)) {
      shift_opt.to_radians();
      return run_shift(shift_opt, shift_cmd->count("--n") > 0, shift_sweep);
    }
    fisher_opt.to_radians();
    return run_fisher(fisher_opt, fisher_sweep);
  } catch (const IoFailure& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return kExitIo;
  } catch (const catwva::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParameter;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParameter;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParameter;
  }
}
