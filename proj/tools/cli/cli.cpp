#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include "a2g/antenna.hpp"
#include "a2g/errors.hpp"
#include "a2g/link.hpp"
#include "a2g/multiantenna.hpp"
#include "a2g/scenario.hpp"
#include "a2g/text.hpp"

namespace a2g::cli {

namespace {

struct SharedOptions {
  double frequency_hz = LinkBudget::kDefaultFrequencyHz;
  double gamma = 2.0;
  double tx_power_dbm = 0.0;
  double receiver_height = 1.27;
  std::string output;
  std::string format;  // empty: command default (text for compare, csv otherwise)

  LinkBudget budget() const { return LinkBudget(tx_power_dbm, frequency_hz, gamma); }
  char delimiter() const { return format == "tsv" ? '\t' : ','; }
};

struct ModelOptions {
  std::string config = "VV";
  std::string pattern = "analytic";
  double start = 0.0;
  double stop = 200.0;
  double step = 0.5;
};

Configuration configuration_option(const std::string& text) {
  if (const auto c = parse_configuration(text)) return *c;
  throw DomainError("unknown configuration '" + text + "' (expected VV, VH, HH or VHVH)");
}

// "analytic" or "tabulated:<file>".
RadiationPattern pattern_option(const std::string& text) {
  if (text::to_lower(text) == "analytic") return AnalyticDoughnut{};
  constexpr std::string_view prefix = "tabulated:";
  if (text.starts_with(prefix) && text.size() > prefix.size()) {
    return load_pattern(text.substr(prefix.size()));
  }
  throw DomainError("unknown pattern '" + text + "' (expected analytic or tabulated:FILE)");
}

void add_model_options(CLI::App* cmd, ModelOptions& m, bool with_step = true) {
  cmd->add_option("--config", m.config, "Antenna configuration: VV, VH, HH or VHVH")
      ->capture_default_str();
  cmd->add_option("--pattern", m.pattern, "analytic | tabulated:FILE")->capture_default_str();
  cmd->add_option("--start", m.start, "First horizontal distance [m]")->capture_default_str();
  cmd->add_option("--stop", m.stop, "Last horizontal distance [m]")->capture_default_str();
  if (with_step) cmd->add_option("--step", m.step, "Distance step [m]")->capture_default_str();
}

// Writes to --output when given, else to the caller's stream.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw ParseError(path, 0, "cannot open output file");
      stream_ = file_.get();
    }
  }
  std::ostream& operator*() { return *stream_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_;
};

std::string interval_text(const std::optional<Interval>& iv) {
  if (!iv) return "none";
  return "[" + text::format_number(iv->start_m) + ", " + text::format_number(iv->stop_m) + "]";
}

// ---- subcommands -----------------------------------------------------------

struct SweepOptions {
  ModelOptions model;
  std::vector<double> heights{10.0, 20.0, 30.0, 50.0};
  bool normalized = false;
};

void cmd_sweep(const SharedOptions& shared, const SweepOptions& opt, std::ostream& out) {
  const auto budget = shared.budget();
  SweepSpec spec;
  spec.drone_heights = opt.heights;
  spec.receiver_height = shared.receiver_height;
  spec.start = opt.model.start;
  spec.stop = opt.model.stop;
  spec.step = opt.model.step;
  spec.configuration = configuration_option(opt.model.config);
  spec.pattern = pattern_option(opt.model.pattern);
  const auto traces = run_sweep(spec, budget);
  Sink sink(shared.output, out);
  write_sweep(*sink, traces, budget,
              opt.normalized ? NormColumn::PeakPerTrace : NormColumn::TransmitPower,
              shared.delimiter());
}

struct CriticalOptions {
  ModelOptions model;
  std::vector<double> heights{10.0, 20.0, 30.0, 50.0};
  double resolution = 0.1;
};

void cmd_critical(const SharedOptions& shared, const CriticalOptions& opt, std::ostream& out) {
  const auto budget = shared.budget();
  const auto config = configuration_option(opt.model.config);
  const auto pattern = pattern_option(opt.model.pattern);
  const SearchRange range{opt.model.start, opt.model.stop};
  const bool closed_form = config == Configuration::VV && std::holds_alternative<AnalyticDoughnut>(pattern);

  std::ostringstream table;
  const char d = shared.delimiter();
  table << "height_m" << d << "delta_h_m" << d << "config" << d << "critical_analytic_m" << d
        << "critical_numeric_m\n";
  for (const double h : opt.heights) {
    const LinkGeometry probe(h, shared.receiver_height, 0.0);
    const double dh = probe.height_difference();
    const auto profile = [&](double l) {
      return configuration_rss(config, pattern, budget, LinkGeometry(h, shared.receiver_height, l));
    };
    const double numeric = argmax_distance(profile, range, opt.resolution);
    table << text::format_number(h) << d << text::format_number(dh) << d << to_string(config) << d
          << (closed_form ? text::format_number(critical_distance_analytic(dh, budget.path_loss_exponent()))
                          : std::string("n/a"))
          << d << text::format_number(numeric) << '\n';
  }
  Sink sink(shared.output, out);
  *sink << table.str();
}

struct SelectOptions {
  std::vector<double> alphas;
  double alpha_step = 1.0;
  std::optional<double> height;
  double start = 0.0;
  double stop = 200.0;
  double step = 1.0;
};

void cmd_select(const SharedOptions& shared, const SelectOptions& opt, std::ostream& out) {
  const auto budget = shared.budget();
  const char d = shared.delimiter();
  std::ostringstream table;
  const auto row = [&](const DualAntennaGains& g) {
    table << text::format_number(g.gain_rx_vertical) << d << text::format_number(g.gain_rx_horizontal)
          << d << to_string(g.selected) << d << text::format_number(g.selected_gain);
  };

  if (opt.height) {
    SweepSpec grid;
    grid.drone_heights = {*opt.height};
    grid.receiver_height = shared.receiver_height;
    grid.start = opt.start;
    grid.stop = opt.stop;
    grid.step = opt.step;
    grid.configuration = Configuration::VHVH;
    grid.validate();
    table << "distance_m" << d << "alpha_deg" << d << "gain_rx_vertical" << d << "gain_rx_horizontal"
          << d << "selected" << d << "selected_gain" << d << "rss_dbm\n";
    for (const double l : grid.distances()) {
      const LinkGeometry geom(*opt.height, shared.receiver_height, l);
      const double alpha = geom.elevation_angle_deg();
      table << text::format_number(l) << d << text::format_number(alpha) << d;
      row(selection_gain(alpha));
      table << d << text::format_number(rss_vhvh(budget, geom)) << '\n';
    }
  } else {
    std::vector<double> alphas = opt.alphas;
    if (alphas.empty()) {
      if (!(opt.alpha_step > 0.0)) throw DomainError("--alpha-step must be > 0");
      const auto n = static_cast<std::size_t>(std::floor(90.0 / opt.alpha_step + 1e-9));
      for (std::size_t k = 0; k <= n; ++k) alphas.push_back(std::min(90.0, k * opt.alpha_step));
    }
    table << "alpha_deg" << d << "gain_rx_vertical" << d << "gain_rx_horizontal" << d << "selected"
          << d << "selected_gain\n";
    for (const double a : alphas) {
      const auto g = selection_gain(a);
      table << text::format_number(a) << d;
      row(g);
      table << '\n';
    }
  }
  Sink sink(shared.output, out);
  *sink << table.str();
}

struct CompareOptions {
  ModelOptions model;
  double height = 10.0;
  std::string trace_path;
  std::optional<double> floor;
  bool normalized = false;
};

void cmd_compare(const SharedOptions& shared, const CompareOptions& opt, std::ostream& out,
                 std::ostream& err) {
  const auto budget = shared.budget();
  SweepSpec spec;
  spec.drone_heights = {opt.height};
  spec.receiver_height = shared.receiver_height;
  spec.start = opt.model.start;
  spec.stop = opt.model.stop;
  spec.step = opt.model.step;
  spec.configuration = configuration_option(opt.model.config);
  spec.pattern = pattern_option(opt.model.pattern);
  spec.validate();

  auto loaded = load_trace(opt.trace_path);
  for (const auto& w : loaded.warnings) err << "warning: " << w << '\n';

  RssTrace model = run_sweep(spec, budget).front().trace;
  RssTrace measured = std::move(loaded.trace);
  if (opt.normalized) {
    model = normalize_trace(model);
    measured = normalize_trace(measured);
  }
  const auto report = compare(model, measured, opt.floor);

  const std::pair<std::string, std::string> fields[] = {
      {"rmse_db", text::format_number(report.rmse_db)},
      {"compared_points", std::to_string(report.compared_points)},
      {"peak_distance_model_m", text::format_number(report.peak_distance_model)},
      {"peak_distance_trace_m", text::format_number(report.peak_distance_trace)},
      {"peak_distance_error_m", text::format_number(report.peak_distance_error)},
      {"sensitivity_floor_db", opt.floor ? text::format_number(*opt.floor) : std::string("none")},
      {"coverage_interval_model_m", interval_text(report.coverage_interval_model)},
      {"coverage_interval_trace_m", interval_text(report.coverage_interval_trace)},
  };

  Sink sink(shared.output, out);
  if (shared.format.empty() || shared.format == "text") {
    for (const auto& [k, v] : fields) *sink << k << ": " << v << '\n';
    return;
  }
  const char d = shared.delimiter();
  for (std::size_t i = 0; i < std::size(fields); ++i) *sink << (i ? std::string(1, d) : "") << fields[i].first;
  *sink << '\n';
  for (std::size_t i = 0; i < std::size(fields); ++i) {
    const bool quote = d == ',' && fields[i].second.find(',') != std::string::npos;
    *sink << (i ? std::string(1, d) : "") << (quote ? "\"" + fields[i].second + "\"" : fields[i].second);
  }
  *sink << '\n';
}

struct PatternsOptions {
  double doughnut_step = 1.0;
  std::string check_path;
};

void cmd_patterns(const SharedOptions& shared, const PatternsOptions& opt, std::ostream& out) {
  Sink sink(shared.output, out);
  if (!opt.check_path.empty()) {
    const auto p = load_pattern(opt.check_path);
    *sink << "path: " << opt.check_path << '\n'
          << "frequency_label: " << (p.frequency_label().empty() ? "none" : p.frequency_label()) << '\n'
          << "samples: " << p.samples().size() << '\n'
          << "angle_range_deg: [" << text::format_number(p.min_angle_deg()) << ", "
          << text::format_number(p.max_angle_deg()) << "]\n"
          << "normalization_offset_db: " << text::format_number(p.normalization_offset_db()) << '\n';
    return;
  }
  write_pattern(*sink, digitize_doughnut(opt.doughnut_step));
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Air-to-ground drone link simulator with 3D antenna patterns", "a2g"};
  app.require_subcommand(1, 1);
  app.fallthrough();

  SharedOptions shared;
  app.add_option("--frequency", shared.frequency_hz, "Carrier frequency [Hz]")->capture_default_str();
  app.add_option("--gamma", shared.gamma, "Path loss exponent")->capture_default_str();
  app.add_option("--tx-power", shared.tx_power_dbm, "Transmit power [dBm]")->capture_default_str();
  app.add_option("--rx-height", shared.receiver_height, "Ground receiver height [m]")
      ->capture_default_str();
  app.add_option("--output", shared.output, "Output path (default stdout)");
  app.add_option("--format", shared.format, "csv | tsv (compare also accepts text)")
      ->check(CLI::IsMember({"csv", "tsv", "text"}));

  SweepOptions sweep;
  auto* sweep_cmd = app.add_subcommand("sweep", "RSS versus horizontal distance, one trace per height");
  add_model_options(sweep_cmd, sweep.model);
  sweep_cmd->add_option("--heights", sweep.heights, "Drone heights [m]")->delimiter(',')->capture_default_str();
  sweep_cmd->add_flag("--normalized", sweep.normalized, "rss_norm_db relative to each trace's peak");

  CriticalOptions critical;
  auto* critical_cmd = app.add_subcommand("critical", "RSS-maximizing horizontal distance per height");
  add_model_options(critical_cmd, critical.model, false);
  critical_cmd->add_option("--heights,--height", critical.heights, "Drone heights [m]")
      ->delimiter(',')
      ->capture_default_str();
  critical_cmd->add_option("--resolution", critical.resolution, "Search grid resolution [m]")
      ->capture_default_str();

  SelectOptions select;
  auto* select_cmd = app.add_subcommand("select", "Dual-antenna composite gains and receive selection");
  select_cmd->add_option("--alpha", select.alphas, "Elevation angles [deg]")->delimiter(',');
  select_cmd->add_option("--alpha-step", select.alpha_step, "Angle grid step over [0, 90]")
      ->capture_default_str();
  select_cmd->add_option("--height", select.height, "Evaluate along a flyby at this drone height [m]");
  select_cmd->add_option("--start", select.start, "First horizontal distance [m]")->capture_default_str();
  select_cmd->add_option("--stop", select.stop, "Last horizontal distance [m]")->capture_default_str();
  select_cmd->add_option("--step", select.step, "Distance step [m]")->capture_default_str();

  CompareOptions cmp;
  auto* compare_cmd = app.add_subcommand("compare", "Compare a model sweep against an RSS trace file");
  add_model_options(compare_cmd, cmp.model);
  compare_cmd->add_option("--height", cmp.height, "Drone height [m]")->capture_default_str();
  compare_cmd->add_option("--trace", cmp.trace_path, "Trace CSV (distance_m,rss_dbm)")->required();
  compare_cmd->add_option("--floor", cmp.floor, "Sensitivity floor for coverage intervals [dB]");
  compare_cmd->add_flag("--normalized", cmp.normalized, "Peak-normalize both traces first");

  PatternsOptions patterns;
  auto* patterns_cmd = app.add_subcommand("patterns", "Write the digitized doughnut pattern or check a pattern file");
  auto* step_opt = patterns_cmd->add_option("--doughnut-step", patterns.doughnut_step,
                                            "Digitization step [deg]")
                       ->capture_default_str();
  patterns_cmd->add_option("--check", patterns.check_path, "Load and summarize a pattern file")
      ->excludes(step_opt);

  std::vector<const char*> args(argv, argv + argc);
  try {
    app.parse(static_cast<int>(args.size()), args.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (shared.format == "text" && !compare_cmd->parsed()) {
      throw DomainError("--format text is only valid for compare");
    }
    shared.budget();  // reject bad --frequency / --gamma / --tx-power before any work
    if (sweep_cmd->parsed()) cmd_sweep(shared, sweep, out);
    if (critical_cmd->parsed()) cmd_critical(shared, critical, out);
    if (select_cmd->parsed()) cmd_select(shared, select, out);
    if (compare_cmd->parsed()) cmd_compare(shared, cmp, out, err);
    if (patterns_cmd->parsed()) cmd_patterns(shared, patterns, out);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitOk;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"a2g"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace a2g::cli
