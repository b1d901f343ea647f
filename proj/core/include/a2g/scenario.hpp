#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "a2g/antenna.hpp"
#include "a2g/link.hpp"

namespace a2g {

/// (ground antenna, drone antenna) orientations; VHVH is the dual-antenna
/// link with receive selection.
enum class Configuration { VV, VH, HH, VHVH };

std::string_view to_string(Configuration c) noexcept;
std::optional<Configuration> parse_configuration(std::string_view text);

/// Ground (rx) and drone (tx) antennas of a single-antenna configuration.
/// UnsupportedCombinationError for VHVH.
std::pair<AntennaConfig, AntennaConfig> antenna_pair(Configuration c, const RadiationPattern& pattern);

struct SweepSpec {
  std::vector<double> drone_heights{10.0, 20.0, 30.0, 50.0};
  double receiver_height = 1.27;
  double start = 0.0;
  double stop = 200.0;
  double step = 0.5;
  Configuration configuration = Configuration::VV;
  RadiationPattern pattern = AnalyticDoughnut{};

  /// DomainError on an empty height list, step <= 0, stop <= start,
  /// start < 0, or a height not above the receiver;
  /// UnsupportedCombinationError for VHVH with a tabulated pattern.
  void validate() const;
  /// start, start + step, ... up to and including stop.
  std::vector<double> distances() const;
};

struct RssSample {
  double distance_m;
  double rss_db;  ///< dBm raw, dB when normalized; kBelowFloor when not measurable

  bool below_floor() const noexcept;
  friend bool operator==(const RssSample&, const RssSample&) = default;
};

/// Ordered RSS samples along a flyby.
class RssTrace {
 public:
  /// DomainError unless distances are finite and strictly increasing, values
  /// are finite or kBelowFloor, and (when `normalized`) the finite maximum is
  /// exactly 0 dB. Samples at or below `sensitivity_floor` become kBelowFloor.
  RssTrace(std::string label, std::vector<RssSample> samples, bool normalized = false,
           std::optional<double> sensitivity_floor = std::nullopt);

  const std::string& label() const noexcept { return label_; }
  std::span<const RssSample> samples() const noexcept { return samples_; }
  std::size_t size() const noexcept { return samples_.size(); }
  bool normalized() const noexcept { return normalized_; }
  std::optional<double> sensitivity_floor() const noexcept { return sensitivity_floor_; }

  /// Index of the first maximal finite sample; nullopt if all are below floor.
  std::optional<std::size_t> argmax() const noexcept;

 private:
  std::string label_;
  std::vector<RssSample> samples_;
  bool normalized_;
  std::optional<double> sensitivity_floor_;
};

/// One simulated trace plus the scenario it came from.
struct SweepTrace {
  double drone_height_m;
  double receiver_height_m;
  Configuration configuration;
  RssTrace trace;

  double elevation_angle_deg(const RssSample& s) const;
};

/// One raw (dBm) trace per drone height, in the order given.
std::vector<SweepTrace> run_sweep(const SweepSpec& spec, const LinkBudget& budget);

/// RSS (dBm) at one geometry for any configuration.
double configuration_rss(Configuration c, const RadiationPattern& pattern, const LinkBudget& budget,
                         const LinkGeometry& geom);

/// Subtracts the finite maximum from every finite sample. EmptyTraceError if
/// every sample is below floor. Idempotent.
RssTrace normalize_trace(const RssTrace& trace);

/// Marks samples at or below `floor_db` as below floor.
RssTrace apply_sensitivity_floor(const RssTrace& trace, double floor_db);

struct Interval {
  double start_m;
  double stop_m;
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Largest contiguous distance span of samples strictly above `floor_db`
/// (every finite sample when no floor). Ties go to the earlier span.
std::optional<Interval> coverage_interval(const RssTrace& trace, std::optional<double> floor_db);

/// Model value at `distance_m`, interpolated linearly in dB; kBelowFloor if
/// either neighbour is below floor; nullopt outside the model's support.
std::optional<double> resample(const RssTrace& model, double distance_m);

struct ComparisonReport {
  double rmse_db;
  std::size_t compared_points;
  double peak_distance_model;
  double peak_distance_trace;
  double peak_distance_error;  ///< |model - trace|
  std::optional<double> sensitivity_floor;
  std::optional<Interval> coverage_interval_model;
  std::optional<Interval> coverage_interval_trace;
};

/// Resamples `model` onto the distances of `measured` and reports the RMSE
/// over mutually finite points, the argmax distances and coverage intervals.
/// ComparisonError when the supports do not overlap or no point is finite in
/// both. Callers normalize beforehand when comparing shapes.
ComparisonReport compare(const RssTrace& model, const RssTrace& measured,
                         std::optional<double> sensitivity_floor = std::nullopt);

// ---- CSV -------------------------------------------------------------------
//
// Trace:  distance_m,rss_dbm          (`-inf` = below floor, '#' comments)
// Sweep:  distance_m,rss_dbm,rss_norm_db,height_m,config,alpha_deg
//
// Numbers are written in shortest round-trip form, so save -> load is exact.

struct LoadedTrace {
  RssTrace trace;
  std::vector<std::string> warnings;
};

/// Reads a trace CSV, or a sweep CSV holding exactly one (height, config)
/// trace. Duplicate consecutive distances are merged by averaging their
/// linear powers (one warning each). ParseError names the offending line.
LoadedTrace read_trace(std::istream& in, const std::string& source = "<stream>");
LoadedTrace load_trace(const std::filesystem::path& path);
void write_trace(std::ostream& out, const RssTrace& trace, char delimiter = ',');

enum class NormColumn {
  TransmitPower,  ///< rss_norm_db = rss_dbm - P_TX
  PeakPerTrace,   ///< rss_norm_db = rss_dbm - trace maximum
};

void write_sweep(std::ostream& out, std::span<const SweepTrace> traces, const LinkBudget& budget,
                 NormColumn norm, char delimiter = ',');

struct SweepRow {
  double distance_m;
  double rss_dbm;
  double rss_norm_db;
  double height_m;
  Configuration configuration;
  double alpha_deg;
};

std::vector<SweepRow> read_sweep(std::istream& in, const std::string& source = "<stream>");

}  // namespace a2g
