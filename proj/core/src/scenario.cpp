#include "a2g/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "a2g/errors.hpp"
#include "a2g/multiantenna.hpp"
#include "a2g/text.hpp"
#include "a2g/units.hpp"

namespace a2g {

std::string_view to_string(Configuration c) noexcept {
  switch (c) {
    case Configuration::VV: return "VV";
    case Configuration::VH: return "VH";
    case Configuration::HH: return "HH";
    case Configuration::VHVH: return "VHVH";
  }
  return "?";
}

std::optional<Configuration> parse_configuration(std::string_view text) {
  const auto lower = text::to_lower(text::trim(text));
  if (lower == "vv") return Configuration::VV;
  if (lower == "vh") return Configuration::VH;
  if (lower == "hh") return Configuration::HH;
  if (lower == "vhvh" || lower == "vh-vh") return Configuration::VHVH;
  return std::nullopt;
}

std::pair<AntennaConfig, AntennaConfig> antenna_pair(Configuration c, const RadiationPattern& pattern) {
  const auto make = [&](Orientation o) { return AntennaConfig{o, pattern}; };
  switch (c) {
    case Configuration::VV: return {make(Orientation::Vertical), make(Orientation::Vertical)};
    case Configuration::VH: return {make(Orientation::Vertical), make(Orientation::Horizontal)};
    case Configuration::HH: return {make(Orientation::Horizontal), make(Orientation::Horizontal)};
    case Configuration::VHVH: break;
  }
  throw UnsupportedCombinationError("VHVH is a dual-antenna configuration, not an antenna pair");
}

// ---- SweepSpec ---------------------------------------------------------------

void SweepSpec::validate() const {
  if (drone_heights.empty()) throw DomainError("sweep needs at least one drone height");
  if (!std::isfinite(step) || step <= 0.0) throw DomainError("sweep step must be > 0 m");
  if (!std::isfinite(start) || start < 0.0) throw DomainError("sweep start must be >= 0 m");
  if (!std::isfinite(stop) || !(stop > start)) throw DomainError("sweep stop must exceed start");
  for (const double h : drone_heights) {
    LinkGeometry(h, receiver_height, start);  // throws on a bad height pair
  }
  if (configuration == Configuration::VHVH && !std::holds_alternative<AnalyticDoughnut>(pattern)) {
    throw UnsupportedCombinationError(
        "VHVH is defined for the analytic doughnut only; tabulated patterns are not supported");
  }
}

std::vector<double> SweepSpec::distances() const {
  std::vector<double> out;
  const auto steps = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9));
  out.reserve(steps + 1);
  for (std::size_t k = 0; k <= steps; ++k) {
    out.push_back(std::min(stop, start + static_cast<double>(k) * step));
  }
  return out;
}

// ---- RssTrace ----------------------------------------------------------------

bool RssSample::below_floor() const noexcept { return is_below_floor(rss_db); }

RssTrace::RssTrace(std::string label, std::vector<RssSample> samples, bool normalized,
                   std::optional<double> sensitivity_floor)
    : label_(std::move(label)),
      samples_(std::move(samples)),
      normalized_(normalized),
      sensitivity_floor_(sensitivity_floor) {
  if (sensitivity_floor_ && !std::isfinite(*sensitivity_floor_)) {
    throw DomainError("sensitivity floor must be finite");
  }
  for (std::size_t i = 0; i < samples_.size(); ++i) {
    auto& s = samples_[i];
    if (!std::isfinite(s.distance_m)) throw DomainError("trace distance must be finite");
    if (i > 0 && !(s.distance_m > samples_[i - 1].distance_m)) {
      std::ostringstream msg;
      msg << "trace distances must be strictly increasing (" << samples_[i - 1].distance_m
          << " followed by " << s.distance_m << ")";
      throw DomainError(msg.str());
    }
    if (std::isnan(s.rss_db) || s.rss_db == std::numeric_limits<double>::infinity()) {
      throw DomainError("trace RSS must be finite or below floor");
    }
    if (sensitivity_floor_ && s.rss_db <= *sensitivity_floor_) s.rss_db = kBelowFloor;
  }
  if (normalized_) {
    if (const auto peak = argmax(); peak && samples_[*peak].rss_db != 0.0) {
      throw DomainError("normalized trace must peak at exactly 0 dB");
    }
  }
}

std::optional<std::size_t> RssTrace::argmax() const noexcept {
  std::optional<std::size_t> best;
  for (std::size_t i = 0; i < samples_.size(); ++i) {
    if (samples_[i].below_floor()) continue;
    if (!best || samples_[i].rss_db > samples_[*best].rss_db) best = i;
  }
  return best;
}

double SweepTrace::elevation_angle_deg(const RssSample& s) const {
  return LinkGeometry(drone_height_m, receiver_height_m, s.distance_m).elevation_angle_deg();
}

// ---- sweeps ------------------------------------------------------------------

double configuration_rss(Configuration c, const RadiationPattern& pattern, const LinkBudget& budget,
                         const LinkGeometry& geom) {
  if (c == Configuration::VHVH) {
    if (!std::holds_alternative<AnalyticDoughnut>(pattern)) {
      throw UnsupportedCombinationError("VHVH is defined for the analytic doughnut only");
    }
    return rss_vhvh(budget, geom);
  }
  const auto [rx, tx] = antenna_pair(c, pattern);
  return rss(budget, geom, tx, rx);
}

std::vector<SweepTrace> run_sweep(const SweepSpec& spec, const LinkBudget& budget) {
  spec.validate();
  const auto distances = spec.distances();
  std::vector<SweepTrace> out;
  out.reserve(spec.drone_heights.size());
  for (const double h : spec.drone_heights) {
    std::vector<RssSample> samples;
    samples.reserve(distances.size());
    for (const double l : distances) {
      const LinkGeometry geom(h, spec.receiver_height, l);
      samples.push_back({l, configuration_rss(spec.configuration, spec.pattern, budget, geom)});
    }
    auto label = std::string(to_string(spec.configuration)) + " h=" + text::format_number(h);
    out.push_back({h, spec.receiver_height, spec.configuration,
                   RssTrace(std::move(label), std::move(samples))});
  }
  return out;
}

// ---- normalization and comparison --------------------------------------------

RssTrace normalize_trace(const RssTrace& trace) {
  const auto peak = trace.argmax();
  if (!peak) throw EmptyTraceError("trace '" + trace.label() + "' has no sample above floor");
  const double offset = trace.samples()[*peak].rss_db;
  std::vector<RssSample> samples(trace.samples().begin(), trace.samples().end());
  for (auto& s : samples) {
    if (!s.below_floor()) s.rss_db -= offset;
  }
  std::optional<double> floor = trace.sensitivity_floor();
  if (floor) *floor -= offset;
  return RssTrace(trace.label(), std::move(samples), true, floor);
}

RssTrace apply_sensitivity_floor(const RssTrace& trace, double floor_db) {
  return RssTrace(trace.label(), {trace.samples().begin(), trace.samples().end()},
                  trace.normalized(), floor_db);
}

std::optional<Interval> coverage_interval(const RssTrace& trace, std::optional<double> floor_db) {
  std::optional<Interval> best;
  std::optional<Interval> run;
  const auto close_run = [&] {
    if (run && (!best || run->stop_m - run->start_m > best->stop_m - best->start_m)) best = run;
    run.reset();
  };
  for (const auto& s : trace.samples()) {
    const bool covered = !s.below_floor() && (!floor_db || s.rss_db > *floor_db);
    if (!covered) {
      close_run();
      continue;
    }
    if (run) {
      run->stop_m = s.distance_m;
    } else {
      run = Interval{s.distance_m, s.distance_m};
    }
  }
  close_run();
  return best;
}

std::optional<double> resample(const RssTrace& model, double distance_m) {
  const auto samples = model.samples();
  if (samples.empty() || distance_m < samples.front().distance_m ||
      distance_m > samples.back().distance_m) {
    return std::nullopt;
  }
  const auto hi = std::lower_bound(samples.begin(), samples.end(), distance_m,
                                   [](const RssSample& s, double d) { return s.distance_m < d; });
  if (hi->distance_m == distance_m) return hi->rss_db;
  const auto lo = std::prev(hi);
  if (lo->below_floor() || hi->below_floor()) return kBelowFloor;
  const double t = (distance_m - lo->distance_m) / (hi->distance_m - lo->distance_m);
  return lo->rss_db + t * (hi->rss_db - lo->rss_db);
}

ComparisonReport compare(const RssTrace& model, const RssTrace& measured,
                         std::optional<double> sensitivity_floor) {
  std::size_t overlapping = 0;
  std::size_t compared = 0;
  double sum_sq = 0.0;
  for (const auto& s : measured.samples()) {
    const auto m = resample(model, s.distance_m);
    if (!m) continue;
    ++overlapping;
    if (is_below_floor(*m) || s.below_floor()) continue;
    const double diff = *m - s.rss_db;
    sum_sq += diff * diff;
    ++compared;
  }
  if (overlapping == 0) {
    throw ComparisonError("traces '" + model.label() + "' and '" + measured.label() +
                          "' have no overlapping distance support");
  }
  if (compared == 0) {
    throw ComparisonError("no distance where both '" + model.label() + "' and '" +
                          measured.label() + "' are above floor");
  }

  ComparisonReport report{};
  report.rmse_db = std::sqrt(sum_sq / static_cast<double>(compared));
  report.compared_points = compared;
  report.peak_distance_model = model.samples()[*model.argmax()].distance_m;
  report.peak_distance_trace = measured.samples()[*measured.argmax()].distance_m;
  report.peak_distance_error = std::abs(report.peak_distance_model - report.peak_distance_trace);
  report.sensitivity_floor = sensitivity_floor;
  report.coverage_interval_model = coverage_interval(model, sensitivity_floor);
  report.coverage_interval_trace = coverage_interval(measured, sensitivity_floor);
  return report;
}

}  // namespace a2g
