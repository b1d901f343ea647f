#include "a2g/antenna.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "a2g/errors.hpp"
#include "a2g/text.hpp"
#include "a2g/units.hpp"

namespace a2g {

namespace {

void require_elevation(double alpha_deg) {
  if (!(alpha_deg >= 0.0 && alpha_deg <= 90.0)) {
    std::ostringstream msg;
    msg << "elevation angle " << alpha_deg << " deg outside [0, 90]";
    throw DomainError(msg.str());
  }
}

}  // namespace

std::string_view to_string(Orientation o) noexcept {
  return o == Orientation::Vertical ? "V" : "H";
}

std::optional<Orientation> parse_orientation(std::string_view text) {
  const auto lower = text::to_lower(text::trim(text));
  if (lower == "v" || lower == "vertical") return Orientation::Vertical;
  if (lower == "h" || lower == "horizontal") return Orientation::Horizontal;
  return std::nullopt;
}

TabulatedPattern::TabulatedPattern(std::vector<PatternSample> samples, std::string frequency_label)
    : samples_(std::move(samples)), frequency_label_(std::move(frequency_label)) {
  if (samples_.size() < 2) {
    throw DomainError("tabulated pattern needs at least 2 samples");
  }
  double peak = kBelowFloor;
  for (std::size_t i = 0; i < samples_.size(); ++i) {
    const auto& s = samples_[i];
    if (!std::isfinite(s.angle_deg) || s.angle_deg < -180.0 || s.angle_deg > 180.0) {
      std::ostringstream msg;
      msg << "pattern angle " << s.angle_deg << " deg outside [-180, 180]";
      throw DomainError(msg.str());
    }
    if (i > 0 && !(s.angle_deg > samples_[i - 1].angle_deg)) {
      std::ostringstream msg;
      msg << "pattern angles must be strictly increasing (" << samples_[i - 1].angle_deg
          << " followed by " << s.angle_deg << ")";
      throw DomainError(msg.str());
    }
    if (std::isnan(s.gain_db) || s.gain_db == std::numeric_limits<double>::infinity()) {
      std::ostringstream msg;
      msg << "pattern gain at " << s.angle_deg << " deg is not a number";
      throw DomainError(msg.str());
    }
    peak = std::max(peak, s.gain_db);
  }
  if (is_below_floor(peak)) {
    throw DomainError("tabulated pattern has no finite gain sample");
  }
  offset_db_ = 0.0 - peak;  // avoids -0 when the peak is already 0 dB
  for (auto& s : samples_) {
    if (!is_below_floor(s.gain_db)) s.gain_db += offset_db_;
  }
}

double TabulatedPattern::gain_db(double angle_deg) const {
  if (!(angle_deg >= min_angle_deg() && angle_deg <= max_angle_deg())) {
    std::ostringstream msg;
    msg << "angle " << angle_deg << " deg outside sampled pattern range [" << min_angle_deg()
        << ", " << max_angle_deg() << "]";
    throw RangeError(msg.str());
  }
  const auto hi = std::lower_bound(samples_.begin(), samples_.end(), angle_deg,
                                   [](const PatternSample& s, double a) { return s.angle_deg < a; });
  if (hi->angle_deg == angle_deg) return hi->gain_db;
  const auto lo = std::prev(hi);
  const double t = (angle_deg - lo->angle_deg) / (hi->angle_deg - lo->angle_deg);
  if (is_below_floor(lo->gain_db) || is_below_floor(hi->gain_db)) {
    // dB interpolation toward a null is undefined; fall back to linear gain
    // so the cell still reaches zero continuously.
    const double g = pattern_db_to_linear(lo->gain_db) +
                     t * (pattern_db_to_linear(hi->gain_db) - pattern_db_to_linear(lo->gain_db));
    return pattern_linear_to_db(g);
  }
  return lo->gain_db + t * (hi->gain_db - lo->gain_db);
}

double TabulatedPattern::gain(double angle_deg) const {
  return pattern_db_to_linear(gain_db(angle_deg));
}

double analytic_gain(Orientation orientation, double alpha_deg) {
  require_elevation(alpha_deg);
  return orientation == Orientation::Vertical ? cos_deg(alpha_deg) : sin_deg(alpha_deg);
}

double tabulated_gain(const TabulatedPattern& pattern, double alpha_deg) {
  return pattern.gain(alpha_deg);
}

double AntennaConfig::gain(double alpha_deg) const {
  require_elevation(alpha_deg);
  if (const auto* table = std::get_if<TabulatedPattern>(&pattern)) {
    const double angle = orientation == Orientation::Vertical ? alpha_deg : 90.0 - alpha_deg;
    return tabulated_gain(*table, angle);
  }
  return analytic_gain(orientation, alpha_deg);
}

double gain_product(const AntennaConfig& tx, const AntennaConfig& rx, double alpha_deg) {
  return tx.gain(alpha_deg) * rx.gain(alpha_deg);
}

}  // namespace a2g
