#include "a2g/link.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

#include "a2g/errors.hpp"
#include "a2g/units.hpp"

namespace a2g {

namespace {

[[noreturn]] void domain_fail(const char* what, double value) {
  std::ostringstream msg;
  msg << what << " (got " << value << ")";
  throw DomainError(msg.str());
}

// Golden-section maximization of f on [lo, hi].
double golden_section_max(const RssProfile& f, double lo, double hi, double tolerance) {
  constexpr double inv_phi = 0.6180339887498949;  // (sqrt(5) - 1) / 2
  double a = lo;
  double b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  while (b - a > tolerance) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  return 0.5 * (a + b);
}

}  // namespace

LinkGeometry::LinkGeometry(double drone_height_m, double receiver_height_m,
                           double horizontal_distance_m)
    : drone_height_(drone_height_m),
      receiver_height_(receiver_height_m),
      horizontal_distance_(horizontal_distance_m) {
  if (!std::isfinite(drone_height_m) || drone_height_m <= 0.0) {
    domain_fail("drone height must be > 0 m", drone_height_m);
  }
  if (!std::isfinite(receiver_height_m) || receiver_height_m < 0.0) {
    domain_fail("receiver height must be >= 0 m", receiver_height_m);
  }
  if (!(drone_height_m > receiver_height_m)) {
    domain_fail("drone must fly above the receiver; receiver height", receiver_height_m);
  }
  if (!std::isfinite(horizontal_distance_m) || horizontal_distance_m < 0.0) {
    domain_fail("horizontal distance must be >= 0 m", horizontal_distance_m);
  }
}

double LinkGeometry::slant_distance() const noexcept {
  return std::hypot(height_difference(), horizontal_distance_);
}

double LinkGeometry::elevation_angle_deg() const noexcept {
  if (horizontal_distance_ == 0.0) return 90.0;
  return rad_to_deg(std::atan2(height_difference(), horizontal_distance_));
}

double elevation_angle(const LinkGeometry& geom) noexcept { return geom.elevation_angle_deg(); }

LinkBudget::LinkBudget(double tx_power_dbm, double carrier_frequency_hz, double path_loss_exponent)
    : tx_power_dbm_(tx_power_dbm),
      carrier_frequency_hz_(carrier_frequency_hz),
      path_loss_exponent_(path_loss_exponent) {
  if (!std::isfinite(tx_power_dbm)) domain_fail("transmit power must be finite dBm", tx_power_dbm);
  if (!std::isfinite(carrier_frequency_hz) || carrier_frequency_hz <= 0.0) {
    domain_fail("carrier frequency must be > 0 Hz", carrier_frequency_hz);
  }
  if (!std::isfinite(path_loss_exponent) || path_loss_exponent <= 0.0) {
    domain_fail("path loss exponent must be > 0", path_loss_exponent);
  }
}

double LinkBudget::wavelength_m() const noexcept { return kSpeedOfLight / carrier_frequency_hz_; }

double LinkBudget::path_gain(double slant_distance_m) const {
  if (!(slant_distance_m > 0.0)) {
    // Unreachable through LinkGeometry; guards direct callers.
    domain_fail("slant distance must be > 0 m", slant_distance_m);
  }
  return std::pow(wavelength_m() / (4.0 * std::numbers::pi * slant_distance_m),
                  path_loss_exponent_);
}

double rss_linear_from_gain(const LinkBudget& budget, const LinkGeometry& geom, double gain) {
  if (!std::isfinite(gain) || gain < 0.0) domain_fail("antenna gain must be >= 0", gain);
  return db_to_power(budget.tx_power_dbm()) * gain * budget.path_gain(geom.slant_distance());
}

double rss_from_gain(const LinkBudget& budget, const LinkGeometry& geom, double gain) {
  return power_to_db(rss_linear_from_gain(budget, geom, gain));
}

double rss_linear(const LinkBudget& budget, const LinkGeometry& geom, const AntennaConfig& tx,
                  const AntennaConfig& rx) {
  return rss_linear_from_gain(budget, geom, gain_product(tx, rx, geom.elevation_angle_deg()));
}

double rss(const LinkBudget& budget, const LinkGeometry& geom, const AntennaConfig& tx,
           const AntennaConfig& rx) {
  return power_to_db(rss_linear(budget, geom, tx, rx));
}

int rss_derivative_sign(const LinkBudget& budget, const LinkGeometry& geom) {
  const double l = geom.horizontal_distance();
  if (l == 0.0) domain_fail("RSS derivative is singular overhead; horizontal distance", l);
  const double dh = geom.height_difference();
  const double numerator = 2.0 * dh * dh - budget.path_loss_exponent() * l * l;
  return (numerator > 0.0) - (numerator < 0.0);
}

double critical_distance_analytic(double delta_h, double gamma) {
  if (!std::isfinite(delta_h) || delta_h <= 0.0) domain_fail("height difference must be > 0 m", delta_h);
  if (!std::isfinite(gamma) || gamma <= 0.0) domain_fail("path loss exponent must be > 0", gamma);
  return std::sqrt(2.0 * delta_h * delta_h / gamma);
}

double argmax_distance(const RssProfile& profile, SearchRange range, double resolution) {
  if (!std::isfinite(range.min_m) || range.min_m < 0.0) {
    domain_fail("search range start must be >= 0 m", range.min_m);
  }
  if (!std::isfinite(range.max_m) || !(range.max_m > range.min_m)) {
    domain_fail("search range must be non-degenerate; end", range.max_m);
  }
  if (!std::isfinite(resolution) || resolution <= 0.0) {
    domain_fail("search resolution must be > 0 m", resolution);
  }

  std::vector<double> grid;
  const auto steps = static_cast<std::size_t>(std::floor((range.max_m - range.min_m) / resolution + 1e-9));
  grid.reserve(steps + 2);
  for (std::size_t k = 0; k <= steps; ++k) {
    grid.push_back(std::min(range.max_m, range.min_m + static_cast<double>(k) * resolution));
  }
  if (grid.back() < range.max_m) grid.push_back(range.max_m);

  std::size_t best = 0;
  double best_value = kBelowFloor;
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const double v = profile(grid[k]);
    if (v > best_value) {
      best_value = v;
      best = k;
    }
  }
  if (is_below_floor(best_value)) {
    throw NoMaximumError("RSS is below floor everywhere in the search range");
  }
  if (best == 0 || best + 1 == grid.size()) return grid[best];
  return golden_section_max(profile, grid[best - 1], grid[best + 1], 1e-6);
}

double critical_distance_numeric(const LinkBudget& budget, double delta_h, const AntennaConfig& tx,
                                 const AntennaConfig& rx, SearchRange range, double resolution) {
  if (!std::isfinite(delta_h) || delta_h <= 0.0) domain_fail("height difference must be > 0 m", delta_h);
  const auto profile = [&](double l) { return rss(budget, LinkGeometry(delta_h, 0.0, l), tx, rx); };
  return argmax_distance(profile, range, resolution);
}

}  // namespace a2g
