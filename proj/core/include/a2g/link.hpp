#pragma once

#include <functional>

#include "a2g/antenna.hpp"

namespace a2g {

/// Drone above a ground receiver, separated horizontally by `horizontal_distance`.
class LinkGeometry {
 public:
  /// Throws DomainError unless drone_height > receiver_height >= 0 and
  /// horizontal_distance >= 0 (all finite).
  LinkGeometry(double drone_height_m, double receiver_height_m, double horizontal_distance_m);

  double drone_height() const noexcept { return drone_height_; }
  double receiver_height() const noexcept { return receiver_height_; }
  double horizontal_distance() const noexcept { return horizontal_distance_; }

  double height_difference() const noexcept { return drone_height_ - receiver_height_; }
  double slant_distance() const noexcept;
  /// arctan(dh / l) in degrees, in (0, 90]; exactly 90 overhead.
  double elevation_angle_deg() const noexcept;

 private:
  double drone_height_;
  double receiver_height_;
  double horizontal_distance_;
};

/// Transmit power, carrier and path-loss exponent of the free-space-like link
///   P_RX = P_TX * G_TX(a) * G_RX(a) * (lambda / (4 pi d))^gamma
class LinkBudget {
 public:
  static constexpr double kDefaultFrequencyHz = 4.0e9;

  LinkBudget() = default;
  /// DomainError on non-finite power, frequency <= 0 or gamma <= 0.
  LinkBudget(double tx_power_dbm, double carrier_frequency_hz = kDefaultFrequencyHz,
             double path_loss_exponent = 2.0);

  double tx_power_dbm() const noexcept { return tx_power_dbm_; }
  double carrier_frequency_hz() const noexcept { return carrier_frequency_hz_; }
  double path_loss_exponent() const noexcept { return path_loss_exponent_; }
  double wavelength_m() const noexcept;

  /// (lambda / (4 pi d))^gamma, the whole factor raised to gamma.
  double path_gain(double slant_distance_m) const;

 private:
  double tx_power_dbm_ = 0.0;
  double carrier_frequency_hz_ = kDefaultFrequencyHz;
  double path_loss_exponent_ = 2.0;
};

double elevation_angle(const LinkGeometry& geom) noexcept;

/// Received power in mW for an arbitrary combined antenna gain. DomainError on
/// a negative or non-finite gain.
double rss_linear_from_gain(const LinkBudget& budget, const LinkGeometry& geom, double gain);
/// Same in dBm; kBelowFloor when the gain is zero.
double rss_from_gain(const LinkBudget& budget, const LinkGeometry& geom, double gain);

double rss_linear(const LinkBudget& budget, const LinkGeometry& geom, const AntennaConfig& tx,
                  const AntennaConfig& rx);
/// dBm; kBelowFloor when either antenna has a null toward the other.
double rss(const LinkBudget& budget, const LinkGeometry& geom, const AntennaConfig& tx,
           const AntennaConfig& rx);

/// Sign of dP_RX/dl for the analytic VV link: sign(2 dh^2 - gamma l^2).
/// DomainError at l = 0 where the derivative is singular.
int rss_derivative_sign(const LinkBudget& budget, const LinkGeometry& geom);

/// sqrt(2 dh^2 / gamma), the RSS-maximizing horizontal distance of the
/// analytic VV link.
double critical_distance_analytic(double delta_h, double gamma);

struct SearchRange {
  double min_m;
  double max_m;
};

/// RSS (dBm) as a function of horizontal distance.
using RssProfile = std::function<double(double horizontal_distance_m)>;

/// Grid argmax of `profile` over `range` at `resolution`, refined by
/// golden-section search between the neighbouring grid points (tolerance
/// 1e-6 m). Returns the range edge when the maximum sits there. Throws
/// NoMaximumError when every grid value is below floor.
double argmax_distance(const RssProfile& profile, SearchRange range, double resolution);

/// argmax_distance over rss() for a (tx, rx) pair at height difference delta_h.
double critical_distance_numeric(const LinkBudget& budget, double delta_h, const AntennaConfig& tx,
                                 const AntennaConfig& rx, SearchRange range, double resolution);

}  // namespace a2g
