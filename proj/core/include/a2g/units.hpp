#pragma once

#include <cmath>
#include <limits>
#include <numbers>

namespace a2g {

inline constexpr double kSpeedOfLight = 299'792'458.0;  // m/s

/// Marker for a received power of exactly zero (or below the sensitivity
/// floor). Serialized as the literal `-inf`.
inline constexpr double kBelowFloor = -std::numeric_limits<double>::infinity();

inline bool is_below_floor(double db) noexcept { return db == kBelowFloor; }

constexpr double deg_to_rad(double deg) noexcept { return deg * std::numbers::pi / 180.0; }
constexpr double rad_to_deg(double rad) noexcept { return rad * 180.0 / std::numbers::pi; }

// sin/cos on [0, 90] degrees, built so that sin_deg(a) == cos_deg(90 - a)
// bit-for-bit: nulls are exact zeros and 45 degrees is an exact tie.
inline double sin_deg(double deg) noexcept {
  if (deg >= 0.0 && deg <= 90.0) {
    return deg <= 45.0 ? std::sin(deg_to_rad(deg)) : std::cos(deg_to_rad(90.0 - deg));
  }
  return std::sin(deg_to_rad(deg));
}

inline double cos_deg(double deg) noexcept {
  if (deg >= 0.0 && deg <= 90.0) return sin_deg(90.0 - deg);
  return std::cos(deg_to_rad(deg));
}

// Power quantities (RSS, path gain): 10 log10.
inline double power_to_db(double linear) noexcept {
  return linear > 0.0 ? 10.0 * std::log10(linear) : kBelowFloor;
}
inline double db_to_power(double db) noexcept { return std::pow(10.0, db / 10.0); }

// Antenna pattern gains are read off polar plots in field units: 20 log10.
inline double pattern_db_to_linear(double db) noexcept {
  return is_below_floor(db) ? 0.0 : std::pow(10.0, db / 20.0);
}
inline double pattern_linear_to_db(double linear) noexcept {
  return linear > 0.0 ? 20.0 * std::log10(linear) : kBelowFloor;
}

}  // namespace a2g
