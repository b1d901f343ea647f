#pragma once

// Reference computations for the tests. Written from the closed forms
// directly (radians, textbook Friis in dB) and deliberately independent of
// the library code paths they check.

#include <cmath>
#include <functional>
#include <numbers>

namespace a2g::oracle {

inline double rad(double deg) { return deg * std::numbers::pi / 180.0; }

/// Free-space received power in dBm: P_TX + G_TX + G_RX - 20 log10(4 pi d / lambda),
/// generalized to exponent gamma; antenna gains given in linear units.
inline double friis_dbm(double tx_dbm, double gain_tx, double gain_rx, double frequency_hz,
                        double distance_m, double gamma) {
  const double lambda = 299792458.0 / frequency_hz;
  const double path_loss_db = 10.0 * gamma * std::log10(4.0 * std::numbers::pi * distance_m / lambda);
  return tx_dbm + 10.0 * std::log10(gain_tx * gain_rx) - path_loss_db;
}

/// Linear RSS shape (up to constants) of the analytic configurations as a
/// function of l, written in terms of l and dh instead of angles:
/// cos(a) = l/d, sin(a) = dh/d.
inline double vv_shape(double dh, double l, double gamma) {
  const double d2 = dh * dh + l * l;
  return (l * l / d2) / std::pow(d2, gamma / 2.0);
}
inline double vh_shape(double dh, double l, double gamma) {
  const double d2 = dh * dh + l * l;
  return (l * dh / d2) / std::pow(d2, gamma / 2.0);
}
inline double hh_shape(double dh, double l, double gamma) {
  const double d2 = dh * dh + l * l;
  return (dh * dh / d2) / std::pow(d2, gamma / 2.0);
}

/// Exhaustive argmax over [lo, hi] at spacing `step`.
inline double brute_force_argmax(const std::function<double(double)>& f, double lo, double hi,
                                 double step) {
  double best_x = lo;
  double best = f(lo);
  const auto n = static_cast<long>(std::floor((hi - lo) / step + 1e-9));
  for (long k = 1; k <= n; ++k) {
    const double x = lo + static_cast<double>(k) * step;
    const double v = f(x);
    if (v > best) {
      best = v;
      best_x = x;
    }
  }
  return best_x;
}

inline double central_difference(const std::function<double(double)>& f, double x, double h) {
  return (f(x + h) - f(x - h)) / (2.0 * h);
}

}  // namespace a2g::oracle
