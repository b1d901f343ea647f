#include "a2g/multiantenna.hpp"

namespace a2g {

namespace {

// Sum of the gain products seen by one receive antenna from both drone
// antennas.
double composite_gain(Orientation rx, double alpha_deg) {
  const double g_rx = analytic_gain(rx, alpha_deg);
  return g_rx * analytic_gain(Orientation::Vertical, alpha_deg) +
         g_rx * analytic_gain(Orientation::Horizontal, alpha_deg);
}

}  // namespace

double composite_gain_horizontal(double alpha_deg) {
  return composite_gain(Orientation::Horizontal, alpha_deg);
}

double composite_gain_vertical(double alpha_deg) {
  return composite_gain(Orientation::Vertical, alpha_deg);
}

DualAntennaGains selection_gain(double alpha_deg) {
  DualAntennaGains g{};
  g.gain_rx_vertical = composite_gain_vertical(alpha_deg);
  g.gain_rx_horizontal = composite_gain_horizontal(alpha_deg);
  if (g.gain_rx_vertical >= g.gain_rx_horizontal) {
    g.selected = Orientation::Vertical;
    g.selected_gain = g.gain_rx_vertical;
  } else {
    g.selected = Orientation::Horizontal;
    g.selected_gain = g.gain_rx_horizontal;
  }
  return g;
}

double rss_vhvh(const LinkBudget& budget, const LinkGeometry& geom) {
  return rss_from_gain(budget, geom, selection_gain(geom.elevation_angle_deg()).selected_gain);
}

}  // namespace a2g
