#pragma once

#include "a2g/antenna.hpp"
#include "a2g/link.hpp"

// Two antennas per terminal, one vertical and one horizontal, analytic
// doughnut patterns only. The drone sends the same signal on both; each
// ground antenna collects both transmit contributions non-coherently and the
// ground side keeps the stronger branch.
namespace a2g {

struct DualAntennaGains {
  double gain_rx_vertical;
  double gain_rx_horizontal;
  Orientation selected;
  double selected_gain;
};

/// sin^2(a) + cos(a) sin(a): HH plus the V->H cross term.
double composite_gain_horizontal(double alpha_deg);
/// cos^2(a) + cos(a) sin(a): VV plus the H->V cross term.
double composite_gain_vertical(double alpha_deg);

/// Both composite gains and the selected (stronger) branch. Exact ties go to
/// Vertical.
DualAntennaGains selection_gain(double alpha_deg);

/// Received power (dBm) of the dual-antenna link with receive selection.
double rss_vhvh(const LinkBudget& budget, const LinkGeometry& geom);

}  // namespace a2g
