#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace a2g {

enum class Orientation { Vertical, Horizontal };

std::string_view to_string(Orientation o) noexcept;
/// Accepts "V"/"H" and "vertical"/"horizontal", case-insensitive.
std::optional<Orientation> parse_orientation(std::string_view text);

/// Unit-peak doughnut whose vertical cut is a circle: a vertical antenna sees
/// cos(alpha) at elevation alpha, a horizontal one sin(alpha). Azimuth-uniform.
struct AnalyticDoughnut {};

struct PatternSample {
  double angle_deg;
  double gain_db;  ///< relative to peak; kBelowFloor marks an exact null
};

/// Vertical-plane cut of a vertically mounted antenna, sampled in elevation.
///
/// Samples are peak-normalized on construction (maximum finite gain becomes
/// 0 dB); the shift applied is kept in `normalization_offset_db()`. Lookups
/// interpolate linearly in dB between bracketing samples (linearly in gain
/// inside a cell that ends on a null) and never extrapolate.
class TabulatedPattern {
 public:
  /// Throws DomainError on fewer than 2 samples, non-increasing angles,
  /// angles outside [-180, 180], NaN/+inf gains, or an all-null pattern.
  explicit TabulatedPattern(std::vector<PatternSample> samples, std::string frequency_label = {});

  /// Gain in dB at a pattern angle. Throws RangeError outside the sampled span.
  double gain_db(double angle_deg) const;
  /// Linear (field) gain in [0, 1].
  double gain(double angle_deg) const;

  std::span<const PatternSample> samples() const noexcept { return samples_; }
  const std::string& frequency_label() const noexcept { return frequency_label_; }
  double normalization_offset_db() const noexcept { return offset_db_; }
  double min_angle_deg() const noexcept { return samples_.front().angle_deg; }
  double max_angle_deg() const noexcept { return samples_.back().angle_deg; }

 private:
  std::vector<PatternSample> samples_;
  std::string frequency_label_;
  double offset_db_ = 0.0;
};

using RadiationPattern = std::variant<AnalyticDoughnut, TabulatedPattern>;

struct AntennaConfig {
  Orientation orientation = Orientation::Vertical;
  RadiationPattern pattern = AnalyticDoughnut{};

  /// Linear gain toward elevation alpha in [0, 90] degrees.
  ///
  /// A tabulated pattern is looked up at alpha for a vertical antenna and at
  /// (90 - alpha) for a horizontal one, the same quarter-turn that maps cos to
  /// sin in the analytic model.
  double gain(double alpha_deg) const;
  bool is_analytic() const noexcept { return std::holds_alternative<AnalyticDoughnut>(pattern); }
};

/// cos(alpha) for Vertical, sin(alpha) for Horizontal. DomainError unless
/// alpha is in [0, 90].
double analytic_gain(Orientation orientation, double alpha_deg);

/// Linear gain of `pattern` at pattern angle `alpha_deg`; RangeError outside
/// the sampled span.
double tabulated_gain(const TabulatedPattern& pattern, double alpha_deg);

/// G_TX(alpha) * G_RX(alpha).
double gain_product(const AntennaConfig& tx, const AntennaConfig& rx, double alpha_deg);

// ---- pattern files ---------------------------------------------------------
//
//   # comment lines start with '#'
//   angle_deg,gain_db
//   0,0
//   1,-0.00132...
//   90,-inf
//
// A `# frequency: <label>` comment sets the frequency label.

TabulatedPattern read_pattern(std::istream& in, const std::string& source = "<stream>");
TabulatedPattern load_pattern(const std::filesystem::path& path);
void write_pattern(std::ostream& out, const TabulatedPattern& pattern);

/// Vertical cut of the analytic doughnut sampled every `step_deg` over
/// [0, 90]; the null at 90 degrees is written as -inf.
TabulatedPattern digitize_doughnut(double step_deg = 1.0);

}  // namespace a2g
