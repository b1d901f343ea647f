#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>

#include "a2g/antenna.hpp"
#include "a2g/errors.hpp"
#include "a2g/text.hpp"
#include "a2g/units.hpp"

namespace a2g {

TabulatedPattern read_pattern(std::istream& in, const std::string& source) {
  std::vector<PatternSample> samples;
  std::string frequency_label;
  bool header_seen = false;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto line = text::trim(raw);
    if (line.empty()) continue;
    if (line.front() == '#') {
      auto body = text::trim(line.substr(1));
      constexpr std::string_view key = "frequency:";
      if (body.starts_with(key)) frequency_label = std::string(text::trim(body.substr(key.size())));
      continue;
    }
    if (!header_seen) {
      if (text::to_lower(line) != "angle_deg,gain_db") {
        throw ParseError(source, line_no, "expected header 'angle_deg,gain_db'");
      }
      header_seen = true;
      continue;
    }
    const auto fields = text::split(line, ',');
    if (fields.size() != 2) {
      throw ParseError(source, line_no, "expected 2 fields, got " + std::to_string(fields.size()));
    }
    const auto angle = text::parse_number(fields[0]);
    const auto gain = text::parse_number(fields[1]);
    if (!angle || is_below_floor(*angle)) {
      throw ParseError(source, line_no, "bad angle '" + std::string(fields[0]) + "'");
    }
    if (!gain) throw ParseError(source, line_no, "bad gain '" + std::string(fields[1]) + "'");
    if (!samples.empty() && !(*angle > samples.back().angle_deg)) {
      throw ParseError(source, line_no, "angles must be strictly increasing");
    }
    samples.push_back({*angle, *gain});
  }
  if (!header_seen) throw ParseError(source, 0, "empty pattern file");
  try {
    return TabulatedPattern(std::move(samples), std::move(frequency_label));
  } catch (const DomainError& e) {
    throw ParseError(source, 0, e.what());
  }
}

TabulatedPattern load_pattern(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path.string(), 0, "cannot open pattern file");
  return read_pattern(in, path.string());
}

void write_pattern(std::ostream& out, const TabulatedPattern& pattern) {
  if (!pattern.frequency_label().empty()) out << "# frequency: " << pattern.frequency_label() << '\n';
  out << "angle_deg,gain_db\n";
  for (const auto& s : pattern.samples()) {
    out << text::format_number(s.angle_deg) << ',' << text::format_number(s.gain_db) << '\n';
  }
}

TabulatedPattern digitize_doughnut(double step_deg) {
  if (!(step_deg > 0.0 && step_deg <= 90.0)) {
    throw DomainError("doughnut digitization step must be in (0, 90] degrees");
  }
  std::vector<PatternSample> samples;
  const auto n = static_cast<std::size_t>(std::floor(90.0 / step_deg + 1e-9));
  for (std::size_t i = 0; i <= n; ++i) {
    const double angle = std::min(90.0, static_cast<double>(i) * step_deg);
    samples.push_back({angle, pattern_linear_to_db(cos_deg(angle))});
  }
  if (samples.back().angle_deg < 90.0) samples.push_back({90.0, kBelowFloor});
  return TabulatedPattern(std::move(samples), "analytic-doughnut");
}

}  // namespace a2g
