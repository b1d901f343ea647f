#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <utility>

#include "a2g/errors.hpp"
#include "a2g/scenario.hpp"
#include "a2g/text.hpp"
#include "a2g/units.hpp"

namespace a2g {

namespace {

constexpr std::string_view kTraceColumns[] = {"distance_m", "rss_dbm"};

enum class Layout { Trace, Sweep };

struct Header {
  Layout layout;
  char delimiter;
};

std::string header_line(std::span<const std::string_view> columns, char delimiter) {
  std::string out;
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (i > 0) out += delimiter;
    out += columns[i];
  }
  return out;
}

constexpr std::string_view kSweepHeader[] = {"distance_m", "rss_dbm", "rss_norm_db",
                                             "height_m",   "config",  "alpha_deg"};

std::optional<Header> parse_header(std::string_view line) {
  const char delimiter = line.find('\t') != std::string_view::npos ? '\t' : ',';
  const auto lower = text::to_lower(line);
  if (lower == header_line(kTraceColumns, delimiter)) return Header{Layout::Trace, delimiter};
  if (lower == header_line(kSweepHeader, delimiter)) return Header{Layout::Sweep, delimiter};
  return std::nullopt;
}

// Iterates non-blank, non-comment lines; comment bodies go to `on_comment`.
template <typename OnComment, typename OnLine>
void for_each_line(std::istream& in, OnComment on_comment, OnLine on_line) {
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto line = text::trim(raw);
    if (line.empty()) continue;
    if (line.front() == '#') {
      on_comment(text::trim(line.substr(1)));
      continue;
    }
    on_line(line_no, line);
  }
}

double parse_field(std::string_view field, const std::string& source, std::size_t line_no,
                   std::string_view what, bool allow_below_floor) {
  const auto value = text::parse_number(field);
  if (!value || (!allow_below_floor && is_below_floor(*value))) {
    throw ParseError(source, line_no, "bad " + std::string(what) + " '" + std::string(text::trim(field)) + "'");
  }
  return *value;
}

}  // namespace

LoadedTrace read_trace(std::istream& in, const std::string& source) {
  std::optional<Header> header;
  std::string label = source;
  bool normalized = false;
  std::optional<std::pair<double, std::string>> sweep_key;

  struct Pending {
    double distance;
    double first_db;
    double power_sum_mw;
    std::size_t count;
    std::size_t first_line;
  };
  std::vector<RssSample> samples;
  std::optional<Pending> pending;
  std::vector<std::string> warnings;

  const auto flush = [&] {
    if (!pending) return;
    if (pending->count > 1) {
      warnings.push_back(source + ":" + std::to_string(pending->first_line) + ": " +
                         std::to_string(pending->count) + " samples at distance " +
                         text::format_number(pending->distance) +
                         " merged by linear power mean");
    }
    // A lone sample keeps its text value exactly; only merged ones pass through mW.
    const double rss = pending->count == 1
                           ? pending->first_db
                           : power_to_db(pending->power_sum_mw / static_cast<double>(pending->count));
    samples.push_back({pending->distance, rss});
    pending.reset();
  };

  for_each_line(
      in,
      [&](std::string_view comment) {
        if (comment.starts_with("label:")) label = std::string(text::trim(comment.substr(6)));
        if (text::to_lower(comment) == "normalized: true") normalized = true;
      },
      [&](std::size_t line_no, std::string_view line) {
        if (!header) {
          header = parse_header(line);
          if (!header) {
            throw ParseError(source, line_no,
                             "expected header 'distance_m,rss_dbm' or a sweep CSV header");
          }
          return;
        }
        const auto fields = text::split(line, header->delimiter);
        const std::size_t expected = header->layout == Layout::Trace ? 2 : 6;
        if (fields.size() != expected) {
          throw ParseError(source, line_no, "expected " + std::to_string(expected) +
                                                " fields, got " + std::to_string(fields.size()));
        }
        const double distance = parse_field(fields[0], source, line_no, "distance", false);
        const double rss_dbm = parse_field(fields[1], source, line_no, "RSS", true);
        if (header->layout == Layout::Sweep) {
          const double height = parse_field(fields[3], source, line_no, "height", false);
          const auto config = parse_configuration(fields[4]);
          if (!config) throw ParseError(source, line_no, "bad config '" + std::string(fields[4]) + "'");
          std::pair<double, std::string> key{height, std::string(to_string(*config))};
          if (sweep_key && key != *sweep_key) {
            throw ParseError(source, line_no,
                             "sweep file holds more than one (height, config) trace; "
                             "a single trace is required");
          }
          sweep_key = std::move(key);
        }
        if (pending && distance == pending->distance) {
          pending->power_sum_mw += is_below_floor(rss_dbm) ? 0.0 : db_to_power(rss_dbm);
          ++pending->count;
          return;
        }
        if (pending && distance < pending->distance) {
          throw ParseError(source, line_no,
                           "distance " + text::format_number(distance) +
                               " is not increasing (previous " +
                               text::format_number(pending->distance) + ")");
        }
        flush();
        pending = Pending{distance, rss_dbm, is_below_floor(rss_dbm) ? 0.0 : db_to_power(rss_dbm), 1, line_no};
      });
  flush();

  if (!header) throw ParseError(source, 0, "empty trace file");
  if (samples.empty()) throw ParseError(source, 0, "trace file has no samples");
  if (sweep_key && label == source) {
    label = sweep_key->second + " h=" + text::format_number(sweep_key->first);
  }
  try {
    return {RssTrace(std::move(label), std::move(samples), normalized), std::move(warnings)};
  } catch (const DomainError& e) {
    throw ParseError(source, 0, e.what());
  }
}

LoadedTrace load_trace(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path.string(), 0, "cannot open trace file");
  return read_trace(in, path.string());
}

void write_trace(std::ostream& out, const RssTrace& trace, char delimiter) {
  if (!trace.label().empty()) out << "# label: " << trace.label() << '\n';
  if (trace.normalized()) out << "# normalized: true\n";
  out << header_line(kTraceColumns, delimiter) << '\n';
  for (const auto& s : trace.samples()) {
    out << text::format_number(s.distance_m) << delimiter << text::format_number(s.rss_db) << '\n';
  }
}

void write_sweep(std::ostream& out, std::span<const SweepTrace> traces, const LinkBudget& budget,
                 NormColumn norm, char delimiter) {
  out << header_line(kSweepHeader, delimiter) << '\n';
  for (const auto& t : traces) {
    std::optional<RssTrace> peak_normalized;
    if (norm == NormColumn::PeakPerTrace) peak_normalized = normalize_trace(t.trace);
    const auto raw = t.trace.samples();
    for (std::size_t i = 0; i < raw.size(); ++i) {
      const auto& s = raw[i];
      const double normalized_db = peak_normalized
                                       ? peak_normalized->samples()[i].rss_db
                                       : (s.below_floor() ? kBelowFloor : s.rss_db - budget.tx_power_dbm());
      out << text::format_number(s.distance_m) << delimiter << text::format_number(s.rss_db)
          << delimiter << text::format_number(normalized_db) << delimiter
          << text::format_number(t.drone_height_m) << delimiter << to_string(t.configuration)
          << delimiter << text::format_number(t.elevation_angle_deg(s)) << '\n';
    }
  }
}

std::vector<SweepRow> read_sweep(std::istream& in, const std::string& source) {
  std::optional<Header> header;
  std::vector<SweepRow> rows;
  for_each_line(
      in, [](std::string_view) {},
      [&](std::size_t line_no, std::string_view line) {
        if (!header) {
          header = parse_header(line);
          if (!header || header->layout != Layout::Sweep) {
            throw ParseError(source, line_no, "expected sweep CSV header");
          }
          return;
        }
        const auto f = text::split(line, header->delimiter);
        if (f.size() != 6) {
          throw ParseError(source, line_no, "expected 6 fields, got " + std::to_string(f.size()));
        }
        const auto config = parse_configuration(f[4]);
        if (!config) throw ParseError(source, line_no, "bad config '" + std::string(f[4]) + "'");
        rows.push_back({parse_field(f[0], source, line_no, "distance", false),
                        parse_field(f[1], source, line_no, "RSS", true),
                        parse_field(f[2], source, line_no, "normalized RSS", true),
                        parse_field(f[3], source, line_no, "height", false), *config,
                        parse_field(f[5], source, line_no, "elevation angle", false)});
      });
  if (!header) throw ParseError(source, 0, "empty sweep file");
  return rows;
}

}  // namespace a2g
