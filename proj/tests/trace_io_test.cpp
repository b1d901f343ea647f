#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <sstream>

#include "a2g/errors.hpp"
#include "a2g/scenario.hpp"
#include "a2g/text.hpp"
#include "a2g/units.hpp"

namespace a2g {
namespace {

TEST(Text, NumberRoundTrip) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> dist(-200.0, 200.0);
  for (int i = 0; i < 10000; ++i) {
    const double x = dist(rng);
    ASSERT_EQ(*text::parse_number(text::format_number(x)), x);
  }
  EXPECT_EQ(text::format_number(kBelowFloor), "-inf");
  EXPECT_TRUE(is_below_floor(*text::parse_number(" -inf ")));
  EXPECT_FALSE(text::parse_number("inf"));
  EXPECT_FALSE(text::parse_number("nan"));
  EXPECT_FALSE(text::parse_number("1.5x"));
  EXPECT_FALSE(text::parse_number(""));
  EXPECT_EQ(*text::parse_number("+2.5"), 2.5);
}

TEST(ReadTrace, TwoRows) {
  std::istringstream in("distance_m,rss_dbm\n0,-60\n1.5,-61.25\n");
  const auto loaded = read_trace(in, "two.csv");
  EXPECT_EQ(loaded.trace.size(), 2u);
  EXPECT_EQ(loaded.trace.samples()[1].rss_db, -61.25);
  EXPECT_TRUE(loaded.warnings.empty());
  EXPECT_EQ(loaded.trace.label(), "two.csv");
}

TEST(ReadTrace, CommentsBlankLinesAndBelowFloor) {
  std::istringstream in("# flight 3\n\ndistance_m,rss_dbm\n# mid comment\n0,-inf\n 2 , -70 \n");
  const auto t = read_trace(in).trace;
  ASSERT_EQ(t.size(), 2u);
  EXPECT_TRUE(t.samples()[0].below_floor());
  EXPECT_EQ(t.samples()[1].rss_db, -70.0);
}

TEST(ReadTrace, DecreasingDistanceNamesTheLine) {
  std::istringstream in("distance_m,rss_dbm\n0,-60\n5,-61\n4,-62\n");
  try {
    read_trace(in, "bad.csv");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 4u);
    EXPECT_NE(std::string(e.what()).find("bad.csv:4"), std::string::npos) << e.what();
  }
}

TEST(ReadTrace, DuplicateDistancesUsePowerMean) {
  std::istringstream in("distance_m,rss_dbm\n39,-71\n40.0,-70\n40,-72\n41,-73\n");
  const auto loaded = read_trace(in);
  ASSERT_EQ(loaded.trace.size(), 3u);
  // Oracle: mean of 1e-7 mW and 10^-7.2 mW, back to dBm.
  const double expected = 10.0 * std::log10((1e-7 + std::pow(10.0, -7.2)) / 2.0);
  EXPECT_NEAR(expected, -70.886, 5e-4);
  EXPECT_NEAR(loaded.trace.samples()[1].rss_db, expected, 1e-12);
  ASSERT_EQ(loaded.warnings.size(), 1u);
  EXPECT_NE(loaded.warnings[0].find(":3:"), std::string::npos) << loaded.warnings[0];
}

TEST(ReadTrace, DuplicateWithBelowFloorCountsAsZeroPower) {
  std::istringstream in("distance_m,rss_dbm\n40,-inf\n40,-70\n");
  EXPECT_NEAR(read_trace(in).trace.samples()[0].rss_db, -70.0 - 10.0 * std::log10(2.0), 1e-12);
}

TEST(ReadTrace, Errors) {
  const auto parse = [](const std::string& s) {
    std::istringstream in(s);
    return read_trace(in, "x");
  };
  EXPECT_THROW(parse(""), ParseError);
  EXPECT_THROW(parse("distance_m,rss_dbm\n"), ParseError);
  EXPECT_THROW(parse("d,r\n0,1\n"), ParseError);
  EXPECT_THROW(parse("distance_m,rss_dbm\n0,nan\n"), ParseError);
  EXPECT_THROW(parse("distance_m,rss_dbm\n0,inf\n"), ParseError);
  EXPECT_THROW(parse("distance_m,rss_dbm\n-inf,-3\n"), ParseError);
  EXPECT_THROW(parse("distance_m,rss_dbm\n0,-3,4\n"), ParseError);
  EXPECT_THROW(load_trace("/nonexistent/trace.csv"), ParseError);
  try {
    parse("distance_m,rss_dbm\n0,-1\n1,abc\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
}

TEST(WriteTrace, RoundTripIsBitExact) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> level(-130.0, -20.0);
  std::vector<RssSample> samples;
  for (int i = 0; i < 300; ++i) samples.push_back({i * 0.37 + 1e-3 * i * i, i % 17 == 0 ? kBelowFloor : level(rng)});
  const auto trace = normalize_trace(RssTrace("measured flight", samples));
  std::stringstream buf;
  write_trace(buf, trace);
  const auto back = read_trace(buf).trace;
  EXPECT_EQ(back.label(), "measured flight");
  EXPECT_TRUE(back.normalized());
  ASSERT_EQ(back.size(), trace.size());
  for (std::size_t i = 0; i < trace.size(); ++i) ASSERT_EQ(back.samples()[i], trace.samples()[i]);
}

TEST(WriteTrace, TabDelimitedReloads) {
  const RssTrace t("t", {{0.0, -1.0}, {2.0, kBelowFloor}});
  std::stringstream buf;
  write_trace(buf, t, '\t');
  EXPECT_NE(buf.str().find("distance_m\trss_dbm"), std::string::npos);
  const auto back = read_trace(buf).trace;
  EXPECT_TRUE(back.samples()[1].below_floor());
}

SweepSpec small_sweep(Configuration c, std::vector<double> heights) {
  SweepSpec s;
  s.configuration = c;
  s.drone_heights = std::move(heights);
  s.step = 2.5;
  return s;
}

TEST(Sweep, WriteReadRows) {
  const LinkBudget b(7.0, 4e9, 2.0);
  const auto traces = run_sweep(small_sweep(Configuration::VV, {10.0, 20.0}), b);
  std::stringstream buf;
  write_sweep(buf, traces, b, NormColumn::TransmitPower);
  const std::string header = "distance_m,rss_dbm,rss_norm_db,height_m,config,alpha_deg";
  EXPECT_EQ(buf.str().substr(0, header.size()), header);
  const auto rows = read_sweep(buf);
  ASSERT_EQ(rows.size(), 2 * traces[0].trace.size());
  const auto& r = rows[traces[0].trace.size() + 4];
  EXPECT_EQ(r.height_m, 20.0);
  EXPECT_EQ(r.configuration, Configuration::VV);
  EXPECT_EQ(r.rss_dbm, traces[1].trace.samples()[4].rss_db);
  EXPECT_EQ(r.rss_norm_db, r.rss_dbm - 7.0);
  EXPECT_EQ(r.alpha_deg, traces[1].elevation_angle_deg(traces[1].trace.samples()[4]));
  EXPECT_TRUE(is_below_floor(rows[0].rss_norm_db));
  EXPECT_EQ(rows[0].alpha_deg, 90.0);
}

TEST(Sweep, PeakNormalizedColumn) {
  const LinkBudget b;
  const auto traces = run_sweep(small_sweep(Configuration::VH, {10.0, 30.0}), b);
  std::stringstream buf;
  write_sweep(buf, traces, b, NormColumn::PeakPerTrace, '\t');
  const auto rows = read_sweep(buf);
  std::map<double, double> peak;
  for (const auto& r : rows) {
    auto [it, inserted] = peak.try_emplace(r.height_m, r.rss_norm_db);
    if (!inserted) it->second = std::max(it->second, r.rss_norm_db);
  }
  ASSERT_EQ(peak.size(), 2u);
  EXPECT_EQ(peak[10.0], 0.0);
  EXPECT_EQ(peak[30.0], 0.0);
}

TEST(Sweep, SingleTraceSweepLoadsAsTrace) {
  const LinkBudget b;
  const auto traces = run_sweep(small_sweep(Configuration::HH, {30.0}), b);
  std::stringstream buf;
  write_sweep(buf, traces, b, NormColumn::TransmitPower);
  const auto t = read_trace(buf, "sweep.csv").trace;
  EXPECT_EQ(t.label(), "HH h=30");
  ASSERT_EQ(t.size(), traces[0].trace.size());
  for (std::size_t i = 0; i < t.size(); ++i) ASSERT_EQ(t.samples()[i], traces[0].trace.samples()[i]);
}

TEST(Sweep, MultiTraceSweepIsRejectedByTraceLoader) {
  const LinkBudget b;
  const auto traces = run_sweep(small_sweep(Configuration::HH, {10.0, 30.0}), b);
  std::stringstream buf;
  write_sweep(buf, traces, b, NormColumn::TransmitPower);
  EXPECT_THROW(read_trace(buf), ParseError);
}

TEST(Sweep, ReadRejectsTraceHeader) {
  std::istringstream in("distance_m,rss_dbm\n0,1\n");
  EXPECT_THROW(read_sweep(in), ParseError);
}

}  // namespace
}  // namespace a2g
