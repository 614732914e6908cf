#include <gtest/gtest.h>

#include <sstream>

#include "hup/scenario.hpp"

using namespace hup;
using namespace hup::cli;

namespace {
Scenario parse(const std::string& text) {
  std::istringstream in(text);
  return parse_scenario(in);
}
}  // namespace

TEST(ScenarioParse, FlatKeysAndComments) {
  const auto s = parse("; leading comment\nkind = reduce\n# other comment\nn = 2\np = 5\netas = 0.1, 0.4, 0.9, 1.7\n");
  EXPECT_EQ(s.kind, "reduce");
  EXPECT_EQ(s.integer("n"), 2);
  EXPECT_EQ(s.list("etas").size(), 4u);
  EXPECT_DOUBLE_EQ(s.num("missing", 3.5), 3.5);
  EXPECT_THROW(s.raw("missing"), UsageError);
}

TEST(ScenarioParse, Rejections) {
  EXPECT_THROW(parse("n = 1\n"), UsageError);
  EXPECT_THROW(parse("kind = nonsense\n"), UsageError);
  EXPECT_THROW(parse("kind = reduce\n[section]\nx = 1\n"), UsageError);
  EXPECT_THROW(parse("kind = reduce\nn = two\n").integer("n"), UsageError);
  EXPECT_THROW(parse("kind = reduce\nn = 1.5\n").integer("n"), UsageError);
  EXPECT_THROW(load_scenario("/nonexistent/scenario.ini"), IoError);
}

TEST(ScenarioParse, Densities) {
  const Density d = parse_density("gaussian(center=1, width=0.5, amp=2) + odd_bump(inner=0.3, width=1, amp_im=1)");
  ASSERT_EQ(d.atoms().size(), 2u);
  EXPECT_EQ(d.atoms()[0].kind, AtomKind::gaussian);
  EXPECT_DOUBLE_EQ(d.atoms()[0].center, 1.0);
  EXPECT_DOUBLE_EQ(d.atoms()[0].width, 0.5);
  EXPECT_EQ(d.atoms()[0].amplitude, cplx(2.0, 0.0));
  EXPECT_EQ(d.atoms()[1].kind, AtomKind::odd_bump);
  EXPECT_EQ(d.atoms()[1].amplitude, cplx(1.0, 1.0));  // amp defaults to 1
  const Density e = parse_density("box(width=2.5e+0, amp=1e+1)");
  EXPECT_DOUBLE_EQ(e.atoms()[0].width, 2.5);
  EXPECT_EQ(e.atoms()[0].amplitude, cplx(10.0, 0.0));
  EXPECT_THROW(parse_density("wave(width=1)"), UsageError);
  EXPECT_THROW(parse_density("box(width=1"), UsageError);
  EXPECT_THROW(parse_density("box(size=1)"), UsageError);
}

TEST(ScenarioRun, Reduce) {
  const auto r = run_scenario(parse("kind = reduce\nn = 2\np = 5\netas = 0.1, 0.4, 0.9, 1.7\n"));
  EXPECT_TRUE(r.pass()) << format_report(r);
  EXPECT_THROW(run_scenario(parse("kind = reduce\nn = 1\np = 3\netas = 0.1, 0.1, 0.9\n")), IllConditionedError);
  EXPECT_THROW(run_scenario(parse("kind = reduce\nn = 1\np = 3\netas = 0.1, 0.9\n")), UsageError);
}

TEST(ScenarioRun, Discriminant) {
  // Cube roots of unity with n = 1, p = 3 give equal h_2 values.
  const auto r = run_scenario(parse("kind = discriminant\nn = 1\np = 3\netas = 0, 0.6666666666666666, 1.3333333333333333\nexpect = 0\n"));
  EXPECT_TRUE(r.pass()) << format_report(r);
}

TEST(ScenarioRun, Consecutive) {
  const auto r = run_scenario(parse("kind = consecutive_witness\nn = 2\nxi_step = 0.1\n"));
  EXPECT_TRUE(r.pass()) << format_report(r);
}

TEST(ScenarioRun, Cross) {
  const auto r = run_scenario(parse(
      "kind = cross_witness\nn = 1\nmode = xi_axis\ndensity0 = odd_bump(inner=0.5, width=1, amp=1)\ngrid_count = 201\n"));
  EXPECT_TRUE(r.pass()) << format_report(r);
}

TEST(ScenarioRun, Classify) {
  const auto r = run_scenario(parse("kind = classify\nn = 2\np = 3\nheights = 0, 0.6666666666666666, 1.3333333333333333\nxi_min = -2\nxi_max = 2\nexpect_class = 3\n"));
  EXPECT_TRUE(r.pass()) << format_report(r);
  const auto pts = run_scenario(parse("kind = classify\nn = 1\np = 3\npoints = 0:0; 0:0.5; 0:1.5; 1:0.25; 1:2.25\n"));
  EXPECT_TRUE(pts.pass());
  EXPECT_NE(format_report(pts).find("value class_1 = 1"), std::string::npos);
  EXPECT_NE(format_report(pts).find("value class_3 = 1"), std::string::npos);
}

TEST(ScenarioRun, Kronecker) {
  const auto r = run_scenario(parse("kind = kronecker_check\nalpha1 = 1\nalpha2 = 1.4142135623730951\n"));
  EXPECT_TRUE(r.pass()) << format_report(r);
}

TEST(ScenarioRun, ToleranceOverrideCanFail) {
  const auto s = parse("kind = consecutive_witness\nn = 1\nxi_step = 0.5\n");
  RunOptions strict;
  strict.tolerance = -1.0;
  EXPECT_FALSE(run_scenario(s, strict).pass());
}

TEST(ScenarioOutput, ReportIsDeterministic) {
  const auto s = parse("kind = ft_grid\nmeasure = consecutive_witness\nn = 2\nxi_count = 5\neta_count = 7\neta_max = 1.3333333333333333\n");
  const auto a = format_report(run_scenario(s));
  const auto b = format_report(run_scenario(s));
  EXPECT_EQ(a, b);
  EXPECT_NE(a.find("status: PASS"), std::string::npos);
  EXPECT_EQ(a.rfind("scenario: ft_grid\n", 0), 0u);
}

TEST(ScenarioOutput, GridCsv) {
  const auto s = parse("kind = ft_grid\nmeasure = line\nheights = 0, 1\nxi_count = 3\neta_count = 2\nxi_min = -1\nxi_max = 1\neta_min = 0\neta_max = 1\n");
  std::ostringstream a, b;
  write_grid_csv(s, a);
  write_grid_csv(s, b);
  EXPECT_EQ(a.str(), b.str());
  std::istringstream lines(a.str());
  std::string line;
  std::getline(lines, line);
  EXPECT_EQ(line, "xi,eta,re,im,abs");
  std::vector<std::string> rows;
  while (std::getline(lines, line)) rows.push_back(line);
  ASSERT_EQ(rows.size(), 6u);
  EXPECT_EQ(rows[0].rfind("-1,0,", 0), 0u);
  EXPECT_EQ(rows[1].rfind("-1,1,", 0), 0u);
  EXPECT_EQ(rows[2].rfind("0,0,", 0), 0u);
  EXPECT_THROW(write_grid_csv(parse("kind = reduce\n"), a), UsageError);
}
