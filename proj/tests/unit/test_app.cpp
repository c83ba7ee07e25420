#include <gtest/gtest.h>

#include "tube/app/cli.hpp"
#include "tube/app/commands.hpp"
#include "tube/app/spec_parser.hpp"

using namespace tube;
using namespace tube::app;

TEST(SpecParser, BaseVarieties) {
  EXPECT_EQ(parse_spec("segre:2x3").variety.ambient_dim, 6u);
  EXPECT_EQ(parse_spec(" segre : 3 x 3 ").variety.ambient_dim, 9u);
  EXPECT_EQ(parse_spec("sympl:3,1").variety.ambient_dim, 9u);
  EXPECT_EQ(parse_spec("spinor:5").variety.ambient_dim, 16u);
  EXPECT_EQ(parse_spec("spinor").variety.ambient_dim, 16u);
  EXPECT_EQ(*parse_spec("pluecker:5").expected, 10);
  EXPECT_EQ(*parse_spec("severi").expected, 27);
}

TEST(SpecParser, ErrorsCarryPositions) {
  try {
    parse_spec("segre:2y3");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 7u);
  }
  try {
    parse_spec("veronese:3 junk");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 11u);
  }
  try {
    parse_spec("project(segre:2x2; 1,0,0)");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 19u);
  }
  EXPECT_THROW(parse_spec("cubic:3"), ParseError);
  EXPECT_THROW(parse_spec("spinor:6"), ParseError);
  EXPECT_THROW(parse_spec("project(segre:2x2; 1,0,0,1"), ParseError);
}

TEST(SpecParser, ProjectionClosedForms) {
  auto p = parse_spec("project(segre:4x4; 1,0,0,0, 0,1,0,0, 0,0,1,0, 0,0,0,0)");
  EXPECT_EQ(p.variety.ambient_dim, 15u);
  EXPECT_EQ(*p.expected, 1);
  EXPECT_EQ(*parse_spec("project(veronese:5; 1,0,0,0,0, 1,0,0,0, 1,0,0, 0,0, 0)").expected, 3);
  EXPECT_EQ(*parse_spec("project(sympl:3,1; 1,0,0,0,0,0, 0,1,0)").expected, 1);
  EXPECT_FALSE(parse_spec("project(quadric:5; 0,1,0,0,0)").expected.has_value());
  EXPECT_THROW(parse_spec("project(veronese:3; 1,0,0,0,0,0)"), SecantViolation);
}

TEST(ClosedForms, ProfilesOfL) {
  // a = 3 rows, b = 2 columns; L = E_00 + E_11: image dim 2, kernel 0
  EXPECT_EQ(segre_projection_dim(3, 2, {{Rat(1), 0, 0, 1, 0, 0}}), 0);
  // E_00 alone: image 1, kernel 1 -> (3 - 1) * 1
  EXPECT_EQ(segre_projection_dim(3, 2, {{Rat(1), 0, 0, 0, 0, 0}}), 2);
  EXPECT_EQ(pluecker_projection_dim(6, {{Rat(1), 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}}), 6);
  EXPECT_EQ(veronese_projection_dim(3, {{Rat(0), 0, 0, 0, 0, 0}}), 6);
}

TEST(Commands, TubeFamilyLabels) {
  EXPECT_EQ(tube_family('E', 7, 7), "e7");
  EXPECT_EQ(tube_family('D', 6, 5), "spinor");
  EXPECT_EQ(tube_family('D', 5, 5), "");
  EXPECT_EQ(tube_family('E', 6, 1), "");
  EXPECT_EQ(tube_family('A', 5, 3), "grassmannian");
}

TEST(Commands, ProlongRowsAndVerdicts) {
  RunConfig cfg;
  auto r = cmd_prolong("veronese:2", 1, cfg);
  ASSERT_EQ(r.rows.size(), 1u);
  EXPECT_EQ(r.rows[0].dims, (std::vector<std::size_t>{4, 3}));
  EXPECT_TRUE(r.all_pass());
  auto bad = cmd_prolong("segre:2y2", 1, cfg);
  EXPECT_FALSE(bad.all_pass());
  EXPECT_FALSE(bad.rows[0].error.empty());
}

TEST(Commands, GridRowsPass) {
  RunConfig cfg;
  auto r = cmd_inequality_grid({GridFamily::kSympl, GridFamily::kSegre, GridFamily::kPluecker, GridFamily::kVeronese}, 6,
                               false, cfg);
  EXPECT_EQ(r.rows.size(), 4u);
  EXPECT_TRUE(r.all_pass());
  EXPECT_EQ(parse_family("11"), GridFamily::kSegre);
  EXPECT_THROW(parse_family("14"), BadDimension);
}

TEST(Report, JsonRoundTripAndCsv) {
  RunConfig cfg;
  cfg.timing = false;
  auto r = cmd_prolong("segre:2x2", 1, cfg);
  r.command = {"prolong", "segre:2x2"};
  auto j = to_json(r);
  EXPECT_EQ(j["schema"], 1);
  auto back = report_from_json(j);
  EXPECT_EQ(to_json(back), j);
  auto csv = render(r, Format::kCsv);
  EXPECT_NE(csv.find("segre:2x2,7 4,4,4"), std::string::npos);
}

TEST(Cli, ResultsDoNotDependOnThreadCount) {
  auto a = execute({"table1", "--no-timing", "--threads", "1"}).report;
  auto b = execute({"table1", "--no-timing", "--threads", "4"}).report;
  EXPECT_EQ(to_json(a)["rows"], to_json(b)["rows"]);
  EXPECT_EQ(render(a, Format::kJson), render(execute({"table1", "--no-timing", "--threads", "1"}).report, Format::kJson));
}

TEST(Cli, SeedChangesSamplingButNotDimensions) {
  auto a = execute({"prolong", "pluecker:5", "--seed", "3"}).report;
  auto b = execute({"prolong", "pluecker:5", "--seed", "4"}).report;
  EXPECT_EQ(a.rows[0].dims, b.rows[0].dims);
}

TEST(Cli, VerbAliasesResolve) {
  auto a = execute({"symbol", "verify-prop36", "minors:2", "--no-timing"}).report;
  auto b = execute({"symbol", "verify-lambda", "minors:2", "--no-timing"}).report;
  EXPECT_EQ(to_json(a)["rows"], to_json(b)["rows"]);
  EXPECT_TRUE(a.all_pass());
  auto c = execute({"verify-thm11", "--max-rank", "4", "--no-timing"}).report;
  auto d = execute({"tube-types", "--max-rank", "4", "--no-timing"}).report;
  EXPECT_EQ(to_json(c)["rows"], to_json(d)["rows"]);
  auto e = execute({"inequality-grid", "--lemma", "12", "--no-instances", "--no-timing"}).report;
  auto f = execute({"inequality-grid", "--family", "pluecker", "--no-instances", "--no-timing"}).report;
  EXPECT_EQ(to_json(e)["rows"], to_json(f)["rows"]);
}
