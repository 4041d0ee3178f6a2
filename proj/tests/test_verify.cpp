#include <gtest/gtest.h>

#include "ribbon/verify.hpp"

using namespace ribbon;
using namespace ribbon::verify;

TEST(Suites, RegistryNames) {
  const auto names = suite_names();
  EXPECT_EQ(names.size(), 12u);
  EXPECT_EQ(names.front(), "mon-examples");
  EXPECT_THROW(run_suite("no-such-suite"), std::invalid_argument);
}

TEST(Suites, QuickSuitesPass) {
  for (const char* name : {"mon-examples", "edge-types"}) {
    const Report r = run_suite(name);
    EXPECT_TRUE(r.passed()) << render(r, "text");
    EXPECT_TRUE(r.counterexample.is_null());
  }
  Options o;
  o.n = 2;
  for (const char* name : {"lemma-equivalence", "liberation-nonoriented", "liberation-oriented", "bijection"}) {
    const Report r = run_suite(name, o);
    EXPECT_TRUE(r.passed()) << render(r, "text");
    EXPECT_EQ(r.params["n"], 2);
  }
}

TEST(Suites, MainTheoremTwoEdges) {
  Options o;
  o.n = 2;
  const Report r = run_suite("main-theorem", o);
  ASSERT_TRUE(r.passed());
  EXPECT_EQ(r.table.columns, (std::vector<std::string>{"n", "class", "lhs_num", "lhs_den", "rhs_num", "rhs_den"}));
  ASSERT_EQ(r.table.rows.size(), 3u);
  for (const auto& row : r.table.rows) {
    EXPECT_EQ(row[2], "1");
    EXPECT_EQ(row[4], "1");
  }
  const std::string csv = render(r, "csv");
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "n,class,lhs_num,lhs_den,rhs_num,rhs_den");
  EXPECT_NE(csv.find(",B1W1[2],"), std::string::npos);
}

TEST(Suites, DeterministicAcrossWorkers) {
  Options o;
  o.n = 3;
  const std::string one = render(run_suite("main-theorem", o), "json");
  o.jobs = 3;
  EXPECT_EQ(render(run_suite("main-theorem", o), "json"), one);
  Options d;
  d.n = 4;
  d.samples = 200;
  const std::string a = render(run_suite("degree-bounds", d), "json");
  d.jobs = 4;
  EXPECT_EQ(render(run_suite("degree-bounds", d), "json"), a);
}

TEST(Suites, TimingOnlyWhenRequested) {
  Options o;
  EXPECT_FALSE(run_suite("mon-examples", o).runtime_seconds.has_value());
  o.timing = true;
  EXPECT_TRUE(run_suite("mon-examples", o).runtime_seconds.has_value());
}

TEST(Report, JsonRoundTrip) {
  Report r;
  r.suite = "demo";
  r.params["n"] = 3;
  r.check("holds", true, "fine");
  r.check("fails", false, "broken", json{{"value", "1/2"}});
  r.check("fails again", false, "ignored");
  r.table = {{"a", "b"}, {{"1", "x,y"}}};
  r.notes.push_back("a note");
  EXPECT_FALSE(r.passed());
  EXPECT_EQ(r.counterexample["check"], "fails");
  EXPECT_EQ(r.counterexample["witness"]["value"], "1/2");
  const Report back = report_from_json(json::parse(render(r, "json")));
  EXPECT_EQ(render(back, "json"), render(r, "json"));
  EXPECT_EQ(render(r, "csv"), "a,b\n1,\"x,y\"\n");
  EXPECT_NE(render(r, "text").find("FAIL"), std::string::npos);
  EXPECT_THROW(render(r, "xml"), std::invalid_argument);
}

TEST(Report, EmptyReportDoesNotPass) {
  Report r;
  EXPECT_FALSE(r.passed());
  r.suite = "s";
  r.check("ok", true);
  EXPECT_EQ(render(r, "csv"), "suite,check,pass,detail\ns,ok,true,\n");
}

TEST(Helpers, RectangleDecompositions) {
  EXPECT_EQ(rectangle_decompositions(Partition{3, 1}).size(), 1u);
  EXPECT_EQ(rectangle_decompositions(Partition{2, 2}).size(), 2u);
  EXPECT_EQ(rectangle_decompositions(Partition{2, 2, 1, 1}).size(), 4u);
  EXPECT_EQ(rectangle_decompositions(Partition{1, 1, 1}).size(), 4u);
  for (const auto& [p, q] : rectangle_decompositions(Partition{3, 3, 2, 1, 1}))
    EXPECT_EQ(multirectangular(MultiRect::from_isotropic(p, q, Rational(1))).shape(), (Partition{3, 3, 2, 1, 1}));
}

TEST(Helpers, RealizablePointsAndSampler) {
  const auto points = realizable_points(30, 3, 7);
  ASSERT_EQ(points.size(), 30u);
  for (const auto& mr : points) EXPECT_NO_THROW(multirectangular(mr));
  EXPECT_EQ(realizable_points(5, 2, 9)[4].str(), realizable_points(5, 2, 9)[4].str());
  Sampler a(3), b(3);
  for (int i = 0; i < 10; ++i) EXPECT_EQ(a.map(4), b.map(4));
  EXPECT_EQ(all_histories(fixtures::klein()).size(), 6u);
}

TEST(Helpers, ParallelForCoversEveryIndex) {
  std::vector<int> hits(100, 0);
  parallel_for(hits.size(), 4, [&](int, size_t i) { hits[i] += 1; });
  for (int h : hits) EXPECT_EQ(h, 1);
}
