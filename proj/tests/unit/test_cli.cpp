#include <filesystem>
#include <sstream>

#include <gtest/gtest.h>

#include "bqaoa/cli.hpp"
#include "bqaoa/formats.hpp"
#include "bqaoa/instances.hpp"

using namespace bqaoa;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "bqaoa");
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("bqaoa_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
    write_file(dir_ / "triangle.txt", "0 1\n1 2\n0 2\n");
    write_file(dir_ / "g12.txt", format_edge_list(random_regular_graph(12, 3, 5)));
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

}  // namespace

TEST_F(Cli, ExactOnTriangle) {
  const auto r = run({"exact", "--instance", path("triangle.txt")});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = parse_json(r.out, "exact");
  EXPECT_EQ(doc.at("cmin"), -2.0);
  EXPECT_EQ(doc.at("cmax"), 0.0);
  EXPECT_EQ(doc.at("max_cut"), 2.0);
  EXPECT_EQ(doc.at("argmin_count"), 6);
}

TEST_F(Cli, MissingInstanceNamesThePath) {
  const auto r = run({"solve", "--instance", path("nope.txt"), "--seed", "1", "--out", path("o")});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("nope.txt"), std::string::npos);
  EXPECT_EQ(run({"exact", "--instance", path("nope.txt")}).code, 2);
}

TEST_F(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"gen", "hexagon"}).code, 2);
  EXPECT_EQ(run({"gen", "spin-glass", "--rows", "1", "--cols", "1"}).code, 2);
  EXPECT_EQ(run({"solve", "--instance", path("g12.txt"), "--out", path("o")}).code, 2);
  EXPECT_EQ(run({"solve", "--instance", path("g12.txt"), "--seed", "1", "--out", path("o"), "--schedule", "0,x"}).code, 2);
  EXPECT_EQ(run({"solve", "--instance", path("g12.txt"), "--seed", "1", "--out", path("o"), "--alpha", "2"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST_F(Cli, ComputationalFailureIsExitOne) {
  write_file(path("zero.json"), R"({"n": 3, "terms": []})");
  write_file(path("c.json"), R"({"n": 3, "counts": {"010": 2}})");
  EXPECT_EQ(run({"report", "--counts", path("c.json"), "--instance", path("zero.json")}).code, 1);
  EXPECT_EQ(run({"exact", "--instance", path("g12.txt"), "--enumeration-cap", "10"}).code, 1);
}

TEST_F(Cli, ReportOnEmptyCountsFile) {
  write_file(path("empty.json"), "");
  EXPECT_EQ(run({"report", "--counts", path("empty.json"), "--instance", path("triangle.txt")}).code, 2);
  write_file(path("none.json"), R"({"n": 3, "counts": {}})");
  EXPECT_EQ(run({"report", "--counts", path("none.json"), "--instance", path("triangle.txt")}).code, 2);
}

TEST_F(Cli, GenIsReproducibleAndRoundTrips) {
  for (const auto& name : {"a.json", "b.json"}) {
    ASSERT_EQ(run({"gen", "spin-glass", "--rows", "1", "--cols", "1", "--seed", "7", "--out", path(name)}).code, 0);
  }
  const auto a = read_file(path("a.json"));
  EXPECT_EQ(a, read_file(path("b.json")));
  const auto poly = polynomial_from_json(parse_json(a, "a"));
  const auto f = heavy_hex_fragment(1, 1);
  EXPECT_EQ(poly, spin_glass_instance(f.graph, f.triples, 7));
  EXPECT_EQ(polynomial_to_json(poly).dump(2) + "\n", a);

  ASSERT_EQ(run({"gen", "heavy-hex", "--rows", "2", "--cols", "1", "--out", path("hh.json")}).code, 0);
  const auto hh = read_file(path("hh.json"));
  const auto frag = graph_from_json(parse_json(hh, "hh"));
  EXPECT_EQ(graph_to_json(frag.graph, &frag.triples).dump(2) + "\n", hh);
  ASSERT_EQ(run({"gen", "spin-glass", "--coupling", path("hh.json"), "--seed", "3", "--out", path("sg.json")}).code, 0);
  EXPECT_EQ(polynomial_from_json(parse_json(read_file(path("sg.json")), "sg")),
            spin_glass_instance(frag.graph, frag.triples, 3));

  ASSERT_EQ(run({"gen", "regular", "--n", "16", "--k", "3", "--seed", "2", "--out", path("r.txt")}).code, 0);
  const auto r = read_file(path("r.txt"));
  EXPECT_EQ(format_edge_list(parse_edge_list(r)), r);
  EXPECT_EQ(parse_edge_list(r), random_regular_graph(16, 3, 2));
}

TEST_F(Cli, BaselineLocalBeatsRandom) {
  const auto local = run({"baseline", "--instance", path("g12.txt"), "--kind", "local", "--samples", "2000", "--seed", "1"});
  const auto random =
      run({"baseline", "--instance", path("g12.txt"), "--kind", "random", "--samples", "2000", "--seed", "1"});
  ASSERT_EQ(local.code, 0) << local.err;
  ASSERT_EQ(random.code, 0) << random.err;
  EXPECT_GE(summary_from_json(parse_json(local.out, "l")).mean_ar, summary_from_json(parse_json(random.out, "r")).mean_ar);
}

TEST_F(Cli, SolveWritesParseableReportDeterministically) {
  const std::vector<std::string> base{"solve", "--instance", path("g12.txt"), "--seed", "3", "--shots", "512",
                                      "--steps", "2", "--baseline", "random", "--baseline", "local"};
  auto first = base;
  first.insert(first.end(), {"--out", path("run1")});
  auto second = base;
  second.insert(second.end(), {"--out", path("run2"), "--threads", "3"});
  const auto r1 = run(first);
  ASSERT_EQ(r1.code, 0) << r1.err;
  ASSERT_EQ(run(second).code, 0);

  for (const auto* name : {"trace.log", "counts_raw.json", "counts_post.json", "summary.json", "cdf.txt"}) {
    EXPECT_TRUE(fs::exists(dir_ / "run1" / name)) << name;
  }
  const auto trace = parse_trace(read_file(path("run1/trace.log")));
  EXPECT_EQ(trace.stages.size(), 4U);
  EXPECT_EQ(format_trace(trace), read_file(path("run1/trace.log")));
  const auto raw = counts_from_json(parse_json(read_file(path("run1/counts_raw.json")), "raw"));
  const auto post = counts_from_json(parse_json(read_file(path("run1/counts_post.json")), "post"));
  EXPECT_EQ(raw.shots(), 512U);
  EXPECT_EQ(post.shots(), 512U);
  const auto summary = parse_json(read_file(path("run1/summary.json")), "summary");
  for (const auto* run_name : {"quantum", "quantum_raw", "random", "local"}) {
    EXPECT_NO_THROW((void)summary_from_json(summary.at("runs").at(run_name))) << run_name;
  }
  const auto cdf = parse_cdf(read_file(path("run1/cdf.txt")));
  EXPECT_FALSE(cdf.empty());
  EXPECT_EQ(format_cdf(cdf), read_file(path("run1/cdf.txt")));

  const auto strip_threads = [](std::string text) {
    auto doc = parse_json(text, "s");
    doc["config"].erase("threads");
    return doc.dump();
  };
  EXPECT_EQ(strip_threads(read_file(path("run1/summary.json"))), strip_threads(read_file(path("run2/summary.json"))));
  EXPECT_EQ(read_file(path("run1/trace.log")), read_file(path("run2/trace.log")));
  EXPECT_EQ(read_file(path("run1/counts_post.json")), read_file(path("run2/counts_post.json")));
}

TEST_F(Cli, ConfigDocumentDrivesSolve) {
  write_file(path("run.json"), R"({"instance": "g12.txt", "seed": 4, "out": "cfgrun", "shots": 256,
                                   "stages": 2, "steps_per_stage": 1, "baselines": ["local"]})");
  const auto r = run({"solve", "--config", path("run.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto summary = parse_json(read_file(path("cfgrun/summary.json")), "s");
  EXPECT_EQ(summary.at("config").at("stages"), 2);
  EXPECT_EQ(summary.at("config").at("bias_schedule").size(), 2U);
  EXPECT_TRUE(summary.at("runs").contains("local"));
  const auto again = run({"solve", "--config", path("run.json"), "--out", path("cfgrun2")});
  ASSERT_EQ(again.code, 0);
  EXPECT_EQ(read_file(path("cfgrun/summary.json")), read_file(path("cfgrun2/summary.json")));
}

TEST_F(Cli, ReportAndPostprocessOnSolveOutput) {
  ASSERT_EQ(run({"solve", "--instance", path("g12.txt"), "--seed", "8", "--shots", "256", "--steps", "1", "--out",
                 path("s")})
                .code,
            0);
  const auto rep = run({"report", "--counts", path("s/counts_post.json"), "--instance", path("g12.txt"), "--cdf",
                        path("cdf.txt")});
  ASSERT_EQ(rep.code, 0) << rep.err;
  const auto summary = parse_json(read_file(path("s/summary.json")), "s");
  EXPECT_EQ(parse_json(rep.out, "r"), summary.at("runs").at("quantum"));
  EXPECT_EQ(read_file(path("cdf.txt")), read_file(path("s/cdf.txt")));

  const auto post = run({"postprocess", "--counts", path("s/counts_raw.json"), "--instance", path("g12.txt"),
                         "--seed", "1", "--out", path("p.json")});
  ASSERT_EQ(post.code, 0) << post.err;
  EXPECT_EQ(counts_from_json(parse_json(read_file(path("p.json")), "p")).shots(), 256U);
}
