#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "rguard/cli.hpp"

namespace fs = std::filesystem;
using rguard::cli::run;

namespace {

const fs::path kFixtures = RGUARD_FIXTURE_DIR;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return (kFixtures / name).string(); }

fs::path scratch(const std::string& name, const std::string& text) {
  auto p = fs::temp_directory_path() / ("rguard_cli_" + name);
  std::ofstream(p) << text;
  return p;
}

}  // namespace

TEST(Cli, GuardRectangle) {
  auto r = call({"guard", "--input", fixture("rectangle.json")});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\"m\": 1"), std::string::npos);
  EXPECT_NE(r.out.find("1.5"), std::string::npos);
}

TEST(Cli, HiddenHStar) {
  auto r = call({"hidden", "--input", fixture("hstar.json")});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\"m\": 3"), std::string::npos);
  EXPECT_NE(r.out.find("\"clamps\": 0"), std::string::npos);
}

TEST(Cli, KeyOrder) {
  auto r = call({"hidden", "--input", fixture("rectangle.json")});
  auto pos = [&](const char* key) { return r.out.find(key); };
  EXPECT_LT(pos("\"m\""), pos("\"regions\""));
  EXPECT_LT(pos("\"regions\""), pos("\"points\""));
  EXPECT_LT(pos("\"points\""), pos("\"hidden\""));
  EXPECT_LT(pos("\"hidden\""), pos("\"algorithm\""));
  EXPECT_LT(pos("\"algorithm\""), pos("\"clamps\""));
}

TEST(Cli, ClassGateExitsThree) {
  auto r = call({"hidden", "--input", fixture("z.json")});
  EXPECT_EQ(r.code, 3);
  EXPECT_EQ(r.out, "");
  EXPECT_EQ(std::count(r.err.begin(), r.err.end(), '\n'), 1);
  EXPECT_EQ(call({"decompose", "--input", fixture("z.json"), "--mode", "pyramids"}).code, 3);
}

TEST(Cli, InvalidInputExitsOne) {
  auto odd = scratch("odd.json", R"({"vertices": [[0,0],[4,0],[4,3]]})");
  auto r = call({"validate", "--input", odd.string()});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("OddVertexCount"), std::string::npos);
  auto frac = scratch("frac.json", R"({"vertices": [[0,0],[4.5,0],[4.5,3],[0,3]]})");
  EXPECT_EQ(call({"validate", "--input", frac.string()}).code, 1);
  EXPECT_EQ(call({"validate", "--input", "/nonexistent.json"}).code, 1);
  EXPECT_EQ(call({"guard"}).code, 1);
  EXPECT_EQ(call({"decompose", "--input", fixture("hstar.json"), "--mode", "spiral"}).code, 1);
}

TEST(Cli, VerifyExitCodes) {
  auto good = call({"hidden", "--input", fixture("hstar.json")});
  auto g = scratch("good.json", good.out);
  EXPECT_EQ(call({"verify", "--input", fixture("hstar.json"), "--guards", g.string(), "--hidden"})
                .code,
            0);
  auto one = scratch("one.json", R"({"points": [[1, 1]]})");
  EXPECT_EQ(call({"verify", "--input", fixture("hstar.json"), "--guards", one.string()}).code, 2);
  auto seeing = scratch("seeing.json", R"({"points": [[1, 1], [5, 1], [9, 1]]})");
  auto r = call({"verify", "--input", fixture("hstar.json"), "--guards", seeing.string(), "--hidden"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.out.find("\"offending\""), std::string::npos);
  auto quarter = scratch("quarter.json", R"({"points": [[1.25, 1]]})");
  EXPECT_EQ(call({"verify", "--input", fixture("hstar.json"), "--guards", quarter.string()}).code, 1);
  auto outside = scratch("outside.json", R"({"points": [[3, 3]]})");
  EXPECT_EQ(call({"verify", "--input", fixture("hstar.json"), "--guards", outside.string()}).code, 2);
}

TEST(Cli, GenRoundTrips) {
  for (std::string family : {"monotone", "balanced", "histogram", "pyramid"}) {
    auto r = call({"gen", "--family", family, "--slabs", "5", "--seed", "11"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto f = scratch("gen_" + family + ".json", r.out);
    auto v = call({"validate", "--input", f.string()});
    EXPECT_EQ(v.code, 0);
    EXPECT_EQ(v.err, "");
    EXPECT_EQ(call({"gen", "--family", family, "--slabs", "5", "--seed", "11"}).out, r.out);
  }
}

TEST(Cli, Decompose) {
  auto slabs = call({"decompose", "--input", fixture("hstar.json")});
  EXPECT_EQ(slabs.code, 0);
  EXPECT_EQ(std::count(slabs.out.begin(), slabs.out.end(), '{') - 1, 5);
  auto balanced =
      call({"decompose", "--input", fixture("z.json"), "--mode", "balanced", "--variant", "basic"});
  EXPECT_EQ(balanced.code, 0);
  EXPECT_NE(balanced.out.find("\"cut_slab\": 2"), std::string::npos);
  auto pyramids = call({"decompose", "--input", fixture("hstar.json"), "--mode", "pyramids"});
  EXPECT_EQ(pyramids.code, 0);
}

TEST(Cli, Oracle) {
  auto r = call({"oracle", "--input", fixture("hstar.json"), "--hidden"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\"m\": 3"), std::string::npos);
  EXPECT_EQ(call({"oracle", "--input", fixture("hstar.json"), "--limit", "2"}).code, 1);
}

TEST(Cli, RenderSvg) {
  auto out = fs::temp_directory_path() / "rguard_cli_hstar.svg";
  auto r = call({"render", "--input", fixture("hstar.json"), "--guards",
                 fixture("hstar.hidden.json"), "--output", out.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  std::ifstream in(out);
  std::stringstream ss;
  ss << in.rdbuf();
  const auto svg = ss.str();
  auto count = [&](const std::string& needle) {
    std::size_t n = 0;
    for (auto p = svg.find(needle); p != std::string::npos; p = svg.find(needle, p + 1)) ++n;
    return n;
  };
  EXPECT_EQ(count("<path"), 1u);
  EXPECT_EQ(count("<rect"), 3u);
  EXPECT_EQ(count("<circle"), 3u);
  EXPECT_EQ(count("r=\"0.15\""), 3u);
  EXPECT_EQ(count("opacity=\"0.4\""), 3u);
  EXPECT_EQ(count("stroke-dasharray"), 4u);
  // y is flipped: the base y=0 sits at the bottom of a 6-high polygon plus margin.
  EXPECT_NE(svg.find("M0 7 L10 7"), std::string::npos);
}
