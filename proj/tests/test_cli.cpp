#include <gtest/gtest.h>

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "knotpoly/apoly.hpp"
#include "knotpoly/cli.hpp"
#include "knotpoly/format.hpp"
#include "support/oracles.hpp"
#include "support/printers.hpp"

using namespace knotpoly;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result R(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliFiles : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("knotpoly_cli_" + std::to_string(::getpid()) + "_" +
                                        ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string file(const std::string& name, const std::string& body) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << body;
    return p.string();
  }
  fs::path dir_;
};

}  // namespace

TEST(Cli, ApolyTorus) {
  EXPECT_EQ(R({"apoly", "torus", "3", "2"}).out, "1 + x^6*y\n");
  EXPECT_EQ(R({"apoly", "torus", "-3", "2"}).out, "y + x^6\n");
  EXPECT_EQ(R({"apoly", "torus", "-5", "3"}).out, "-y^2 + x^30\n");
  EXPECT_EQ(R({"apoly", "torus", "15", "7"}).out, "-1 + x^210*y^2\n");
  EXPECT_EQ(R({"apoly", "iterated", "(2,3),(3,2)"}).out,
            to_text(iterated_torus_apoly(IteratedTorusDesc::make({{2, 3}, {3, 2}})).poly) + "\n");
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(R({"apoly", "torus", "3", "2"}).code, kOk);
  EXPECT_EQ(R({}).code, kInvalidInput);
  EXPECT_EQ(R({"apoly", "torus", "x", "2"}).code, kInvalidInput);
  EXPECT_EQ(R({"apoly", "torus", "3"}).code, kInvalidInput);
  EXPECT_EQ(R({"frobnicate"}).code, kInvalidInput);
  EXPECT_EQ(R({"--format", "xml", "apoly", "torus", "3", "2"}).code, kInvalidInput);
  EXPECT_EQ(R({"apoly", "iterated", "(3,2"}).code, kInvalidInput);
  EXPECT_EQ(R({"newton", "slopes", "/nonexistent/poly.txt"}).code, kInvalidInput);
  EXPECT_EQ(R({"em", "genus", "2", "-1", "0"}).code, kInvalidInput);

  const Result bad = R({"apoly", "torus", "3", "3"});
  EXPECT_EQ(bad.code, kPrecondition);
  EXPECT_TRUE(bad.out.empty());
  EXPECT_NE(bad.err.find("gcd(|p|,q) = 1"), std::string::npos) << bad.err;
  EXPECT_EQ(R({"em", "genus", "1", "5", "0", "0"}).code, kPrecondition);
  EXPECT_NE(R({"em", "genus", "2", "1", "0", "0"}).err.find("(l,m) != (2,1)"), std::string::npos);
  EXPECT_EQ(R({"small", "3", "2"}).code, kPrecondition);
  EXPECT_EQ(R({"em", "sd", "3", "2", "1", "0"}).code, kPrecondition);
  EXPECT_EQ(R({"--help"}).code, kOk);
  EXPECT_NE(R({"apoly", "--help"}).out.find("torus"), std::string::npos);
}

TEST(Cli, EmFormulas) {
  EXPECT_EQ(R({"em", "genus", "2", "-1", "0", "0"}).out, "5\n");
  EXPECT_EQ(R({"em", "slope", "2", "-1", "0", "0"}).out, "-37/2\n");
  EXPECT_EQ(R({"em", "sd", "2", "2", "0", "0"}).out, "s=-18 d=8 g=5 r=-37/2\n");
  EXPECT_EQ(R({"em", "invert", "-36", "12"}).out, "(-4,-1)\n(3,-1)\n");
  EXPECT_EQ(R({"em", "dupes", "5", "1", "2", "0"}).out, "k(-4,1,2,0)\nk(-5,-1,-1,0) mirror\n");
  const Result col = R({"em", "collisions", "--bound-l", "8", "--bound-m", "8"});
  EXPECT_EQ(col.code, kOk);
  EXPECT_EQ(col.out, "(2,2,-3,-1)\n(6,2,-2,-5)\n(6,3,-2,-8)\n");
  EXPECT_FALSE(col.err.empty());
  EXPECT_EQ(R({"em", "verify-lstar", "2", "--bound-l", "20", "--bound-m", "20"}).out, "unique: true\n");
}

TEST(Cli, Small) {
  EXPECT_EQ(R({"small", "4", "5"}).out, "expansion: [0,-1,4]\nsolutions: none\nsmall: true\n");
  EXPECT_EQ(R({"small", "5", "8"}).out, "expansion: [0,-1,1,-1,2]\nsolutions:\n  I={3} J={5}\n  I={4} J={}\nsmall: false\n");
  const auto j = nlohmann::json::parse(R({"--format", "json", "small", "4", "5"}).out);
  EXPECT_EQ(j["expansion"], nlohmann::json::parse("[0,-1,4]"));
  EXPECT_TRUE(j["small"].get<bool>());
}

TEST(Cli, JsonRoundTrip) {
  for (const auto& args : std::vector<std::vector<std::string>>{{"apoly", "torus", "15", "7"},
                                                                {"apoly", "iterated", "(5,3),(-3,2)"},
                                                                {"apoly", "torus", "-7", "2"}}) {
    std::vector<std::string> a{"--format", "json"};
    a.insert(a.end(), args.begin(), args.end());
    const Result r = R(a);
    ASSERT_EQ(r.code, kOk);
    const auto j = nlohmann::json::parse(r.out);
    const IntPoly2 p = poly2_from_json(j["apoly"]);
    EXPECT_EQ(to_text(p) + "\n", R(args).out);
    EXPECT_EQ(to_json(p).dump(), j["apoly"].dump());
    IntPoly2 prod = IntPoly2::constant(1);
    for (const auto& f : j["factors"]) prod = prod * poly2_from_json(f);
    EXPECT_EQ(normalize(prod), p);
    EXPECT_EQ(j.dump() + "\n", r.out);
  }
  const auto sd = nlohmann::json::parse(R({"--format", "json", "em", "sd", "2", "2", "0", "0"}).out);
  EXPECT_EQ(sd["s"], -18);
  EXPECT_EQ(sd["g"], 5);
  EXPECT_EQ(sd["r"], "-37/2");
}

TEST(Cli, Deterministic) {
  for (const auto& args : std::vector<std::vector<std::string>>{{"em", "collisions", "--bound-l", "30", "--bound-m", "30"},
                                                                {"--format", "json", "detect", "coincidences", "--bound", "210"},
                                                                {"--format", "json", "apoly", "iterated", "(2,3),(5,2),(3,2)"}}) {
    const Result a = R(args), b = R(args);
    EXPECT_EQ(a.code, kOk);
    EXPECT_EQ(a.out, b.out);
    EXPECT_FALSE(a.out.empty());
  }
}

TEST_F(CliFiles, CableFromFile) {
  const std::string c = file("fig8.txt", oracle::kFigure8);
  const Result r = R({"apoly", "cable", "3", "2", "--companion", c});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_EQ(parse_poly2(r.out), normalize(F_poly(3, 2) * parse_poly2(oracle::kFigure8Cable2)));
  EXPECT_EQ(R({"apoly", "cable", "3", "2", "--companion", c, "--direct"}).out, r.out);
  EXPECT_EQ(R({"apoly", "cable", "-3", "-2", "--companion", c}).out, r.out);
  const std::string cj = file("fig8.json", to_json(parse_poly2(oracle::kFigure8)).dump());
  EXPECT_EQ(R({"apoly", "cable", "3", "2", "--companion", cj}).out, r.out);
  EXPECT_EQ(R({"apoly", "cable", "3", "2", "--companion", file("one.txt", "1")}).code, kPrecondition);
  EXPECT_EQ(R({"apoly", "cable", "3", "2", "--companion", file("junk.txt", "1 + z")}).code, kInvalidInput);
}

TEST_F(CliFiles, AlexAndNewton) {
  EXPECT_EQ(parse_upoly(R({"alex", "torus", "3", "2"}).out), parse_upoly("1 - t + t^2"));
  const std::string tre = file("tre.txt", "1 - t + t^2");
  const Result s = R({"alex", "satellite", "--companion", tre, "--pattern", tre, "-w", "2"});
  ASSERT_EQ(s.code, kOk) << s.err;
  EXPECT_EQ(parse_upoly(s.out), parse_upoly("1 - t + t^3 - t^5 + t^6"));

  const std::string t32 = file("t32.txt", "1 + x^6*y");
  EXPECT_EQ(R({"newton", "slopes", t32}).out, "6\n");
  EXPECT_EQ(R({"newton", "width", t32, "6"}).out, "0\n");
  EXPECT_EQ(R({"newton", "width", t32, "1/0"}).out, "1\n");
  EXPECT_EQ(R({"newton", "width", t32, "inf"}).out, "1\n");
  EXPECT_EQ(R({"newton", "width", t32, "six"}).code, kInvalidInput);
  EXPECT_EQ(R({"newton", "slopes", file("fig8.txt", oracle::kFigure8)}).out, "-4 4\n");
  EXPECT_EQ(R({"newton", "slopes", file("box.txt", "1 + x + y + x*y")}).out, "0 inf\n");
  EXPECT_EQ(R({"newton", "slopes", file("pt.txt", "x*y")}).code, kPrecondition);
  const Result sk = R({"newton", "slopes", t32, "--sketch"});
  EXPECT_NE(sk.out.find("j=1 ......o"), std::string::npos) << sk.out;
  const auto j = nlohmann::json::parse(R({"--format", "json", "newton", "slopes", t32}).out);
  EXPECT_EQ(j["vertices"], nlohmann::json::parse("[[0,0],[6,1]]"));
}

TEST_F(CliFiles, DetectTorus) {
  const std::string a = file("a.txt", "-1 + x^210*y^2");
  const std::string d1 = file("d1.txt", to_text(torus_alexander(35, 3).poly()));
  const std::string d2 = file("d2.txt", to_text(torus_alexander(15, 7).poly()));
  EXPECT_EQ(R({"detect", "torus", "--apoly", a, "--alex", d1}).out, "T(35,3)\n");
  EXPECT_EQ(R({"detect", "torus", "--apoly", a, "--alex", d2}).out, "T(15,7)\n");
  EXPECT_EQ(R({"--format", "json", "detect", "torus", "--apoly", a, "--alex", d2}).out, "{\"found\":true,\"p\":15,\"q\":7}\n");
  const std::string d3 = file("d3.txt", "1 - t + t^2");
  EXPECT_EQ(R({"--format", "json", "detect", "torus", "--apoly", a, "--alex", d3}).out, "{\"found\":false}\n");
  EXPECT_EQ(R({"detect", "torus", "--apoly", file("sq.txt", "1 + 2*x^6*y + x^12*y^2"), "--alex", d3}).code, kPrecondition);
  const Result c = R({"detect", "coincidences", "--bound", "120"});
  EXPECT_NE(c.out.find("T(15,7) T(35,3)"), std::string::npos);
}
