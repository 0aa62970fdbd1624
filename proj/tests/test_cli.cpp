#include <gtest/gtest.h>

#include <filesystem>
#include <random>
#include <sstream>

#include "cellman/cli.hpp"
#include "fixtures.hpp"

using namespace cellman;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "cellman");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return (fs::path(CELLMAN_DATA_DIR) / name).string(); }

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("cellman_cli_" + std::to_string(std::random_device{}()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string operator/(const std::string& name) const { return (path / name).string(); }
};

}  // namespace

TEST(Cli, Info) {
  auto r = run({"info", data("cycle5.json")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "dim=1 n=5 excess=2 f=(5,5)\n");

  auto j = run({"--json", "info", data("octahedron.json")});
  ASSERT_EQ(j.code, 0);
  auto doc = nlohmann::json::parse(j.out);
  EXPECT_EQ(doc["schema"], 1);
  EXPECT_EQ(doc["f_vector"], nlohmann::json({6, 12, 8}));
  EXPECT_EQ(nlohmann::json::parse(run({"info", data("cycle5.json"), "--json"}).out)["excess"], 2);
}

TEST(Cli, EnumerateCounts) {
  EXPECT_EQ(run({"enumerate", "--excess", "1", "--dim", "4", "--count-only"}).out, "6\n");
  EXPECT_EQ(run({"enumerate", "--excess", "2", "--dim", "5", "--count-only"}).out, "10\n");
  auto nb = run({"--json", "enumerate", "--excess", "2", "--dim", "10", "--neighbourly", "--count-only"});
  auto doc = nlohmann::json::parse(nb.out);
  EXPECT_EQ(doc["count"], 27);
  EXPECT_EQ(doc["printed_formula"], 17);
  EXPECT_EQ(run({"enumerate", "--excess", "3", "--dim", "4"}).code, 2);
  EXPECT_EQ(run({"enumerate", "--excess", "1", "--dim", "0", "--count-only"}).code, 2);
}

TEST(Cli, EnumerateWritesCatalog) {
  TempDir dir;
  auto r = run({"enumerate", "--excess", "2", "--dim", "4", "--out", dir / "cat"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 5);
  EXPECT_EQ(load_manifest(dir.path / "cat").size(), 5u);
  EXPECT_TRUE(check_manifest(dir.path / "cat").empty());
}

TEST(Cli, IsoExitCodes) {
  EXPECT_EQ(run({"iso", data("excess1_join.json"), data("excess1_join_tensor.json")}).code, 1);
  auto same = run({"iso", data("octahedron.json"), data("s1_example.json")});
  EXPECT_EQ(same.code, 1);
  TempDir dir;
  ASSERT_EQ(run({"dual", data("cycle5.json"), "-o", dir / "d.json"}).code, 0);
  auto r = run({"iso", data("cycle5.json"), dir / "d.json"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 5);
}

TEST(Cli, ValidateAndParseErrors) {
  TempDir dir;
  {
    std::ofstream(dir / "bad.json") << R"({"vertices":["a","b","c","d"],"faces":[[0],[1],[2],[3],[0,1],[2,3]]})";
    std::ofstream(dir / "dup.json") << R"({"vertices":["a","b"],"faces":[[0],[0],[1]]})";
    std::ofstream(dir / "junk.json") << "{ not json";
  }
  EXPECT_EQ(run({"validate", data("rp2.json")}).code, 0);
  auto bad = run({"validate", dir / "bad.json"});
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.out.find("connected"), std::string::npos);
  EXPECT_EQ(run({"info", dir / "bad.json"}).code, 1);
  EXPECT_EQ(run({"info", "--raw", dir / "bad.json"}).code, 0);
  EXPECT_EQ(run({"info", dir / "dup.json"}).code, 2);
  auto junk = run({"info", dir / "junk.json"});
  EXPECT_EQ(junk.code, 2);
  EXPECT_NE(junk.err.find("ParseError"), std::string::npos);
  EXPECT_EQ(run({"info", dir / "missing.json"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, Constructions) {
  TempDir dir;
  ASSERT_EQ(run({"make", "sphere:0", "-o", dir / "s0.json"}).code, 0);
  ASSERT_EQ(run({"op", "join", data("cycle5.json"), dir / "s0.json", "-o", dir / "j.json"}).code, 0);
  EXPECT_EQ(run({"info", dir / "j.json"}).out, "dim=2 n=7 excess=3 f=(7,15,10)\n");
  EXPECT_EQ(run({"op", "cartesian", data("cycle5.json"), data("cycle5.json"), "-o", dir / "t.json"}).code, 0);
  EXPECT_EQ(run({"bsd", "--euler", dir / "t.json"}).out, "0\n");
  EXPECT_EQ(run({"bsd", "--euler", data("rp2.json")}).out, "1\n");
  EXPECT_EQ(run({"op", "wedge", data("cycle5.json"), data("cycle5.json")}).code, 2);
  // Two disjoint pentagons: built, but not a valid pseudomanifold.
  ASSERT_EQ(run({"op", "cartesian", data("cycle5.json"), dir / "s0.json", "-o", dir / "two.json"}).code, 0);
  EXPECT_EQ(run({"validate", dir / "two.json"}).code, 1);

  auto printed = run({"make", "cycle:3"});
  EXPECT_EQ(printed.out, format_lattice(cycle(3)));
  EXPECT_EQ(run({"make", "torus"}).code, 2);
}

TEST(Cli, SymmetryCommands) {
  auto classes = run({"classes", data("s1_example.json")});
  EXPECT_EQ(classes.out, "{a1,a2}\n{b}\n{c}\n{d}\n{e}\n");
  auto dec = run({"decompose", data("octahedron.json")});
  EXPECT_EQ(dec.code, 0);
  EXPECT_EQ(std::count(dec.out.begin(), dec.out.end(), '\n'), 4);

  TempDir dir;
  ASSERT_EQ(run({"quotient", data("s1_example.json"), "-o", dir / "q.json"}).code, 0);
  EXPECT_EQ(run({"info", dir / "q.json"}).out, "dim=1 n=5 excess=2 f=(5,5)\n");
  ASSERT_EQ(run({"inflate", dir / "q.json", "--mult", "a1+a2=2", "-o", dir / "i.json"}).code, 0);
  EXPECT_EQ(run({"iso", dir / "i.json", data("s1_example.json")}).code, 0);
  EXPECT_EQ(run({"inflate", dir / "q.json", "--mult", "zz=2"}).code, 2);
  EXPECT_EQ(run({"inflate", dir / "q.json", "--mult", "b=0"}).code, 2);
  EXPECT_EQ(run({"quotient", data("cycle5.json")}).code, 0);

  EXPECT_EQ(run({"neighbourly", data("rp2.json")}).code, 0);
  EXPECT_EQ(run({"neighbourly", data("octahedron.json")}).code, 1);
}

TEST(Cli, Oracle) {
  auto r = run({"oracle", "--dim", "2", "--n", "5"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, 2), "2\n");
  EXPECT_EQ(run({"oracle", "--dim", "2", "--n", "6"}).code, 2);
}

TEST(Cli, Gale) {
  EXPECT_EQ(run({"gale", "validate", data("pentagon_diagram.json")}).code, 0);
  TempDir dir;
  ASSERT_EQ(run({"gale", "sphere", data("pentagon_diagram.json"), "-o", dir / "p.json"}).code, 0);
  EXPECT_EQ(run({"iso", dir / "p.json", data("cycle5.json")}).code, 0);

  auto found = run({"gale", "search", data("octahedron.json"), "-o", dir / "g.json"});
  ASSERT_EQ(found.code, 0);
  ASSERT_EQ(run({"gale", "sphere", dir / "g.json", "-o", dir / "o.json"}).code, 0);
  EXPECT_EQ(run({"iso", dir / "o.json", data("octahedron.json")}).code, 0);

  auto none = run({"--json", "gale", "search", data("rp2.json")});
  EXPECT_EQ(none.code, 1);
  EXPECT_TRUE(nlohmann::json::parse(none.out)["diagram"].is_null());
  EXPECT_EQ(run({"gale", "search", data("join_face_instance.json")}).code, 0);

  auto blocked = run({"gale", "shift", data("pentagon_diagram.json"), "--point", "v1", "--ray", "4"});
  EXPECT_EQ(blocked.code, 1);
  EXPECT_NE(blocked.err.find("BlockedShift"), std::string::npos);
  EXPECT_EQ(run({"gale", "shift", data("pentagon_diagram.json"), "--point", "v9", "--ray", "4"}).code, 2);
  auto same = run({"gale", "shift", data("pentagon_diagram.json"), "--point", "v1", "--ray", "0"});
  EXPECT_EQ(same.code, 0);
  EXPECT_EQ(diagram_from_json(ordered_json::parse(same.out)), load_diagram(data("pentagon_diagram.json")));
  EXPECT_EQ(run({"gale"}).code, 2);
}
