#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "hpcc/fixtures.hpp"
#include "io.hpp"

namespace hpcc {
namespace {

using io::json;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string text(const OuterplanarStDigraph& g) { return io::graph_to_json(g).dump(); }

const char* kCycle =
    R"({"s":"s","t":"t","left":["l1","l2"],"right":["r1"],"edges":[["s","l1"],["l1","l2"],)"
    R"(["l2","t"],["s","r1"],["r1","t"],["r1","l1"],["l2","r1"]]})";

class EnvGuard {
 public:
  explicit EnvGuard(const char* value) {
    if (value) {
      setenv("HPCC_MAX_ORACLE", value, 1);
    } else {
      unsetenv("HPCC_MAX_ORACLE");
    }
  }
  ~EnvGuard() { unsetenv("HPCC_MAX_ORACLE"); }
};

TEST(Cli, SolveStrongRhombus) {
  const auto r = run({"solve"}, text(fixtures::strong_rhombus()));
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  const json doc = json::parse(r.out);
  EXPECT_EQ(doc["crossings"], 1);
  EXPECT_EQ(doc["completion_edges"], json::parse(R"([["a","b"]])"));
  EXPECT_EQ(doc["records"].size(), 1u);
}

TEST(Cli, CheckReportsValidation) {
  const auto ok = run({"check"}, text(fixtures::weak_rhombus()));
  ASSERT_EQ(ok.code, cli::kOk);
  EXPECT_EQ(json::parse(ok.out)["hamiltonian"], false);

  const auto cyc = run({"check"}, kCycle);
  EXPECT_EQ(cyc.code, cli::kValidationError);
  EXPECT_NE(cyc.err.find("CycleDetected"), std::string::npos);
}

TEST(Cli, ParseErrors) {
  EXPECT_EQ(run({"check"}, "{bad").code, cli::kParseError);
  EXPECT_EQ(run({"check"}, R"({"s":"s"})").code, cli::kParseError);
  EXPECT_EQ(run({}).code, cli::kParseError);
  EXPECT_EQ(run({"solve", "--nope"}).code, cli::kParseError);
  EXPECT_EQ(run({"solve", "-i", "/nonexistent/graph.json"}).code, cli::kParseError);
  EXPECT_EQ(run({"--help"}).code, cli::kOk);
}

TEST(Cli, OracleBound) {
  EnvGuard env(nullptr);
  const std::string big = text(generate({14, 0.5, 0.5, 1}));
  EXPECT_EQ(run({"oracle"}, big).code, cli::kInstanceTooLarge);
  EXPECT_EQ(run({"oracle", "--max-oracle", "14"}, big).code, cli::kOk);

  const std::string small = text(generate({8, 0.5, 0.5, 1}));
  const auto r = run({"oracle"}, small);
  ASSERT_EQ(r.code, cli::kOk);
  EXPECT_EQ(json::parse(r.out)["crossings"], solve(generate({8, 0.5, 0.5, 1})).total_crossings);
}

TEST(Cli, OracleBoundPrecedence) {
  const std::string g = text(generate({10, 0.5, 0.5, 2}));
  {
    EnvGuard env("8");
    EXPECT_EQ(run({"oracle"}, g).code, cli::kInstanceTooLarge);
    EXPECT_EQ(run({"oracle", "--max-oracle", "10"}, g).code, cli::kOk);
  }
  {
    EnvGuard env("10");
    EXPECT_EQ(run({"oracle"}, g).code, cli::kOk);
    EXPECT_EQ(run({"oracle", "--max-oracle", "9"}, g).code, cli::kInstanceTooLarge);
  }
  {
    EnvGuard env("ten");
    EXPECT_EQ(run({"oracle"}, g).code, cli::kParseError);
  }
}

TEST(Cli, OracleRestricted) {
  const auto r = run({"oracle", "--restricted", "1"}, text(fixtures::sp1()));
  ASSERT_EQ(r.code, cli::kOk);
  const json doc = json::parse(r.out);
  EXPECT_EQ(doc["max_per_edge"], 1);
  EXPECT_EQ(doc["crossings"], 1);
}

TEST(Cli, Compare) {
  EnvGuard env(nullptr);
  const auto r = run({"compare", "--count", "120", "--n", "9", "--seed", "5"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  const json doc = json::parse(r.out);
  EXPECT_EQ(doc["count"], 120);
  EXPECT_EQ(doc["mismatches"], 0);

  const auto serial = run({"compare", "--count", "120", "--n", "9", "--seed", "5", "--serial"});
  EXPECT_EQ(serial.out, r.out);

  const auto one = run({"compare", "-i", "-"}, text(fixtures::sp1()));
  ASSERT_EQ(one.code, cli::kOk);
  EXPECT_EQ(json::parse(one.out)["agree"], true);

  EXPECT_EQ(run({"compare", "--count", "10", "--left-fraction", "2"}).code,
            cli::kValidationError);
}

TEST(Cli, OutputIsByteStable) {
  const std::string g = text(generate({40, 0.4, 0.6, 9}));
  for (const char* verb : {"check", "decompose", "solve", "embed", "render"}) {
    const auto a = run({verb}, g);
    const auto b = run({verb}, g);
    ASSERT_EQ(a.code, cli::kOk) << verb << ": " << a.err;
    EXPECT_EQ(a.out, b.out) << verb;
  }
  EXPECT_EQ(run({"gen", "--n", "12", "--seed", "4"}).out,
            run({"gen", "--n", "12", "--seed", "4"}).out);
}

TEST(Cli, GenRoundTrips) {
  const auto one = run({"gen", "--n", "12", "--seed", "4", "--density", "0.8"});
  ASSERT_EQ(one.code, cli::kOk);
  const auto g = build_graph(io::parse_graph(one.out));
  EXPECT_EQ(g.vertex_count(), 12u);
  EXPECT_EQ(one.out, io::graph_to_json(g).dump(2) + "\n");

  const auto many = run({"gen", "--n", "6", "--count", "3"});
  ASSERT_EQ(many.code, cli::kOk);
  EXPECT_EQ(json::parse(many.out).size(), 3u);
  EXPECT_EQ(run({"gen", "--n", "1"}).code, cli::kValidationError);
}

TEST(Cli, EmbedRoundTrip) {
  const auto g = generate({30, 0.5, 0.7, 11});
  const auto r = run({"embed"}, text(g));
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  const BookEmbedding be = io::parse_embedding(g, json::parse(r.out));
  EXPECT_TRUE(validate_book_embedding(g, be).valid);
  EXPECT_EQ(io::embedding_to_json(g, be).dump(2) + "\n", r.out);
  EXPECT_EQ(be.spine, solve(g).hamiltonian_order);
}

TEST(Cli, DecomposeListsElements) {
  const auto r = run({"decompose"}, text(fixtures::two_strong_rhombi()));
  ASSERT_EQ(r.code, cli::kOk);
  const json doc = json::parse(r.out);
  EXPECT_EQ(doc["lambda"], 2);
  EXPECT_EQ(doc["elements"][0]["kind"], "polygon");
}

TEST(Cli, SvgOutput) {
  const auto dir = std::filesystem::temp_directory_path() / "hpcc_cli_test";
  std::filesystem::create_directories(dir);
  const auto svg = (dir / "sp1.svg").string();
  const auto json_out = (dir / "sp1.json").string();
  const auto r = run({"embed", "--svg", svg, "-o", json_out}, text(fixtures::sp1()));
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  EXPECT_TRUE(r.out.empty());
  std::ifstream f(svg);
  std::stringstream buf;
  buf << f.rdbuf();
  EXPECT_EQ(buf.str().rfind("<svg", 0), 0u);
  EXPECT_NE(buf.str().find("</svg>"), std::string::npos);
  EXPECT_TRUE(std::filesystem::exists(json_out));

  const auto rendered = run({"render"}, text(fixtures::sp1()));
  EXPECT_EQ(rendered.out, buf.str());
  std::filesystem::remove_all(dir);
}

TEST(Cli, SvgEscapesNames) {
  const std::string g =
      R"({"s":"<s>","t":"t&","left":["a\""],"right":["b"],"edges":[["<s>","a\""],)"
      R"(["a\"","t&"],["<s>","b"],["b","t&"],["<s>","t&"]]})";
  const auto r = run({"render"}, g);
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  EXPECT_EQ(r.out.find("<s>"), std::string::npos);
  EXPECT_NE(r.out.find("&lt;s&gt;"), std::string::npos);
}

}  // namespace
}  // namespace hpcc
