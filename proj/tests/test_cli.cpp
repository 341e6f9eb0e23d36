#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "doctest.h"
#include "dualart/cache.hpp"
#include "dualart/cli.hpp"
#include "dualart/error.hpp"
#include "dualart/presentation.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run cli(std::vector<std::string> args) {
  args.insert(args.begin(), "dualart");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = dualart::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(DUALART_DATA_DIR) + "/" + name; }

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("dualart-test-" + std::to_string(std::random_device{}()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_CASE("sha256") {
  CHECK(dualart::sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  CHECK(dualart::sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("interval export") {
  TempDir tmp;
  const auto out = (tmp.path / "hasse.dot").string();
  auto r = cli({"interval", "--system", data("a2.json"), "--out", out});
  CHECK(r.code == 0);
  const auto dot = slurp(out);
  CHECK(dot.starts_with("digraph interval {"));
  std::size_t nodes = 0, edges = 0;
  std::istringstream ss(dot);
  for (std::string line; std::getline(ss, line);) {
    if (line.find("->") != std::string::npos) ++edges;
    else if (line.find("[label=") != std::string::npos) ++nodes;
  }
  CHECK(nodes == 5);
  CHECK(edges == 6);
  auto js = cli({"interval", "--system", data("a3.json"), "--format", "json"});
  CHECK(js.code == 0);
  CHECK(js.out.find("dualart.interval/1") != std::string::npos);
}

TEST_CASE("exit codes") {
  auto pt = cli({"pan-transitive", "--system", data("a3.json")});
  CHECK(pt.code == 0);
  CHECK(pt.out.starts_with("pan-transitive: Proven"));
  CHECK(cli({"well-stabilized", "--system", data("a2.json")}).code == 0);
  CHECK(cli({"well-stabilized", "--system", data("a1_free_a1.json"), "--orbit-cap", "50"}).code == 0);
  auto bounded = cli({"pan-transitive", "--system", data("a1_free_a1.json"), "--orbit-cap", "50", "--search-cap", "50"});
  CHECK(bounded.code == 2);
  CHECK(bounded.out.starts_with("pan-transitive: NoViolationWithinBound"));
  CHECK(cli({"presentation", "--system", data("a1_free_a1.json"), "--orbit-cap", "20"}).code == 2);
  CHECK(cli({"interval", "--system", data("missing.json")}).code == 3);
  CHECK(cli({"interval", "--system", data("a2.json"), "--format", "gap"}).code == 3);
  CHECK(cli({"interval", "--system", data("a2.json"), "--orbit-cap", "0"}).code == 3);
  CHECK(cli({"nonsense"}).code == 3);
  CHECK(cli({}).code == 3);
  CHECK(cli({"--help"}).code == 0);
  CHECK(cli({"psi", "--system", data("a2.json"), "--word", "1,5"}).code == 3);
  CHECK(cli({"product", "--graph", data("path3.json")}).code == 3);
  CHECK(cli({"product", "--graph", data("path3.json"), "--cograph"}).code == 0);
}

TEST_CASE("commands are deterministic") {
  const std::vector<std::vector<std::string>> jobs{
      {"interval", "--system", data("b2.json"), "--format", "dot"},
      {"redwords", "--system", data("a3.json"), "--format", "json"},
      {"orbit", "--system", data("h3.toml"), "--format", "json"},
      {"pan-transitive", "--system", data("i2_5.json"), "--format", "json"},
      {"well-stabilized", "--system", data("a3.json"), "--format", "json"},
      {"presentation", "--system", data("a3.json"), "--format", "gap"},
      {"psi", "--system", data("a2.json"), "--word", "1,2,-1"},
      {"product", "--kind", "free", "--factor", data("a2.json"), "--factor", data("a1.json"), "--format", "json"},
      {"verify-theorems", "--kind", "direct", "--factor", data("a2.json"), "--factor", data("a1.json")},
      {"star-demo", "--strands", "3", "--braid", "1,-2,1", "--tau", "2,2", "--format", "json"},
  };
  for (const auto& job : jobs) {
    auto a = cli(job), b = cli(job);
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
    CHECK_FALSE(a.out.empty());
  }
}

TEST_CASE("cache") {
  TempDir tmp;
  const auto dir = (tmp.path / "cache").string();
  const std::vector<std::string> job{"orbit", "--system", data("a3.json"), "--cache-dir", dir};
  auto first = cli(job);
  CHECK(first.code == 0);
  CHECK(first.err.starts_with("cache: miss"));
  auto second = cli(job);
  CHECK(second.err.starts_with("cache: hit"));
  CHECK(second.out == first.out);
  auto plain = cli({"orbit", "--system", data("a3.json")});
  CHECK(plain.out == first.out);

  auto other = cli({"orbit", "--system", data("a3.json"), "--cache-dir", dir, "--orbit-cap", "7"});
  CHECK(other.err.starts_with("cache: miss"));
  CHECK(other.code == 2);
  auto other_again = cli({"orbit", "--system", data("a3.json"), "--cache-dir", dir, "--orbit-cap", "7"});
  CHECK(other_again.code == 2);
  CHECK(other_again.out == other.out);

  std::size_t files = 0;
  for (const auto& e : fs::directory_iterator(dir)) {
    ++files;
    CHECK(e.path().extension() == ".json");
  }
  CHECK(files == 2);

  // tamper with every entry
  for (const auto& e : fs::directory_iterator(dir)) {
    auto text = slurp(e.path());
    const auto pos = text.find("s1");
    REQUIRE(pos != std::string::npos);
    text[pos + 1] = '9';
    std::ofstream(e.path(), std::ios::binary | std::ios::trunc) << text;
  }
  auto tampered = cli(job);
  CHECK(tampered.err.find("CorruptCacheEntry") != std::string::npos);
  CHECK(tampered.err.find("cache: miss") != std::string::npos);
  CHECK(tampered.out == first.out);
  auto healed = cli(job);
  CHECK(healed.err.starts_with("cache: hit"));
  CHECK(healed.out == first.out);

  dualart::Cache c(dir);
  const auto key = std::string(64, 'a');
  CHECK_FALSE(c.get(key));
  c.put(key, {"payload", 2});
  auto hit = c.get(key);
  REQUIRE(hit);
  CHECK(hit->payload == "payload");
  CHECK(hit->exit_code == 2);
  std::ofstream(c.path_of(key)) << "{not json";
  CHECK_THROWS_AS(c.get(key), dualart::CorruptCacheEntry);
}

TEST_CASE("presentation files round trip") {
  TempDir tmp;
  for (const char* sys : {"a1.json", "a2.json", "b2.json", "a3.json", "h3.toml"})
    for (const char* style : {"hurwitz", "interval"}) {
      const auto out = (tmp.path / "p.txt").string();
      auto r = cli({"presentation", "--system", data(sys), "--style", style, "--out", out});
      REQUIRE(r.code == 0);
      const auto text = slurp(out);
      auto parsed = dualart::parse_presentation_text(text);
      CHECK(dualart::render_text(parsed) == text);
      CHECK_FALSE(parsed.generators.empty());
    }
}
