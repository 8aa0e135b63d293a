#include <doctest.h>

#include "fockcat/cli.hpp"

#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace fs = std::filesystem;
using fockcat::cli::run;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::ordered_json call_json(std::vector<std::string> args) {
  args.push_back("--json");
  auto r = call(args);
  REQUIRE(r.code == 0);
  return nlohmann::ordered_json::parse(r.out);
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("fockcat_cli_" + std::to_string(std::rand()) + "_" +
                                        std::to_string(reinterpret_cast<std::uintptr_t>(this)));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

void write_file(const fs::path& p, const std::string& text) {
  std::ofstream(p) << text;
}

const std::vector<std::string> kWorked{"--t", "x,y", "--s", "0,x", "--lambda", "[[1],[],[],[]]", "--mu", "[[],[],[1],[]]"};

std::vector<std::string> with(std::vector<std::string> head, const std::vector<std::string>& tail) {
  head.insert(head.end(), tail.begin(), tail.end());
  return head;
}

std::vector<std::vector<std::string>> sample_commands() {
  return {
      {"strata", "classify", "--t", "x,y", "--s", "0,x"},
      {"strata", "classify", "--t", "x,y,z", "--s", "0,x+y,x+y-1"},
      {"order", "cmp", "--type", "0,0;0,1", "--lhs", "[[1],[]]", "--rhs", "[[],[1]]"},
      {"order", "interval", "--type", "0,0;0,0", "--top", "[[1],[1]]", "--bottom", "[[],[]]"},
      {"fock", "act", "--op", "f", "--i", "0", "--type", "0,0;0,1", "--vec", "[[],[]]"},
      {"fock", "act", "--op", "e", "--i", "1", "--type", "0,1;0,1", "--vec", "[[2],[1]]"},
      with({"jantzen", "sum"}, {"--t", "x,y", "--s", "0,x", "--lambda", "[[1],[],[],[]]"}),
      with({"jantzen", "sum"}, {"--t", "x,y", "--s", "0,0", "--lambda", "[[],[],[],[]]", "--max-boxes", "3"}),
      with({"jantzen", "det"}, kWorked),
      with({"jantzen", "simple"}, {"--t", "x,y", "--s", "0,x", "--lambda", "[[1],[],[],[]]"}),
      with({"mult", "verma"}, kWorked),
      with({"mult", "stabilize"}, kWorked),
      {"kl", "poly", "--n", "4", "--x", "1234", "--w", "4231"},
      {"kl", "poly", "--n", "4", "--x", "1234", "--w", "1342", "--jl", "1"},
      {"oracle", "shapovalov", "--blocks", "1,1", "--lambda", "0,0", "--degree", "2"},
      {"oracle", "compare", "--blocks", "2,1", "--lambda", "1,0,0", "--degree", "2"},
  };
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("documented examples") {
  auto cls = call_json({"strata", "classify", "--t", "x,y", "--s", "0,x"});
  CHECK(cls["parts"] == nlohmann::ordered_json::parse("[[1,3],[2],[4]]"));
  CHECK(cls["admissible"] == true);

  auto cmp = call_json({"order", "cmp", "--type", "0,1;0,1", "--lhs", "[[2,1],[1]]", "--rhs", "[[2,1],[1]]"});
  CHECK(cmp["leq"] == true);
  CHECK(cmp["geq"] == true);

  CHECK(call_json(with({"mult", "verma"}, kWorked))["multiplicity"] == 1);
  auto sum = call_json(with({"jantzen", "sum"}, {"--t", "x,y", "--s", "0,x", "--lambda", "[[1],[],[],[]]"}));
  REQUIRE(sum["terms"].size() == 1);
  CHECK(sum["terms"][0]["label"] == nlohmann::ordered_json::parse("[[],[],[1],[]]"));
  CHECK(sum["terms"][0]["sign"] == 1);
  auto kl = call_json({"kl", "poly", "--n", "4", "--x", "1234", "--w", "3412"});
  CHECK(kl["coefficients"] == nlohmann::ordered_json::parse("[1,1]"));
}

TEST_CASE("json output round-trips and is deterministic") {
  for (const auto& cmd : sample_commands()) {
    CAPTURE(cmd[0] + " " + cmd[1]);
    auto args = cmd;
    args.push_back("--json");
    auto a = call(args), b = call(args);
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    auto doc = nlohmann::ordered_json::parse(a.out);
    CHECK(doc.dump(2) + "\n" == a.out);
    CHECK(nlohmann::ordered_json::parse(doc.dump()) == doc);
    auto human = call(cmd);
    CHECK(human.code == 0);
    CHECK_FALSE(human.out.empty());
  }
}

TEST_CASE("exit codes") {
  CHECK(call(with({"mult", "verma"}, {"--t", "3,y", "--s", "0,x", "--lambda", "[[],[],[],[]]", "--mu", "[[],[],[],[]]"}))
            .code == 1);
  CHECK(call({"mult", "verma", "--t", "x,y,z", "--s", "0,x+y,x+y-1", "--lambda", "[[],[],[],[],[],[]]", "--mu",
              "[[],[],[],[],[],[]]"})
            .code == 1);
  CHECK(call({"oracle", "shapovalov", "--blocks", "1,1", "--lambda", "0,0", "--degree", "5"}).code == 1);
  auto bad_mp = call(with({"mult", "verma"}, {"--t", "x,y", "--s", "0,x", "--lambda", "[[1],[", "--mu", "[[],[],[],[]]"}));
  CHECK(bad_mp.code == 2);
  auto unknown = call({"order", "cmp", "--type", "0;0", "--lhs", "[[]]", "--rhs", "[[]]", "--bogus"});
  CHECK(unknown.code == 2);
  CHECK(unknown.err.find("Usage") != std::string::npos);
  CHECK(call({}).code == 2);
  CHECK(call({"order"}).code == 2);
  CHECK(call({"frobnicate"}).code == 2);
  CHECK(call({"--help"}).code == 0);
  CHECK(call({"fock", "act", "--op", "g", "--i", "0", "--type", "0;0", "--vec", "[[]]"}).code == 2);
  // Label size cap.
  CHECK(call({"order", "cmp", "--type", "0;0", "--lhs", "[[3]]", "--rhs", "[[3]]", "--max-boxes", "2"}).code == 1);
}

TEST_CASE("config file and overrides") {
  TempDir dir;
  const auto cfg = dir.path / "fockcat.conf";
  write_file(cfg, "# test\nrank_buffer = 0\nmax_boxes=12\n");
  auto base = with({"mult", "verma"}, kWorked);
  CHECK(call(with(base, {"--config", cfg.string()})).code == 1);  // rank_buffer 0 is below the strict bound
  CHECK(call(with(base, {"--config", cfg.string(), "--rank-buffer", "2"})).code == 0);

  setenv("FOCKCAT_CONFIG", cfg.string().c_str(), 1);
  CHECK(call(base).code == 1);
  unsetenv("FOCKCAT_CONFIG");
  CHECK(call(base).code == 0);

  write_file(cfg, "colour=blue\n");
  auto r = call(with(base, {"--config", cfg.string()}));
  CHECK(r.code == 2);
  CHECK(r.err.find(":1:") != std::string::npos);
  write_file(cfg, "rank_buffer=-1\n");
  CHECK(call(with(base, {"--config", cfg.string()})).code == 2);
  CHECK(call(with(base, {"--config", (dir.path / "missing.conf").string()})).code == 2);

  auto parsed = fockcat::cli::Config::parse("cache_path=/tmp/x\nmax_boxes = 5\n", "inline");
  CHECK(parsed.cache_path == std::optional<std::string>("/tmp/x"));
  CHECK(parsed.max_boxes == 5);
  CHECK(parsed.rank_buffer == 1);
}

TEST_CASE("warm and cold KL cache give identical results") {
  TempDir dir;
  const auto cache = (dir.path / "kl.cache").string();
  std::vector<std::vector<std::string>> cmds{
      {"kl", "poly", "--n", "4", "--x", "1234", "--w", "4231", "--json"},
      {"kl", "poly", "--n", "5", "--x", "12345", "--w", "45312", "--json"},
      with(with({"mult", "verma"}, kWorked), {"--json"}),
      {"mult", "stabilize", "--t", "x,y", "--s", "0,0", "--lambda", "[[],[],[],[]]", "--mu", "[[],[1],[1],[]]", "--json"},
  };
  for (const auto& cmd : cmds) {
    auto plain = call(cmd);
    REQUIRE(plain.code == 0);
    fs::remove(cache);
    auto cold = call(with(cmd, {"--cache-path", cache}));
    REQUIRE(cold.code == 0);
    CHECK(fs::exists(cache));
    auto warm = call(with(cmd, {"--cache-path", cache}));
    CHECK(warm.out == cold.out);
    CHECK(warm.out == plain.out);
  }
  fs::remove(cache);
  REQUIRE(call(with(cmds[1], {"--cache-path", cache})).code == 0);
  std::ifstream in(cache);
  std::string line;
  int records = 0;
  while (std::getline(in, line)) records += !line.empty();
  CHECK(records > 0);

  write_file(cache, "4;1234;4231;;;1,1\nnot a record\n");
  auto bad = call({"kl", "poly", "--n", "3", "--x", "123", "--w", "321", "--cache-path", cache});
  CHECK(bad.code == 2);
  CHECK(bad.err.find(":2:") != std::string::npos);
}

}  // TEST_SUITE
