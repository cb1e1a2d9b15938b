#include "doctest.h"

#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run cli(const std::string& args, const std::string& env = "") {
  const std::string command = env + " '" MACNEILLE_CLI "' " + args + " 2>&1";
  Run r;
  FILE* pipe = ::popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int raw = ::pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string fixture(const char* name) { return "'" + (fs::path(MACNEILLE_FIXTURES) / name).string() + "'"; }

nlohmann::json first_json(const std::string& text) { return nlohmann::json::parse(text.substr(text.find('{'))); }

}  // namespace

TEST_CASE("complete") {
  const auto anti = cli("complete " + fixture("antichain.json"));
  CHECK(anti.status == 0);
  const auto a = first_json(anti.out);
  CHECK(a["cuts"].size() == 4);
  CHECK(a["order"].size() == 4);

  CHECK(first_json(cli("complete " + fixture("butterfly.json")).out)["cuts"].size() == 7);
  CHECK(first_json(cli("complete " + fixture("butterfly.json") + " --strategy naive").out) ==
        first_json(cli("complete " + fixture("butterfly.json") + " --strategy generated").out));

  const auto chain = cli("complete " + fixture("chain3.json"));
  CHECK(chain.status == 2);
  CHECK(chain.out.find("poset has minimum") != std::string::npos);
  const auto allowed = cli("complete " + fixture("chain3.json") + " --allow-extrema");
  CHECK(allowed.status == 0);
  CHECK(first_json(allowed.out)["cuts"].size() == 3);
}

TEST_CASE("size cap from flag and environment") {
  CHECK(cli("complete " + fixture("butterfly.json") + " --strategy naive --size-cap 3").status == 2);
  CHECK(cli("complete " + fixture("butterfly.json") + " --strategy naive", "POSET_SIZE_CAP=3").status == 2);
  CHECK(cli("complete " + fixture("butterfly.json") + " --strategy naive", "POSET_SIZE_CAP=4").status == 0);
}

TEST_CASE("extend") {
  const auto sharp = cli("extend " + fixture("butterfly.json") + " --operator sharp --map id --subset single");
  REQUIRE(sharp.status == 0);
  CHECK(first_json(sharp.out)["result_cut"] == nlohmann::json::array({"a"}));

  const auto bar = first_json(cli("extend " + fixture("butterfly.json") + " --operator bar --map id --subset top").out);
  CHECK(bar["comparisons"]["equal_to_sharp"] == true);
  CHECK(bar["is_cut"] == true);

  const auto l = first_json(
      cli("extend " + fixture("butterfly.json") + " --operator L --map id --subset top --selector max").out);
  CHECK(l["result_cut"] == nlohmann::json::array({"a", "b"}));

  CHECK(cli("extend " + fixture("butterfly.json") + " --operator L --map id --subset top --selector bad").status == 2);
  CHECK(cli("extend " + fixture("butterfly.json") + " --operator L --map id --subset top").status == 2);
  CHECK(cli("extend " + fixture("butterfly.json") + " --operator hash --map id --subset top").status == 2);

  const auto naive = first_json(cli("extend " + fixture("fold.json") + " --operator bar --bar-strategy naive").out);
  const auto fast = first_json(cli("extend " + fixture("fold.json") + " --operator bar").out);
  CHECK(naive == fast);
  CHECK(fast["comparisons"]["equal_to_sharp"] == false);
}

TEST_CASE("verify") {
  const auto out = fs::temp_directory_path() / ("macneille-cli-" + std::to_string(::getpid()) + ".json");
  const auto one = cli("verify Prop3.1 --x-size 4 --instances 10 --out '" + out.string() + "'");
  CHECK(one.status == 0);
  CHECK(one.out.find("PASS Prop3.1") != std::string::npos);
  std::ifstream in(out);
  const auto report = nlohmann::json::parse(in);
  fs::remove(out);
  REQUIRE(report.size() == 1);
  CHECK(report[0]["check_id"] == "Prop3.1");
  CHECK(report[0]["instances_run"].get<int>() > 0);
  const auto unknown = cli("verify NoSuchProp");
  CHECK(unknown.status == 2);
  CHECK(unknown.out.find("unknown check") != std::string::npos);
  CHECK(cli("verify --list").status == 0);
  CHECK(cli("frobnicate").status == 2);
}

TEST_CASE("render") {
  const auto base = cli("render " + fixture("butterfly.json"));
  CHECK(base.status == 0);
  CHECK(base.out.find("digraph") != std::string::npos);
  const auto lattice = cli("render " + fixture("butterfly.json") + " --completion");
  CHECK(lattice.out.find("{a,b}") != std::string::npos);
}
