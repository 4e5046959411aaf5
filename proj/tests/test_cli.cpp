#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

// Runs the CLI through the shell; `redirect` picks what happens to stderr.
Run wlab(const std::string& args, const std::string& redirect = "2>/dev/null") {
  const std::string cmd = std::string(WLAB_CLI_PATH) + " " + args + " " + redirect;
  Run r;
  FILE* pipe = ::popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = ::pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);)
    if (!l.empty()) out.push_back(l);
  return out;
}

fs::path scratch_dir() {
  const fs::path d = fs::temp_directory_path() / "wlab-cli-tests";
  fs::remove_all(d);
  fs::create_directories(d);
  return d;
}

}  // namespace

TEST_CASE("verify exit codes") {
  const auto ok = wlab("verify --p 11..1000 --check thm1.1");
  CHECK(ok.code == 0);
  const auto rows = lines(ok.out);
  CHECK(rows.size() == 164);  // 168 primes up to 1000, minus 2, 3, 5, 7
  for (const auto& row : rows) {
    const auto j = nlohmann::json::parse(row);
    CHECK(j["check"] == "thm1.1");
    CHECK(j["holds"] == true);
    CHECK(j["required_exp"] == 7);
  }

  const auto p7 = wlab("verify --p 7 --check thm1.1 --exp 7");
  CHECK(p7.code == 2);
  const auto j7 = nlohmann::json::parse(lines(p7.out).at(0));
  CHECK(j7["holds"] == false);
  CHECK(j7["residual_valuation"] == 6);

  CHECK(wlab("verify --p 7 --check thm1.1").code == 0);

  const auto composite = wlab("verify --p 12 --check eq1.1", "2>&1");
  CHECK(composite.code == 1);
  CHECK(composite.out.find("not a prime") != std::string::npos);

  CHECK(wlab("verify --p 11 --check no-such-check").code == 1);
  CHECK(wlab("verify --p 11 --check thm1.1 --exp 9").code == 1);
  CHECK(wlab("verify").code != 0);
}

TEST_CASE("verify output formats and worker independence") {
  const std::string args = " verify --p 3..400 --check all";
  const auto one = wlab("--workers 1" + args);
  CHECK(one.code == 2);  // the printed forms of the four flawed formulas fail
  for (int w : {4, 16}) CHECK(wlab("--workers " + std::to_string(w) + args).out == one.out);

  const auto csv = wlab("--format csv verify --p 11..13 --check eq1.1");
  const auto csv_rows = lines(csv.out);
  REQUIRE(csv_rows.size() == 3);
  CHECK(csv_rows[0].rfind("check,p,", 0) == 0);
  CHECK(csv_rows[1].rfind("eq1.1,11,", 0) == 0);

  const auto human = wlab("--format human verify --p 16843 --check eq1.1");
  CHECK(human.code == 0);
  CHECK(human.out.find("16843") != std::string::npos);
  CHECK(wlab("--format xml verify --p 11").code != 0);
}

TEST_CASE("search") {
  const auto dir = scratch_dir();
  const auto ckpt = (dir / "w.json").string();
  const auto w = wlab("search wolstenholme --max 100000 --quiet --checkpoint " + ckpt);
  CHECK(w.code == 0);
  const auto hits = lines(w.out);
  REQUIRE(hits.size() == 1);
  const auto hit = nlohmann::json::parse(hits[0]);
  CHECK(hit["p"] == 16843);
  CHECK(hit["kind"] == "wolstenholme");
  CHECK(hit["witness"]["r1_valuation"] == 3);
  CHECK(hit["witness"]["binom_residual_valuation"] == 4);

  std::ifstream in(ckpt);
  const auto stored = nlohmann::json::parse(in);
  CHECK(stored["completed"] == true);
  CHECK(stored["hits"].size() == 1);

  // Resuming a finished run replays the stored hits.
  const auto again = wlab("search wolstenholme --max 100000 --quiet --resume " + ckpt);
  CHECK(again.code == 0);
  CHECK(again.out == w.out);

  CHECK(wlab("search wolstenholme --max 200000 --quiet --resume " + ckpt).code == 1);
  CHECK(wlab("search wolstenholme --max 100 --resume " + (dir / "missing.json").string()).code == 1);

  const auto p8 = wlab("--workers 4 search mod-p8 --max 10000 --quiet");
  CHECK(p8.code == 0);
  CHECK(lines(p8.out).empty());
  CHECK(wlab("search mod-p8 --min 5 --max 100").code == 1);
  CHECK(wlab("search nonsense --max 100").code != 0);

  const auto rep = wlab("report " + ckpt);
  CHECK(rep.code == 0);
  CHECK(rep.out.find("16843") != std::string::npos);
}

TEST_CASE("bernoulli") {
  auto value = [](const std::string& args) { return lines(wlab("--format human bernoulli " + args).out).at(0); };
  CHECK(value("--p 13 --index p-3 --prec 1") == "5");
  CHECK(value("--p 11 --index 3 --prec 2") == "0");
  CHECK(value("--p 16843 --index p-3 --prec 1") == "0");
  CHECK(value("--p 11 --index 2 --prec 1") == "2");  // 1/6 = 2 mod 11

  const auto j = nlohmann::json::parse(lines(wlab("bernoulli --p 11 --index p^3-p^2-2 --prec 2").out).at(0));
  CHECK(j["index"] == "1208");
  CHECK(j["prec"] == 2);

  CHECK(value("--p 7 --index 1 --prec 1") == "3");  // B_1 = -1/2
  CHECK(wlab("bernoulli --p 12 --index 2 --prec 1").code == 1);
  CHECK(wlab("bernoulli --p 11 --index 'p^' --prec 1").code == 1);
  CHECK(wlab("bernoulli --p 5 --index 4 --prec 3 --method extraction").code == 1);
}

TEST_CASE("report on a verify stream") {
  const auto dir = scratch_dir();
  const auto path = (dir / "r.jsonl").string();
  CHECK(wlab("verify --p 11..50 --check eq1.1 eq1.5 > " + path, "").code == 2);
  const auto rep = wlab("report " + path);
  CHECK(rep.code == 2);
  CHECK(rep.out.find("eq1.5") != std::string::npos);
  CHECK(wlab("verify --p 11..50 --check eq1.1 eq1.5-corrected > " + path, "").code == 0);
  CHECK(wlab("report " + path).code == 0);
}
