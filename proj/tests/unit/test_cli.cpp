#include <doctest.h>

#include "hb/cli.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

using namespace hb;

namespace {

struct Run {
  int code;
  std::string out;
};

Run hbtool(const std::string& args) {
  std::string cmd = std::string(HBTOOL_PATH) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
  int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("constants at 12 and 50 digits") {
  auto r = hbtool("constants --digits 12");
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["C"].get<std::string>().rfind("0.540928821901", 0) == 0);
  auto r50 = hbtool("constants --digits 50 --format csv");
  CHECK(r50.code == 0);
  CHECK(r50.out.find("L1,-0.45195216488440999749328684513657829161086065067377") != std::string::npos);
}

TEST_CASE("usage errors") {
  CHECK(hbtool("constants --digits 9").code == 2);
  CHECK(hbtool("export nonsense").code == 2);
  CHECK(hbtool("verify --suite bogus").code == 2);
  CHECK(hbtool("zeros --count 0").code == 2);
  CHECK(hbtool("").code == 2);
}

TEST_CASE("zeros table is ordered, windowed and deterministic") {
  auto a = hbtool("zeros --count 40 --format csv");
  auto b = hbtool("zeros --count 40 --format csv");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  std::istringstream is(a.out);
  std::string line;
  std::getline(is, line);
  CHECK(line == "n,tau_n,method");
  PrecisionScope s(40);
  int expect = 1;
  while (std::getline(is, line)) {
    auto c1 = line.find(','), c2 = line.rfind(',');
    int n = std::stoi(line.substr(0, c1));
    BigReal tau(line.substr(c1 + 1, c2 - c1 - 1));
    std::string method = line.substr(c2 + 1);
    CHECK(n == expect++);
    CHECK(tau > BigReal(static_cast<long>(n)));
    CHECK(tau < BigReal(static_cast<long>(n)) + BigReal(0.5));
    CHECK((method == "newton" || method == "series"));
  }
  CHECK(expect == 41);
}

TEST_CASE("exports") {
  auto rho = nlohmann::json::parse(hbtool("export rho --terms 20").out);
  CHECK(rho["coeffs"].size() == 21);
  PrecisionScope s(30);
  CHECK(abs(BigReal(rho["coeffs"][1].get<std::string>()) - BigReal("0.084655")) < BigReal("5e-7"));
  CHECK(rho["coeffs"][2] == "0");

  auto phi = nlohmann::json::parse(hbtool("export taylor-phi --terms 5").out);
  CHECK(phi["which"] == "phi");
  CHECK(phi["T"] == 5);
  CHECK(abs(BigReal(phi["coeffs"][1].get<std::string>()) + BigReal("0.97790")) < BigReal("5e-6"));

  auto h = nlohmann::json::parse(hbtool("export h --terms 40").out);
  CHECK(h["basis"] == "h");
  CHECK(h["coeffs"][0] == "0");

  auto leg = hbtool("export legendre --terms 10 --format csv");
  CHECK(leg.code == 0);
  CHECK(leg.out.rfind("n,l_n\n", 0) == 0);

  auto lv = nlohmann::json::parse(hbtool("export lvalues --terms 3").out);
  bool saw_pole = false;
  for (const auto& row : lv["values"])
    if (row["kind"] == "plus" && row["s"] == -1) saw_pole = row["pole"].get<bool>();
  CHECK(saw_pole);
}

TEST_CASE("verify writes a manifest and is byte-stable") {
  auto dir = std::filesystem::temp_directory_path() / "hbtool_cli_test";
  std::filesystem::create_directories(dir);
  auto out1 = dir / "q1.json", out2 = dir / "q2.json";
  CHECK(hbtool("verify --suite quadratic --out " + out1.string()).code == 0);
  CHECK(hbtool("verify --suite quadratic --out " + out2.string()).code == 0);
  CHECK(slurp(out1) == slurp(out2));
  auto m = nlohmann::json::parse(slurp(out1.string() + ".manifest.json"));
  CHECK(m["command"] == "verify");
  CHECK(m["digits"] == 30);
  CHECK(m["outputs"][0] == out1.string());
  CHECK(m["timestamp"].get<std::string>().size() == 20);
  auto report = nlohmann::json::parse(slurp(out1));
  CHECK(report["status"] == "pass");
  std::filesystem::remove_all(dir);
}

TEST_CASE("verify ode reports residuals below 1e-20") {
  auto r = hbtool("verify --suite ode --digits 30");
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  PrecisionScope s(30);
  for (const auto& c : j["checks"]) CHECK(BigReal(c["discrepancy"].get<std::string>()) < tenpow(-20));
}

TEST_CASE("conjecture suite never gates") {
  CommandResult r = cmd_verify("conjectures", 30, 0);
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.payload);
  for (const auto& c : j["checks"]) CHECK(c["status"] == "report-only");
}

TEST_CASE("in-process commands are deterministic") {
  CHECK(cmd_constants(20, "json").payload == cmd_constants(20, "json").payload);
  CHECK(cmd_export("c-basis", 8, 20, "json").payload == cmd_export("c-basis", 8, 20, "json").payload);
  CHECK_THROWS_AS(cmd_export("nope", 5, 20, "json"), std::invalid_argument);
}

TEST_CASE("spiral points") {
  PrecisionScope s(30);
  auto p = spiral_points(BigReal(5L), 20);
  REQUIRE(p.size() == 20);
  CHECK(abs(p.back().abs() - 5L) < tenpow(-25));
  CHECK(abs(p.front().abs() - BigReal(0.25)) < tenpow(-25));
}
