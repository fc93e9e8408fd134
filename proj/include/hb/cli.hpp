#pragma once

#include "hb/fourier.hpp"
#include "hb/ntlab.hpp"

#include <json.hpp>

#include <memory>
#include <string>
#include <vector>

namespace hb {

struct RunManifest {
  std::string command;
  nlohmann::json parameters;
  int digits = 0;
  std::vector<std::string> outputs;
  std::string timestamp;
};
nlohmann::json to_json(const RunManifest& m);
std::string iso8601_now();

struct CommandResult {
  std::string payload;
  int exit_code = 0;
  nlohmann::json parameters;
};

CommandResult cmd_constants(int digits, const std::string& format);
CommandResult cmd_zeros(int count, int digits, const std::string& format);
CommandResult cmd_verify(const std::string& suite, int digits, int tolerance_exponent);
CommandResult cmd_export(const std::string& what, int terms, int digits, const std::string& format);

const std::vector<std::string>& verify_suites();
const std::vector<std::string>& export_targets();

// shared state for a verify run; constants and zero models are built once
class SuiteContext {
 public:
  SuiteContext(int digits, int tolerance_exponent);
  int digits() const { return digits_; }
  const BigReal& tol() const { return tol_; }
  const HBConstants& constants();
  const ZeroModel& zeros();

 private:
  int digits_;
  BigReal tol_;
  std::unique_ptr<HBConstants> c_;
  std::unique_ptr<ZeroModel> z_;
};

std::vector<CheckItem> run_suite(const std::string& suite, SuiteContext& ctx);

// deterministic sample points: radius r_max (k+1)/count, golden-angle phases
std::vector<Complex> spiral_points(const BigReal& r_max, int count);

int run_cli(int argc, char** argv);

}  // namespace hb
