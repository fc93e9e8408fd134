#include "hb/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

namespace hb {

namespace {

constexpr int kUsageError = 2;
constexpr int kCertificationFailure = 3;

nlohmann::json sci_array(const std::vector<BigReal>& v, int digits) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& x : v) arr.push_back(x.sci(digits));
  return arr;
}

std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

std::string csv_column(const std::string& header, const std::vector<BigReal>& v, int digits) {
  std::ostringstream os;
  os << header << '\n';
  for (size_t i = 0; i < v.size(); ++i) os << i << ',' << v[i].sci(digits) << '\n';
  return os.str();
}

std::string taylor_payload(const TaylorModel& t, int terms, int digits, const std::string& format) {
  std::vector<BigReal> c;
  int step = t.which == Which::phi ? 2 : 1;
  for (int n = 0; n <= terms; ++n) c.push_back(t.coeffs[step * n]);
  if (format == "csv") return csv_column(t.which == Which::phi ? "n,u_n" : "n,alpha_n", c, digits);
  return dump({{"which", t.which == Which::phi ? "phi" : "Phi"}, {"T", terms}, {"digits", digits},
               {"coeffs", sci_array(c, digits)}});
}

std::string lvalues_payload(const HBConstants& c, int terms, int digits, const std::string& format) {
  ZeroModel z = build_zero_model(c);
  std::ostringstream os;
  nlohmann::json rows = nlohmann::json::array();
  os << "kind,s,value,error_bound,pole,residue\n";
  for (LKind kind : {LKind::plus, LKind::minus}) {
    for (long s = -terms; s <= terms; ++s) {
      auto v = l_series(c, z, kind, BigReal(s));
      std::string k = kind == LKind::plus ? "plus" : "minus";
      os << k << ',' << s << ',' << v.value.sci(digits) << ',' << v.error_bound.sci(3) << ','
         << (v.is_pole ? 1 : 0) << ',' << v.residue.sci(digits) << '\n';
      rows.push_back({{"kind", k},
                      {"s", s},
                      {"value", v.value.sci(digits)},
                      {"error_bound", v.error_bound.sci(3)},
                      {"pole", v.is_pole},
                      {"residue", v.residue.sci(digits)}});
    }
  }
  if (format == "csv") return os.str();
  return dump({{"digits", digits}, {"values", rows}});
}

bool is_certification_error(const std::exception& e) {
  return std::string(e.what()).rfind("certification failed", 0) == 0 || dynamic_cast<const PrecisionLoss*>(&e);
}

}  // namespace

nlohmann::json to_json(const RunManifest& m) {
  return {{"command", m.command},
          {"parameters", m.parameters},
          {"digits", m.digits},
          {"outputs", m.outputs},
          {"timestamp", m.timestamp}};
}

std::string iso8601_now() {
  std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

const std::vector<std::string>& verify_suites() {
  static const std::vector<std::string> s{"ode",     "functional", "quadratic",   "summation",
                                          "fourier", "lseries",    "conjectures", "all"};
  return s;
}

const std::vector<std::string>& export_targets() {
  static const std::vector<std::string> t{"taylor-phi", "taylor-Phi", "rho", "h", "c-basis", "legendre", "lvalues"};
  return t;
}

CommandResult cmd_constants(int digits, const std::string& format) {
  HBConstants c = solve_constants(digits);
  CommandResult r;
  r.parameters = {{"format", format}};
  if (format == "csv") {
    nlohmann::json j = to_json(c);
    std::ostringstream os;
    os << "name,value\n";
    for (const char* k : {"C", "L1", "a_star", "lambda_star"}) os << k << ',' << j[k].get<std::string>() << '\n';
    r.payload = os.str();
  } else {
    r.payload = dump(to_json(c));
  }
  return r;
}

CommandResult cmd_zeros(int count, int digits, const std::string& format) {
  if (count < 1) throw std::invalid_argument("zeros needs count >= 1");
  HBConstants c = solve_constants(digits);
  ZeroModel z = build_zero_model(c);
  CommandResult r;
  r.parameters = {{"count", count}, {"format", format}, {"M", z.M}, {"n0", z.n0}};
  std::string csv = zeros_csv(z, count, digits);
  if (format == "csv") {
    r.payload = csv;
    return r;
  }
  nlohmann::json rows = nlohmann::json::array();
  std::istringstream is(csv);
  std::string line;
  std::getline(is, line);
  while (std::getline(is, line)) {
    auto a = line.find(','), b = line.rfind(',');
    rows.push_back({{"n", std::stoi(line.substr(0, a))},
                    {"tau_n", line.substr(a + 1, b - a - 1)},
                    {"method", line.substr(b + 1)}});
  }
  r.payload = dump({{"digits", digits}, {"M", z.M}, {"n0", z.n0}, {"zeros", rows}});
  return r;
}

CommandResult cmd_verify(const std::string& suite, int digits, int tolerance_exponent) {
  if (tolerance_exponent <= 0) tolerance_exponent = digits - 10;
  SuiteContext ctx(digits, tolerance_exponent);
  auto items = run_suite(suite, ctx);
  nlohmann::json checks = nlohmann::json::array();
  int pass = 0, fail = 0, report = 0;
  for (const auto& i : items) {
    checks.push_back(to_json(i));
    if (i.report_only) ++report;
    else if (i.passed()) ++pass;
    else ++fail;
  }
  CommandResult r;
  r.parameters = {{"suite", suite}, {"tolerance_exponent", tolerance_exponent}};
  r.payload = dump({{"suite", suite},
                    {"digits", digits},
                    {"tolerance_exponent", tolerance_exponent},
                    {"checks", checks},
                    {"summary", {{"pass", pass}, {"fail", fail}, {"report_only", report}}},
                    {"status", fail == 0 ? "pass" : "fail"}});
  r.exit_code = fail == 0 ? 0 : 1;
  return r;
}

CommandResult cmd_export(const std::string& what, int terms, int digits, const std::string& format) {
  const auto& t = export_targets();
  if (std::find(t.begin(), t.end(), what) == t.end()) throw std::invalid_argument("unknown export target: " + what);
  if (terms < 1) throw std::invalid_argument("export needs terms >= 1");
  HBConstants c = solve_constants(digits);
  CommandResult r;
  r.parameters = {{"what", what}, {"terms", terms}, {"format", format}};
  if (what == "taylor-phi") {
    r.payload = taylor_payload(taylor_phi(c, terms), terms, digits, format);
  } else if (what == "taylor-Phi") {
    r.payload = taylor_payload(taylor_Phi(c, terms), terms, digits, format);
  } else if (what == "rho") {
    auto a = rho_coefficients(c, terms);
    if (format == "csv") r.payload = csv_column("m,a_m", a, digits);
    else r.payload = dump({{"which", "rho"}, {"T", terms}, {"digits", digits}, {"coeffs", sci_array(a, digits)}});
  } else if (what == "h") {
    FourierModel m = build_h(c, terms);
    if (format == "csv") r.payload = transform_csv(m, 201, digits);
    else r.payload = dump(fourier_json("h", m.h_coeffs, digits));
  } else if (what == "c-basis") {
    FourierModel m = build_h(c, std::max(80, 2 * terms));
    m.c_coeffs = c_basis_coefficients(m, terms, BigReal(1L));
    if (format == "csv") r.payload = csv_column("n,c_n", m.c_coeffs, digits);
    else r.payload = dump(fourier_json("c", m.c_coeffs, digits));
  } else if (what == "legendre") {
    auto l = legendre_transform_model(c, terms);
    if (format == "csv") r.payload = csv_column("n,l_n", l, digits);
    else r.payload = dump(fourier_json("legendre", l, digits));
  } else {
    r.payload = lvalues_payload(c, terms, digits, format);
  }
  return r;
}

int run_cli(int argc, char** argv) {
  CLI::App app{"Hormander-Bernhardsson constant toolkit"};
  app.require_subcommand(1);
  int digits = 30, count = 20, terms = 20, tol_exp = 0;
  std::string suite = "all", out, format = "json", what;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--digits", digits, "certified decimal digits")->check(CLI::Range(10, 100000));
    sub->add_option("--out", out, "output file; a manifest is written next to it");
    sub->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
  };
  auto* constants = app.add_subcommand("constants", "compute C and L_tau(1)");
  add_common(constants);
  auto* zeros = app.add_subcommand("zeros", "tabulate the zeros tau_n");
  add_common(zeros);
  zeros->add_option("--count", count)->check(CLI::PositiveNumber);
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  add_common(verify);
  verify->add_option("--suite", suite)->check(CLI::IsMember(verify_suites()));
  verify->add_option("--tolerance-exponent", tol_exp, "tolerance 10^-e; default digits - 10")
      ->check(CLI::PositiveNumber);
  auto* exp = app.add_subcommand("export", "export series and tables");
  add_common(exp);
  exp->add_option("what", what)->required()->check(CLI::IsMember(export_targets()));
  exp->add_option("--terms", terms)->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }

  CommandResult r;
  RunManifest m;
  m.digits = digits;
  try {
    if (*constants) {
      m.command = "constants";
      r = cmd_constants(digits, format);
    } else if (*zeros) {
      m.command = "zeros";
      r = cmd_zeros(count, digits, format);
    } else if (*verify) {
      m.command = "verify";
      r = cmd_verify(suite, digits, tol_exp);
    } else {
      m.command = "export";
      r = cmd_export(what, terms, digits, format);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return is_certification_error(e) ? kCertificationFailure : 1;
  }

  m.parameters = r.parameters;
  m.timestamp = iso8601_now();
  if (out.empty()) {
    std::cout << r.payload;
    m.outputs = {"-"};
    std::cerr << to_json(m).dump() << '\n';
  } else {
    std::ofstream f(out, std::ios::binary);
    f << r.payload;
    if (!f) {
      std::cerr << "error: cannot write " << out << '\n';
      return 1;
    }
    m.outputs = {out};
    std::ofstream(out + ".manifest.json") << to_json(m).dump(2) << '\n';
  }
  return r.exit_code;
}

}  // namespace hb
