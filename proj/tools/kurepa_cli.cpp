// kurepa: command-line front end to the C API.
//
//   kurepa eval --re 3
//   kurepa grid --re-min 1 --re-max 3 --re-steps 3 --im-min -1 --im-max 1 --im-steps 3
//   kurepa poles --i 1 --limit 4
//   kurepa leftfact --n 10
//   kurepa verify --seed 0 --format json

#include <CLI11.hpp>

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "kurepa/kurepa.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitPole = 2;
constexpr int kExitConvergence = 3;
constexpr int kExitVerifyFailed = 4;

const char* const kRecordHeader = "i,re,im,k_re,k_im,method,est_abs_error,status";

std::string number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string json_string(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out + "\"";
}

int exit_code_for(kurepa_status status) {
  switch (status) {
    case KUREPA_OK: return kExitOk;
    case KUREPA_ERR_POLE:
    case KUREPA_ERR_NEAR_POLE: return kExitPole;
    case KUREPA_ERR_CONVERGENCE: return kExitConvergence;
    default: return kExitUsage;
  }
}

const char* status_label(kurepa_status status) {
  switch (status) {
    case KUREPA_OK: return "ok";
    case KUREPA_ERR_POLE: return "pole";
    case KUREPA_ERR_NEAR_POLE: return "near_pole";
    case KUREPA_ERR_CONVERGENCE: return "no_convergence";
    default: return "error";
  }
}

using ContextPtr = std::unique_ptr<kurepa_context, decltype(&kurepa_context_destroy)>;

ContextPtr make_context() { return {kurepa_context_create(), &kurepa_context_destroy}; }

std::string last_error(const kurepa_context* ctx) {
  std::string msg(kurepa_last_error(ctx, nullptr, 0), '\0');
  kurepa_last_error(ctx, msg.data(), msg.size() + 1);
  return msg;
}

// One evaluated point, shared by `eval` and `grid`.
struct Record {
  long i;
  double re;
  double im;
  kurepa_status status;
  kurepa_result result;
};

std::string csv_row(const Record& r) {
  std::string row = std::to_string(r.i) + "," + number(r.re) + "," + number(r.im) + ",";
  if (r.status == KUREPA_OK) {
    row += number(r.result.value.re) + "," + number(r.result.value.im) + "," +
           kurepa_method_string(r.result.method) + "," + number(r.result.est_abs_error);
  } else {
    row += ",,,";
  }
  return row + "," + status_label(r.status);
}

std::string json_record(const Record& r, const std::string& extra = {}) {
  std::string out = "{\"i\":" + std::to_string(r.i) + ",\"re\":" + number(r.re) +
                    ",\"im\":" + number(r.im) + ",";
  if (r.status == KUREPA_OK) {
    out += "\"k\":{\"re\":" + number(r.result.value.re) + ",\"im\":" + number(r.result.value.im) +
           "},\"method\":" + json_string(kurepa_method_string(r.result.method)) +
           ",\"est_abs_error\":" + number(r.result.est_abs_error);
  } else {
    out += "\"k\":null,\"method\":null,\"est_abs_error\":null";
  }
  return out + ",\"status\":" + json_string(status_label(r.status)) + extra + "}";
}

struct EvalOptions {
  long i = 1;
  double re = 0.0;
  double im = 0.0;
  std::string method = "auto";
  double tol = 1e-10;
  std::string format = "json";
};

struct GridOptions {
  long i = 1;
  double re_min = 0.0, re_max = 0.0, im_min = 0.0, im_max = 0.0;
  std::int64_t re_steps = 1, im_steps = 1;
  std::string method = "auto";
  double tol = 1e-10;
  std::string format = "csv";
  std::string out = "stdout";
  unsigned threads = 0;
};

const std::map<std::string, kurepa_method> kMethods = {
    {"auto", KUREPA_METHOD_AUTO},
    {"quadrature", KUREPA_METHOD_QUADRATURE},
    {"closed-form", KUREPA_METHOD_CLOSED_FORM},
    {"recurrence", KUREPA_METHOD_RECURRENCE_SHIFT},
};

// Applies method and tolerance; reports problems on stderr.
bool configure(kurepa_context* ctx, const std::string& method, double tol) {
  if (kurepa_context_set_method(ctx, kMethods.at(method)) != KUREPA_OK ||
      kurepa_context_set_rel_tol(ctx, tol) != KUREPA_OK) {
    std::cerr << "error: " << last_error(ctx) << "\n";
    return false;
  }
  return true;
}

int run_eval(const EvalOptions& opt) {
  auto ctx = make_context();
  if (!ctx || !configure(ctx.get(), opt.method, opt.tol)) return kExitUsage;
  Record rec{opt.i, opt.re, opt.im, KUREPA_OK, {}};
  rec.status = kurepa_eval(ctx.get(), opt.i, {opt.re, opt.im}, &rec.result);

  std::string extra;
  if (rec.status != KUREPA_OK) {
    const std::string msg = last_error(ctx.get());
    std::cerr << "error: " << msg;
    if (rec.status == KUREPA_ERR_POLE || rec.status == KUREPA_ERR_NEAR_POLE) {
      const auto loc = kurepa_last_pole_location(ctx.get());
      std::cerr << " (pole location " << loc << ")";
      extra += ",\"pole_location\":" + std::to_string(loc);
    }
    std::cerr << "\n";
    extra += ",\"error\":" + json_string(msg);
  }
  if (opt.format == "csv") {
    std::cout << kRecordHeader << "\n" << csv_row(rec) << "\n";
  } else {
    std::cout << json_record(rec, extra) << "\n";
  }
  return exit_code_for(rec.status);
}

int run_grid(const GridOptions& opt) {
  auto ctx = make_context();
  if (!ctx || !configure(ctx.get(), opt.method, opt.tol)) return kExitUsage;
  const kurepa_grid_spec spec{opt.re_min, opt.re_max, opt.re_steps,
                              opt.im_min, opt.im_max, opt.im_steps};
  size_t n = 0;
  if (kurepa_grid_size(&spec, &n) != KUREPA_OK) {
    std::cerr << "error: invalid grid (check bounds ordering, steps >= 1, at most 1e7 points)\n";
    return kExitUsage;
  }
  std::vector<kurepa_grid_point> points(n);
  if (kurepa_eval_grid(ctx.get(), opt.i, &spec, opt.threads, points.data(), points.size()) !=
      KUREPA_OK) {
    std::cerr << "error: " << last_error(ctx.get()) << "\n";
    return kExitUsage;
  }

  std::ofstream file;
  std::ostream* os = &std::cout;
  if (opt.out != "stdout" && opt.out != "-") {
    file.open(opt.out, std::ios::binary);
    if (!file) {
      std::cerr << "error: cannot open " << opt.out << "\n";
      return kExitUsage;
    }
    os = &file;
  }

  if (opt.format == "csv") {
    *os << kRecordHeader << "\n";
    for (const auto& p : points)
      *os << csv_row({opt.i, p.z.re, p.z.im, p.status, p.result}) << "\n";
    *os << "# rows=" << points.size() << "\n";
  } else {
    *os << "[";
    for (size_t k = 0; k < points.size(); ++k) {
      const auto& p = points[k];
      *os << (k ? ",\n" : "\n") << json_record({opt.i, p.z.re, p.z.im, p.status, p.result});
    }
    *os << "\n]\n";
  }
  os->flush();
  if (!*os) {
    std::cerr << "error: write failed\n";
    return kExitUsage;
  }
  return kExitOk;
}

int run_poles(long i, std::int64_t limit, const std::string& format) {
  kurepa_pole_list* raw = nullptr;
  if (kurepa_pole_catalog(i, limit, &raw) != KUREPA_OK) {
    std::cerr << "error: need --i >= 1 and --limit >= 1\n";
    return kExitUsage;
  }
  std::unique_ptr<kurepa_pole_list, decltype(&kurepa_pole_list_destroy)> list(
      raw, &kurepa_pole_list_destroy);
  const size_t n = kurepa_pole_list_size(list.get());
  if (format == "csv") std::cout << "location,residue_num,residue_den,residue_float\n";
  else std::cout << "[";
  for (size_t k = 0; k < n; ++k) {
    kurepa_pole p{};
    kurepa_pole_list_get(list.get(), k, &p);
    if (format == "csv") {
      std::cout << p.location << "," << p.residue_num << "," << p.residue_den << ","
                << number(p.residue_float) << "\n";
    } else {
      std::cout << (k ? ",\n" : "\n") << "{\"location\":" << p.location
                << ",\"residue_num\":" << p.residue_num << ",\"residue_den\":" << p.residue_den
                << ",\"residue_float\":" << number(p.residue_float) << "}";
    }
  }
  if (format != "csv") std::cout << "\n]\n";
  return kExitOk;
}

int run_leftfact(std::int64_t n) {
  if (n < 0) {
    std::cerr << "error: --n must be non-negative\n";
    return kExitUsage;
  }
  size_t required = 0;
  kurepa_left_factorial(static_cast<uint64_t>(n), nullptr, 0, &required);
  std::string digits(required, '\0');
  if (kurepa_left_factorial(static_cast<uint64_t>(n), digits.data(), digits.size(), nullptr) !=
      KUREPA_OK) {
    std::cerr << "error: left factorial failed\n";
    return kExitUsage;
  }
  digits.resize(required - 1);
  std::cout << digits << "\n";
  return kExitOk;
}

int run_verify(std::uint64_t seed, const std::string& format) {
  kurepa_report_list* raw = nullptr;
  if (kurepa_verify_run(seed, &raw) != KUREPA_OK) {
    std::cerr << "error: verification suite failed to run\n";
    return kExitVerifyFailed;
  }
  std::unique_ptr<kurepa_report_list, decltype(&kurepa_report_list_destroy)> list(
      raw, &kurepa_report_list_destroy);
  const size_t n = kurepa_report_list_size(list.get());
  bool all = true;
  if (format == "csv") std::cout << "name,samples,max_residual,tolerance,passed\n";
  else std::cout << "[";
  for (size_t k = 0; k < n; ++k) {
    kurepa_check_report r{};
    kurepa_report_list_get(list.get(), k, &r);
    all = all && r.passed;
    const char* passed = r.passed ? "true" : "false";
    if (format == "csv") {
      std::cout << r.name << "," << r.samples << "," << number(r.max_residual) << ","
                << number(r.tolerance) << "," << passed << "\n";
    } else {
      std::cout << (k ? ",\n" : "\n") << "{\"name\":" << json_string(r.name)
                << ",\"samples\":" << r.samples << ",\"max_residual\":" << number(r.max_residual)
                << ",\"tolerance\":" << number(r.tolerance) << ",\"passed\":" << passed << "}";
    }
  }
  if (format != "csv") std::cout << "\n]\n";
  return all ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kurepa's left factorial K(z) and the K_i family in the complex plane"};
  app.require_subcommand(1);

  const std::vector<std::string> methods = {"auto", "quadrature", "closed-form", "recurrence"};

  EvalOptions eval;
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate K_i at one point");
  eval_cmd->add_option("--i", eval.i, "Family index (1 = K)")->check(CLI::PositiveNumber);
  eval_cmd->add_option("--re", eval.re, "Real part of z")->required();
  eval_cmd->add_option("--im", eval.im, "Imaginary part of z");
  eval_cmd->add_option("--method", eval.method)->check(CLI::IsMember(methods));
  eval_cmd->add_option("--tol", eval.tol, "Relative tolerance")->check(CLI::PositiveNumber);
  eval_cmd->add_option("--format", eval.format)->check(CLI::IsMember({"json", "csv"}));

  GridOptions grid;
  auto* grid_cmd = app.add_subcommand("grid", "Evaluate K_i on a rectangular grid");
  grid_cmd->add_option("--i", grid.i)->check(CLI::PositiveNumber);
  grid_cmd->add_option("--re-min", grid.re_min)->required();
  grid_cmd->add_option("--re-max", grid.re_max)->required();
  grid_cmd->add_option("--re-steps", grid.re_steps)->required();
  grid_cmd->add_option("--im-min", grid.im_min)->required();
  grid_cmd->add_option("--im-max", grid.im_max)->required();
  grid_cmd->add_option("--im-steps", grid.im_steps)->required();
  grid_cmd->add_option("--method", grid.method)->check(CLI::IsMember(methods));
  grid_cmd->add_option("--tol", grid.tol)->check(CLI::PositiveNumber);
  grid_cmd->add_option("--format", grid.format)->check(CLI::IsMember({"csv", "json"}));
  grid_cmd->add_option("--out", grid.out, "Output path, or stdout");
  grid_cmd->add_option("--threads", grid.threads, "Worker threads (0 = all cores)");

  long poles_i = 1;
  std::int64_t poles_limit = 10;
  std::string poles_format = "csv";
  auto* poles_cmd = app.add_subcommand("poles", "List poles and exact residues of K_i");
  poles_cmd->add_option("--i", poles_i)->check(CLI::PositiveNumber);
  poles_cmd->add_option("--limit", poles_limit)->check(CLI::PositiveNumber);
  poles_cmd->add_option("--format", poles_format)->check(CLI::IsMember({"csv", "json"}));

  std::int64_t leftfact_n = 0;
  auto* leftfact_cmd = app.add_subcommand("leftfact", "Exact left factorial !n");
  leftfact_cmd->add_option("--n", leftfact_n)->required();

  std::uint64_t seed = 0;
  std::string verify_format = "csv";
  auto* verify_cmd = app.add_subcommand("verify", "Run the property verification suite");
  verify_cmd->add_option("--seed", seed);
  verify_cmd->add_option("--format", verify_format)->check(CLI::IsMember({"csv", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (*eval_cmd) return run_eval(eval);
  if (*grid_cmd) return run_grid(grid);
  if (*poles_cmd) return run_poles(poles_i, poles_limit, poles_format);
  if (*leftfact_cmd) return run_leftfact(leftfact_n);
  if (*verify_cmd) return run_verify(seed, verify_format);
  return kExitUsage;
}
