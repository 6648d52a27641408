// Command line front end over the shared library's C interface.

#include <fgfourier.h>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <vector>

namespace {

using Json = nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNoConvergence = 3;

struct GroupDeleter {
  void operator()(fgf_group* g) const { fgf_group_free(g); }
};
struct DualDeleter {
  void operator()(fgf_dual* d) const { fgf_dual_free(d); }
};
using GroupPtr = std::unique_ptr<fgf_group, GroupDeleter>;
using DualPtr = std::unique_ptr<fgf_dual, DualDeleter>;

struct OwnedString {
  char* data = nullptr;
  ~OwnedString() { fgf_string_free(data); }
  std::string str() const { return data ? data : ""; }
};

[[noreturn]] void fail(fgf_status status) {
  std::cerr << "error: " << fgf_last_error() << "\n";
  switch (status) {
    case FGF_PARSE_ERROR:
    case FGF_NOT_A_GROUP:
    case FGF_INVALID_ARGUMENT:
      std::exit(kExitUsage);
    case FGF_NO_CONVERGENCE:
      std::exit(kExitNoConvergence);
    default:
      std::exit(kExitCheckFailed);
  }
}

void check(fgf_status status) {
  if (status != FGF_OK) fail(status);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "error: cannot open '" << path << "'\n";
    std::exit(kExitUsage);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << "\n";
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot write '" << out_path << "'\n";
    std::exit(kExitCheckFailed);
  }
  out << text;
}

GroupPtr load_group(const std::string& spec, const std::string& cayley_path) {
  fgf_group* raw = nullptr;
  if (!cayley_path.empty()) {
    check(fgf_group_from_cayley(read_file(cayley_path).c_str(), &raw));
  } else if (!spec.empty()) {
    check(fgf_group_from_spec(spec.c_str(), &raw));
  } else {
    std::cerr << "error: provide --group or --cayley\n";
    std::exit(kExitUsage);
  }
  return GroupPtr(raw);
}

DualPtr load_dual(const fgf_group* group, uint64_t seed) {
  fgf_dual* raw = nullptr;
  check(fgf_dual_compute(group, seed, &raw));
  return DualPtr(raw);
}

std::vector<double> parse_complex_vector(const Json& j, int expected,
                                         const char* what) {
  const Json& values =
      j.is_object() ? (j.contains("values") ? j["values"] : Json()) : j;
  if (!values.is_array() ||
      (expected >= 0 && values.size() != static_cast<std::size_t>(expected))) {
    std::cerr << "error: " << what << " must have " << expected
              << " complex entries\n";
    std::exit(kExitUsage);
  }
  std::vector<double> flat;
  flat.reserve(2 * values.size());
  for (const auto& entry : values) {
    if (entry.is_number()) {
      flat.push_back(entry.get<double>());
      flat.push_back(0.0);
    } else if (entry.is_array() && entry.size() == 2) {
      flat.push_back(entry[0].get<double>());
      flat.push_back(entry[1].get<double>());
    } else {
      std::cerr << "error: " << what
                << " entries must be numbers or [re, im] pairs\n";
      std::exit(kExitUsage);
    }
  }
  return flat;
}

Json complex_vector_to_json(const std::vector<double>& flat) {
  Json values = Json::array();
  for (std::size_t i = 0; i + 1 < flat.size(); i += 2)
    values.push_back(Json::array({flat[i], flat[i + 1]}));
  return values;
}

double round_sig12(double v) {
  if (v == 0.0 || !std::isfinite(v)) return v;
  const double mag =
      std::pow(10.0, 11 - std::floor(std::log10(std::abs(v))));
  return std::round(v * mag) / mag;
}

int run_dual(const std::string& group_spec, const std::string& cayley,
             uint64_t seed, const std::string& out_path) {
  const GroupPtr group = load_group(group_spec, cayley);
  const DualPtr dual = load_dual(group.get(), seed);
  OwnedString json;
  check(fgf_dual_to_json(dual.get(), &json.data));
  write_output(out_path, json.str());
  return kExitOk;
}

int run_norms(const std::string& group_spec, const std::string& cayley,
              uint64_t seed, const std::string& function_path,
              const std::string& operator_path, const std::string& format,
              const std::string& out_path) {
  const GroupPtr group = load_group(group_spec, cayley);
  const DualPtr dual = load_dual(group.get(), seed);
  const int order = fgf_group_order(group.get());

  Json result;
  if (!function_path.empty()) {
    const Json j = Json::parse(read_file(function_path), nullptr, true, true);
    const std::vector<double> values =
        parse_complex_vector(j, order, "function");
    double a = 0, adelta = 0, agamma = 0;
    check(fgf_function_norms(dual.get(), values.data(), &a, &adelta, &agamma));
    result["norm_A"] = round_sig12(a);
    result["norm_ADelta"] = round_sig12(adelta);
    result["norm_Agamma"] = round_sig12(agamma);
  }
  if (!operator_path.empty()) {
    const int count = fgf_dual_irrep_count(dual.get());
    std::vector<int> dims(count);
    check(fgf_dual_dims(dual.get(), dims.data()));
    int entries = 0;
    for (const int d : dims) entries += d * d;
    const Json j = Json::parse(read_file(operator_path), nullptr, true, true);
    Json flat_blocks = Json::array();
    const Json& blocks = j.is_object() ? j.at("blocks") : j;
    for (const auto& b : blocks) {
      const Json& values = b.is_object() ? b.at("values") : b;
      for (const auto& v : values) flat_blocks.push_back(v);
    }
    const std::vector<double> values =
        parse_complex_vector(flat_blocks, entries, "operator");
    double vn = 0, adelta_dual = 0;
    check(fgf_operator_norms(dual.get(), values.data(), &vn, &adelta_dual));
    result["norm_VN"] = round_sig12(vn);
    result["norm_ADelta_dual"] = round_sig12(adelta_dual);
  }
  if (result.empty()) {
    std::cerr << "error: provide --function and/or --operator\n";
    return kExitUsage;
  }

  if (format == "json") {
    write_output(out_path, result.dump(2));
  } else if (format == "csv") {
    std::ostringstream out;
    out << "norm,value\n";
    for (const auto& [key, value] : result.items())
      out << key << ',' << std::setprecision(12) << value.get<double>() << "\n";
    write_output(out_path, out.str());
  } else {
    std::ostringstream out;
    for (const auto& [key, value] : result.items())
      out << std::left << std::setw(18) << key << std::setprecision(12)
          << value.get<double>() << "\n";
    write_output(out_path, out.str());
  }
  return kExitOk;
}

int run_apply(const std::string& group_spec, const std::string& cayley,
              uint64_t seed, const std::string& map_name,
              const std::string& input_path, const std::string& u_path,
              const std::string& v_path, const std::string& operator_path,
              int level, const std::string& out_path) {
  const GroupPtr group = load_group(group_spec, cayley);
  const int order = fgf_group_order(group.get());

  if (map_name == "gamma" || map_name == "gamma_check") {
    if (input_path.empty()) {
      std::cerr << "error: --input <bifunction.json> is required for " << map_name
                << "\n";
      return kExitUsage;
    }
    const Json j = Json::parse(read_file(input_path), nullptr, true, true);
    const std::vector<double> w =
        parse_complex_vector(j, order * order, "bifunction");
    std::vector<double> out(2 * order, 0.0);
    if (map_name == "gamma")
      check(fgf_apply_gamma(group.get(), w.data(), out.data()));
    else
      check(fgf_apply_gamma_check(group.get(), w.data(), out.data()));
    Json result{{"schema", "fgf-function-v1"},
                {"order", order},
                {"values", complex_vector_to_json(out)}};
    write_output(out_path, result.dump(2));
    return kExitOk;
  }

  if (map_name == "convolve") {
    if (u_path.empty() || v_path.empty()) {
      std::cerr << "error: --u and --v are required for convolve\n";
      return kExitUsage;
    }
    const std::vector<double> u = parse_complex_vector(
        Json::parse(read_file(u_path), nullptr, true, true), order, "u");
    const std::vector<double> v = parse_complex_vector(
        Json::parse(read_file(v_path), nullptr, true, true), order, "v");
    std::vector<double> out(2 * order, 0.0);
    check(fgf_apply_convolve(group.get(), u.data(), v.data(), out.data()));
    Json result{{"schema", "fgf-function-v1"},
                {"order", order},
                {"values", complex_vector_to_json(out)}};
    write_output(out_path, result.dump(2));
    return kExitOk;
  }

  if (map_name == "gamma_adjoint" || map_name == "gamma_check_adjoint") {
    if (operator_path.empty()) {
      std::cerr << "error: --operator <operator.json> is required for "
                << map_name << "\n";
      return kExitUsage;
    }
    const DualPtr dual = load_dual(group.get(), seed);
    const int count = fgf_dual_irrep_count(dual.get());
    std::vector<int> dims(count);
    check(fgf_dual_dims(dual.get(), dims.data()));
    int entries = 0;
    for (const int d : dims) entries += d * d;
    const Json j = Json::parse(read_file(operator_path), nullptr, true, true);
    Json flat_blocks = Json::array();
    const Json& blocks = j.is_object() ? j.at("blocks") : j;
    for (const auto& b : blocks) {
      const Json& values = b.is_object() ? b.at("values") : b;
      for (const auto& v : values) flat_blocks.push_back(v);
    }
    const std::vector<double> values =
        parse_complex_vector(flat_blocks, entries, "operator");
    OwnedString csv;
    check(fgf_adjoint_norm_table(dual.get(), values.data(), level,
                                 map_name == "gamma_check_adjoint" ? 1 : 0,
                                 &csv.data));
    write_output(out_path, csv.str());
    return kExitOk;
  }

  std::cerr << "error: unknown map '" << map_name
            << "' (gamma, gamma_check, convolve, gamma_adjoint, "
               "gamma_check_adjoint)\n";
  return kExitUsage;
}

void print_verify_table(const Json& report, std::ostream& out) {
  out << std::left << std::setw(22) << "check" << std::setw(8) << "result"
      << std::setw(14) << "worst_dev" << "groups\n";
  for (const auto& c : report.at("checks")) {
    std::ostringstream dev;
    if (c.at("worst_deviation").is_null())
      dev << "error";
    else
      dev << std::setprecision(3) << c.at("worst_deviation").get<double>();
    std::string groups;
    int failed = 0, total = 0;
    for (const auto& g : c.at("groups")) {
      ++total;
      if (!g.at("pass").get<bool>()) {
        ++failed;
        if (!groups.empty()) groups += " ";
        groups += g.at("group").get<std::string>();
      }
    }
    out << std::left << std::setw(22) << c.at("check_id").get<std::string>()
        << std::setw(8) << (c.at("pass").get<bool>() ? "pass" : "FAIL")
        << std::setw(14) << dev.str();
    if (failed == 0)
      out << total << " group(s) ok";
    else
      out << "failing: " << groups;
    out << "\n";
  }
  out << (report.at("all_pass").get<bool>() ? "all checks passed"
                                            : "SOME CHECKS FAILED")
      << "\n";
}

void print_verify_csv(const Json& report, std::ostream& out) {
  out << "check_id,group,deviation,pass\n";
  for (const auto& c : report.at("checks"))
    for (const auto& g : c.at("groups")) {
      out << c.at("check_id").get<std::string>() << ','
          << g.at("group").get<std::string>() << ',';
      if (g.at("deviation").is_null())
        out << "error";
      else
        out << std::setprecision(12) << g.at("deviation").get<double>();
      out << ',' << (g.at("pass").get<bool>() ? "true" : "false") << "\n";
    }
}

int run_verify(const std::vector<std::string>& checks, bool all,
               const std::vector<std::string>& groups, uint64_t seed,
               double tolerance, int trials, int max_level,
               const std::string& format, const std::string& out_path) {
  if (checks.empty() && !all) {
    std::cerr << "error: pass --all or at least one --check <id>\n";
    return kExitUsage;
  }
  std::string ids;
  for (const auto& c : checks) {
    if (!ids.empty()) ids += ';';
    ids += c;
  }
  std::string roster;
  for (const auto& g : groups) {
    if (!roster.empty()) roster += ';';
    roster += g;
  }

  int pass = 0, nonconverged = 0;
  OwnedString json;
  const fgf_status status =
      fgf_verify_run(ids.empty() ? nullptr : ids.c_str(),
                     roster.empty() ? nullptr : roster.c_str(), seed,
                     tolerance, trials, max_level, &pass, &nonconverged,
                     &json.data);
  if (status != FGF_OK) fail(status);

  const Json report = Json::parse(json.str());
  if (format == "json") {
    write_output(out_path, json.str());
  } else if (format == "csv") {
    std::ostringstream out;
    print_verify_csv(report, out);
    write_output(out_path, out.str());
  } else {
    std::ostringstream out;
    print_verify_table(report, out);
    write_output(out_path, out.str());
  }

  if (pass) return kExitOk;
  return nonconverged ? kExitNoConvergence : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fourier analysis and convolution norms on finite groups"};
  app.require_subcommand(1);
  app.failure_message(CLI::FailureMessage::help);

  std::string group_spec, cayley, format = "table", out_path;
  uint64_t seed = 7;
  double tolerance = -1.0;

  auto add_common = [&](CLI::App* cmd, bool with_format) {
    cmd->add_option("--group", group_spec,
                    "Group spec (cyclic:n, dihedral:n, s:n, q8, klein4, "
                    "product:<a>,<b>, file:<path>)");
    cmd->add_option("--cayley", cayley, "Path to a Cayley table file");
    cmd->add_option("--seed", seed, "Seed for the dual decomposition");
    cmd->add_option("--out", out_path, "Write output to a file");
    if (with_format)
      cmd->add_option("--format", format, "Output format: table, csv, json");
  };

  CLI::App* dual_cmd = app.add_subcommand(
      "dual", "Compute the unitary dual and emit it as JSON");
  add_common(dual_cmd, false);

  CLI::App* norms_cmd = app.add_subcommand(
      "norms", "Fourier-series and operator norms of supplied data");
  std::string function_path, operator_path;
  add_common(norms_cmd, true);
  norms_cmd->add_option("--function", function_path,
                        "JSON complex vector on the group");
  norms_cmd->add_option("--operator", operator_path,
                        "JSON block operator over the dual");

  CLI::App* apply_cmd =
      app.add_subcommand("apply", "Apply a convolution-type map");
  std::string map_name, input_path, u_path, v_path;
  int level = 1;
  add_common(apply_cmd, false);
  apply_cmd->add_option("--map", map_name,
                        "gamma | gamma_check | convolve | gamma_adjoint | "
                        "gamma_check_adjoint")
      ->required();
  apply_cmd->add_option("--input", input_path, "JSON function on G x G");
  apply_cmd->add_option("--u", u_path, "JSON function on G");
  apply_cmd->add_option("--v", v_path, "JSON function on G");
  apply_cmd->add_option("--operator", operator_path,
                        "JSON block operator over the dual");
  apply_cmd->add_option("--level", level, "Amplification level (>= 1)");

  CLI::App* verify_cmd =
      app.add_subcommand("verify", "Run numerical verification checks");
  std::vector<std::string> checks, groups;
  bool all = false;
  int trials = -1, max_level = 3;
  verify_cmd->add_option("--check", checks, "Check id (repeatable)");
  verify_cmd->add_flag("--all", all, "Run every registered check");
  verify_cmd->add_option("--group", groups,
                         "Group spec roster override (repeatable)");
  verify_cmd->add_option("--seed", seed, "Seed for duals and trials");
  verify_cmd->add_option("--tol", tolerance,
                         "Tolerance override (default: per check)");
  verify_cmd->add_option("--trials", trials,
                         "Trial count override (default: per check)");
  verify_cmd->add_option("--max-level", max_level,
                         "Largest amplification level");
  verify_cmd->add_option("--format", format, "Output format: table, csv, json");
  verify_cmd->add_option("--out", out_path, "Write the report to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (format != "table" && format != "csv" && format != "json") {
    std::cerr << "error: unknown format '" << format << "'\n";
    return kExitUsage;
  }

  if (dual_cmd->parsed())
    return run_dual(group_spec, cayley, seed, out_path);
  if (norms_cmd->parsed())
    return run_norms(group_spec, cayley, seed, function_path, operator_path,
                     format, out_path);
  if (apply_cmd->parsed())
    return run_apply(group_spec, cayley, seed, map_name, input_path, u_path,
                     v_path, operator_path, level, out_path);
  if (verify_cmd->parsed())
    return run_verify(checks, all, groups, seed, tolerance, trials, max_level,
                      format, out_path);
  return kExitUsage;
}
