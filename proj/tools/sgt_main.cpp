// Command-line front end. Talks to the library exclusively through the C API
// in sgt/sgt.h: flags are packed into a JSON request, the response payload is
// written to stdout or to files (atomically, temp file + rename).

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "sgt/sgt.h"

namespace {

using Json = nlohmann::json;

constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;

Json parse_coord_list(const std::string& text) {
  Json list = Json::array();
  if (text.empty()) return list;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) list.push_back(std::stoll(item));
  return list;
}

// Scalar literals travel as strings in exact mode. In float mode decimals
// become numbers and "p/q" fractions stay strings (the library evaluates
// them), so `--alpha 1/2` works either way.
Json parse_scalar(const std::string& text, bool exact) {
  if (exact || text.find('/') != std::string::npos) return text;
  return std::stod(text);
}

Json parse_scalar_list(const std::string& text, bool exact) {
  Json list = Json::array();
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) list.push_back(parse_scalar(item, exact));
  return list;
}

int map_error(int code) {
  switch (code) {
    case SGT_ERROR_DOMAIN:
      return kExitDomain;
    case SGT_ERROR_INVALID_ARGUMENT:
      return kExitUsage;
    default:
      return 1;
  }
}

std::string resolve_out_path(const std::string& path) {
  const char* dir = std::getenv("SGT_OUT_DIR");
  if (dir == nullptr || path.empty() || path.front() == '/') return path;
  return std::string(dir) + "/" + path;
}

void write_atomic(const std::string& path, const std::string& payload) {
  const std::string full = resolve_out_path(path);
  const std::string tmp = full + ".tmp";
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) throw std::runtime_error("cannot open " + tmp);
    os << payload;
  }
  if (std::rename(tmp.c_str(), full.c_str()) != 0)
    throw std::runtime_error("cannot rename " + tmp + " to " + full);
}

int default_threads_flag() {
  const char* env = std::getenv("SGT_THREADS");
  return env == nullptr ? 0 : std::atoi(env);
}

// Runs the C call, emits outputs, returns the process exit code.
int dispatch(int (*op)(const char*, sgt_buffer**), const Json& request,
             const std::optional<std::string>& out_path,
             const std::string& summary_prefix,
             const std::vector<std::pair<std::string, std::string>>& field_files = {}) {
  sgt_buffer* buf = nullptr;
  const int code = op(request.dump().c_str(), &buf);
  if (code != SGT_OK) {
    std::cerr << "error: " << sgt_strerror(code) << ": " << sgt_last_error() << "\n";
    return map_error(code);
  }
  const Json response = Json::parse(sgt_buffer_data(buf));
  sgt_buffer_free(buf);

  for (const auto& [field, path] : field_files)
    if (response.contains(field)) write_atomic(path, response.at(field).get<std::string>());

  if (out_path) {
    // Whole-response artifacts: payload fields are written as-is, JSON
    // responses pretty-printed.
    if (response.contains("csv") && field_files.empty())
      write_atomic(*out_path, response.at("csv").get<std::string>());
    else if (response.contains("jsonl") && field_files.empty())
      write_atomic(*out_path, response.at("jsonl").get<std::string>());
    else if (field_files.empty())
      write_atomic(*out_path, response.dump(2) + "\n");
  }

  std::cout << summary_prefix;
  if (response.contains("seed")) std::cout << " seed=" << response.at("seed");
  if (out_path) std::cout << " -> " << resolve_out_path(*out_path);
  std::cout << "\n";
  if (!out_path && field_files.empty()) std::cout << response.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"symplectic pattern dynamics: characters, kernels, simulators, verification"};
  app.require_subcommand(1);

  std::string lambda_text, q_text, alpha_text = "1/2", mode = "float";
  std::string out_path, kernel_kind = "P", claim, record = "rows", format = "csv";
  std::string from_u, from_z, from_y, final_out, m_text = "0";
  int k = 2, r = 1, horizon = 1, steps = 1;
  long long trajectories = 1, samples = 0, m_max = -1;
  double eps = 1e-12, horizon_t = 1.0;
  std::uint64_t seed = 1;
  int threads = default_threads_flag();

  auto* schur = app.add_subcommand("schur", "evaluate a symplectic Schur function");
  schur->add_option("--k", k)->required();
  schur->add_option("--lambda", lambda_text)->required();
  schur->add_option("--q", q_text)->required();
  schur->add_option("--mode", mode)->check(CLI::IsMember({"exact", "float"}));

  auto* pieri = app.add_subcommand("pieri", "tensor decomposition by the Pieri rule");
  pieri->add_option("--r", r)->required();
  pieri->add_option("--lambda", lambda_text)->required();
  pieri->add_option("--m", m_text)->required();
  pieri->add_option("--out", out_path);

  auto* kernel = app.add_subcommand("kernel", "emit one kernel row as JSON");
  kernel->add_option("--kernel", kernel_kind)->check(CLI::IsMember({"P", "S", "Q", "mu", "m", "nu"}));
  kernel->add_option("--k", k)->required();
  kernel->add_option("--lambda", lambda_text);
  kernel->add_option("--alpha", alpha_text);
  kernel->add_option("--q", q_text)->required();
  kernel->add_option("--mode", mode)->check(CLI::IsMember({"exact", "float"}));
  kernel->add_option("--eps", eps);
  kernel->add_option("--m", m_text);
  kernel->add_option("--m-max", m_max);
  kernel->add_option("--from-u", from_u);
  kernel->add_option("--from-z", from_z);
  kernel->add_option("--from-y", from_y);
  kernel->add_option("--out", out_path);

  auto* simd = app.add_subcommand("simulate-discrete", "geometric-jump pattern dynamics");
  simd->add_option("--k", k)->required();
  simd->add_option("--q", q_text)->required();
  simd->add_option("--alpha", alpha_text)->required();
  simd->add_option("--horizon", horizon);
  simd->add_option("--trajectories", trajectories);
  simd->add_option("--seed", seed);
  simd->add_option("--record", record)->check(CLI::IsMember({"rows", "full"}));
  simd->add_option("--format", format)->check(CLI::IsMember({"csv", "jsonl"}));
  simd->add_option("--threads", threads);
  simd->add_option("--out", out_path);

  auto* simc = app.add_subcommand("simulate-continuous", "exponential-clock pattern dynamics");
  simc->add_option("--k", k)->required();
  simc->add_option("--q", q_text)->required();
  simc->add_option("--horizon", horizon_t);
  simc->add_option("--trajectories", trajectories);
  simc->add_option("--seed", seed);
  simc->add_option("--threads", threads);
  simc->add_option("--out", out_path, "events JSONL path");
  simc->add_option("--final-out", final_out, "final-state CSV path");

  auto* rm = app.add_subcommand("randmat", "quaternionic matrix eigenvalue process");
  rm->add_option("--r", r)->required();
  rm->add_option("--steps", steps);
  rm->add_option("--trajectories", trajectories);
  rm->add_option("--seed", seed);
  rm->add_option("--threads", threads);
  rm->add_option("--out", out_path);

  auto* verify = app.add_subcommand("verify", "run a verification claim");
  verify->add_option("--claim", claim)->required();
  verify->add_option("--samples", samples);
  verify->add_option("--seed", seed);
  verify->add_option("--threads", threads);
  verify->add_option("--out", out_path);
  // accepted for compatibility with the other subcommands; claims pin their
  // own parameters
  verify->add_option("--k", k);
  verify->add_option("--alpha", alpha_text);
  verify->add_option("--q", q_text);
  verify->add_option("--mode", mode);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  const bool exact = mode == "exact";
  auto out_opt = [&]() -> std::optional<std::string> {
    return out_path.empty() ? std::nullopt : std::optional<std::string>(out_path);
  };

  try {
    if (schur->parsed()) {
      Json req{{"k", k},
               {"lambda", parse_coord_list(lambda_text)},
               {"q", parse_scalar_list(q_text, exact)},
               {"mode", mode}};
      sgt_buffer* buf = nullptr;
      const int code = sgt_schur(req.dump().c_str(), &buf);
      if (code != SGT_OK) {
        std::cerr << "error: " << sgt_strerror(code) << ": " << sgt_last_error() << "\n";
        return map_error(code);
      }
      const Json response = Json::parse(sgt_buffer_data(buf));
      sgt_buffer_free(buf);
      const auto& v = response.at("value");
      if (v.is_string())
        std::cout << v.get<std::string>() << "\n";
      else
        std::cout << v.get<double>() << "\n";
      return 0;
    }
    if (pieri->parsed()) {
      Json req{{"r", r}, {"lambda", parse_coord_list(lambda_text)}, {"m", std::stoll(m_text)}};
      return dispatch(sgt_pieri, req, out_opt(), "sgt pieri");
    }
    if (kernel->parsed()) {
      Json req{{"kernel", kernel_kind}, {"k", k},       {"alpha", parse_scalar(alpha_text, exact)},
               {"q", parse_scalar_list(q_text, exact)}, {"mode", mode}, {"eps", eps}};
      if (!lambda_text.empty()) req["lambda"] = parse_coord_list(lambda_text);
      if (kernel_kind == "mu") req["m"] = std::stoll(m_text);
      if (m_max >= 0) req["m_max"] = m_max;
      if (kernel_kind == "Q")
        req["from"] = Json{{"u", parse_coord_list(from_u)},
                           {"z", parse_coord_list(from_z)},
                           {"y", parse_coord_list(from_y)}};
      return dispatch(sgt_kernel_row, req, out_opt(), "sgt kernel " + kernel_kind);
    }
    if (simd->parsed()) {
      Json req{{"k", k},
               {"q", parse_scalar_list(q_text, false)},
               {"alpha", parse_scalar(alpha_text, false)},
               {"horizon", horizon},
               {"trajectories", trajectories},
               {"seed", seed},
               {"record", record},
               {"format", format},
               {"threads", threads}};
      return dispatch(sgt_simulate_discrete, req, out_opt(), "sgt simulate-discrete");
    }
    if (simc->parsed()) {
      Json req{{"k", k},
               {"q", parse_scalar_list(q_text, false)},
               {"horizon", horizon_t},
               {"trajectories", trajectories},
               {"seed", seed},
               {"threads", threads},
               {"record_events", true}};
      std::vector<std::pair<std::string, std::string>> files;
      if (!out_path.empty()) files.emplace_back("events_jsonl", out_path);
      if (!final_out.empty()) files.emplace_back("final_csv", final_out);
      return dispatch(sgt_simulate_continuous, req,
                      files.empty() ? out_opt() : std::nullopt, "sgt simulate-continuous",
                      files);
    }
    if (rm->parsed()) {
      Json req{{"r", r},
               {"steps", steps},
               {"trajectories", trajectories},
               {"seed", seed},
               {"threads", threads}};
      return dispatch(sgt_randmat, req, out_opt(), "sgt randmat");
    }
    if (verify->parsed()) {
      Json req{{"claim", claim}, {"samples", samples}, {"seed", seed}, {"threads", threads}};
      // THM-7.2 and PROP-8.2 honor explicit parameter overrides.
      if (verify->count("--k") > 0) req["k"] = k;
      if (verify->count("--alpha") > 0) req["alpha"] = parse_scalar(alpha_text, false);
      if (verify->count("--q") > 0) req["q"] = parse_scalar_list(q_text, false);
      sgt_buffer* buf = nullptr;
      const int code = sgt_verify(req.dump().c_str(), &buf);
      if (code != SGT_OK) {
        std::cerr << "error: " << sgt_strerror(code) << ": " << sgt_last_error() << "\n";
        return map_error(code);
      }
      const Json report = Json::parse(sgt_buffer_data(buf));
      sgt_buffer_free(buf);
      if (!out_path.empty()) write_atomic(out_path, report.dump(2) + "\n");
      const bool pass = report.at("pass").get<bool>();
      std::cout << "verify " << report.at("claim").get<std::string>() << ": "
                << (pass ? "PASS" : "FAIL") << " (" << report.at("runtime_seconds").get<double>()
                << " s)";
      if (!out_path.empty()) std::cout << " -> " << resolve_out_path(out_path);
      std::cout << "\n";
      if (out_path.empty()) std::cout << report.dump(2) << "\n";
      return pass ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kExitUsage;
}
