// Command line front end. Talks to the library exclusively through the C API.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hyperjack.h"

namespace {

struct SessionDeleter {
  void operator()(hj_session* s) const { hj_session_free(s); }
};
using Session = std::unique_ptr<hj_session, SessionDeleter>;

struct StringDeleter {
  void operator()(char* s) const { hj_string_free(s); }
};
using ApiString = std::unique_ptr<char, StringDeleter>;

int fail(const hj_session* s, const char* what) {
  std::string msg = hj_session_last_error(s);
  std::string prefix = std::string(what) + ": ";
  if (msg.rfind(prefix, 0) != 0) msg = prefix + msg;
  std::cerr << msg << "\n";
  return 2;
}

std::vector<int> parse_partition_arg(const std::string& text) {
  std::vector<int> parts;
  if (text.empty()) return parts;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t comma = text.find(',', pos);
    std::string piece = text.substr(pos, comma == std::string::npos ? std::string::npos
                                                                    : comma - pos);
    try {
      size_t used = 0;
      int v = std::stoi(piece, &used);
      if (used != piece.size()) throw std::invalid_argument(piece);
      parts.push_back(v);
    } catch (const std::exception&) {
      throw std::runtime_error("bad part '" + piece + "' in partition '" + text + "'");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return parts;
}

int print_or_write(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text << "\n";
    return 0;
  }
  std::ofstream out(out_path);
  if (!out) {
    std::cerr << "cannot write " << out_path << "\n";
    return 2;
  }
  out << text << "\n";
  return 0;
}

int run_verify(const std::vector<std::string>& ids, const std::string& grid, bool set_threads,
               int threads, const std::string& out_path, bool quiet) {
  Session s(hj_session_new());
  if (set_threads && hj_session_set_threads(s.get(), threads) != HJ_OK)
    return fail(s.get(), "verify");
  std::vector<const char*> idp;
  for (const auto& id : ids) idp.push_back(id.c_str());
  char* raw = nullptr;
  int all_ok = 0;
  if (hj_verify(s.get(), idp.empty() ? nullptr : idp.data(), idp.size(), grid.c_str(),
                /*include_timings=*/1, &raw, &all_ok) != HJ_OK)
    return fail(s.get(), "verify");
  ApiString report(raw);

  if (!quiet) {
    auto j = nlohmann::json::parse(report.get());
    for (const auto& sum : j["summaries"]) {
      std::printf("%-14s %-24s equal=%-4d unequal=%-4d skipped=%-3d %s\n",
                  sum["id"].get<std::string>().c_str(), sum["mode"].get<std::string>().c_str(),
                  sum["equal"].get<int>(), sum["unequal"].get<int>(), sum["skipped"].get<int>(),
                  sum["accepted"].get<bool>() ? "ok" : "FAILED");
      if (sum.contains("note"))
        std::printf("%-14s   %s\n", "", sum["note"].get<std::string>().c_str());
    }
    std::printf("overall: %s\n", all_ok ? "ok" : "FAILED");
  }
  if (!out_path.empty()) {
    int rc = print_or_write(report.get(), out_path);
    if (rc != 0) return rc;
  } else if (quiet) {
    std::cout << report.get() << "\n";
  }
  return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hyperjack: rectangular Jack polynomials and Hankel hyperdeterminants"};
  app.require_subcommand(1);

  auto* verify = app.add_subcommand("verify", "run identity checks over a parameter grid");
  std::vector<std::string> ids;
  std::string grid = "default";
  int threads = 0;
  std::string out_path;
  bool quiet = false;
  verify->add_option("--id", ids, "identity ids to run (repeatable; default: all)");
  verify->add_option("--grid", grid, "default, small, or a JSON grid file")
      ->capture_default_str();
  auto* verify_threads = verify->add_option("--threads", threads, "worker threads");
  verify->add_option("--out", out_path, "write the JSON report to this file");
  verify->add_flag("--quiet", quiet, "suppress the summary table, print raw JSON when no --out");

  auto* jack = app.add_subcommand("jack", "Jack polynomial in the monomial basis");
  std::string alpha = "1";
  std::string partition_text;
  std::string norm = "P";
  jack->add_option("--alpha", alpha, "Jack parameter, e.g. 2 or 1/2")->capture_default_str();
  jack->add_option("--partition", partition_text, "comma separated parts, e.g. 2,1");
  jack->add_option("--norm", norm, "P, Q or J")->check(CLI::IsMember({"P", "Q", "J"}))
      ->capture_default_str();

  auto* hyperdet = app.add_subcommand("hyperdet", "hyperdeterminant of a tensor JSON file");
  std::string tensor_path;
  int det_threads = 0;
  hyperdet->add_option("--tensor", tensor_path, "tensor file")->required();
  auto* det_threads_opt = hyperdet->add_option("--threads", det_threads, "worker threads");

  auto* vand = app.add_subcommand("vandermonde", "expand a power of the Vandermonde determinant");
  int vn = 2, vk = 1;
  bool schur_mode = false;
  vand->add_option("--n", vn, "number of variables")->required();
  vand->add_option("--k", vk, "half the exponent: expands the (2k)-th power")->required();
  vand->add_flag("--schur", schur_mode, "print Schur coefficients instead of monomials");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  if (*verify)
    return run_verify(ids, grid, verify_threads->count() > 0, threads, out_path, quiet);

  Session s(hj_session_new());
  char* raw = nullptr;

  if (*jack) {
    std::vector<int> parts;
    try {
      parts = parse_partition_arg(partition_text);
    } catch (const std::exception& e) {
      std::cerr << "jack: " << e.what() << "\n";
      return 2;
    }
    if (hj_jack(s.get(), parts.data(), parts.size(), alpha.c_str(), norm[0], &raw) != HJ_OK)
      return fail(s.get(), "jack");
  } else if (*hyperdet) {
    if (det_threads_opt->count() > 0 && hj_session_set_threads(s.get(), det_threads) != HJ_OK)
      return fail(s.get(), "hyperdet");
    if (hj_hyperdet(s.get(), tensor_path.c_str(), &raw) != HJ_OK)
      return fail(s.get(), "hyperdet");
  } else if (*vand) {
    hj_status st = schur_mode ? hj_vandermonde_schur(s.get(), vn, vk, &raw)
                              : hj_vandermonde_expand(s.get(), vn, vk, &raw);
    if (st != HJ_OK) return fail(s.get(), "vandermonde");
  }

  ApiString result(raw);
  std::cout << result.get() << "\n";
  return 0;
}
