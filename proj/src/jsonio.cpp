#include "hyperjack/jsonio.hpp"

#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace hyperjack {

namespace {

using json = nlohmann::ordered_json;

json rat_json(const Rational& r) { return to_string(r); }

Rational rat_from_json(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw std::invalid_argument("expected a rational as \"p/q\" string or integer");
}

json partition_json(const Partition& p) {
  json a = json::array();
  for (int i = 0; i < p.length(); ++i) a.push_back(p.part(i));
  return a;
}

Partition partition_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected a partition as an array of ints");
  return Partition(j.get<std::vector<int>>());
}

json laurent_json(const LaurentPoly& f) {
  json a = json::array();
  for (const auto& [e, c] : f.terms()) a.push_back({{"exponents", e}, {"coeff", rat_json(c)}});
  return a;
}

json symfunc_json(const SymFunc& f) {
  json terms = json::array();
  for (const auto& [lam, c] : f.terms())
    terms.push_back({{"partition", partition_json(lam)}, {"coeff", rat_json(c)}});
  return {{"basis", std::string(1, static_cast<char>(f.basis()))}, {"terms", terms}};
}

SymFunc symfunc_from_json(const json& j) {
  std::string b = j.at("basis").get<std::string>();
  if (b.size() != 1) throw std::invalid_argument("basis must be one of m,e,h,p,s");
  SymFunc f = SymFunc::zero(basis_from_char(b[0]));
  for (const auto& t : j.at("terms"))
    f.add_term(partition_from_json(t.at("partition")), rat_from_json(t.at("coeff")));
  return f;
}

}  // namespace

std::string to_json(const LaurentPoly& f, int indent) { return laurent_json(f).dump(indent); }

std::string to_json(const SymFunc& f, int indent) { return symfunc_json(f).dump(indent); }

std::string coeff_map_to_json(const std::map<Partition, Rational>& coeffs, int indent) {
  json a = json::array();
  for (const auto& [lam, c] : coeffs)
    a.push_back({{"partition", partition_json(lam)}, {"coeff", rat_json(c)}});
  return a.dump(indent);
}

std::string report_to_json(const IdentityReport& rep, bool include_timings, int indent) {
  json j;
  j["schema"] = "hyperjack-report-v1";
  j["threads"] = rep.threads;
  j["all_ok"] = rep.all_ok;
  json sums = json::array();
  for (const auto& s : rep.summaries) {
    json e;
    e["id"] = s.id;
    e["mode"] = to_string(s.mode);
    e["accepted"] = s.accepted;
    e["equal"] = s.equal;
    e["unequal"] = s.unequal;
    e["skipped"] = s.skipped;
    e["nondegenerate_equal"] = s.nondegenerate_equal;
    e["ratio_constant"] = s.ratio_constant;
    if (s.fitted_ratio) e["fitted_ratio"] = rat_json(*s.fitted_ratio);
    if (!s.note.empty()) e["note"] = s.note;
    sums.push_back(std::move(e));
  }
  j["summaries"] = std::move(sums);
  json cases = json::array();
  for (const auto& c : rep.cases) {
    json e;
    e["id"] = c.id;
    e["params"] = c.params;
    e["verdict"] = to_string(c.verdict);
    e["degenerate"] = c.degenerate;
    if (c.ratio) e["ratio"] = rat_json(*c.ratio);
    if (!c.reason.empty()) e["reason"] = c.reason;
    if (!c.note.empty()) e["note"] = c.note;
    e["lhs_terms"] = c.lhs_terms;
    e["rhs_terms"] = c.rhs_terms;
    if (include_timings) e["ms"] = c.ms;
    cases.push_back(std::move(e));
  }
  j["cases"] = std::move(cases);
  return j.dump(indent);
}

GridConfig grid_config_from_json(const std::string& text) {
  json j = json::parse(text);
  GridConfig cfg = GridConfig::defaults();
  if (j.contains("ns")) cfg.ns = j["ns"].get<std::vector<int>>();
  if (j.contains("ks")) cfg.ks = j["ks"].get<std::vector<int>>();
  if (j.contains("ps")) cfg.ps = j["ps"].get<std::vector<int>>();
  if (j.contains("lam_weight_max")) cfg.lam_weight_max = j["lam_weight_max"].get<int>();
  if (j.contains("trans_weight_max")) cfg.trans_weight_max = j["trans_weight_max"].get<int>();
  if (j.contains("alphas")) {
    cfg.alphas.clear();
    for (const auto& a : j["alphas"]) cfg.alphas.push_back(rat_from_json(a));
  }
  if (j.contains("alphabets")) {
    cfg.alphabets.clear();
    for (const auto& row : j["alphabets"]) {
      std::vector<Rational> vals;
      for (const auto& a : row) vals.push_back(rat_from_json(a));
      cfg.alphabets.push_back(std::move(vals));
    }
  }
  if (j.contains("zvals")) {
    cfg.zvals.clear();
    for (const auto& a : j["zvals"]) cfg.zvals.push_back(rat_from_json(a));
  }
  if (j.contains("extended")) cfg.extended = j["extended"].get<bool>();
  if (j.contains("formal_weight_max")) cfg.formal_weight_max = j["formal_weight_max"].get<int>();
  if (j.contains("case_weight_cap")) cfg.case_weight_cap = j["case_weight_cap"].get<int>();
  if (j.contains("kernel_truncation")) cfg.kernel_truncation = j["kernel_truncation"].get<int>();
  if (j.contains("threads")) cfg.threads = j["threads"].get<int>();
  return cfg;
}

GridConfig grid_config_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open grid file: " + path);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return grid_config_from_json(text);
}

LoadedTensor tensor_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open tensor file: " + path);
  json j = json::parse(in);
  int order = j.at("order").get<int>();
  int dim = j.at("dim").get<int>();
  LoadedTensor out;
  out.ring = j.value("ring", "rational");
  const json& ents = j.at("entries");
  if (!ents.is_array()) throw std::invalid_argument("tensor entries must be an array");
  if (out.ring == "rational") {
    std::vector<Rational> es;
    es.reserve(ents.size());
    for (const auto& e : ents) es.push_back(rat_from_json(e));
    out.rational = HyperTensor<Rational>::from_entries(order, dim, std::move(es));
  } else if (out.ring == "symfunc") {
    std::vector<SymFunc> es;
    es.reserve(ents.size());
    for (const auto& e : ents) es.push_back(symfunc_from_json(e));
    out.symfunc = HyperTensor<SymFunc>::from_entries(order, dim, std::move(es));
  } else {
    throw std::invalid_argument("tensor ring must be \"rational\" or \"symfunc\"");
  }
  return out;
}

}  // namespace hyperjack
