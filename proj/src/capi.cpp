#include "hyperjack.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "hyperjack/jack.hpp"
#include "hyperjack/jsonio.hpp"

using json = nlohmann::ordered_json;
using namespace hyperjack;

struct hj_session {
  std::string last_error;
  int threads = 0;  // 0: follow the grid config (and 1 elsewhere)
};

namespace {

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

hj_status emit(hj_session* s, const std::string& text, char** out_json) {
  char* dup = dup_string(text);
  if (!dup) {
    s->last_error = "out of memory";
    return HJ_ERR_INTERNAL;
  }
  *out_json = dup;
  return HJ_OK;
}

template <class F>
hj_status guarded(hj_session* s, F&& f) {
  if (!s) return HJ_ERR_INVALID_ARGUMENT;
  s->last_error.clear();
  try {
    return f();
  } catch (const std::domain_error& e) {
    s->last_error = e.what();
    return HJ_ERR_DOMAIN;
  } catch (const std::logic_error& e) {
    s->last_error = e.what();
    return HJ_ERR_INVALID_ARGUMENT;
  } catch (const std::runtime_error& e) {
    s->last_error = e.what();
    return HJ_ERR_IO;
  } catch (const std::exception& e) {
    s->last_error = e.what();
    return HJ_ERR_INTERNAL;
  }
}

}  // namespace

extern "C" {

hj_session* hj_session_new(void) {
  try {
    return new hj_session();
  } catch (...) {
    return nullptr;
  }
}

void hj_session_free(hj_session* s) { delete s; }

hj_status hj_session_set_threads(hj_session* s, int n) {
  if (!s) return HJ_ERR_INVALID_ARGUMENT;
  s->last_error.clear();
  if (n < 1) {
    s->last_error = "thread count must be >= 1";
    return HJ_ERR_INVALID_ARGUMENT;
  }
  s->threads = n;
  return HJ_OK;
}

const char* hj_session_last_error(const hj_session* s) {
  return s ? s->last_error.c_str() : "null session";
}

const char* hj_version(void) { return "1.0.0"; }

void hj_string_free(char* s) { std::free(s); }

hj_status hj_jack(hj_session* s, const int* parts, size_t nparts, const char* alpha,
                  char norm, char** out_json) {
  return guarded(s, [&]() -> hj_status {
    if ((!parts && nparts > 0) || !alpha || !out_json)
      throw std::invalid_argument("null argument");
    Partition lam(std::vector<int>(parts, parts + nparts));
    Rational a = parse_rational(alpha);
    SymFunc f;
    switch (norm) {
      case 'P': f = jack_P(lam, a); break;
      case 'Q': f = jack_Q(lam, a); break;
      case 'J': f = jack_J(lam, a); break;
      default: throw std::invalid_argument("norm must be 'P', 'Q' or 'J'");
    }
    json j;
    j["partition"] = std::vector<int>(parts, parts + nparts);
    j["alpha"] = to_string(a);
    j["norm"] = std::string(1, norm);
    j["jack"] = json::parse(to_json(f.to_basis(Basis::M)));
    return emit(s, j.dump(2), out_json);
  });
}

hj_status hj_hyperdet(hj_session* s, const char* tensor_path, char** out_json) {
  return guarded(s, [&]() -> hj_status {
    if (!tensor_path || !out_json) throw std::invalid_argument("null argument");
    LoadedTensor t = tensor_from_file(tensor_path);
    json j;
    if (t.rational) {
      j["order"] = t.rational->order();
      j["dim"] = t.rational->dim();
      j["ring"] = t.ring;
      j["value"] = to_string(det(*t.rational, DetStrategy::Reduced, std::max(1, s->threads)));
    } else {
      j["order"] = t.symfunc->order();
      j["dim"] = t.symfunc->dim();
      j["ring"] = t.ring;
      j["value"] =
          json::parse(to_json(det(*t.symfunc, DetStrategy::Reduced, std::max(1, s->threads))));
    }
    return emit(s, j.dump(2), out_json);
  });
}

hj_status hj_vandermonde_expand(hj_session* s, int n, int k, char** out_json) {
  return guarded(s, [&]() -> hj_status {
    if (!out_json) throw std::invalid_argument("null argument");
    if (n < 1 || n > 4 || k < 1 || k > 2)
      throw std::invalid_argument("vandermonde expansion: supported range is 1<=n<=4, 1<=k<=2");
    json j;
    j["n"] = n;
    j["k"] = k;
    j["poly"] = json::parse(to_json(vandermonde(n).pow(2 * k)));
    return emit(s, j.dump(2), out_json);
  });
}

hj_status hj_vandermonde_schur(hj_session* s, int n, int k, char** out_json) {
  return guarded(s, [&]() -> hj_status {
    if (!out_json) throw std::invalid_argument("null argument");
    auto coeffs = schur_expand_vandermonde(n, k);
    bool checked = false;
    if (n <= 3) {
      auto scalar = schur_expand_vandermonde_scalar(n, k);
      if (scalar != coeffs) {
        s->last_error = "alternant and scalar-product expansions disagree";
        return HJ_ERR_INTERNAL;
      }
      checked = true;
    }
    json j;
    j["n"] = n;
    j["k"] = k;
    j["coeffs"] = json::parse(coeff_map_to_json(coeffs));
    j["scalar_product_checked"] = checked;
    return emit(s, j.dump(2), out_json);
  });
}

hj_status hj_verify(hj_session* s, const char* const* ids, size_t nids, const char* grid,
                    int include_timings, char** out_json, int* all_ok) {
  return guarded(s, [&]() -> hj_status {
    if (!out_json || (nids > 0 && !ids)) throw std::invalid_argument("null argument");
    std::vector<std::string> want;
    if (nids > 0) {
      for (size_t i = 0; i < nids; ++i) {
        if (!ids[i]) throw std::invalid_argument("null identity id");
        want.emplace_back(ids[i]);
      }
    } else {
      for (const auto& info : identity_registry()) want.push_back(info.id);
    }
    std::string g = grid ? grid : "default";
    GridConfig cfg;
    if (g == "default") cfg = GridConfig::defaults();
    else if (g == "small") cfg = GridConfig::small();
    else cfg = grid_config_from_file(g);
    if (s->threads > 0) cfg.threads = s->threads;
    IdentityReport rep = run_grid(want, cfg);
    hj_status st = emit(s, report_to_json(rep, include_timings != 0, 2), out_json);
    if (st == HJ_OK && all_ok) *all_ok = rep.all_ok ? 1 : 0;
    return st;
  });
}

}  // extern "C"
