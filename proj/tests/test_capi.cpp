#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstring>
#include <fstream>
#include <json.hpp>
#include <string>

#include "hyperjack.h"

using nlohmann::json;

namespace {

struct Session {
  hj_session* s = hj_session_new();
  ~Session() { hj_session_free(s); }
  operator hj_session*() { return s; }
};

// takes ownership of a malloc'd string from the API
std::string take(char* p) {
  REQUIRE(p != nullptr);
  std::string out(p);
  hj_string_free(p);
  return out;
}

}  // namespace

TEST_CASE("session lifecycle and version") {
  Session s;
  REQUIRE(s.s != nullptr);
  CHECK(std::string(hj_session_last_error(s)) == "");
  const char* v = hj_version();
  REQUIRE(v != nullptr);
  CHECK(std::strlen(v) > 0);
  hj_session_free(nullptr);  // must be a no-op
  hj_string_free(nullptr);
}

TEST_CASE("set threads") {
  Session s;
  CHECK(hj_session_set_threads(s, 2) == HJ_OK);
  CHECK(hj_session_set_threads(s, 0) == HJ_ERR_INVALID_ARGUMENT);
  CHECK(std::string(hj_session_last_error(s)) != "");
  CHECK(hj_session_set_threads(nullptr, 2) == HJ_ERR_INVALID_ARGUMENT);
}

TEST_CASE("jack over the C boundary") {
  Session s;
  int parts[] = {2, 1};
  char* out = nullptr;
  REQUIRE(hj_jack(s, parts, 2, "2", 'P', &out) == HJ_OK);
  json j = json::parse(take(out));
  CHECK(j.at("norm") == "P");
  CHECK(j.at("alpha") == "2");
  CHECK(j.at("partition") == json::array({2, 1}));
  CHECK(j.at("jack").at("basis") == "m");
  bool saw = false;
  for (const auto& t : j.at("jack").at("terms"))
    if (t.at("partition") == json::array({1, 1, 1})) {
      CHECK(t.at("coeff") == "3/2");
      saw = true;
    }
  CHECK(saw);

  char* q = nullptr;
  REQUIRE(hj_jack(s, parts, 2, "2", 'Q', &q) == HJ_OK);
  json jq = json::parse(take(q));
  bool lead = false;
  for (const auto& t : jq.at("jack").at("terms"))
    if (t.at("partition") == json::array({2, 1})) {
      CHECK(t.at("coeff") == "1/5");
      lead = true;
    }
  CHECK(lead);

  char* bad = nullptr;
  CHECK(hj_jack(s, parts, 2, "x", 'P', &bad) == HJ_ERR_INVALID_ARGUMENT);
  CHECK(bad == nullptr);
  CHECK(std::string(hj_session_last_error(s)) != "");
  CHECK(hj_jack(s, parts, 2, "0", 'P', &bad) == HJ_ERR_INVALID_ARGUMENT);
  CHECK(hj_jack(s, parts, 2, "2", 'X', &bad) == HJ_ERR_INVALID_ARGUMENT);
  int rising[] = {1, 2};
  CHECK(hj_jack(s, rising, 2, "2", 'P', &bad) == HJ_ERR_INVALID_ARGUMENT);
  CHECK(hj_jack(s, nullptr, 2, "2", 'P', &bad) == HJ_ERR_INVALID_ARGUMENT);
  CHECK(bad == nullptr);
}

TEST_CASE("vandermonde expansion") {
  Session s;
  char* out = nullptr;
  REQUIRE(hj_vandermonde_expand(s, 2, 1, &out) == HJ_OK);
  json j = json::parse(take(out));
  CHECK(j.at("n") == 2);
  CHECK(j.at("k") == 1);
  CHECK(j.at("poly").size() == 3);  // x^2 - 2xy + y^2

  char* bad = nullptr;
  CHECK(hj_vandermonde_expand(s, 9, 1, &bad) == HJ_ERR_INVALID_ARGUMENT);
  CHECK(hj_vandermonde_expand(s, 2, 0, &bad) == HJ_ERR_INVALID_ARGUMENT);
  CHECK(bad == nullptr);
}

TEST_CASE("vandermonde schur coefficients") {
  Session s;
  char* out = nullptr;
  REQUIRE(hj_vandermonde_schur(s, 2, 1, &out) == HJ_OK);
  json j = json::parse(take(out));
  CHECK(j.at("scalar_product_checked") == true);
  REQUIRE(j.at("coeffs").size() == 2);
  std::map<std::string, std::string> got;
  for (const auto& c : j.at("coeffs"))
    got[c.at("partition").dump()] = c.at("coeff").get<std::string>();
  CHECK(got.at("[2]") == "1");
  CHECK(got.at("[1,1]") == "-3");

  REQUIRE(hj_vandermonde_schur(s, 4, 1, &out) == HJ_OK);
  json j4 = json::parse(take(out));
  CHECK(j4.at("scalar_product_checked") == false);  // n = 4 has no cross-check
}

TEST_CASE("hyperdet from a tensor file") {
  Session s;
  const char* path = "capi_tensor_tmp.json";
  {
    std::ofstream f(path);
    f << R"({"order":2,"dim":2,"ring":"rational","entries":["1","2","3","4"]})";
  }
  char* out = nullptr;
  REQUIRE(hj_hyperdet(s, path, &out) == HJ_OK);
  json j = json::parse(take(out));
  CHECK(j.at("order") == 2);
  CHECK(j.at("dim") == 2);
  CHECK(j.at("ring") == "rational");
  CHECK(j.at("value") == "-2");
  std::remove(path);

  char* bad = nullptr;
  CHECK(hj_hyperdet(s, "missing_tensor.json", &bad) == HJ_ERR_IO);
  CHECK(bad == nullptr);
  CHECK(hj_hyperdet(s, nullptr, &bad) == HJ_ERR_INVALID_ARGUMENT);

  const char* mpath = "capi_tensor_bad_tmp.json";
  {
    std::ofstream f(mpath);
    f << R"({"order":2,"dim":2,"ring":"rational","entries":["1"]})";
  }
  CHECK(hj_hyperdet(s, mpath, &bad) == HJ_ERR_INVALID_ARGUMENT);
  std::remove(mpath);
}

TEST_CASE("verify through the C api") {
  Session s;
  const char* ids[] = {"DYSON"};
  char* out = nullptr;
  int ok = 0;
  REQUIRE(hj_verify(s, ids, 1, "small", 0, &out, &ok) == HJ_OK);
  CHECK(ok == 1);
  json j = json::parse(take(out));
  CHECK(j.at("schema") == "hyperjack-report-v1");
  CHECK(j.at("all_ok") == true);
  REQUIRE(j.at("summaries").size() == 1);
  CHECK(j.at("summaries")[0].at("id") == "DYSON");
  CHECK(j.at("summaries")[0].at("accepted") == true);
  CHECK(!j.at("cases").empty());
  CHECK(!j.at("cases")[0].contains("ms"));

  const char* unknown[] = {"NOPE"};
  char* bad = nullptr;
  CHECK(hj_verify(s, unknown, 1, "small", 0, &bad, nullptr) == HJ_ERR_INVALID_ARGUMENT);
  CHECK(bad == nullptr);
  CHECK(hj_verify(s, nullptr, 1, "small", 0, &bad, nullptr) == HJ_ERR_INVALID_ARGUMENT);
  CHECK(hj_verify(s, ids, 1, "no_such_grid.json", 0, &bad, nullptr) == HJ_ERR_IO);
}

TEST_CASE("verify with a grid file") {
  Session s;
  const char* gpath = "capi_grid_tmp.json";
  {
    std::ofstream f(gpath);
    f << R"({"ns":[1],"ks":[1],"alphabets":[["1"]],"zvals":["2"],"extended":false})";
  }
  const char* ids[] = {"HT-SIGNS"};
  char* out = nullptr;
  int ok = 0;
  REQUIRE(hj_verify(s, ids, 1, gpath, 1, &out, &ok) == HJ_OK);
  CHECK(ok == 1);
  json j = json::parse(take(out));
  CHECK(j.at("cases")[0].contains("ms"));
  std::remove(gpath);
}
