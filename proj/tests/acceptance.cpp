// Acceptance gate: one line per criterion, exit status = number of failures.
// Every check is an exact equality; timing limits are wall-clock seconds.

#include <chrono>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "hyperjack/hyperdet.hpp"
#include "hyperjack/identities.hpp"
#include "hyperjack/jack.hpp"

using namespace hyperjack;
using clock_type = std::chrono::steady_clock;

namespace {

int failures = 0;

template <class F>
void criterion(int num, const std::string& label, F&& body) {
  auto t0 = clock_type::now();
  bool ok = false;
  std::string detail;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  double secs = std::chrono::duration<double>(clock_type::now() - t0).count();
  std::printf("[%s] %2d. %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", num, label.c_str(), secs,
              detail.empty() ? "" : " -- ", detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

bool all_equal_cases(const IdentityReport& rep, std::string& detail) {
  for (const auto& c : rep.cases)
    if (c.verdict != Verdict::Equal) {
      detail = c.id + " [" + c.params + "] " + to_string(c.verdict) +
               (c.reason.empty() ? "" : ": " + c.reason);
      return false;
    }
  return true;
}

const IdentityCase* find_case(const IdentityReport& rep, const std::string& prefix,
                              bool evaluated) {
  for (const auto& c : rep.cases)
    if (c.params.rfind(prefix, 0) == 0 &&
        (c.params.find("evaluated") != std::string::npos) == evaluated)
      return &c;
  return nullptr;
}

}  // namespace

int main() {
  GridConfig defaults = GridConfig::defaults();

  criterion(1, "Dyson constant terms equal multinomial coefficients", [&](std::string& detail) {
    auto t0 = clock_type::now();
    IdentityReport rep = run_grid({"DYSON"}, defaults);
    if (!all_equal_cases(rep, detail)) return false;
    if (rep.cases.size() != 28) {
      detail = "expected 28 cases, saw " + std::to_string(rep.cases.size());
      return false;
    }
    double secs = std::chrono::duration<double>(clock_type::now() - t0).count();
    if (secs >= 10.0) {
      detail = "took " + std::to_string(secs) + "s, limit 10s";
      return false;
    }
    return true;
  });

  criterion(2, "Vandermonde-power umbral images equal zero-shift Hankel hyperdeterminants",
            [&](std::string& detail) {
    IdentityReport rep = run_grid({"D2H"}, defaults);
    if (!all_equal_cases(rep, detail)) return false;
    for (const char* need : {"n=2 k=1", "n=3 k=1", "n=4 k=1", "n=2 k=2", "n=3 k=2"}) {
      bool found = false;
      for (const auto& c : rep.cases)
        if (c.params.rfind(need, 0) == 0) found = true;
      if (!found) {
        detail = std::string("missing case ") + need;
        return false;
      }
    }
    const IdentityCase* formal32 = find_case(rep, "n=3 k=2", false);
    if (!formal32) {
      detail = "n=3 k=2 was not compared formally";
      return false;
    }
    if (formal32->ms >= 5000) {
      detail = "n=3 k=2 took " + std::to_string(formal32->ms) + "ms, limit 5000";
      return false;
    }
    double eval42 = 0;
    bool saw42 = false, formal42 = false;
    for (const auto& c : rep.cases)
      if (c.params.rfind("n=4 k=2", 0) == 0) {
        if (c.params.find("evaluated") != std::string::npos) {
          saw42 = true;
          eval42 += c.ms;
        } else {
          formal42 = true;
        }
      }
    if (!saw42 || formal42) {
      detail = "n=4 k=2 must run in evaluated form only";
      return false;
    }
    if (eval42 >= 120000) {
      detail = "n=4 k=2 took " + std::to_string(eval42) + "ms, limit 120000";
      return false;
    }
    return true;
  });

  criterion(3, "Hankel-Toeplitz shift relation holds with the predicted sign",
            [&](std::string& detail) {
    IdentityReport rep = run_grid({"HT-SIGNS"}, defaults);
    return all_equal_cases(rep, detail) && !rep.cases.empty();
  });

  criterion(4, "Schur-weighted integrals match shifted Hankel determinants, k=1 closed form included",
            [&](std::string& detail) {
    IdentityReport rep = run_grid({"TRANS-SCHUR", "K1-EXAMPLE"}, defaults);
    return all_equal_cases(rep, detail) && !rep.cases.empty();
  });

  criterion(5, "Jack core: orthogonality, duality, omega twist, alpha=1, hook norms",
            [&](std::string& detail) {
    const Rational alphas[] = {Rational(1), Rational(2), make_rational(1, 2)};
    for (int d = 0; d <= 6; ++d) {
      auto parts = partitions_of(d);
      for (const auto& lam : parts) {
        if (!equivalent(jack_P(lam, Rational(1)), schur(lam))) {
          detail = "alpha=1 mismatch at " + lam.to_string();
          return false;
        }
        for (const Rational& a : alphas) {
          if (Rational(b_lambda(lam, a) * scalar_alpha(jack_P(lam, a), jack_P(lam, a), a)) !=
              Rational(1)) {
            detail = "hook norm mismatch at " + lam.to_string();
            return false;
          }
          if (!equivalent(omega_alpha(jack_P(lam, a), a), jack_Q(lam.conjugate(), Rational(1) / a))) {
            detail = "omega twist mismatch at " + lam.to_string();
            return false;
          }
          for (const auto& mu : parts) {
            Rational want(lam == mu ? 1 : 0);
            if (scalar_alpha(jack_P(lam, a), jack_Q(mu, a), a) != want) {
              detail = "duality mismatch at " + lam.to_string() + "/" + mu.to_string();
              return false;
            }
          }
        }
      }
    }
    return true;
  });

  criterion(6, "almost-rectangular Jack determinant identities hold on the default grid",
            [&](std::string& detail) {
    IdentityReport rep = run_grid({"GEN-MATSUMOTO", "Q-KAPPA", "MATSUMOTO", "HANKEL-JACK"}, defaults);
    if (!all_equal_cases(rep, detail)) return false;
    for (const auto& c : rep.cases)
      if (c.ms >= 30000) {
        detail = c.id + " [" + c.params + "] took " + std::to_string(c.ms) + "ms, limit 30000";
        return false;
      }
    return true;
  });

  criterion(7, "Vandermonde powers expand through Jack and Schur coefficients",
            [&](std::string& detail) {
    IdentityReport rep = run_grid({"VAND-JACK", "SCHUR-COEFF"}, defaults);
    for (const auto& s : rep.summaries)
      if (s.unequal > 0) {
        detail = s.id + " has " + std::to_string(s.unequal) + " mismatches";
        return false;
      }
    for (const char* need : {"n=2 k=1", "n=3 k=1", "n=2 k=2"}) {
      bool found = false;
      for (const auto& c : rep.cases)
        if (c.id == "VAND-JACK" && c.params.rfind(need, 0) == 0 && c.verdict == Verdict::Equal)
          found = true;
      if (!found) {
        detail = std::string("VAND-JACK missing exact case ") + need;
        return false;
      }
    }
    int schur_cases = 0;
    for (const auto& c : rep.cases)
      if (c.id == "SCHUR-COEFF") {
        if (c.verdict != Verdict::Equal) {
          detail = "SCHUR-COEFF [" + c.params + "] " + to_string(c.verdict);
          return false;
        }
        ++schur_cases;
      }
    if (schur_cases < 10) {
      detail = "SCHUR-COEFF grid too thin: " + std::to_string(schur_cases);
      return false;
    }
    return true;
  });

  criterion(8, "each remaining identity is exact on 3+ cases or holds with one constant ratio",
            [&](std::string& detail) {
    const std::vector<std::string> ids = {"SKEW-HANKEL", "BRANCHING", "KERNEL-DUAL",
                                          "Y-PLUS-Z",    "LTOP",      "INV-ALPHA",
                                          "PAT-MINUS-X", "OMEGA-PLUS", "ALT-TO-DET",
                                          "FINAL-SKEW"};
    IdentityReport rep = run_grid(ids, defaults);
    for (const auto& s : rep.summaries) {
      if (!s.accepted) {
        detail = s.id + " rejected: " + s.note;
        return false;
      }
      if (s.unequal == 0 && s.nondegenerate_equal < 3) {
        detail = s.id + " has only " + std::to_string(s.nondegenerate_equal) +
                 " nondegenerate exact cases";
        return false;
      }
    }
    return rep.summaries.size() == ids.size();
  });

  criterion(9, "closed-form b for the key rectangle matches the hook product",
            [&](std::string& detail) {
    for (int n = 1; n <= 3; ++n)
      for (int k = 1; k <= 2; ++k) {
        std::vector<int> rect(static_cast<size_t>(k * (n - 1)), n);
        if (b_rect_closed(n, k) != b_lambda(Partition(rect), Rational(k))) {
          detail = "mismatch at n=" + std::to_string(n) + " k=" + std::to_string(k);
          return false;
        }
      }
    return true;
  });

  criterion(10, "determinant strategies agree and parallel runs are deterministic",
            [&](std::string& detail) {
    std::mt19937 rng(2024);
    std::uniform_int_distribution<long> num(-4, 4), den(1, 4);
    const int orders[] = {2, 3, 4};
    const int dims[] = {2, 3};
    int made = 0;
    while (made < 20) {
      int order = orders[made % 3];
      int dim = dims[made % 2];
      auto t = HyperTensor<Rational>::build(order, dim, [&](const std::vector<int>&) {
        return make_rational(num(rng), den(rng));
      });
      auto naive = det_strategy_bench(t, DetStrategy::Naive);
      auto reduced = det_strategy_bench(t, DetStrategy::Reduced);
      if (naive.value != reduced.value) {
        detail = "naive/reduced disagree on tensor " + std::to_string(made);
        return false;
      }
      Rational w1 = det(t, DetStrategy::Parallel, 1);
      Rational w2 = det(t, DetStrategy::Parallel, 2);
      Rational w8 = det(t, DetStrategy::Parallel, 8);
      if (w1 != reduced.value || w1 != w2 || w2 != w8) {
        detail = "parallel workers disagree on tensor " + std::to_string(made);
        return false;
      }
      ++made;
    }
    return true;
  });

  criterion(11, "pinned Schur expansion of the two-variable squared Vandermonde",
            [&](std::string& detail) {
    auto m = schur_expand_vandermonde(2, 1);
    if (m.size() != 2 || m.at(Partition({2})) != Rational(1) ||
        m.at(Partition({1, 1})) != Rational(-3)) {
      detail = "wrong coefficients for n=2 k=1";
      return false;
    }
    for (int n = 1; n <= 3; ++n)
      if (schur_expand_vandermonde(n, 1) != schur_expand_vandermonde_scalar(n, 1)) {
        detail = "paths disagree at n=" + std::to_string(n);
        return false;
      }
    return true;
  });

  if (failures) std::printf("%d criterion(s) failed\n", failures);
  else std::printf("all criteria passed\n");
  return failures ? 1 : 0;
}
