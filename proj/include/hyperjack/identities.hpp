#pragma once

// Registry of the hyperdeterminant/Jack identities the library implements,
// each compiled to an executable equality check over a parameter grid.
//
// Every check computes its two sides through independent code paths (one
// through the umbral/determinant machinery, one through the Jack/Schur
// machinery, or two genuinely different determinant readings) and compares
// exactly. When a side-by-side comparison fails, the runner fits lhs = c*rhs
// across the id's whole grid: a single constant c is reported as "holds up to
// constant factor" (a likely source typo), anything non-constant is treated
// as an implementation bug.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hyperjack/partition.hpp"
#include "hyperjack/rational.hpp"
#include "hyperjack/symfunc.hpp"

namespace hyperjack {

enum class AcceptMode { Exact, ExactOrConstantRatio };

struct IdentityInfo {
  std::string id;
  AcceptMode mode;
  std::string summary;  // one line, human oriented
};

// fixed table, stable order and ids
const std::vector<IdentityInfo>& identity_registry();
const IdentityInfo* find_identity(const std::string& id);

struct GridConfig {
  std::vector<int> ns{1, 2, 3};
  std::vector<int> ks{1, 2};
  std::vector<int> ps{0, 1, 2};
  int lam_weight_max = 6;          // partition-indexed grids
  int trans_weight_max = 4;        // TRANS-SCHUR / K1-EXAMPLE partitions
  std::vector<Rational> alphas;    // filled by defaults()/small()
  std::vector<std::vector<Rational>> alphabets;
  std::vector<Rational> zvals;
  bool extended = true;            // adds the n=4 cases (D2H, VAND-JACK)
  int formal_weight_max = 12;      // cross-basis comparisons above this run evaluated
  int case_weight_cap = 12;        // cases needing heavier objects are skipped
  int kernel_truncation = 5;       // KERNEL-DUAL degree cap
  int threads = 1;

  static GridConfig defaults();
  static GridConfig small();
};

enum class Verdict { Equal, Unequal, Skipped };

// Named parameters for one grid case. Only the fields an identity consumes
// are read; param_text() renders the populated ones deterministically.
struct CaseParams {
  std::optional<int> n, k, p, l;
  std::optional<Partition> lam;
  std::optional<Rational> alpha;
  std::optional<std::vector<Rational>> xvals, yvals, zvals;
  std::optional<ShiftVector> v;
  std::optional<std::vector<ShiftVector>> ws;
  std::optional<std::vector<int>> avec;   // DYSON exponents
  std::optional<std::string> dir;         // HT-SIGNS direction
  std::optional<int> truncation;          // KERNEL-DUAL
  bool evaluated = false;                 // force evaluated comparison

  std::string param_text() const;
};

struct IdentityCase {
  std::string id;
  std::string params;
  Verdict verdict = Verdict::Skipped;
  bool degenerate = false;               // equal with both sides zero
  std::optional<Rational> ratio;         // c with lhs == c*rhs, when one exists
  std::string reason;                    // skip reason or mismatch note
  std::string note;                      // extra per-case info (e.g. which det convention matched)
  double ms = 0;
  unsigned long long lhs_terms = 0, rhs_terms = 0;
};

IdentityCase verify_identity(const std::string& id, const CaseParams& params,
                             const GridConfig& cfg);

struct IdSummary {
  std::string id;
  AcceptMode mode = AcceptMode::Exact;
  int equal = 0, unequal = 0, skipped = 0;
  int nondegenerate_equal = 0;
  bool ratio_constant = false;           // meaningful when unequal > 0
  std::optional<Rational> fitted_ratio;  // the constant, when ratio_constant
  bool accepted = false;
  std::string note;
};

struct IdentityReport {
  std::vector<IdentityCase> cases;       // id order then enumeration order
  std::vector<IdSummary> summaries;      // registry order, attempted ids only
  int threads = 1;
  bool all_ok = false;
};

// ids: which identities to run (must all be registry ids; empty list -> empty
// report). Cases may execute on cfg.threads workers; assembly order is fixed.
IdentityReport run_grid(const std::vector<std::string>& ids, const GridConfig& cfg);

// Coefficients of the Schur expansion of the 2k-th Vandermonde power in n
// variables, over all candidate shapes (weight k*n*(n-1), length <= n),
// including explicit zeros. Two routes:
//   - alternant reading: coefficient of x^{lam+delta} in the (2k+1)-st power
//   - primed scalar product against the Schur function at alpha = 1
std::map<Partition, Rational> schur_expand_vandermonde(int n, int k);
std::map<Partition, Rational> schur_expand_vandermonde_scalar(int n, int k);

std::string to_string(Verdict v);
std::string to_string(AcceptMode m);

}  // namespace hyperjack
