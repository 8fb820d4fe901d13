#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hermlat/escalate.hpp"

namespace hermlat {

enum class CheckStatus { Pass, Fail, Skipped };
const char* check_status_name(CheckStatus status);

struct CheckResult {
  std::string check_id;  // "C1" .. "C16"
  std::string title;
  std::string group;
  CheckStatus status = CheckStatus::Skipped;
  // Witnesses, exhausted search bounds, computed tables, and on failure the
  // first offending instance.
  nlohmann::json details;
};

struct CheckInfo {
  std::string id;
  std::string title;
  std::string group;  // base, ternary, quaternary, finiteness, higher-rank
};

// The fixed catalog in run order.
const std::vector<CheckInfo>& check_catalog();

// Throws UnknownCheck for an id outside the catalog. jobs bounds the worker
// threads used inside the check.
CheckResult run_check(const std::string& check_id, unsigned jobs = 1);

// Checks whose group or id equals the filter (all when empty), in catalog
// order. Checks run concurrently when jobs > 1.
std::vector<CheckResult> run_all(const std::optional<std::string>& filter = std::nullopt,
                                 unsigned jobs = 1);

// Pieces of individual checks that other callers use directly.

// PSD completions [[I_2, X], [X^*, B]] with every entry of X of norm <= 2, one
// lattice per isometry class.
std::vector<HermLattice> finiteness_completions(const Field& field, const AlgMatrix& binary_block);

struct U2Bound {
  std::int64_t m = 0;
  Int omega_norm;
  Int n;          // floor((sqrt(4 N(w) + 1) + 1) / 2)
  Int s_lower;    // lower bound on the size of a finite criterion set
  Int brute_n;    // largest k admitting an integer c_k, found by direct search
};
U2Bound u2_bound(std::int64_t m);

nlohmann::json check_json(const CheckResult& result);
nlohmann::json report_json(const std::vector<CheckResult>& results);
std::string summary_table(const std::vector<CheckResult>& results);

}  // namespace hermlat
