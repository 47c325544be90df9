#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "skeleton/combinatorics.hpp"

namespace skel::verify {

/// Outcome of one finite-instance identity check. `witness` holds the first
/// counterexample in canonical order and is present iff the check failed.
/// `details` carries optional data the check reports (support sizes, counts).
struct CheckResult {
  std::string name;
  std::string parameters;
  bool passed = true;
  std::optional<nlohmann::json> witness;
  nlohmann::json details = nlohmann::json::object();
  std::chrono::duration<double> elapsed{0};
};

// Identities over S_n and partitions of n.
CheckResult check_skeleton_R(int n, bool graded = false);
CheckResult check_skeleton_RS(int n, bool graded = false);
CheckResult check_skeleton_RSK(int n, int k, bool graded = false);
CheckResult check_counting(int n, int i, int j);
CheckResult check_hook_sum(int n);
CheckResult check_mahonian(int n);
CheckResult check_charge_depth(int n);
CheckResult check_s6_inversion_count();
CheckResult check_bifactorial(int n);
CheckResult check_linear_independence(int n);

// Shape-indexed identities.
CheckResult check_bks(const Partition& lambda);
CheckResult check_schur_family(const Partition& lambda);
CheckResult check_reversal(const Partition& lambda);
CheckResult check_inner_crystal(const Partition& lambda);
CheckResult check_quasi_crystals(const Partition& lambda);
CheckResult check_anti_isomorphism(const Partition& lambda);

// Order theory.
CheckResult check_composition_poset(int n);
CheckResult check_superboolean_poset(int n);

struct SuiteBounds {
  int poly_n = 6;    // S_n-indexed polynomial identities
  int scalar_n = 8;  // single-statistic scans
};

/// Names accepted by run_check, in suite order.
const std::vector<std::string>& check_names();

/// Runs the named check over every instance within the bounds and folds the
/// instances into one result. Throws std::invalid_argument on an unknown name.
CheckResult run_check(const std::string& name, const SuiteBounds& bounds);

/// Runs the selected checks ("all" expands to every check) on up to
/// `threads` worker threads; results keep the selection order.
std::vector<CheckResult> run_suite(const std::vector<std::string>& names, const SuiteBounds& bounds, int threads = 1);

nlohmann::json to_json(const CheckResult& r, bool with_timing = false);

}  // namespace skel::verify
