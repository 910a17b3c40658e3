#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "primcycle/classifier.hpp"
#include "primcycle/families.hpp"

namespace primcycle {

enum class CheckVerdict { pass, fail, inconclusive };

const char *to_string(CheckVerdict v);

/// One line of verifier output. Failing reports carry the counterexample in
/// `witness`.
struct CheckReport {
  std::string check;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  CheckVerdict verdict = CheckVerdict::pass;
  nlohmann::ordered_json witness = nlohmann::ordered_json::object();
  std::optional<double> seconds;

  nlohmann::ordered_json to_json() const;
};

/// Fail dominates, then inconclusive, then pass. Empty input passes.
CheckVerdict aggregate(const std::vector<CheckReport> &reports);

struct VerifierConfig {
  std::uint64_t seed = 0x5eedULL;
  std::uint64_t exhaustive_cap = 1'000'000;
  std::uint64_t sample_budget = 200'000;
  /// Wall-clock budget for a whole suite run; 0 means unlimited.
  double time_budget_seconds = 0;
  /// Largest degree converse_search accepts.
  std::size_t converse_bound = 10;
  std::size_t converse_max_degree = 9;
  std::size_t forward_max_degree = 60;
  unsigned jobs = 1;
  /// Record wall-clock seconds in reports (makes output nondeterministic).
  bool timing = false;
  /// Replacement generator files by sporadic name, for negative testing.
  std::map<std::string, std::string> sporadic_overrides;

  SearchConfig search() const;
};

/// Shared deadline for a suite run.
class Deadline {
public:
  explicit Deadline(double seconds = 0);
  bool expired() const;

private:
  std::optional<std::chrono::steady_clock::time_point> end_;
};

/// A constructed group of the sweep together with the case's k.
struct SweepEntry {
  FamilyDescriptor descriptor;
  std::size_t k = 0;
  std::optional<ConstructedGroup> group;
  std::string error; // construction or data verification failure
};

/// Every concrete descriptor listed by classify(n, k) for 2 <= n <= n_max and
/// k <= 2, instantiated.
std::vector<SweepEntry> construction_sweep(std::size_t n_max, const VerifierConfig &config,
                                           const Deadline &deadline = Deadline());

CheckReport forward_check(std::size_t n_max, const VerifierConfig &config = {},
                          const Deadline &deadline = Deadline());
CheckReport forward_check(const std::vector<SweepEntry> &sweep, std::size_t n_max,
                          const Deadline &deadline = Deadline());

struct CycleBearingGroup {
  GroupSpec group;
  Permutation cycle;
};

/// Asserts transitivity degree >= k + 1 for each group, k the fixed-point
/// count of its cycle. Throws std::invalid_argument for an imprimitive group
/// or a cycle that is not a single cycle in the group.
CheckReport jordan_transitivity_check(const std::vector<CycleBearingGroup> &groups);

CheckReport converse_search(std::size_t n, std::size_t k, const VerifierConfig &config = {},
                            const Deadline &deadline = Deadline());

CheckReport gamma_cycle_check(std::uint32_t p, std::uint32_t e);
CheckReport semilinear_order_identity_check(std::uint32_t p, std::uint32_t e, std::uint32_t f,
                                            FieldElement a);
CheckReport residue_orbit_check(std::uint32_t p, std::uint32_t e);
CheckReport mathieu_elimination_check(const std::string &name, std::size_t k);
CheckReport agl2_elimination_check(std::uint32_t d_max);
CheckReport wreath_comment_check(std::uint32_t m, std::uint32_t blocks);
CheckReport coprime_comment_check(std::size_t trials, std::uint64_t seed);

/// Suite names: forward, converse, gamma, residues, mathieu, agl2, comments, all.
const std::vector<std::string> &suite_names();

/// Runs a suite in canonical order. Throws std::invalid_argument for an
/// unknown suite name.
std::vector<CheckReport> run_suite(const std::string &suite, const VerifierConfig &config);

} // namespace primcycle
