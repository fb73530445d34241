#pragma once

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

#include "primegraph/graph.hpp"

namespace primegraph {

// Sweep ranges for the verification suite. Defaults reproduce the standard
// run; from_file reads "key = value" lines (# comments allowed).
struct SweepConfig {
  int bridge_m_max = 12;               // det sweep: 1 <= n <= m <= bridge_m_max
  int det_equality_sum_max = 24;       // determinant-equality corollary, by m+n
  int complement_sum_max = 14;         // complement determinants, by m+n
  int inverse_sum_max = 12;            // inverse entries, 5 <= m+n <= this
  int suspension_sum_max = 14;         // suspension determinants, 4 <= m+n <= this
  int charpoly_bridge_m_max = 10;      // closed-form char polys, 3 <= m <= this
  int charpoly_reseminant_n_max = 10;  // closed-form char polys, 0 <= n <= this
  int ordering_bridge_m_max = 10;      // spectra + eigenvalue bounds
  int ordering_reseminant_n_max = 10;
  int golden_n_max = 12;               // golden-ratio divisibility
  int iso_n_max = 8;                   // reseminant/suspension isomorphisms
  int recognition_sum_max = 12;        // bridge classification, by m+n
  int recognition_reseminant_n_max = 6;
  int rank_sum_max = 12;               // -1 multiplicity / rank checks, by m+n
  int width_exponent = 30;             // certified interval width 2^-e
  double float_tol = 1e-9;             // advisory float cross-check tolerance
  bool include_corrupted_fixture = false;  // harness self-test hook

  static SweepConfig from_file(const std::string& path);
  // rejects sweeps beyond desk scale (matrices stay <= ~30x30)
  void validate() const;
  nlohmann::json to_json() const;
  BigRational width() const;
};

enum class CheckStatus { Pass, Fail, NotApplicable };

std::string to_string(CheckStatus s);

struct TheoremCheck {
  std::string id;
  std::string statement;
  std::string parameter_range;
  CheckStatus status = CheckStatus::Pass;
  std::string note;                // remarks, skip reasons, detected typos
  nlohmann::json counterexample;   // full reproduction payload when failing
  double wall_seconds = 0.0;

  nlohmann::json to_json() const;
};

// Runs every registered check; deterministic for a given config (the
// wall_seconds fields aside). Results sorted by id.
std::vector<TheoremCheck> run_suite(const SweepConfig& config);

// ids of all registered checks (fixture excluded)
std::vector<std::string> registered_check_ids();

// every statement id the suite must cover; the registry test fails if one
// has no check
const std::vector<std::string>& required_statement_ids();

bool all_passed(const std::vector<TheoremCheck>& checks);
nlohmann::json suite_to_json(const SweepConfig& config, const std::vector<TheoremCheck>& checks);
std::string suite_to_table(const std::vector<TheoremCheck>& checks);

// Advisory floating-point cross-check: a dense symmetric eigensolve must
// land inside every certified interval within tol. Never a source of truth.
struct FloatCrosscheckReport {
  bool ok = false;
  int matched = 0;
  int total = 0;
  double max_deviation = 0.0;
  std::string detail;

  nlohmann::json to_json() const;
};

FloatCrosscheckReport crosscheck_float(const Graph& g, double tol);

}  // namespace primegraph
