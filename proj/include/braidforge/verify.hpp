#pragma once

// Re-derives every counting and structural claim from scratch and reports
// claimed vs computed values. Printed formulas that disagree with the
// computation in a known, explainable way are reported as confirmed errata
// rather than failures.

#include <string>
#include <string_view>
#include <vector>

#include "braidforge/braid_word.hpp"

namespace braidforge {

enum class ClaimStatus { pass, erratum_confirmed, fail };

struct ClaimEntry {
  std::string id;
  std::string location;
  std::string claimed;
  std::string computed;
  ClaimStatus status = ClaimStatus::fail;
  std::string notes;
};

enum class Scope { all, counting, garside, graph };

/// Throws std::invalid_argument on an unknown name.
Scope parse_scope(std::string_view name);
const char* to_string(Scope scope);
const char* to_string(ClaimStatus status);

struct VerifyOptions {
  Scope scope = Scope::all;
  int n_max = 8;
  int k_max = 8;
  ClosureLimits limits;
};

struct VerificationReport {
  VerifyOptions options;
  std::vector<ClaimEntry> entries;

  std::size_t count(ClaimStatus status) const;
  /// No entry failed.
  bool ok() const { return count(ClaimStatus::fail) == 0; }
};

/// Claim ids belonging to `scope`, in report order.
std::vector<std::string> claim_registry(Scope scope);

VerificationReport run_verification(const VerifyOptions& options);

/// Deterministic JSON rendering (fixed key order, no timings).
std::string to_json(const VerificationReport& report);

}  // namespace braidforge
