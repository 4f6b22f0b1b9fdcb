#pragma once

// Executable checks, one per result being verified. Each suite either does
// not apply to a group (its hypotheses fail) or passes/fails with a witness.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fov/analysis.hpp"
#include "fov/corpus.hpp"

namespace fov {

inline constexpr std::string_view kToolkitVersion = "0.1.0";

enum class Verdict { Pass, Fail, NotApplicable };

/// "PASS", "FAIL", "NOT_APPLICABLE"
std::string_view to_string(Verdict v);
std::optional<Verdict> parse_verdict(std::string_view text);

struct VerdictRecord {
  std::string group_name;
  std::uint64_t group_order = 0;
  std::string suite_id;
  Verdict verdict = Verdict::NotApplicable;
  /// Compact JSON object. Always non-empty on FAIL.
  std::string witness;
  std::string spec_hash;
  std::string toolkit_version{kToolkitVersion};

  bool operator==(const VerdictRecord&) const = default;
};

struct SuiteOutcome {
  Verdict verdict;
  std::string witness;
};

/// All suite ids in report order.
const std::vector<std::string>& suite_ids();
bool is_known_suite(std::string_view id);

/// Throws UnknownSuite.
SuiteOutcome evaluate_suite(std::string_view id, const GroupAnalysis& a);

VerdictRecord make_record(std::string_view id, const GroupAnalysis& a, const std::string& hash);

/// Computes the group from scratch; throws UnknownSuite before doing so.
VerdictRecord run_suite(std::string_view id, const GroupSpec& spec);

}  // namespace fov
