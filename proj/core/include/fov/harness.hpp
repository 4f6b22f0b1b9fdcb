#pragma once

// Corpus runs: every group of a corpus through a list of suites, with an
// optional verdict cache, and the reports built from the results.

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fov/corpus.hpp"
#include "fov/store.hpp"
#include "fov/suites.hpp"

namespace fov {

/// Built-in groups up to max_order followed by every file of each directory.
/// A file group whose name is already taken becomes "<name> [<file stem>]".
std::vector<GroupSpec> assemble_corpus(std::uint64_t max_order, const std::vector<std::filesystem::path>& dirs);

struct GroupSummary {
  std::string name;
  std::uint64_t order = 0;
  std::uint64_t h = 0;
  std::uint64_t f = 0;
  std::uint64_t cl_Q = 0;
  std::uint64_t irr_Q = 0;
  std::string flags;

  /// `name order h=.. f=.. clQ=.. irrQ=.. flags`
  std::string line() const;
  bool operator==(const GroupSummary&) const = default;
};

struct GroupResult {
  GroupSummary summary;
  std::string spec_hash;
  std::vector<VerdictRecord> records;  // in suite order
  bool cached = false;
};

struct HarnessOptions {
  std::vector<std::string> suites;
  std::size_t jobs = 1;
  std::optional<std::filesystem::path> cache;
  std::size_t order_cap = kDefaultOrderCap;
};

/// Results in corpus order whatever the job count. A group whose analysis
/// throws fails every requested suite with the error as witness. Throws
/// UnknownSuite before any work.
std::vector<GroupResult> run_corpus(const std::vector<GroupSpec>& corpus, const HarnessOptions& options);

struct SuiteTally {
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t not_applicable = 0;
};

std::map<std::string, SuiteTally> tally(const std::vector<GroupResult>& results);
bool any_failure(const std::vector<GroupResult>& results);

/// Per-suite PASS/FAIL/NA table, failing records with witnesses, then one
/// invariant line per group.
std::string render_text_report(const std::vector<GroupResult>& results, const std::vector<std::string>& suites);
/// One JSON line per group summary and per verdict record.
std::string render_machine_report(const std::vector<GroupResult>& results);

struct ConjectureReport {
  std::uint64_t bound = 5;
  std::vector<GroupSummary> counterexamples;
  std::size_t groups_scanned = 0;
  std::uint64_t max_order = 0;
  std::map<std::uint64_t, std::size_t> groups_by_order;
};

/// Groups with min(f, h) <= bound and f != h.
ConjectureReport scan_conjecture(const std::vector<GroupSummary>& profiles, std::uint64_t bound = 5);
std::string render_conjecture_report(const ConjectureReport& report);

}  // namespace fov
