#pragma once

// Append-only verdict cache: one JSON record per line, keyed by
// (spec hash, suite id). Records written by another toolkit version are
// ignored on load.

#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <utility>

#include "fov/suites.hpp"

namespace fov {

/// Suite id under which a group's invariant summary is cached.
inline constexpr std::string_view kProfileRecord = "PROFILE";

std::string record_to_json(const VerdictRecord& r);
/// Throws ParseError.
VerdictRecord record_from_json(std::string_view line);

class VerdictStore {
 public:
  /// Loads the file if it exists. Throws ParseError on a malformed line and
  /// HashMismatch when two records share a hash but not a group.
  explicit VerdictStore(std::filesystem::path path);

  const std::filesystem::path& path() const noexcept { return path_; }
  std::size_t size() const;

  std::optional<VerdictRecord> find(const std::string& hash, std::string_view suite) const;

  /// Throws HashMismatch if the hash is already bound to another
  /// (name, order).
  void check_identity(const std::string& hash, const std::string& name, std::uint64_t order) const;

  /// Writes the record unless an equal key is already present.
  void append(const VerdictRecord& r);

 private:
  void insert_checked(const VerdictRecord& r, std::size_t line);

  std::filesystem::path path_;
  mutable std::mutex mutex_;
  std::map<std::pair<std::string, std::string>, VerdictRecord> records_;
  std::map<std::string, std::pair<std::string, std::uint64_t>> identity_;
};

}  // namespace fov
