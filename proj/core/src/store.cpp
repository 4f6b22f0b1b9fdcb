#include "fov/store.hpp"

#include <fstream>
#include <stdexcept>

#include "fov/error.hpp"
#include "json.hpp"

namespace fov {

using nlohmann::json;

std::string record_to_json(const VerdictRecord& r) {
  json doc = {{"group_name", r.group_name},
              {"group_order", r.group_order},
              {"suite_id", r.suite_id},
              {"verdict", to_string(r.verdict)},
              {"witness", r.witness.empty() ? json::object() : json::parse(r.witness)},
              {"spec_hash", r.spec_hash},
              {"toolkit_version", r.toolkit_version}};
  return doc.dump();
}

VerdictRecord record_from_json(std::string_view line) {
  try {
    const json doc = json::parse(line.begin(), line.end());
    VerdictRecord r;
    r.group_name = doc.at("group_name").get<std::string>();
    r.group_order = doc.at("group_order").get<std::uint64_t>();
    r.suite_id = doc.at("suite_id").get<std::string>();
    const auto verdict = parse_verdict(doc.at("verdict").get<std::string>());
    if (!verdict) throw Error(ErrorCode::ParseError, "unknown verdict");
    r.verdict = *verdict;
    r.witness = doc.at("witness").dump();
    r.spec_hash = doc.at("spec_hash").get<std::string>();
    r.toolkit_version = doc.at("toolkit_version").get<std::string>();
    return r;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("malformed verdict record: ") + e.what());
  }
}

VerdictStore::VerdictStore(std::filesystem::path path) : path_(std::move(path)) {
  std::ifstream in(path_);
  if (!in) return;
  std::string line;
  for (std::size_t n = 1; std::getline(in, line); ++n) {
    if (line.empty()) continue;
    VerdictRecord r;
    try {
      r = record_from_json(line);
    } catch (const Error& e) {
      throw Error(ErrorCode::ParseError, path_.string() + ":" + std::to_string(n) + ": " + e.what());
    }
    if (r.toolkit_version != kToolkitVersion) continue;
    insert_checked(r, n);
  }
}

std::size_t VerdictStore::size() const {
  std::lock_guard lock(mutex_);
  return records_.size();
}

void VerdictStore::insert_checked(const VerdictRecord& r, std::size_t line) {
  auto [it, fresh] = identity_.try_emplace(r.spec_hash, r.group_name, r.group_order);
  if (!fresh && it->second != std::pair(r.group_name, r.group_order)) {
    throw Error(ErrorCode::HashMismatch, path_.string() + ":" + std::to_string(line) + ": hash " + r.spec_hash +
                                             " recorded for " + it->second.first + " and " + r.group_name);
  }
  records_.try_emplace({r.spec_hash, r.suite_id}, r);
}

std::optional<VerdictRecord> VerdictStore::find(const std::string& hash, std::string_view suite) const {
  std::lock_guard lock(mutex_);
  auto it = records_.find({hash, std::string(suite)});
  if (it == records_.end()) return std::nullopt;
  return it->second;
}

void VerdictStore::check_identity(const std::string& hash, const std::string& name, std::uint64_t order) const {
  std::lock_guard lock(mutex_);
  auto it = identity_.find(hash);
  if (it != identity_.end() && it->second != std::pair(name, order)) {
    throw Error(ErrorCode::HashMismatch,
                "hash " + hash + " is cached for " + it->second.first + ", not " + name);
  }
}

void VerdictStore::append(const VerdictRecord& r) {
  std::lock_guard lock(mutex_);
  if (records_.contains({r.spec_hash, r.suite_id})) return;
  auto it = identity_.find(r.spec_hash);
  if (it != identity_.end() && it->second != std::pair(r.group_name, r.group_order)) {
    throw Error(ErrorCode::HashMismatch, "hash " + r.spec_hash + " is cached for " + it->second.first);
  }
  if (path_.has_parent_path()) std::filesystem::create_directories(path_.parent_path());
  std::ofstream out(path_, std::ios::app);
  if (!out) throw std::runtime_error("cannot write cache " + path_.string());
  out << record_to_json(r) << '\n';
  identity_.try_emplace(r.spec_hash, r.group_name, r.group_order);
  records_.try_emplace({r.spec_hash, r.suite_id}, r);
}

}  // namespace fov
