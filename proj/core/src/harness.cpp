#include "fov/harness.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <set>
#include <sstream>
#include <thread>

#include "fov/analysis.hpp"
#include "fov/error.hpp"
#include "json.hpp"

namespace fov {

using nlohmann::json;

std::vector<GroupSpec> assemble_corpus(std::uint64_t max_order, const std::vector<std::filesystem::path>& dirs) {
  std::vector<GroupSpec> corpus = builtin_corpus(max_order);
  std::set<std::string> names;
  for (const auto& s : corpus) names.insert(s.name);
  for (const auto& dir : dirs) {
    std::vector<GroupSpec> files =
        std::filesystem::is_directory(dir) ? ingest_directory(dir) : std::vector{ingest_group_file(dir)};
    for (auto& s : files) {
      if (names.contains(s.name)) {
        const std::string base = s.name + " [" + std::filesystem::path(s.path).stem().string();
        s.name = base + "]";
        for (int k = 2; names.contains(s.name); ++k) s.name = base + " " + std::to_string(k) + "]";
      }
      names.insert(s.name);
      corpus.push_back(std::move(s));
    }
  }
  return corpus;
}

std::string GroupSummary::line() const {
  std::ostringstream os;
  os << name << ' ' << order << " h=" << h << " f=" << f << " clQ=" << cl_Q << " irrQ=" << irr_Q << ' ' << flags;
  return os.str();
}

namespace {

json summary_json(const GroupSummary& s) {
  return {{"h", s.h}, {"f", s.f}, {"cl_Q", s.cl_Q}, {"irr_Q", s.irr_Q}, {"flags", s.flags}};
}

GroupSummary summary_from_record(const VerdictRecord& r) {
  const json w = json::parse(r.witness);
  return {r.group_name,
          r.group_order,
          w.at("h").get<std::uint64_t>(),
          w.at("f").get<std::uint64_t>(),
          w.at("cl_Q").get<std::uint64_t>(),
          w.at("irr_Q").get<std::uint64_t>(),
          w.at("flags").get<std::string>()};
}

VerdictRecord profile_record(const GroupSummary& s, const std::string& hash) {
  VerdictRecord r;
  r.group_name = s.name;
  r.group_order = s.order;
  r.suite_id = std::string(kProfileRecord);
  r.verdict = Verdict::NotApplicable;
  r.witness = summary_json(s).dump();
  r.spec_hash = hash;
  return r;
}

std::optional<GroupResult> from_cache(const GroupSpec& spec, const std::string& hash, const HarnessOptions& options,
                                      const VerdictStore& store) {
  auto profile = store.find(hash, kProfileRecord);
  if (!profile) return std::nullopt;
  store.check_identity(hash, spec.name, profile->group_order);
  GroupResult out;
  out.spec_hash = hash;
  out.cached = true;
  out.summary = summary_from_record(*profile);
  for (const auto& id : options.suites) {
    auto r = store.find(hash, id);
    if (!r) return std::nullopt;
    out.records.push_back(std::move(*r));
  }
  return out;
}

GroupResult compute(const GroupSpec& spec, const std::string& hash, const HarnessOptions& options) {
  GroupResult out;
  out.spec_hash = hash;
  try {
    const GroupAnalysis a(spec, options.order_cap);
    const auto& p = a.profile;
    out.summary = {spec.name, a.group.order(), p.h, p.f, p.cl_Q, p.irr_Q, p.flags.to_string()};
    for (const auto& id : options.suites) out.records.push_back(make_record(id, a, hash));
  } catch (const std::exception& e) {
    out.summary = {spec.name, 0, 0, 0, 0, 0, "error"};
    out.records.clear();
    for (const auto& id : options.suites) {
      VerdictRecord r;
      r.group_name = spec.name;
      r.suite_id = id;
      r.verdict = Verdict::Fail;
      r.witness = json{{"error", e.what()}}.dump();
      r.spec_hash = hash;
      out.records.push_back(std::move(r));
    }
  }
  return out;
}

GroupResult process(const GroupSpec& spec, const HarnessOptions& options, VerdictStore* store) {
  const std::string hash = spec_hash(spec);
  if (store) {
    if (auto cached = from_cache(spec, hash, options, *store)) return std::move(*cached);
  }
  GroupResult out = compute(spec, hash, options);
  if (store && out.summary.order != 0) {
    store->check_identity(hash, out.summary.name, out.summary.order);
    store->append(profile_record(out.summary, hash));
    for (const auto& r : out.records) store->append(r);
  }
  return out;
}

}  // namespace

std::vector<GroupResult> run_corpus(const std::vector<GroupSpec>& corpus, const HarnessOptions& options) {
  for (const auto& id : options.suites)
    if (!is_known_suite(id)) throw Error(ErrorCode::UnknownSuite, "no suite named '" + id + "'");

  std::optional<VerdictStore> store;
  if (options.cache) store.emplace(*options.cache);
  VerdictStore* store_ptr = store ? &*store : nullptr;

  std::vector<GroupResult> results(corpus.size());
  std::vector<std::exception_ptr> errors(corpus.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < corpus.size(); i = next++) {
      try {
        results[i] = process(corpus[i], options, store_ptr);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const std::size_t jobs = std::clamp<std::size_t>(options.jobs, 1, std::max<std::size_t>(corpus.size(), 1));
  std::vector<std::thread> threads;
  for (std::size_t t = 1; t < jobs; ++t) threads.emplace_back(worker);
  worker();
  for (auto& t : threads) t.join();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return results;
}

std::map<std::string, SuiteTally> tally(const std::vector<GroupResult>& results) {
  std::map<std::string, SuiteTally> out;
  for (const auto& g : results) {
    for (const auto& r : g.records) {
      auto& t = out[r.suite_id];
      switch (r.verdict) {
        case Verdict::Pass: ++t.pass; break;
        case Verdict::Fail: ++t.fail; break;
        case Verdict::NotApplicable: ++t.not_applicable; break;
      }
    }
  }
  return out;
}

bool any_failure(const std::vector<GroupResult>& results) {
  for (const auto& g : results)
    for (const auto& r : g.records)
      if (r.verdict == Verdict::Fail) return true;
  return false;
}

std::string render_text_report(const std::vector<GroupResult>& results, const std::vector<std::string>& suites) {
  const auto counts = tally(results);
  std::uint64_t max_order = 0;
  for (const auto& g : results) max_order = std::max(max_order, g.summary.order);

  std::ostringstream os;
  os << "groups " << results.size() << ", max order " << max_order << "\n\n";
  char buf[96];
  std::snprintf(buf, sizeof buf, "%-12s %6s %6s %6s\n", "suite", "PASS", "FAIL", "NA");
  os << buf;
  for (const auto& id : suites) {
    const auto it = counts.find(id);
    const SuiteTally t = it == counts.end() ? SuiteTally{} : it->second;
    std::snprintf(buf, sizeof buf, "%-12s %6zu %6zu %6zu\n", id.c_str(), t.pass, t.fail, t.not_applicable);
    os << buf;
  }
  bool header = false;
  for (const auto& g : results) {
    for (const auto& r : g.records) {
      if (r.verdict != Verdict::Fail) continue;
      if (!header) os << "\nfailures\n";
      header = true;
      os << r.suite_id << ' ' << r.group_name << ' ' << r.witness << '\n';
    }
  }
  os << '\n';
  for (const auto& g : results) os << g.summary.line() << '\n';
  return os.str();
}

std::string render_machine_report(const std::vector<GroupResult>& results) {
  std::ostringstream os;
  for (const auto& g : results) {
    os << record_to_json(profile_record(g.summary, g.spec_hash)) << '\n';
    for (const auto& r : g.records) os << record_to_json(r) << '\n';
  }
  return os.str();
}

ConjectureReport scan_conjecture(const std::vector<GroupSummary>& profiles, std::uint64_t bound) {
  ConjectureReport out;
  out.bound = bound;
  for (const auto& p : profiles) {
    ++out.groups_scanned;
    ++out.groups_by_order[p.order];
    out.max_order = std::max(out.max_order, p.order);
    if (std::min(p.f, p.h) <= bound && p.f != p.h) out.counterexamples.push_back(p);
  }
  return out;
}

std::string render_conjecture_report(const ConjectureReport& report) {
  std::ostringstream os;
  os << "conjecture: min(f,h) <= " << report.bound << " implies f = h\n";
  os << "coverage: " << report.groups_scanned << " groups, max order " << report.max_order << ", "
     << report.groups_by_order.size() << " distinct orders (not every group of each order)\n";
  os << "groups per order:";
  for (auto [order, n] : report.groups_by_order) os << ' ' << order << ':' << n;
  os << "\ncounterexamples: " << report.counterexamples.size() << '\n';
  for (const auto& g : report.counterexamples) os << g.line() << '\n';
  return os.str();
}

}  // namespace fov
