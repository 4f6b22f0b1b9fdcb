#include "fov_cli/cli.hpp"

#include <cstdlib>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "fov/analysis.hpp"
#include "fov/error.hpp"
#include "fov/harness.hpp"
#include "json.hpp"

namespace fov::cli {

namespace {

using nlohmann::json;

constexpr std::uint64_t kBuiltinLookupOrder = 2000;

struct GroupInput {
  std::string file;
  std::string builtin;
};

GroupSpec load_group(const GroupInput& in) {
  if (in.builtin.empty()) return ingest_group_file(in.file);
  for (auto& s : builtin_corpus(kBuiltinLookupOrder))
    if (s.name == in.builtin) return s;
  throw Error(ErrorCode::ParseError, "no built-in group named '" + in.builtin + "'");
}

void add_group_input(CLI::App* cmd, GroupInput& in) {
  auto* group = cmd->add_option_group("group");
  group->add_option("file", in.file, "group file (JSON)");
  group->add_option("--builtin", in.builtin, "built-in group name of order <= 2000, e.g. S4 or C2xC4");
  group->require_option(1);
}

int cmd_table(const GroupInput& in, std::ostream& out) {
  const GroupSpec spec = load_group(in);
  const PermGroup g = spec.build();
  const ClassData c = conjugacy_classes(g);
  out << render_table(character_table(g, c), c, g);
  return 0;
}

int cmd_fields(const GroupInput& in, bool machine, std::ostream& out) {
  const GroupAnalysis a(load_group(in));
  if (machine) {
    json doc = {{"group", a.spec.name}, {"classes", json::array()}, {"characters", json::array()}};
    for (const auto& f : a.fields.classes) doc["classes"].push_back(f.to_string());
    for (const auto& f : a.fields.characters) doc["characters"].push_back(f.to_string());
    out << doc.dump() << '\n';
    return 0;
  }
  for (ClassId k = 0; k < a.classes.size(); ++k) {
    const auto& cls = a.classes.classes[k];
    out << "class " << k << " order " << cls.element_order << " size " << cls.size() << ' '
        << a.fields.classes[k].to_string() << '\n';
  }
  for (std::size_t x = 0; x < a.table.size(); ++x)
    out << "character " << x << " degree " << a.table.degrees[x] << ' ' << a.fields.characters[x].to_string() << '\n';
  return 0;
}

int cmd_invariants(const GroupInput& in, bool machine, std::ostream& out) {
  const GroupAnalysis a(load_group(in));
  const auto& p = a.profile;
  if (!machine) {
    out << profile_line(a.spec.name, a.group.order(), p) << '\n';
    return 0;
  }
  json doc = {{"group", a.spec.name},
              {"order", a.group.order()},
              {"h", p.h},
              {"f", p.f},
              {"cl_Q", p.cl_Q},
              {"irr_Q", p.irr_Q},
              {"cl_R", p.cl_R},
              {"irr_R", p.irr_R},
              {"n", p.n_inv},
              {"Q(G)", p.q_of_G.to_string()},
              {"flags", p.flags.to_string()},
              {"k_p", json::object()},
              {"class_fields", p.per_field_class_multiplicity},
              {"character_fields", p.per_field_char_multiplicity}};
  for (auto [prime, n] : p.k_p) doc["k_p"][std::to_string(prime)] = n;
  out << doc.dump() << '\n';
  return 0;
}

struct CorpusArgs {
  std::vector<std::string> corpus;
  std::uint64_t max_order = 128;
  std::size_t jobs = 1;
  std::string cache;
};

void add_corpus_args(CLI::App* cmd, CorpusArgs& a) {
  cmd->add_option("--corpus", a.corpus, "directory or file of group files (repeatable)");
  cmd->add_option("--max-order", a.max_order, "largest built-in group order")->check(CLI::PositiveNumber);
  cmd->add_option("--jobs", a.jobs, "parallel workers")->check(CLI::PositiveNumber);
  cmd->add_option("--cache", a.cache, "verdict cache file (default: $FOV_CACHE)");
}

HarnessOptions harness_options(const CorpusArgs& a, std::vector<std::string> suites) {
  HarnessOptions o;
  o.suites = std::move(suites);
  o.jobs = a.jobs;
  if (!a.cache.empty()) {
    o.cache = a.cache;
  } else if (const char* env = std::getenv("FOV_CACHE"); env && *env) {
    o.cache = env;
  }
  return o;
}

std::vector<GroupSpec> corpus_of(const CorpusArgs& a) {
  std::vector<std::filesystem::path> dirs(a.corpus.begin(), a.corpus.end());
  return assemble_corpus(a.max_order, dirs);
}

int cmd_verify(const std::string& suite, const CorpusArgs& a, bool machine, std::ostream& out) {
  std::vector<std::string> suites;
  if (suite == "all") {
    suites = suite_ids();
  } else {
    if (!is_known_suite(suite)) throw Error(ErrorCode::UnknownSuite, "no suite named '" + suite + "'");
    suites = {suite};
  }
  const auto results = run_corpus(corpus_of(a), harness_options(a, suites));
  out << (machine ? render_machine_report(results) : render_text_report(results, suites));
  return any_failure(results) ? 1 : 0;
}

int cmd_scan(std::uint64_t bound, const CorpusArgs& a, bool machine, std::ostream& out) {
  const auto results = run_corpus(corpus_of(a), harness_options(a, {}));
  std::vector<GroupSummary> profiles;
  for (const auto& r : results) profiles.push_back(r.summary);
  const auto report = scan_conjecture(profiles, bound);
  if (machine) {
    json doc = {{"bound", report.bound},
                {"groups_scanned", report.groups_scanned},
                {"max_order", report.max_order},
                {"counterexamples", json::array()}};
    for (const auto& g : report.counterexamples) doc["counterexamples"].push_back(g.line());
    for (auto [order, n] : report.groups_by_order) doc["groups_by_order"][std::to_string(order)] = n;
    out << doc.dump() << '\n';
  } else {
    out << render_conjecture_report(report);
  }
  return report.counterexamples.empty() ? 0 : 1;
}

}  // namespace

int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fields of values of classes and characters of finite groups", "fov"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "machine"}));

  GroupInput table_in, fields_in, inv_in;
  auto* table = app.add_subcommand("table", "print the character table");
  add_group_input(table, table_in);
  auto* fields = app.add_subcommand("fields", "print class and character fields");
  add_group_input(fields, fields_in);
  auto* invariants = app.add_subcommand("invariants", "print the invariant profile");
  add_group_input(invariants, inv_in);

  std::string suite = "all";
  CorpusArgs verify_args, scan_args;
  auto* verify = app.add_subcommand("verify", "run theorem suites over a corpus");
  verify->add_option("--suite", suite, "suite id or 'all'");
  add_corpus_args(verify, verify_args);

  std::uint64_t bound = 5;
  auto* scan = app.add_subcommand("scan-conjecture", "search for min(f,h) <= B with f != h");
  scan->add_option("--bound", bound, "bound B");
  add_corpus_args(scan, scan_args);

  for (auto* sub : {table, fields, invariants, verify, scan})
    sub->add_option("--format", format, "output format")->check(CLI::IsMember({"text", "machine"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << '\n' << app.help();
    return 2;
  }

  const bool machine = format == "machine";
  try {
    if (*table) return cmd_table(table_in, out);
    if (*fields) return cmd_fields(fields_in, machine, out);
    if (*invariants) return cmd_invariants(inv_in, machine, out);
    if (*verify) return cmd_verify(suite, verify_args, machine, out);
    if (*scan) return cmd_scan(bound, scan_args, machine, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace fov::cli
