// graham: planar-K4-free colourings of K(C_n).
//
// Exit codes: 0 ok/valid, 1 invalid colouring, 2 infeasible symmetry,
// 3 timeout, 4 usage or parse error.

#include <algorithm>
#include <atomic>
#include <csignal>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "graham/colouring.hpp"
#include "graham/cube.hpp"
#include "graham/estimate.hpp"
#include "graham/groups.hpp"
#include "graham/quotient.hpp"
#include "graham/solver.hpp"

namespace {

using namespace graham;

enum Exit { kOk = 0, kInvalid = 1, kInfeasible = 2, kTimeout = 3, kUsage = 4 };

std::atomic<int> g_interrupts{0};

extern "C" void on_interrupt(int) {
  if (g_interrupts.fetch_add(1) >= 1) std::_Exit(130);
}

struct Range {
  int lo = 0, hi = 0;
};

Range parse_range(const std::string& s) {
  Range r;
  try {
    if (const auto dots = s.find(".."); dots != std::string::npos) {
      r.lo = std::stoi(s.substr(0, dots));
      r.hi = std::stoi(s.substr(dots + 2));
    } else {
      r.lo = r.hi = std::stoi(s);
    }
  } catch (const std::exception&) {
    throw CLI::ValidationError("--n", "expected N or A..B, got '" + s + "'");
  }
  if (r.lo > r.hi) throw CLI::ValidationError("--n", "empty range '" + s + "'");
  return r;
}

GroupSpec resolve_group(const std::string& name, const std::string& file, std::optional<int> n) {
  if (!file.empty()) {
    GroupSpec g = load_group_file(file);
    if (n && g.degree != *n)
      throw NotFound("group file has degree " + std::to_string(g.degree) + ", n is " +
                     std::to_string(*n));
    return g;
  }
  return find_group(name.empty() ? "I" : name, n);
}

void print_profiles(std::ostream& os, const QuotientProblem& qp) {
  os << "quotient n=" << qp.n << " group=" << qp.group << " raw_vars=" << qp.raw_variable_count
     << " raw_profile=";
  for (int k = 1; k <= 6; ++k) os << (k > 1 ? "," : "") << qp.raw_profile[k];
  os << " vars=" << qp.variable_count << " profile=";
  for (int k = 1; k <= 6; ++k) os << (k > 1 ? "," : "") << qp.profile[k];
  os << " merges=" << qp.merges.size() << " infeasible=" << (qp.infeasible ? 1 : 0) << '\n';
}

int cmd_tables(const std::string& range, const std::vector<std::string>& groups,
               const std::vector<std::string>& group_files, const std::string& format,
               bool diagnose) {
  const Range r = parse_range(range);
  if (r.lo < 2) throw CLI::ValidationError("--n", "n must be >= 2");
  std::vector<DifficultyRow> rows;
  if (groups.empty() && group_files.empty()) {
    if (r.hi > 64) throw CLI::ValidationError("--n", "n must be <= 64");
    for (int n = r.lo; n <= r.hi; ++n) rows.push_back(naive_row(n));
  } else {
    std::vector<GroupSpec> specs;
    for (int n = r.lo; n <= r.hi; ++n) {
      for (const auto& name : groups) specs.push_back(find_group(name, n));
      for (const auto& f : group_files) {
        GroupSpec g = load_group_file(f);
        if (g.degree == n) specs.push_back(std::move(g));
      }
    }
    for (const auto& g : specs) {
      const QuotientProblem qp = build_quotient(g.degree, g);
      if (diagnose) print_profiles(std::cerr, qp);
      rows.push_back(quotient_nf(qp));
    }
  }
  if (format == "lines") {
    for (const auto& row : rows) write_row_line(std::cout, row);
  } else {
    write_table(std::cout, rows);
  }
  return kOk;
}

int cmd_quotient(int n, const std::string& group, const std::string& group_file,
                 const std::string& out) {
  const GroupSpec g = resolve_group(group, group_file, n);
  const QuotientProblem qp = build_quotient(n, g);
  print_profiles(std::cerr, qp);
  if (out.empty() || out == "-") {
    write_quotient_dump(std::cout, qp);
  } else {
    std::ofstream os(out);
    if (!os) throw std::runtime_error("cannot write " + out);
    write_quotient_dump(os, qp);
  }
  return qp.infeasible ? kInfeasible : kOk;
}

struct SolveOptions {
  int n = 0;
  std::string group = "I";
  std::string group_file;
  std::string policy = "b";
  std::string sampling = "direct";
  std::optional<std::uint64_t> seed;
  std::uint64_t max_flips = 0;
  double max_seconds = 0.0;
  std::size_t blacklist = 3;
  bool no_cutoff = false;
  bool count_ignored = false;
  std::uint64_t cutoff_budget = 2'000'000;
  int attempts = 1;
  std::string out = "colouring.txt";
  std::string assignment_out;
  std::uint64_t log_interval = 1'000'000;
  bool quiet = false;
};

int cmd_solve(const SolveOptions& o) {
  const GroupSpec g = resolve_group(o.group, o.group_file, o.n);
  const QuotientProblem qp = build_quotient(o.n, g);
  if (!o.quiet) print_profiles(std::cerr, qp);
  const std::uint64_t seed = o.seed ? *o.seed : std::random_device{}();
  std::cerr << "seed=" << seed << '\n';
  if (qp.infeasible) {
    std::cout << "infeasible n=" << o.n << " group=" << g.name << '\n';
    return kInfeasible;
  }

  SolverConfig config;
  config.policy.variant = o.policy == "a" ? PolicyVariant::A : PolicyVariant::B;
  config.sampling = o.sampling == "literal" ? Sampling::Literal : Sampling::Direct;
  config.blacklist_size = o.blacklist;
  config.cutoff = !o.no_cutoff;
  config.count_ignored = o.count_ignored;
  config.cutoff_budget = o.cutoff_budget;
  if (o.max_flips > 0) config.max_flips = o.max_flips;
  if (o.max_seconds > 0) config.max_seconds = o.max_seconds;
  config.log_interval = o.log_interval;
  if (!o.quiet) config.log = [](const std::string& line) { std::cerr << line << '\n'; };
  config.should_stop = [] { return g_interrupts.load() > 0; };

  std::vector<std::uint64_t> seeds;
  for (int i = 0; i < o.attempts; ++i) seeds.push_back(seed + static_cast<std::uint64_t>(i));

  std::signal(SIGINT, on_interrupt);
  const AttemptsResult res = run_attempts(ProblemView::of(qp), config, seeds);
  std::signal(SIGINT, SIG_DFL);

  for (const auto& a : res.attempts) {
    std::cout << stats_line(a) << '\n';
    std::cerr << "seed=" << a.stats.seed << " seconds=" << a.stats.seconds << '\n';
  }

  if (res.winner) {
    const SolveResult& win = res.attempts[*res.winner];
    Colouring c = expand_assignment(qp, win.assignment);
    c.symmetry = g.name;
    c.comment = "seed=" + std::to_string(win.stats.seed) + " flips=" +
                std::to_string(win.stats.flips) + " policy=" + o.policy;
    const VerificationReport report = verify(c);
    if (!report.valid() || !is_symmetric(c, g)) {
      std::cerr << "internal error: solution failed verification\n";
      write_report(std::cerr, report);
      return kInvalid;
    }
    write_colouring(o.out, c);
    std::cout << "solution " << o.out << '\n';
    return kOk;
  }

  // No solution: keep the attempt closest to one.
  const SolveResult* best = &res.attempts.front();
  for (const auto& a : res.attempts)
    if (a.stats.best_violated < best->stats.best_violated) best = &a;
  const std::string path = o.assignment_out.empty() ? o.out + ".assignment" : o.assignment_out;
  AssignmentFile af{o.n, g.name,
                    "best=" + std::to_string(best->stats.best_violated) +
                        " seed=" + std::to_string(best->stats.seed),
                    best->assignment};
  write_assignment(path, af);
  std::cout << "best " << path << " violated=" << best->stats.best_violated << '\n';
  return kTimeout;
}

int cmd_verify(const std::string& path) {
  const Colouring c = read_colouring(path);
  const VerificationReport report = verify(c);
  write_report(std::cout, report);
  bool ok = report.valid();
  if (c.symmetry != "I") {
    std::optional<GroupSpec> g;
    try {
      g = find_group(c.symmetry, c.n);
    } catch (const NotFound&) {
    }
    if (!g) {
      std::cout << "symmetry " << c.symmetry << " unchecked\n";
    } else if (is_symmetric(c, *g)) {
      std::cout << "symmetry " << c.symmetry << " ok\n";
    } else {
      std::cout << "symmetry " << c.symmetry << " broken\n";
      ok = false;
    }
  }
  return ok ? kOk : kInvalid;
}

int cmd_count(int n) {
  const std::uint64_t count = count_solutions(n);
  std::cout << count << '\n';
  if (n >= 2)
    std::cerr << "fraction=" << format_percent(exact_fraction(n, big_int{count})) << "%\n";
  return kOk;
}

int cmd_expand(const std::string& path, std::optional<int> n, const std::string& group,
               const std::string& group_file, const std::string& out) {
  const AssignmentFile af = read_assignment(path);
  if (n && *n != af.n) throw ParseError("assignment is for n=" + std::to_string(af.n), 0);
  const GroupSpec g = resolve_group(group.empty() ? af.symmetry : group, group_file, af.n);
  const QuotientProblem qp = build_quotient(af.n, g);
  if (qp.infeasible) return kInfeasible;
  Colouring c = expand_assignment(qp, af.values);
  c.symmetry = g.name;
  c.comment = af.comment;
  write_colouring(out, c);
  const VerificationReport report = verify(c);
  write_report(std::cout, report);
  return report.valid() ? kOk : kInvalid;
}

int cmd_catalog() {
  for (const auto& g : catalog()) {
    std::cout << g.key() << " degree=" << g.degree << " order=";
    if (g.order) std::cout << *g.order;
    else std::cout << '?';
    std::cout << " generators=";
    for (std::size_t i = 0; i < g.generators.size(); ++i)
      std::cout << (i ? " " : "") << format_cycles(g.generators[i]);
    std::cout << '\n';
  }
  std::cout << "I@n degree=n order=1 generators=\n";
  return kOk;
}

// `solve --config FILE` becomes the file's settings as `--key=value`
// arguments placed right after `solve`, so later flags override them.
std::vector<std::string> expand_config(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  const auto sub = std::find(args.begin(), args.end(), "solve");
  if (sub == args.end()) return args;
  for (auto it = sub + 1; it != args.end(); ++it) {
    std::string path;
    auto last = it + 1;
    if (*it == "--config" && it + 1 != args.end()) {
      path = *(it + 1);
      last = it + 2;
    } else if (it->rfind("--config=", 0) == 0) {
      path = it->substr(9);
    } else {
      continue;
    }
    std::vector<std::string> settings;
    for (const auto& item : CLI::ConfigINI().from_file(path)) {
      if (item.name == "++" || item.name == "--") continue;
      std::string value;
      for (std::size_t i = 0; i < item.inputs.size(); ++i) value += (i ? " " : "") + item.inputs[i];
      settings.push_back("--" + item.name + "=" + value);
    }
    args.erase(it, last);
    args.insert(std::find(args.begin(), args.end(), "solve") + 1, settings.begin(), settings.end());
    break;
  }
  return args;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Search for colourings of K(C_n) without monochromatic planar K4"};
  app.require_subcommand(1);

  auto* tables = app.add_subcommand("tables", "Difficulty tables");
  std::string t_range = "2..14";
  std::vector<std::string> t_groups, t_group_files;
  std::string t_format = "text";
  bool t_diagnose = false;
  tables->add_option("--n", t_range, "Dimension or range A..B");
  tables->add_option("--group", t_groups, "Catalog group (repeatable); omit for the naive table");
  tables->add_option("--group-file", t_group_files, "Group file (repeatable)");
  tables->add_option("--format", t_format, "text or lines")->check(CLI::IsMember({"text", "lines"}));
  tables->add_flag("--diagnose", t_diagnose, "Print raw and normalized profiles to stderr");

  auto* quotient = app.add_subcommand("quotient", "Build and dump the reduced problem");
  int q_n = 0;
  std::string q_group = "I", q_group_file, q_out;
  quotient->add_option("--n", q_n, "Dimension")->required();
  quotient->add_option("--group", q_group, "Catalog group");
  quotient->add_option("--group-file", q_group_file, "Group file");
  quotient->add_option("--out", q_out, "Dump path (default stdout)");

  auto* solve = app.add_subcommand("solve", "Search for a colouring");
  SolveOptions so;
  std::string so_config;
  solve->option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  solve->add_option("--config", so_config, "key = value settings; flags given later override");
  solve->add_option("--n", so.n, "Dimension")->required();
  solve->add_option("--group", so.group, "Catalog group");
  solve->add_option("--group-file", so.group_file, "Group file");
  solve->add_option("--policy", so.policy, "Flip policy a or b")->check(CLI::IsMember({"a", "b"}));
  solve->add_option("--sampling", so.sampling, "direct (default) or literal pick-and-accept")
      ->check(CLI::IsMember({"direct", "literal"}));
  solve->add_option("--seed", so.seed, "Random seed (default: from entropy, always printed)");
  solve->add_option("--max-flips", so.max_flips, "Flip limit per attempt (0: none)");
  solve->add_option("--max-seconds", so.max_seconds, "Time limit per attempt (0: none)");
  solve->add_option("--blacklist", so.blacklist, "Blacklist size");
  solve->add_flag("--no-cutoff", so.no_cutoff, "Disable the cutoff schedule");
  solve->add_flag("--count-ignored", so.count_ignored, "Ignored constraints still feed n_B, n_G");
  solve->add_option("--cutoff-budget", so.cutoff_budget, "Flips per cutoff phase");
  solve->add_option("--attempts", so.attempts, "Parallel attempts")->check(CLI::PositiveNumber);
  solve->add_option("--out", so.out, "Colouring output path");
  solve->add_option("--assignment-out", so.assignment_out, "Best-so-far output on timeout");
  solve->add_option("--log-interval", so.log_interval, "Flips between progress lines");
  solve->add_flag("--quiet", so.quiet, "No progress logging");

  auto* verify_cmd = app.add_subcommand("verify", "Verify a colouring file");
  std::string v_path;
  verify_cmd->add_option("path", v_path, "Colouring file")->required();

  auto* count = app.add_subcommand("count", "Count colourings with no monochromatic planar K4");
  int c_n = 0;
  count->add_option("--n", c_n, "Dimension (0..3)")->required();

  auto* expand = app.add_subcommand("expand", "Expand an assignment to a full colouring");
  std::string e_path, e_group, e_group_file, e_out = "colouring.txt";
  std::optional<int> e_n;
  expand->add_option("path", e_path, "Assignment file")->required();
  expand->add_option("--n", e_n, "Dimension (checked against the file)");
  expand->add_option("--group", e_group, "Group (default: the file's symmetry)");
  expand->add_option("--group-file", e_group_file, "Group file");
  expand->add_option("--out", e_out, "Colouring output path");

  auto* catalog_cmd = app.add_subcommand("catalog", "List catalog groups");

  try {
    std::vector<std::string> args = expand_config(argc, argv);
    std::reverse(args.begin(), args.end());
    app.parse(std::move(args));
  } catch (const CLI::FileError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*tables) return cmd_tables(t_range, t_groups, t_group_files, t_format, t_diagnose);
    if (*quotient) return cmd_quotient(q_n, q_group, q_group_file, q_out);
    if (*solve) return cmd_solve(so);
    if (*verify_cmd) return cmd_verify(v_path);
    if (*count) return cmd_count(c_n);
    if (*expand) return cmd_expand(e_path, e_n, e_group, e_group_file, e_out);
    if (*catalog_cmd) return cmd_catalog();
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
