// wlab: verify congruences for C(2p-1, p-1), run prime searches, query Bernoulli numbers mod p^r.
//
// Exit codes: 0 success, 1 usage or runtime error, 2 a congruence failed, 130 interrupted.

#include <atomic>
#include <csignal>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "wlab/bernoulli.hpp"
#include "wlab/checkpoint.hpp"
#include "wlab/congruence.hpp"
#include "wlab/error.hpp"
#include "wlab/index_expr.hpp"
#include "wlab/parallel.hpp"
#include "wlab/primality.hpp"
#include "wlab/report_io.hpp"
#include "wlab/search.hpp"
#include "wlab/sieve.hpp"

namespace {

using namespace wlab;
using ordered_json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitViolation = 2;
constexpr int kExitInterrupted = 130;

std::atomic<bool> g_stop{false};

extern "C" void on_sigint(int) { g_stop.store(true); }

struct Globals {
  std::string format = "jsonl";
  int workers = std::max(1u, std::thread::hardware_concurrency());
  std::string backend = "auto";

  OutputFormat fmt() const { return parse_output_format(format); }
  Backend policy() const {
    if (backend == "auto") return Backend::Auto;
    if (backend == "fixed-width") return Backend::FixedWidth;
    return Backend::Bignum;
  }
};

std::uint64_t parse_u64(const std::string& s, const char* what) {
  try {
    std::size_t used = 0;
    const auto v = std::stoull(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw Error(ErrorCode::InvalidInput, std::string("bad ") + what + " '" + s + "'");
}

// "lo..hi" or a single prime.
std::vector<std::uint64_t> parse_prime_range(const std::string& text) {
  if (const auto dots = text.find(".."); dots != std::string::npos) {
    const auto lo = parse_u64(text.substr(0, dots), "range start");
    const auto hi = parse_u64(text.substr(dots + 2), "range end");
    if (lo > hi) throw Error(ErrorCode::InvalidInput, "empty range " + text);
    return primes_in(std::max<std::uint64_t>(lo, 3), hi);
  }
  const auto p = parse_u64(text, "prime");
  if (!is_prime_u64(p)) throw Error(ErrorCode::CompositeModulusBase, text + " is not a prime");
  if (p < 3) throw Error(ErrorCode::InvalidInput, "checks need an odd prime");
  return {p};
}

// ---- verify ----------------------------------------------------------------------------

struct VerifyArgs {
  std::string range;
  std::vector<std::string> checks{"all"};
  std::optional<int> exp;
};

int cmd_verify(const Globals& g, const VerifyArgs& a) {
  const auto fmt = g.fmt();
  const auto names = resolve_selection(a.checks);
  SuiteOptions options;
  options.theorem_exponent = a.exp;
  const auto primes = parse_prime_range(a.range);

  write_report_header(std::cout, fmt);
  bool violated = false;
  const std::size_t batch = static_cast<std::size_t>(std::max(16, 4 * g.workers));
  for (std::size_t begin = 0; begin < primes.size(); begin += batch) {
    if (g_stop.load()) return kExitInterrupted;
    const std::span<const std::uint64_t> block(primes.data() + begin, std::min(batch, primes.size() - begin));
    const auto reports = g.workers <= 1 ? verify_range_serial(block, names, options, g.policy())
                                        : verify_range_parallel(block, names, g.workers, options, g.policy());
    for (const auto& r : reports) {
      write_report(std::cout, r, fmt);
      violated = violated || r.status == Status::Fails;
    }
  }
  return violated ? kExitViolation : kExitOk;
}

// ---- search ----------------------------------------------------------------------------

struct SearchArgs {
  std::string kind;
  std::optional<std::uint64_t> min;
  std::optional<std::uint64_t> max;
  std::size_t chunk = kDefaultChunk;
  std::string checkpoint;
  std::string resume_path;
  bool quiet = false;
};

int cmd_search(const Globals& g, const SearchArgs& a) {
  const auto fmt = g.fmt();
  SearchTask task;
  task.kind = parse_search_kind(a.kind);
  task.chunk = a.chunk;
  task.lo = a.min.value_or(task.kind == SearchKind::Wolstenholme ? 5 : 7);

  SearchOptions options;
  options.workers = g.workers;
  options.policy = g.policy();
  options.stop = &g_stop;
  options.on_hit = [&](const SearchHit& h) { write_hit(std::cout, h, fmt); };
  if (!a.quiet) {
    options.on_progress = [](const SearchProgress& pr) {
      std::cerr << "progress: " << pr.primes_done << "/" << pr.primes_total << " primes, through p=" << pr.last_completed_prime
                << ", hits=" << pr.hits << '\n';
    };
  }
  write_hit_header(std::cout, fmt);

  SearchResult result;
  if (!a.resume_path.empty()) {
    std::optional<SearchTask> expected;
    if (a.max) {
      task.hi = *a.max;
      expected = task;
    }
    const Checkpoint stored = load_checkpoint(a.resume_path);
    if (expected && (stored.kind != task.kind || stored.lo != task.lo || stored.hi != task.hi)) {
      throw Error(ErrorCode::TaskMismatch, "checkpoint " + a.resume_path + " belongs to a different task");
    }
    for (const auto& h : stored.hits) write_hit(std::cout, h, fmt);
    result = resume(a.resume_path, options, expected);
  } else {
    if (!a.max) throw Error(ErrorCode::InvalidInput, "--max is required unless --resume is given");
    task.hi = *a.max;
    if (!a.checkpoint.empty()) {
      task.checkpoint_path = a.checkpoint;
    } else if (const char* dir = std::getenv("WLAB_CHECKPOINT_DIR"); dir && *dir) {
      task.checkpoint_path = default_checkpoint_path(task.kind, task.lo, task.hi);
    }
    result = run_search(task, options);
  }
  if (!result.completed) {
    std::cerr << "interrupted after p=" << result.last_completed_prime;
    if (task.checkpoint_path || !a.resume_path.empty()) std::cerr << "; checkpoint saved";
    std::cerr << '\n';
    return kExitInterrupted;
  }
  if (!a.quiet) std::cerr << "done: " << result.hits.size() << " hit(s)\n";
  return kExitOk;
}

// ---- bernoulli -------------------------------------------------------------------------

struct BernoulliArgs {
  std::string p;
  std::string index;
  int prec = 1;
  std::string method = "auto";
};

int cmd_bernoulli(const Globals& g, const BernoulliArgs& a) {
  const BigInt p(a.p);
  if (!is_prime(p)) throw Error(ErrorCode::CompositeModulusBase, a.p + " is not a prime");
  const BigInt index = eval_index_expr(a.index, p);
  const auto method = a.method == "extraction" ? BernoulliMethod::Extraction : BernoulliMethod::Auto;
  const BernoulliResidue b = bernoulli_mod(index, p, a.prec, method);
  const std::string value = to_decimal(b.value.value());
  switch (g.fmt()) {
    case OutputFormat::Jsonl:
      std::cout << ordered_json{{"index", to_decimal(index)}, {"p", a.p}, {"prec", a.prec}, {"value", value}}.dump()
                << '\n';
      break;
    case OutputFormat::Csv:
      std::cout << "index,p,prec,value\n" << to_decimal(index) << ',' << a.p << ',' << a.prec << ',' << value << '\n';
      break;
    case OutputFormat::Human:
      std::cout << value << '\n';
      break;
  }
  return kExitOk;
}

// ---- report ----------------------------------------------------------------------------

int summarize_checkpoint(const Checkpoint& c, OutputFormat fmt) {
  if (fmt == OutputFormat::Human) {
    std::cout << "search " << to_string(c.kind) << " over [" << c.lo << ", " << c.hi << "]\n"
              << "  " << (c.completed ? "completed" : "in progress") << ", through p=" << c.last_completed_prime << '\n'
              << "  hits: " << c.hits.size() << '\n';
    for (const auto& h : c.hits) write_hit(std::cout, h, fmt);
    std::cout << "  updated " << c.updated_at << '\n';
  } else {
    ordered_json hits = ordered_json::array();
    for (const auto& h : c.hits) hits.push_back(hit_to_json(h));
    std::cout << ordered_json{{"kind", to_string(c.kind)}, {"lo", c.lo}, {"hi", c.hi}, {"completed", c.completed},
                              {"last_completed_prime", c.last_completed_prime}, {"hits", hits}}
                     .dump()
              << '\n';
  }
  return kExitOk;
}

int summarize_reports(std::istream& in, OutputFormat fmt) {
  struct Tally {
    std::map<std::string, long> by_status;
    int min_margin = std::numeric_limits<int>::max();  // residual_valuation - required_exp over holds
  };
  std::map<std::string, Tally> per_check;
  std::vector<CongruenceReport> failures;
  long lines = 0;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    ++lines;
    CongruenceReport r;
    try {
      r = report_from_json(ordered_json::parse(line));
    } catch (const nlohmann::json::parse_error&) {
      throw Error(ErrorCode::InvalidInput, "line " + std::to_string(lines) + " is not JSON");
    }
    auto& t = per_check[r.check];
    ++t.by_status[to_string(r.status)];
    if (r.status == Status::Holds) t.min_margin = std::min(t.min_margin, r.residual_valuation - r.required_exponent);
    if (r.status == Status::Fails) failures.push_back(r);
  }
  if (fmt == OutputFormat::Human) {
    std::cout << lines << " report(s), " << failures.size() << " failure(s)\n";
    for (const auto& [check, t] : per_check) {
      std::cout << "  " << check;
      for (const auto& [s, n] : t.by_status) std::cout << "  " << s << '=' << n;
      if (t.min_margin != std::numeric_limits<int>::max()) std::cout << "  min_margin=" << t.min_margin;
      std::cout << '\n';
    }
    for (const auto& r : failures) write_report(std::cout, r, fmt);
  } else {
    ordered_json checks = ordered_json::object();
    for (const auto& [check, t] : per_check) {
      ordered_json entry = ordered_json::object();
      for (const auto& [s, n] : t.by_status) entry[s] = n;
      checks[check] = entry;
    }
    ordered_json fails = ordered_json::array();
    for (const auto& r : failures) fails.push_back(report_to_json(r));
    std::cout << ordered_json{{"reports", lines}, {"checks", checks}, {"failures", fails}}.dump() << '\n';
  }
  return failures.empty() ? kExitOk : kExitViolation;
}

int cmd_report(const Globals& g, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidInput, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  const std::string text = ss.str();
  // A checkpoint is a single JSON document carrying schema_version; anything else is a report stream.
  try {
    const auto j = ordered_json::parse(text);
    if (j.is_object() && j.contains("schema_version")) return summarize_checkpoint(checkpoint_from_json(text), g.fmt());
  } catch (const nlohmann::json::parse_error&) {
  }
  std::istringstream lines(text);
  return summarize_reports(lines, g.fmt());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Prime-power congruences for C(2p-1, p-1): verification, searches, Bernoulli residues"};
  app.require_subcommand(1);

  Globals g;
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"jsonl", "csv", "human"}))
      ->capture_default_str();
  app.add_option("--workers", g.workers, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();
  app.add_option("--backend", g.backend, "Residue arithmetic: fixed-width Montgomery, GMP, or automatic")
      ->check(CLI::IsMember({"auto", "fixed-width", "bignum"}))
      ->capture_default_str();
  app.footer(
      "Exit status: 0 ok, 1 usage or runtime error, 2 a congruence failed, 130 interrupted.\n"
      "WLAB_CHECKPOINT_DIR: directory for search checkpoints when --checkpoint is not given.");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Run named congruence checks over a prime or range of primes");
  verify->fallthrough();
  verify->add_option("--p", va.range, "Prime or range lo..hi")->required();
  verify->add_option("--check", va.checks,
                     "Check names, groups, or all|claims|lemmas|probes (repeatable, default all)");
  verify->add_option("--exp", va.exp, "Exponent for thm1.1 (default 7; 6 at p=7)");

  SearchArgs sa;
  auto* search = app.add_subcommand("search", "Checkpointed range search");
  search->fallthrough();
  search->add_option("kind", sa.kind, "wolstenholme | mod-p8")->required()->check(
      CLI::IsMember({"wolstenholme", "mod-p8", "mod_p8"}));
  search->add_option("--min", sa.min, "Lower bound (default 5, or 7 for mod-p8)");
  search->add_option("--max", sa.max, "Upper bound, inclusive");
  search->add_option("--chunk", sa.chunk, "Primes per work unit")->check(CLI::PositiveNumber)->capture_default_str();
  search->add_option("--checkpoint", sa.checkpoint, "Checkpoint file written after every chunk");
  search->add_option("--resume", sa.resume_path, "Continue from this checkpoint");
  search->add_flag("--quiet", sa.quiet, "No progress on stderr");

  BernoulliArgs ba;
  auto* bern = app.add_subcommand("bernoulli", "B_n mod p^r");
  bern->fallthrough();
  bern->add_option("--p", ba.p, "Prime")->required();
  bern->add_option("--index", ba.index, "Index expression in p, e.g. p^3-p^2-2")->required();
  bern->add_option("--prec", ba.prec, "Precision r")->check(CLI::PositiveNumber)->capture_default_str();
  bern->add_option("--method", ba.method, "auto | extraction")
      ->check(CLI::IsMember({"auto", "extraction"}))
      ->capture_default_str();

  std::string report_path;
  auto* report = app.add_subcommand("report", "Summarise a JSONL report stream or a search checkpoint");
  report->fallthrough();
  report->add_option("file", report_path, "Report or checkpoint file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  std::signal(SIGINT, on_sigint);
  try {
    if (*verify) return cmd_verify(g, va);
    if (*search) return cmd_search(g, sa);
    if (*bern) return cmd_bernoulli(g, ba);
    if (*report) return cmd_report(g, report_path);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
