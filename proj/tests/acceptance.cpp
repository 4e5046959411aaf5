// Acceptance runner: one PASS/FAIL line per criterion.
//
//   wlab_acceptance [--extended] [--extended-p8] [--workers N] [--expect-fail LIST]
//
// Exit status is 0 when every criterion passes. With --expect-fail 5,6,7 the exit status is 0
// exactly when the failing set equals that list, so a known, documented failure stays visible in
// the output without masking a new one.

#include <atomic>
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "oracles.hpp"
#include "wlab/bernoulli.hpp"
#include "wlab/checkpoint.hpp"
#include "wlab/congruence.hpp"
#include "wlab/parallel.hpp"
#include "wlab/report_io.hpp"
#include "wlab/search.hpp"
#include "wlab/sieve.hpp"

using namespace wlab;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

int g_workers = 1;

struct Tally {
  std::size_t runs = 0;
  std::size_t failures = 0;
  std::uint64_t first_failure = 0;
  int min_valuation = 1 << 30;
};

std::map<std::string, Tally> sweep(const std::vector<std::uint64_t>& primes, const std::vector<std::string>& names,
                                   const SuiteOptions& options = {}) {
  const auto reports = verify_range_parallel(primes, names, g_workers, options);
  std::map<std::string, Tally> out;
  for (const auto& r : reports) {
    if (r.status == Status::NotApplicable) continue;
    auto& t = out[r.check];
    ++t.runs;
    t.min_valuation = std::min(t.min_valuation, r.residual_valuation);
    if (r.status == Status::Fails) {
      if (t.failures++ == 0) t.first_failure = r.p.get_ui();
    }
  }
  return out;
}

bool all_hold(const std::map<std::string, Tally>& t, const std::vector<std::string>& names) {
  for (const auto& n : names) {
    const auto it = t.find(n);
    if (it == t.end() || it->second.runs == 0 || it->second.failures != 0) return false;
  }
  return true;
}

std::string describe(const std::map<std::string, Tally>& t, const std::string& name) {
  const auto it = t.find(name);
  if (it == t.end()) return name + " not run";
  std::ostringstream s;
  s << name << " " << (it->second.runs - it->second.failures) << "/" << it->second.runs;
  if (it->second.failures) s << " (first failure p=" << it->second.first_failure << ", min v=" << it->second.min_valuation << ")";
  return s.str();
}

std::string stream_of(const std::vector<CongruenceReport>& reports) {
  std::ostringstream s;
  for (const auto& r : reports) write_report(s, r, OutputFormat::Jsonl);
  return s.str();
}

std::string stream_of(const std::vector<SearchHit>& hits) {
  std::ostringstream s;
  for (const auto& h : hits) write_hit(s, h, OutputFormat::Jsonl);
  return s.str();
}

std::string hit_primes(const std::vector<SearchHit>& hits) {
  std::string s = "{";
  for (std::size_t i = 0; i < hits.size(); ++i) s += (i ? ", " : "") + std::to_string(hits[i].p);
  return s + "}";
}

// ---- criteria --------------------------------------------------------------------------

Outcome identity_cases() {
  bool ok = true;
  std::string detail;
  for (std::uint64_t p : {3, 5}) {
    const auto r = check_theorem_main(from_u64(p), 7);
    const bool exact = r.status == Status::Identity && r.lhs && r.rhs && *r.lhs == *r.rhs &&
                       *r.lhs == oracle::central_binomial(p);
    ok = ok && exact;
    detail += "p=" + std::to_string(p) + ": " + (r.lhs ? to_decimal(*r.lhs) : "?") + " = " +
              (r.rhs ? to_decimal(*r.rhs) : "?") + " (" + to_string(r.status) + ") ";
  }
  return {ok && detail.find("10 = 10") != std::string::npos && detail.find("126 = 126") != std::string::npos, detail};
}

Outcome p7_boundary() {
  const auto r6 = check_theorem_main(from_u64(7), 6);
  const auto r7 = check_theorem_main(from_u64(7), 7);
  const bool ok = r6.holds && !r7.holds && r7.residual_valuation == 6;
  return {ok, "mod 7^6 " + std::string(r6.holds ? "holds" : "fails") + ", mod 7^7 " + (r7.holds ? "holds" : "fails") +
                  ", residual valuation " + std::to_string(r7.residual_valuation)};
}

Outcome theorem_sweep() {
  const auto primes = primes_in(11, 10000);
  const auto t = sweep(primes, {"thm1.1"});
  return {all_hold(t, {"thm1.1"}) && t.at("thm1.1").runs == primes.size(),
          describe(t, "thm1.1") + " primes in [11, 10^4], mod p^7"};
}

Outcome oracle_equivalence() {
  const auto primes = primes_in(3, 10000);
  std::atomic<std::size_t> mismatches{0};
  std::atomic<std::uint64_t> first{0};
  parallel_for(primes.size(), g_workers, [&](std::size_t i) {
    const BigInt p = from_u64(primes[i]);
    if (binom_central(p, 8) != binom_exact_oracle(p, 8)) {
      if (mismatches++ == 0) first = primes[i];
    }
  });
  return {mismatches == 0, std::to_string(primes.size() - mismatches) + "/" + std::to_string(primes.size()) +
                               " primes agree mod p^8" +
                               (mismatches ? ", first mismatch p=" + std::to_string(first.load()) : "")};
}

Outcome corollary_chain() {
  const std::vector<std::string> printed = {"thm1.1",          "cor1.4-harmonic", "cor1.4-cubic",    "cor1.5-harmonic",
                                            "cor1.5-square",   "eq1.2-harmonic",  "eq1.2-bernoulli", "eq1.1"};
  std::vector<std::string> names = printed;
  names.push_back("eq1.2-harmonic-corrected");
  const auto t = sweep(primes_in(7, 10000), names);
  std::vector<std::string> corrected = printed;
  corrected[5] = "eq1.2-harmonic-corrected";
  std::string detail;
  for (const auto& n : printed)
    if (t.count(n) && t.at(n).failures) detail += describe(t, n) + "; ";
  detail += "chain with the corrected link " + describe(t, "eq1.2-harmonic-corrected") + ", " +
            (all_hold(t, corrected) ? "unbroken" : "broken");
  return {all_hold(t, printed), detail};
}

Outcome bernoulli_forms() {
  const auto t = sweep(primes_in(11, 200), {"eq1.3", "eq1.5", "eq1.5-corrected"});
  return {all_hold(t, {"eq1.3", "eq1.5"}),
          describe(t, "eq1.3") + "; " + describe(t, "eq1.5") + "; evidence " + describe(t, "eq1.5-corrected")};
}

Outcome lemma_suite() {
  const auto names = resolve_selection({"lemmas"});
  const auto t = sweep(primes_in(11, 500), names);
  std::vector<std::string> printed, failing;
  for (const auto& n : names)
    if (n.find("-corrected") == std::string::npos) printed.push_back(n);
  for (const auto& n : printed)
    if (t.count(n) && t.at(n).failures) failing.push_back(n);
  std::string detail = std::to_string(printed.size() - failing.size()) + "/" + std::to_string(printed.size()) +
                       " printed checks hold";
  for (const auto& n : failing) detail += "; " + describe(t, n);
  for (const auto& n : names)
    if (n.find("-corrected") != std::string::npos) detail += "; evidence " + describe(t, n);
  return {failing.empty() && all_hold(t, printed), detail};
}

Outcome wolstenholme_search(bool extended) {
  SearchTask task;
  task.kind = SearchKind::Wolstenholme;
  task.lo = 5;
  task.hi = extended ? 2200000 : 100000;
  SearchOptions o;
  o.workers = g_workers;
  const auto res = run_search(task, o);
  std::vector<std::uint64_t> got;
  for (const auto& h : res.hits) got.push_back(h.p);
  const std::vector<std::uint64_t> want =
      extended ? std::vector<std::uint64_t>{16843, 2124679} : std::vector<std::uint64_t>{16843};
  return {res.completed && got == want, "hits up to " + std::to_string(task.hi) + ": " + hit_primes(res.hits)};
}

Outcome mod_p8_search(bool extended) {
  SearchTask task;
  task.kind = SearchKind::ModP8;
  task.lo = 7;
  task.hi = extended ? 499999 : 10000;
  SearchOptions o;
  o.workers = g_workers;
  const auto res = run_search(task, o);
  return {res.completed && res.hits.empty(), "hits in [7, " + std::to_string(task.hi) + "]: " + hit_primes(res.hits)};
}

Outcome wolstenholme_prime_16843() {
  const BigInt p = from_u64(16843);
  const auto cond = check_wprime_conditional(p);
  const auto thm8 = check_theorem_main(p, 8);
  bool ok = !thm8.holds && thm8.residual_valuation == 7;
  std::string detail;
  for (const auto& r : cond) {
    if (r.check.rfind("eq1.6", 0) != 0) continue;
    ok = ok && r.holds && r.required_exponent == 7;
    detail += r.check + " v=" + std::to_string(r.residual_valuation) + "; ";
  }
  return {ok, detail + "thm1.1 mod p^8 " + (thm8.holds ? "holds" : "fails") + " with v=" +
                  std::to_string(thm8.residual_valuation)};
}

Outcome bernoulli_oracle() {
  const auto table = oracle::bernoulli_table(60);
  std::size_t cases = 0, bad = 0, skipped = 0;
  std::string first;
  for (std::uint64_t p : primes_in(11, 97)) {
    const BigInt pb = from_u64(p);
    for (int r = 1; r <= 3; ++r) {
      for (int n = 0; n <= 60; n += 2) {
        // B_n with (p-1) | n, n > 0, has p in its denominator and no residue mod p^r.
        if (n > 0 && n % static_cast<int>(p - 1) == 0) {
          ++skipped;
          continue;
        }
        ++cases;
        const auto got = bernoulli_mod(BigInt(n), pb, r, BernoulliMethod::Extraction).value.value();
        if (got != oracle::reduce(table[n], pb, r)) {
          if (bad++ == 0) first = "n=" + std::to_string(n) + " p=" + std::to_string(p) + " r=" + std::to_string(r);
        }
      }
    }
  }
  return {bad == 0, std::to_string(cases - bad) + "/" + std::to_string(cases) + " residues match, " + std::to_string(skipped) +
                        " non-integral cases skipped" + (bad ? ", first mismatch " + first : "")};
}

Outcome determinism() {
  bool ok = true;
  std::string detail;

  const auto primes = primes_in(3, 600);
  const auto names = resolve_selection({"all"});
  const auto base = stream_of(verify_range_serial(primes, names));
  for (int w : {1, 4, 16}) ok = ok && stream_of(verify_range_parallel(primes, names, w)) == base;
  detail += "verify stream (" + std::to_string(base.size()) + " bytes) identical across 1/4/16 workers; ";

  SearchTask task;
  task.kind = SearchKind::Wolstenholme;
  task.lo = 5;
  task.hi = 40000;
  task.chunk = 128;
  std::string reference;
  for (int w : {1, 4, 16}) {
    SearchOptions o;
    o.workers = w;
    const auto s = stream_of(run_search(task, o).hits);
    if (w == 1) reference = s;
    ok = ok && s == reference && !s.empty();
  }
  detail += "search hits identical; ";

  const fs::path dir = fs::temp_directory_path() / "wlab-acceptance";
  fs::create_directories(dir);
  const fs::path path = dir / "resume.json";
  fs::remove(path);
  task.checkpoint_path = path;
  std::atomic<bool> stop{false};
  SearchOptions o;
  o.workers = g_workers;
  o.stop = &stop;
  o.on_progress = [&](const SearchProgress& pr) {
    if (pr.last_completed_prime > 20000) stop.store(true);
  };
  const auto partial = run_search(task, o);
  SearchOptions plain;
  plain.workers = g_workers;
  const auto resumed = resume(path, plain, task);
  const bool resume_ok = !partial.completed && resumed.completed && stream_of(resumed.hits) == reference;
  ok = ok && resume_ok;
  detail += "interrupted at p=" + std::to_string(partial.last_completed_prime) + ", resumed run " +
            (resume_ok ? "equals" : "differs from") + " the uninterrupted one";
  fs::remove(path);
  return {ok, detail};
}

std::set<int> parse_list(const std::string& s) {
  std::set<int> out;
  std::stringstream in(s);
  for (std::string item; std::getline(in, item, ',');)
    if (!item.empty()) out.insert(std::stoi(item));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria runner"};
  bool extended = false, extended_p8 = false;
  std::string expect_fail;
  g_workers = std::max(1u, std::thread::hardware_concurrency());
  app.add_flag("--extended", extended, "Wolstenholme search up to 2.2e6");
  app.add_flag("--extended-p8", extended_p8, "mod p^8 search over 7 <= p < 500000");
  app.add_option("--workers", g_workers, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--expect-fail", expect_fail, "Comma-separated criteria expected to fail, e.g. 5,6,7");
  CLI11_PARSE(app, argc, argv);

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"identity cases p=3,5", identity_cases},
      {"p=7 boundary", p7_boundary},
      {"theorem sweep 11..10^4 mod p^7", theorem_sweep},
      {"unit product vs exact binomial mod p^8, p <= 10^4", oracle_equivalence},
      {"corollary chain 7..10^4", corollary_chain},
      {"Bernoulli forms eq1.3/eq1.5, 11..200", bernoulli_forms},
      {"lemma suite 11..500", lemma_suite},
      {"Wolstenholme search", [&] { return wolstenholme_search(extended); }},
      {"mod p^8 search", [&] { return mod_p8_search(extended_p8); }},
      {"p=16843 conditional forms and mod p^8 failure", wolstenholme_prime_16843},
      {"Bernoulli extraction vs exact, n <= 60, 11 <= p <= 97, r <= 3", bernoulli_oracle},
      {"determinism and kill-and-resume", determinism},
  };

  std::set<int> failed;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!o.pass) failed.insert(id);
    std::cout << "criterion " << id << ": " << (o.pass ? "PASS" : "FAIL") << "  " << criteria[i].first << "  ["
              << o.detail << "] (" << std::fixed << std::setprecision(2) << secs << " s)" << std::endl;
  }

  if (!app.count("--expect-fail")) return failed.empty() ? 0 : 1;
  const auto expected = parse_list(expect_fail);
  if (failed == expected) return 0;
  std::cout << "failing set differs from the expected set " << expect_fail << '\n';
  return 1;
}
