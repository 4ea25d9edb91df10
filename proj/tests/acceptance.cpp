// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// End-to-end acceptance run. Prints one PASS/FAIL line per criterion and
// exits non-zero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cli_app.hpp"
#include "rainbow/errors.hpp"
#include "rainbow/instances.hpp"
#include "rainbow/solver.hpp"
#include "rainbow/verifier.hpp"

namespace rainbow {
namespace {

using Clock = std::chrono::steady_clock;

double SecondsSince(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Corpus {
  std::vector<InstanceFile> instances;
};

constexpr MatroidClass kClasses[] = {
    MatroidClass::kUniform, MatroidClass::kPartition, MatroidClass::kGraphic,
    MatroidClass::kLinear};

std::vector<std::string> ClassPairs() {
  std::vector<std::string> out;
  for (auto a : kClasses) {
    for (auto b : kClasses) {
      out.push_back(std::string(class_name(a)) + "," +
                    std::string(class_name(b)));
    }
  }
  return out;
}

// Every generator at n = 2..12, three seeds each.
Corpus LargeCorpus() {
  Corpus c;
  for (const auto& gen : generator_names()) {
    for (std::size_t n = 2; n <= 12; ++n) {
      for (std::uint64_t seed = 0; seed < 3; ++seed) {
        c.instances.push_back(generate_instance(gen, n, 1000 * n + seed));
      }
    }
  }
  return c;
}

// Every generator at n = 2..5, ten seeds each.
Corpus SmallCorpus() {
  Corpus c;
  for (const auto& gen : generator_names()) {
    for (std::size_t n = 2; n <= 5; ++n) {
      for (std::uint64_t seed = 0; seed < 10; ++seed) {
        c.instances.push_back(generate_instance(gen, n, seed));
      }
    }
  }
  return c;
}

class Reporter {
 public:
  void Line(int id, bool pass, const std::string& text) {
    std::printf("%s  criterion %d  %s\n", pass ? "PASS" : "FAIL", id,
                text.c_str());
    std::fflush(stdout);
    all_ok_ = all_ok_ && pass;
  }
  bool ok() const { return all_ok_; }

 private:
  bool all_ok_ = true;
};

template <typename... Args>
std::string Format(const char* fmt, Args... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, fmt, args...);
  return buf;
}

void SizeBound(const Corpus& corpus, Reporter& rep) {
  const auto start = Clock::now();
  std::size_t solves = 0, below = 0, errors = 0;
  std::set<std::string> pairs_seen;
  const auto pairs = ClassPairs();
  for (const auto& inst : corpus.instances) {
    try {
      auto r = solve(inst.family);
      ++solves;
      if (!check_bound(r.size(), inst.family.size())) {
        ++below;
        std::fprintf(stderr, "below bound: gen=%s n=%zu seed=%llu t=%zu\n",
                     inst.generator.c_str(), inst.family.size(),
                     static_cast<unsigned long long>(inst.seed.value_or(0)),
                     r.size());
      }
      for (const auto& p : pairs) {
        if (inst.generator == p) pairs_seen.insert(p);
      }
    } catch (const std::exception& e) {
      ++errors;
      std::fprintf(stderr, "solve error: %s\n", e.what());
    }
  }
  const double secs = SecondsSince(start);
  const bool pass = solves >= 500 && below == 0 && errors == 0 &&
                    pairs_seen.size() == 16 && secs < 60;
  rep.Line(1, pass,
           Format("size bound t == n or (n-t)^2 <= t: %zu solves, n = 2..12, "
                  "%zu class pairings, %zu below bound, %zu errors, %.2f s",
                  solves, pairs_seen.size(), below, errors, secs));
}

void BruteForceAgreement(const Corpus& corpus, Reporter& rep) {
  const auto start = Clock::now();
  std::size_t checked = 0, above = 0, invalid = 0;
  std::size_t latin = 0, latin_at_least = 0;
  for (const auto& inst : corpus.instances) {
    const auto& f = inst.family;
    auto solved = solve(f);
    auto brute = brute_force_max(f);
    ++checked;
    if (brute.size < solved.size()) ++above;
    if (!check_rainbow(solved.rainbow, f)) ++invalid;
    if (inst.generator == "latin") {
      ++latin;
      if (brute.size + 1 >= f.size()) ++latin_at_least;
    }
  }
  const double secs = SecondsSince(start);
  const bool pass = checked > 0 && above == 0 && invalid == 0 && secs < 30;
  rep.Line(2, pass,
           Format("brute force at n <= 5: %zu instances, %zu solver > optimum, "
                  "%zu invalid outputs, %.2f s (reported only: %zu/%zu latin "
                  "squares have optimum >= n-1)",
                  checked, above, invalid, secs, latin_at_least, latin));
}

void MatroidProperties(Reporter& rep) {
  const auto start = Clock::now();
  std::vector<PropertyResult> results = {
      check_unique_support(500, 101), check_exchange(500, 102),
      check_circuit_elimination(500, 103), check_augmentation(500, 104)};
  std::string detail;
  bool pass = true;
  for (const auto& r : results) {
    pass = pass && r.failures == 0 && r.trials >= 500;
    detail += Format("%s %zu/%zu, ", r.name.c_str(), r.trials - r.failures,
                     r.trials);
    if (r.failures) {
      std::fprintf(stderr, "%s: %s\n", r.name.c_str(),
                   r.first_counterexample.c_str());
    }
  }
  rep.Line(3, pass,
           Format("matroid facts on ground <= 8, all classes: %s%.2f s",
                  detail.c_str(), SecondsSince(start)));
}

void SupportPersistence(Reporter& rep) {
  auto r = check_support_persistence(250, 105);
  if (r.failures) {
    std::fprintf(stderr, "%s\n", r.first_counterexample.c_str());
  }
  rep.Line(4, r.trials >= 200 && r.failures == 0,
           Format("support persistence under swaps: %zu sampled tuples, %zu "
                  "failures",
                  r.trials, r.failures));
}

// Random maximal rainbow set, to reach augmenting paths greedy rarely
// needs.
RainbowSet RandomStart(const Family& f, Rng& rng) {
  RainbowSet r(f.size());
  std::vector<std::size_t> colors(f.size());
  for (std::size_t c = 0; c < colors.size(); ++c) colors[c] = c;
  rng.shuffle(colors);
  ElementSet chosen;
  for (std::size_t c : colors) {
    std::vector<ElementId> ids(f.sets[c].begin(), f.sets[c].end());
    rng.shuffle(ids);
    for (ElementId e : ids) {
      auto next = chosen.with(e);
      if (is_independent(f.m, next) && is_independent(f.n, next)) {
        chosen = next;
        r.picks[c] = e;
        break;
      }
    }
  }
  return r;
}

void ClaimAssertions(const Corpus& large, const Corpus& small,
                     Reporter& rep) {
  const auto start = Clock::now();
  ClaimStats stats;
  std::size_t runs = 0, violations = 0, caps = 0, longest = 0;
  auto run = [&](const InstanceFile& inst, SolveOptions opts) {
    ++runs;
    try {
      auto r = solve(inst.family, opts);
      stats += r.claims;
      caps += r.cap_lengths.size();
      for (auto len : r.cap_lengths) longest = std::max(longest, len);
    } catch (const ContractError& e) {
      ++violations;
      std::fprintf(stderr, "violation: gen=%s n=%zu: %s\n",
                   inst.generator.c_str(), inst.family.size(), e.what());
    }
  };
  for (const Corpus* corpus : {&large, &small}) {
    for (const auto& inst : corpus->instances) {
      SolveOptions opts;
      opts.check_claims = true;
      run(inst, opts);
      Rng rng(inst.seed.value_or(0) * 31 + inst.family.size());
      opts.start = RandomStart(inst.family, rng);
      run(inst, opts);
    }
  }
  const bool exercised = stats.spanned_in_n > 0 && stats.level_drop > 0 &&
                         stats.partner_exists > 0 && stats.fresh_removal > 0 &&
                         stats.support_kept > 0 && stats.path_conditions > 0 &&
                         stats.path_identity > 0 && stats.monotonicity > 0 &&
                         stats.length_bound > 0;
  rep.Line(5, violations == 0 && exercised,
           Format("path assertions with claim checking on: %zu runs, %zu "
                  "augmenting paths (longest %zu), %zu violations; checks "
                  "evaluated: spanned_in_n %zu, level_drop %zu, "
                  "partner_exists %zu, fresh_removal %zu, support_kept %zu, "
                  "path_conditions %zu, path_identity %zu, monotonicity %zu, "
                  "length_bound %zu, %.2f s",
                  runs, caps, longest, violations, stats.spanned_in_n,
                  stats.level_drop, stats.partner_exists, stats.fresh_removal,
                  stats.support_kept, stats.path_conditions,
                  stats.path_identity, stats.monotonicity, stats.length_bound,
                  SecondsSince(start)));
}

// The extracted cells must hit distinct rows and columns, and their
// entries must be distinct and independent in the square's own matroid.
bool CheckTransversal(const RowMls& mls, const RainbowSet& r) {
  const std::size_t n = mls.n;
  std::set<std::size_t> rows, cols;
  std::vector<ElementId> entries;
  for (std::size_t c = 0; c < r.picks.size(); ++c) {
    if (!r.picks[c]) continue;
    const ElementId cell = *r.picks[c];
    const std::size_t row = cell / n, col = cell % n;
    if (row != c) return false;
    rows.insert(row);
    cols.insert(col);
    entries.push_back(mls.cells[row][col]);
  }
  if (rows.size() != entries.size() || cols.size() != entries.size()) {
    return false;
  }
  std::set<ElementId> distinct(entries.begin(), entries.end());
  if (distinct.size() != entries.size()) return false;
  return is_independent(mls.matroid, ElementSet(entries));
}

void RowMlsTransversals(Reporter& rep) {
  const auto start = Clock::now();
  std::size_t squares = 0, short_count = 0, bad = 0;
  constexpr std::uint32_t kPrimes[] = {2, 3, 5, 7};
  for (std::size_t n = 1; n <= 12; ++n) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      std::vector<RowMls> batch = {
          random_rowmls_graphic(n, seed),
          random_rowmls_linear(n, kPrimes[seed % 4], seed)};
      for (const auto& mls : batch) {
        ++squares;
        auto r = solve(rowmls_to_family(mls)).rainbow;
        if (r.size() < bound_floor(n)) ++short_count;
        if (!CheckTransversal(mls, r)) ++bad;
      }
    }
  }
  rep.Line(6, short_count == 0 && bad == 0 && squares > 0,
           Format("row MLS transversals over graphic and linear matroids, "
                  "n = 1..12: %zu squares, %zu below bound, %zu not "
                  "independent transversals, %.2f s",
                  squares, short_count, bad, SecondsSince(start)));
}

void KnownValues(Reporter& rep) {
  auto two = brute_force_max(latin_to_family(cyclic_latin(2))).size;
  auto three = brute_force_max(latin_to_family(cyclic_latin(3))).size;
  rep.Line(7, two == 1 && three == 3,
           Format("cyclic Latin squares by brute force: n=2 optimum %zu "
                  "(expected 1), n=3 optimum %zu (expected 3)",
                  two, three));
}

std::string RunCli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return std::to_string(code) + "\n" + out.str() + err.str();
}

std::string Slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

void Determinism(Reporter& rep) {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "rainbow_acceptance";
  fs::create_directories(dir);
  const std::string spec = (dir / "corpus.txt").string();
  std::ofstream(spec) << "latin n=4 seeds=0..9\n"
                      << "graphic,linear n=5 seeds=0..4\n"
                      << "rowmls-linear n=6 seeds=0..2\n";

  std::vector<std::vector<std::string>> commands;
  for (const auto& gen : generator_names()) {
    const std::string file = (dir / (gen + ".txt")).string();
    commands.push_back({"gen", "--class", gen, "--n", "7", "--seed", "42",
                        "-o", file});
    commands.push_back({"solve", file, "--certify", "--check-claims"});
    commands.push_back({"verify", file});
  }
  commands.push_back({"props", "--trials", "50", "--seed", "9"});
  commands.push_back({"bench", "--spec", spec, "--no-time"});

  std::size_t mismatches = 0;
  for (const auto& cmd : commands) {
    const std::string first = RunCli(cmd);
    std::string first_file;
    if (cmd[0] == "gen") first_file = Slurp(cmd.back());
    const std::string second = RunCli(cmd);
    if (first != second ||
        (cmd[0] == "gen" && first_file != Slurp(cmd.back()))) {
      ++mismatches;
      std::fprintf(stderr, "output differs for: %s\n", cmd[0].c_str());
    }
  }
  fs::remove_all(dir);
  rep.Line(8, mismatches == 0,
           Format("determinism: %zu seeded commands run twice, %zu "
                  "differences",
                  commands.size(), mismatches));
}

}  // namespace
}  // namespace rainbow

int main() {
  using namespace rainbow;
  Reporter rep;
  const Corpus large = LargeCorpus();
  const Corpus small = SmallCorpus();
  SizeBound(large, rep);
  BruteForceAgreement(small, rep);
  MatroidProperties(rep);
  SupportPersistence(rep);
  ClaimAssertions(large, small, rep);
  RowMlsTransversals(rep);
  KnownValues(rep);
  Determinism(rep);
  std::printf("%s\n", rep.ok() ? "acceptance: PASS" : "acceptance: FAIL");
  return rep.ok() ? 0 : 1;
}
