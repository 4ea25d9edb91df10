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

#include "rainbow/verifier.hpp"

#include <algorithm>
#include <bit>
#include <exception>
#include <functional>
#include <string>

#include "rainbow/errors.hpp"
#include "rainbow/instances.hpp"
#include "rainbow/matroid.hpp"
#include "rainbow/rng.hpp"

namespace rainbow {
namespace {

constexpr MatroidClass kClasses[] = {
    MatroidClass::kUniform, MatroidClass::kPartition, MatroidClass::kGraphic,
    MatroidClass::kLinear};

constexpr std::size_t kMaxGround = 8;
// Rejection sampling gives up on a trial after this many draws.
constexpr std::size_t kMaxDraws = 10000;

using Mask = std::uint32_t;

ElementSet from_mask(Mask mask) {
  std::vector<ElementId> ids;
  for (ElementId e = 0; mask != 0; ++e, mask >>= 1) {
    if (mask & 1) ids.push_back(e);
  }
  return ElementSet(std::move(ids));
}

Mask to_mask(const ElementSet& s) {
  Mask m = 0;
  for (ElementId e : s) m |= Mask{1} << e;
  return m;
}

bool in_mask(Mask m, ElementId e) { return (m >> e) & 1; }

// Independence of every subset of a small ground set.
std::vector<bool> independence_table(const MatroidSpec& spec) {
  const Mask full = Mask{1} << spec.ground_size();
  std::vector<bool> table(full);
  for (Mask m = 0; m < full; ++m) table[m] = is_independent(spec, from_mask(m));
  return table;
}

struct Sample {
  MatroidSpec spec;
  std::size_t ground;
};

Sample sample_matroid(std::size_t trial, Rng& rng) {
  const std::size_t ground = rng.between(2, kMaxGround);
  MatroidClass cls = kClasses[trial % 4];
  return Sample{random_matroid(cls, ground, rng), ground};
}

// Random independent set: greedy basis of a random subset, optionally
// thinned.
ElementSet random_independent(const MatroidSpec& spec, std::size_t ground,
                              Rng& rng) {
  Mask subset = static_cast<Mask>(rng.below(Mask{1} << ground));
  ElementSet basis = greedy_basis(spec, from_mask(subset));
  std::vector<ElementId> kept;
  for (ElementId e : basis) {
    if (rng.chance(4, 5)) kept.push_back(e);
  }
  return ElementSet(std::move(kept));
}

// Elements of span(i) \ i.
std::vector<ElementId> spanned_outside(const MatroidSpec& spec,
                                       const ElementSet& i,
                                       std::size_t ground) {
  std::vector<ElementId> out;
  for (ElementId x = 0; x < ground; ++x) {
    if (!i.contains(x) && spans(spec, i, x)) out.push_back(x);
  }
  return out;
}

std::string describe(const MatroidSpec& spec) {
  return std::string(class_name(spec.matroid_class())) + " on " +
         std::to_string(spec.ground_size()) + " elements";
}

class Tally {
 public:
  explicit Tally(std::string name) { result_.name = std::move(name); }

  void pass() { ++result_.trials; }
  void fail(const std::string& what) {
    ++result_.trials;
    if (result_.failures++ == 0) result_.first_counterexample = what;
  }
  void check(bool ok, const std::function<std::string()>& what) {
    if (ok) {
      pass();
    } else {
      fail(what());
    }
  }
  // Runs a trial body; exceptions count as failures.
  void guarded(const std::function<void()>& body) {
    try {
      body();
    } catch (const std::exception& e) {
      fail(std::string("exception: ") + e.what());
    }
  }
  std::size_t trials() const { return result_.trials; }
  PropertyResult result() const { return result_; }

 private:
  PropertyResult result_;
};

void dfs(const Family& family, std::size_t color, RainbowSet& current,
         ElementSet& chosen, BruteForceResult& best) {
  const std::size_t n = family.size();
  if (chosen.size() > best.size) {
    best.size = chosen.size();
    best.witness = current;
  }
  if (color == n || best.size == n) return;
  if (chosen.size() + (n - color) <= best.size) return;
  for (ElementId e : family.sets[color]) {
    ElementSet next = chosen.with(e);
    if (!is_independent(family.m, next) || !is_independent(family.n, next)) {
      continue;
    }
    ElementSet saved = std::move(chosen);
    chosen = std::move(next);
    current.picks[color] = e;
    dfs(family, color + 1, current, chosen, best);
    current.picks[color].reset();
    chosen = std::move(saved);
    if (best.size == n) return;
  }
  dfs(family, color + 1, current, chosen, best);
}

}  // namespace

bool check_rainbow(const RainbowSet& rainbow, const Family& family,
                   std::string* diagnostic) {
  auto fail = [&](const std::string& why) {
    if (diagnostic) *diagnostic = why;
    return false;
  };
  if (rainbow.picks.size() != family.size()) {
    return fail("pick vector has " + std::to_string(rainbow.picks.size()) +
                " colors, family has " + std::to_string(family.size()));
  }
  std::vector<ElementId> ids;
  for (std::size_t c = 0; c < family.size(); ++c) {
    if (!rainbow.picks[c]) continue;
    const ElementId e = *rainbow.picks[c];
    if (!family.sets[c].contains(e)) {
      return fail("element " + std::to_string(e) + " picked for color " +
                  std::to_string(c) + " is not in that set");
    }
    ids.push_back(e);
  }
  std::sort(ids.begin(), ids.end());
  if (std::adjacent_find(ids.begin(), ids.end()) != ids.end()) {
    return fail("an element is picked twice");
  }
  const ElementSet elements(std::move(ids));
  if (!is_independent(family.m, elements)) return fail("dependent in M");
  if (!is_independent(family.n, elements)) return fail("dependent in N");
  return true;
}

bool check_bound(std::size_t t, std::size_t n) {
  if (t > n) return false;
  const std::size_t gap = n - t;
  return gap == 0 || gap * gap <= t;
}

std::size_t bound_floor(std::size_t n) {
  std::size_t t = 0;
  while (!check_bound(t, n)) ++t;
  return t;
}

BruteForceResult brute_force_max(const Family& family, std::size_t limit) {
  if (family.size() > limit) {
    throw LimitError(
        "brute force refused: n = " + std::to_string(family.size()) +
        " exceeds limit " + std::to_string(limit));
  }
  BruteForceResult best;
  best.witness = RainbowSet(family.size());
  RainbowSet current(family.size());
  ElementSet chosen;
  dfs(family, 0, current, chosen, best);
  return best;
}

VerifyReport verify_family(const Family& family, std::size_t brute_limit,
                           const SolveOptions& options) {
  VerifyReport report;
  report.n = family.size();
  const SolveReport solved = solve(family, options);
  report.solver_size = solved.size();
  report.valid = check_rainbow(solved.rainbow, family, &report.diagnostic);
  report.bound_ok = check_bound(report.solver_size, report.n);
  if (report.n <= brute_limit) {
    const BruteForceResult brute = brute_force_max(family, brute_limit);
    report.optimum = brute.size;
    report.conjecture_gap = static_cast<std::int64_t>(brute.size) -
                            (static_cast<std::int64_t>(report.n) - 1);
    if (brute.size < report.solver_size) {
      report.valid = false;
      report.diagnostic = "solver size exceeds brute-force optimum";
    }
  }
  return report;
}

std::string render_text(const VerifyReport& r) {
  std::string out;
  out += "n: " + std::to_string(r.n) + "\n";
  out += "solver size: " + std::to_string(r.solver_size) + "\n";
  out += "bound floor: " + std::to_string(bound_floor(r.n)) + "\n";
  out +=
      "optimum: " +
      (r.optimum ? std::to_string(*r.optimum) : std::string("not computed")) +
      "\n";
  out += std::string("bound: ") + (r.bound_ok ? "ok" : "VIOLATED") + "\n";
  out += std::string("rainbow: ") + (r.valid ? "valid" : "INVALID") + "\n";
  if (!r.diagnostic.empty()) out += "diagnostic: " + r.diagnostic + "\n";
  return out;
}

std::string render_kv(const VerifyReport& r) {
  std::string out;
  out += "n=" + std::to_string(r.n) + "\n";
  out += "solver_size=" + std::to_string(r.solver_size) + "\n";
  out += "bound_floor=" + std::to_string(bound_floor(r.n)) + "\n";
  out += "optimum=" + (r.optimum ? std::to_string(*r.optimum) : "-") + "\n";
  out += std::string("bound_ok=") + (r.bound_ok ? "1" : "0") + "\n";
  out += std::string("valid=") + (r.valid ? "1" : "0") + "\n";
  out += "conjecture_gap=" +
         (r.conjecture_gap ? std::to_string(*r.conjecture_gap) : "-") + "\n";
  return out;
}

bool PropertyReport::ok() const {
  for (const auto& r : results) {
    if (r.failures > 0) return false;
  }
  return true;
}

const PropertyResult* PropertyReport::find(const std::string& name) const {
  for (const auto& r : results) {
    if (r.name == name) return &r;
  }
  return nullptr;
}

PropertyResult check_unique_support(std::size_t trials, std::uint64_t seed) {
  Rng rng(seed);
  Tally tally("unique_support");
  for (std::size_t draw = 0;
       tally.trials() < trials && draw < trials * kMaxDraws; ++draw) {
    Sample s = sample_matroid(draw, rng);
    ElementSet i = random_independent(s.spec, s.ground, rng);
    auto candidates = spanned_outside(s.spec, i, s.ground);
    if (candidates.empty()) continue;
    const ElementId x = candidates[rng.below(candidates.size())];
    tally.guarded([&] {
      // Minimal (by inclusion) subsets of i spanning x, by enumeration.
      const Mask im = to_mask(i);
      std::vector<Mask> spanning;
      for (Mask sub = im;; sub = (sub - 1) & im) {
        if (spans(s.spec, from_mask(sub), x)) spanning.push_back(sub);
        if (sub == 0) break;
      }
      std::vector<Mask> minimal;
      for (Mask a : spanning) {
        bool is_min = true;
        for (Mask b : spanning) {
          if (b != a && (b & a) == b) is_min = false;
        }
        if (is_min) minimal.push_back(a);
      }
      const ElementSet support = circuit_support(s.spec, i, x);
      tally.check(minimal.size() == 1 && minimal[0] == to_mask(support), [&] {
        return describe(s.spec) + ", I=" + i.to_string() +
               ", x=" + std::to_string(x) + ", support=" + support.to_string();
      });
    });
  }
  return tally.result();
}

PropertyResult check_exchange(std::size_t trials, std::uint64_t seed) {
  Rng rng(seed);
  Tally tally("exchange");
  for (std::size_t draw = 0;
       tally.trials() < trials && draw < trials * kMaxDraws; ++draw) {
    Sample s = sample_matroid(draw, rng);
    ElementSet a = random_independent(s.spec, s.ground, rng);
    auto candidates = spanned_outside(s.spec, a, s.ground);
    if (candidates.empty()) continue;
    const ElementId x = candidates[rng.below(candidates.size())];
    tally.guarded([&] {
      bool ok = true;
      std::string what;
      for (ElementId y : circuit_support(s.spec, a, x)) {
        const ElementSet swapped = a.with(x).without(y);
        if (!is_independent(s.spec, swapped)) {
          ok = false;
        } else {
          for (ElementId e = 0; e < s.ground; ++e) {
            if (spans(s.spec, swapped, e) != spans(s.spec, a, e)) ok = false;
          }
        }
        if (!ok) {
          what = describe(s.spec) + ", A=" + a.to_string() +
                 ", x=" + std::to_string(x) + ", a=" + std::to_string(y);
          break;
        }
      }
      tally.check(ok, [&] { return what; });
    });
  }
  return tally.result();
}

PropertyResult check_circuit_elimination(std::size_t trials,
                                         std::uint64_t seed) {
  Rng rng(seed);
  Tally tally("circuit_elimination");
  for (std::size_t draw = 0;
       tally.trials() < trials && draw < trials * kMaxDraws; ++draw) {
    Sample s = sample_matroid(draw, rng);
    const std::vector<bool> indep = independence_table(s.spec);
    const Mask full = Mask{1} << s.ground;
    std::vector<Mask> circuits;
    for (Mask m = 1; m < full; ++m) {
      if (indep[m]) continue;
      bool minimal = true;
      for (ElementId e = 0; e < s.ground && minimal; ++e) {
        if (in_mask(m, e) && !indep[m & ~(Mask{1} << e)]) minimal = false;
      }
      if (minimal) circuits.push_back(m);
    }
    if (circuits.size() < 2) continue;
    const Mask c1 = circuits[rng.below(circuits.size())];
    const Mask c2 = circuits[rng.below(circuits.size())];
    const Mask shared = c1 & c2;
    const Mask only1 = c1 & ~c2;
    if (c1 == c2 || shared == 0 || only1 == 0) continue;
    auto pick = [&](Mask m) {
      const ElementSet ids = from_mask(m);
      return ids[rng.below(ids.size())];
    };
    const ElementId e = pick(shared);
    const ElementId f = pick(only1);
    const Mask allowed = (c1 | c2) & ~(Mask{1} << e);
    bool found = false;
    for (Mask c3 : circuits) {
      if (in_mask(c3, f) && (c3 & allowed) == c3) found = true;
    }
    tally.check(found, [&] {
      return describe(s.spec) + ", C1=" + from_mask(c1).to_string() +
             ", C2=" + from_mask(c2).to_string() + ", e=" + std::to_string(e) +
             ", f=" + std::to_string(f);
    });
  }
  return tally.result();
}

PropertyResult check_augmentation(std::size_t trials, std::uint64_t seed) {
  Rng rng(seed);
  Tally tally("augmentation");
  for (std::size_t draw = 0;
       tally.trials() < trials && draw < trials * kMaxDraws; ++draw) {
    Sample s = sample_matroid(draw, rng);
    ElementSet i = random_independent(s.spec, s.ground, rng);
    ElementSet j = random_independent(s.spec, s.ground, rng);
    if (i.size() >= j.size()) continue;
    tally.guarded([&] {
      const ElementSet j1 = augment_to(s.spec, i, j);
      const ElementSet joined = i.united(j1);
      tally.check(j1.subset_of(j.minus(i)) && is_independent(s.spec, joined) &&
                      joined.size() == j.size(),
                  [&] {
                    return describe(s.spec) + ", I=" + i.to_string() +
                           ", J=" + j.to_string() + ", J1=" + j1.to_string();
                  });
    });
  }
  return tally.result();
}

PropertyResult check_support_persistence(std::size_t trials,
                                         std::uint64_t seed) {
  Rng rng(seed);
  Tally tally("support_persistence");
  for (std::size_t draw = 0;
       tally.trials() < trials && draw < trials * kMaxDraws; ++draw) {
    Sample s = sample_matroid(draw, rng);
    // Bases give the largest spans.
    std::vector<ElementId> perm(s.ground);
    for (ElementId e = 0; e < s.ground; ++e) perm[e] = e;
    rng.shuffle(perm);
    ElementSet i;
    for (ElementId e : perm) {
      if (is_independent(s.spec, i.with(e))) i = i.with(e);
    }
    auto outside = spanned_outside(s.spec, i, s.ground);
    if (outside.size() < 1 || i.empty()) continue;
    rng.shuffle(outside);
    const std::size_t k = rng.between(
        0, std::min<std::size_t>({i.size(), outside.size() - 1, 3}));
    std::vector<ElementId> i_ids(i.begin(), i.end());
    rng.shuffle(i_ids);
    const ElementSet x_set(
        std::vector<ElementId>(i_ids.begin(), i_ids.begin() + k));
    const ElementSet y_set(
        std::vector<ElementId>(outside.begin(), outside.begin() + k));
    const ElementId y_next = outside[k];
    const ElementSet swapped = i.minus(x_set).united(y_set);
    // span((I \ X) + Y) == span(I): independent of full size inside span(I).
    if (!is_independent(s.spec, swapped)) continue;
    const ElementSet support = circuit_support(s.spec, i, y_next);
    std::vector<ElementId> x_candidates;
    for (ElementId x : support.minus(x_set)) {
      bool clear = true;
      for (ElementId y : y_set) {
        if (circuit_support(s.spec, i, y).contains(x)) clear = false;
      }
      if (clear) x_candidates.push_back(x);
    }
    if (x_candidates.empty()) continue;
    const ElementId x_next = x_candidates[rng.below(x_candidates.size())];
    tally.guarded([&] {
      const ElementSet after = circuit_support(s.spec, swapped, y_next);
      tally.check(after.contains(x_next), [&] {
        return describe(s.spec) + ", I=" + i.to_string() +
               ", X=" + x_set.to_string() + ", Y=" + y_set.to_string() +
               ", y=" + std::to_string(y_next) +
               ", x=" + std::to_string(x_next);
      });
    });
  }
  return tally.result();
}

PropertyResult check_axioms(std::size_t trials, std::uint64_t seed) {
  Rng rng(seed);
  Tally tally("matroid_axioms");
  for (std::size_t trial = 0; trial < trials; ++trial) {
    Sample s = sample_matroid(trial, rng);
    const std::vector<bool> indep = independence_table(s.spec);
    const Mask full = Mask{1} << s.ground;
    std::string what;
    bool ok = indep[0];
    for (Mask a = 0; a < full && ok; ++a) {
      if (!indep[a]) continue;
      for (ElementId e = 0; e < s.ground; ++e) {
        if (in_mask(a, e) && !indep[a & ~(Mask{1} << e)]) {
          ok = false;
          what = "not hereditary at " + from_mask(a).to_string();
        }
      }
      for (Mask b = 0; b < full && ok; ++b) {
        if (!indep[b] || std::popcount(b) <= std::popcount(a)) continue;
        bool extends = false;
        for (ElementId x = 0; x < s.ground && !extends; ++x) {
          if (in_mask(b, x) && !in_mask(a, x) && indep[a | (Mask{1} << x)]) {
            extends = true;
          }
        }
        if (!extends) {
          ok = false;
          what = "augmentation fails for A=" + from_mask(a).to_string() +
                 ", B=" + from_mask(b).to_string();
        }
      }
    }
    tally.check(ok, [&] { return describe(s.spec) + ": " + what; });
  }
  return tally.result();
}

PropertyResult check_rank_laws(std::size_t trials, std::uint64_t seed) {
  Rng rng(seed);
  Tally tally("rank_monotone_submodular");
  for (std::size_t trial = 0; trial < trials; ++trial) {
    Sample s = sample_matroid(trial, rng);
    const Mask full = Mask{1} << s.ground;
    std::vector<std::size_t> r(full);
    for (Mask m = 0; m < full; ++m) r[m] = rank(s.spec, from_mask(m));
    std::string what;
    for (Mask a = 0; a < full && what.empty(); ++a) {
      for (Mask b = 0; b < full; ++b) {
        if ((a & b) == a && r[a] > r[b]) {
          what = "rank not monotone";
          break;
        }
        if (r[a] + r[b] < r[a | b] + r[a & b]) {
          what = "rank not submodular";
          break;
        }
      }
    }
    tally.check(what.empty(), [&] { return describe(s.spec) + ": " + what; });
  }
  return tally.result();
}

PropertyResult check_solver_claims(std::size_t trials, std::uint64_t seed) {
  Rng rng(seed);
  Tally tally("solver_claims");
  const auto names = generator_names();
  for (std::size_t trial = 0; trial < trials; ++trial) {
    const std::string& gen = names[trial % names.size()];
    const std::size_t n = rng.between(2, 6);
    const std::uint64_t instance_seed = rng.next();
    tally.guarded([&] {
      InstanceFile inst = generate_instance(gen, n, instance_seed);
      SolveOptions options;
      options.check_claims = true;
      const SolveReport report = solve(inst.family, options);
      std::string why;
      const bool ok = check_rainbow(report.rainbow, inst.family, &why) &&
                      check_bound(report.size(), n);
      tally.check(ok, [&] {
        return gen + " n=" + std::to_string(n) +
               " seed=" + std::to_string(instance_seed) + ": " + why;
      });
    });
  }
  return tally.result();
}

PropertyReport property_suite(std::uint64_t seed, std::size_t trials) {
  PropertyReport report;
  if (trials == 0) return report;
  Rng seeds(seed);
  report.results.push_back(check_unique_support(trials, seeds.next()));
  report.results.push_back(check_exchange(trials, seeds.next()));
  report.results.push_back(check_circuit_elimination(trials, seeds.next()));
  report.results.push_back(check_augmentation(trials, seeds.next()));
  report.results.push_back(check_support_persistence(trials, seeds.next()));
  report.results.push_back(check_axioms(trials, seeds.next()));
  report.results.push_back(check_rank_laws(trials, seeds.next()));
  report.results.push_back(check_solver_claims(trials, seeds.next()));
  return report;
}

std::string render_text(const PropertyReport& report) {
  std::string out;
  for (const auto& r : report.results) {
    out += r.name + " trials=" + std::to_string(r.trials) +
           " failures=" + std::to_string(r.failures) + "\n";
    if (r.failures > 0) {
      out += "  first counterexample: " + r.first_counterexample + "\n";
    }
  }
  out += std::string("properties: ") + (report.ok() ? "PASS" : "FAIL") + "\n";
  return out;
}

}  // namespace rainbow
