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

#include "rainbow/solver.hpp"

#include <map>
#include <string>

#include "rainbow/errors.hpp"
#include "rainbow/matroid.hpp"

namespace rainbow {
namespace {

void require(bool condition, const std::string& what) {
  if (!condition) throw ContractError(what);
}

// `candidate` is independent, as large as `reference`, and spans every
// element of `reference`; for independent sets of equal size this is
// equivalent to span(candidate) == span(reference).
bool same_span(const MatroidSpec& spec, const ElementSet& candidate,
               const ElementSet& reference) {
  if (candidate.size() != reference.size()) return false;
  if (!is_independent(spec, candidate)) return false;
  for (ElementId e : reference.minus(candidate)) {
    if (!spans(spec, candidate, e)) return false;
  }
  return true;
}

class SupportCache {
 public:
  SupportCache(const MatroidSpec& spec, const ElementSet& base)
      : spec_(spec), base_(base) {}

  const ElementSet& operator()(ElementId x) {
    auto it = cache_.find(x);
    if (it == cache_.end()) {
      it = cache_.emplace(x, circuit_support(spec_, base_, x)).first;
    }
    return it->second;
  }

 private:
  const MatroidSpec& spec_;
  const ElementSet& base_;
  std::map<ElementId, ElementSet> cache_;
};

}  // namespace

std::size_t ClaimStats::total() const {
  return spanned_in_n + level_drop + partner_exists + fresh_removal +
         support_kept + path_conditions + path_identity + monotonicity +
         length_bound + aux_invariants;
}

ClaimStats& ClaimStats::operator+=(const ClaimStats& other) {
  spanned_in_n += other.spanned_in_n;
  level_drop += other.level_drop;
  partner_exists += other.partner_exists;
  fresh_removal += other.fresh_removal;
  support_kept += other.support_kept;
  path_conditions += other.path_conditions;
  path_identity += other.path_identity;
  monotonicity += other.monotonicity;
  length_bound += other.length_bound;
  aux_invariants += other.aux_invariants;
  return *this;
}

bool ColorOrder::is_identity() const {
  for (std::size_t k = 0; k < original.size(); ++k) {
    if (original[k] != k) return false;
  }
  return true;
}

std::optional<std::size_t> AuxSequence::r_level(ElementId e) const {
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (r[i].contains(e)) return i + 1;
  }
  return std::nullopt;
}

ElementSet Cap::rm(const ElementSet& rainbow) const {
  ElementSet out = rainbow;
  for (std::size_t i = 0; i < r.size(); ++i) {
    out = out.without(r[i]).with(b[i + 1]);
  }
  return out;
}

ElementSet Cap::rn(const ElementSet& rainbow) const {
  ElementSet out = rainbow;
  for (std::size_t i = 0; i < r.size(); ++i) {
    out = out.with(b[i]).without(r[i]);
  }
  return out;
}

RainbowSet greedy_init(const Family& family) {
  validate_family(family);
  RainbowSet rainbow(family.size());
  ElementSet chosen;
  for (std::size_t c = 0; c < family.size(); ++c) {
    for (ElementId e : family.sets[c]) {
      ElementSet next = chosen.with(e);
      if (is_independent(family.m, next) && is_independent(family.n, next)) {
        chosen = std::move(next);
        rainbow.picks[c] = e;
        break;
      }
    }
  }
  return rainbow;
}

ColorOrder relabel_order(const RainbowSet& rainbow) {
  ColorOrder order;
  order.original.reserve(rainbow.picks.size());
  for (std::size_t c = 0; c < rainbow.picks.size(); ++c) {
    if (rainbow.picks[c]) order.original.push_back(c);
  }
  for (std::size_t c = 0; c < rainbow.picks.size(); ++c) {
    if (!rainbow.picks[c]) order.original.push_back(c);
  }
  return order;
}

Relabeled relabel(const RainbowSet& rainbow, const Family& family) {
  ColorOrder order = relabel_order(rainbow);
  Family permuted{family.m, family.n, {}};
  RainbowSet picks(rainbow.picks.size());
  permuted.sets.reserve(family.size());
  for (std::size_t k = 0; k < order.original.size(); ++k) {
    permuted.sets.push_back(family.sets[order.original[k]]);
    picks.picks[k] = rainbow.picks[order.original[k]];
  }
  return Relabeled{std::move(permuted), std::move(picks), std::move(order)};
}

RainbowSet restore_colors(const RainbowSet& rainbow, const ColorOrder& order) {
  RainbowSet out(rainbow.picks.size());
  for (std::size_t k = 0; k < order.original.size(); ++k) {
    out.picks[order.original[k]] = rainbow.picks[k];
  }
  return out;
}

AuxResult build_aux(const RainbowSet& rainbow, const Family& family,
                    const SolveOptions& options, ClaimStats* stats) {
  const std::size_t n = family.size();
  const std::size_t t = rainbow.size();
  for (std::size_t c = 0; c < t; ++c) {
    require(rainbow.picks[c].has_value(),
            "build_aux: picked colors must be 0..t-1");
  }
  AuxResult result;
  AuxSequence& aux = result.aux;
  aux.rainbow = rainbow.elements();
  aux.t = t;
  aux.delta = n - t;
  aux.residues.push_back(aux.rainbow);
  const ElementSet& r_set = aux.rainbow;

  for (std::size_t level = 1; level <= aux.delta; ++level) {
    const std::size_t color = t + level - 1;
    const ElementSet& residue = aux.residues.back();
    ElementSet a = augment_to(family.n, residue, family.sets[color]);
    require(a.size() >= level * aux.delta,
            "build_aux: |A_" + std::to_string(level) + "| below level*delta");
    if (options.check_claims) {
      require(a.subset_of(family.sets[color]) &&
                  residue.size() + a.size() == n &&
                  is_independent(family.n, residue.united(a)),
              "build_aux: R^i + A_i is not an independent n-set in N");
      if (stats) ++stats->aux_invariants;
    }
    aux.a.push_back(a);
    aux.colors.push_back(color);

    for (ElementId x : a) {
      if (is_independent(family.m, r_set.with(x))) {
        result.breakpoint = Breakpoint{level, x};
        return result;
      }
    }

    ElementSet removed = min_removal(family.m, residue, a);
    require(removed.size() >= aux.delta,
            "build_aux: |R_" + std::to_string(level) + "| below delta");
    if (options.check_claims) {
      require(is_independent(family.m, residue.minus(removed).united(a)),
              "build_aux: (R^i \\ R_i) + A_i dependent in M");
      // Minimality: putting back any removed element breaks independence.
      for (ElementId e : removed) {
        require(
            !is_independent(family.m, residue.minus(removed).united(a).with(e)),
            "build_aux: R_i is not minimal");
      }
      if (stats) ++stats->aux_invariants;
    }
    ElementSet next = residue.minus(removed);
    aux.r.push_back(std::move(removed));
    aux.residues.push_back(std::move(next));
  }
  // All levels lie in span_M(R); A_delta is independent there.
  require(aux.delta == 0 || aux.a.back().size() <= t,
          "build_aux: |A_delta| exceeds t");
  require(aux.delta * aux.delta <= t || aux.delta == 0,
          "build_aux: complete sequence with t < delta^2");
  return result;
}

Cap find_cap(const Family& family, const AuxSequence& aux,
             const Breakpoint& start, const SolveOptions& options,
             ClaimStats* stats) {
  const MatroidSpec& m_spec = family.m;
  const MatroidSpec& n_spec = family.n;
  const ElementSet& r_set = aux.rainbow;
  const bool check = options.check_claims;
  ClaimStats scratch;
  ClaimStats& st = stats ? *stats : scratch;

  require(start.level >= 1 && start.level <= aux.a.size() &&
              aux.a[start.level - 1].contains(start.element),
          "find_cap: start element not in A_m");
  require(is_independent(m_spec, r_set.with(start.element)),
          "find_cap: R + a dependent in M");

  SupportCache support_m(m_spec, r_set);
  SupportCache support_n(n_spec, r_set);

  Cap cap;
  cap.b.push_back(start.element);
  cap.b_level.push_back(start.level);

  while (true) {
    const std::size_t k = cap.length();
    const ElementId b_k = cap.b.back();
    const ElementSet rn = cap.rn(r_set);
    const ElementSet rm = cap.rm(r_set);

    if (is_independent(n_spec, rn.with(b_k))) {
      if (check) {
        require(rm.with(cap.b.front()) == rn.with(b_k),
                "find_cap: R_M(k) + b_0 != R_N(k) + b_k");
        require(is_independent(m_spec, rm.with(cap.b.front())),
                "find_cap: augmented set dependent in M");
        ++st.path_identity;
      }
      return cap;
    }

    if (check) {
      require(!is_independent(n_spec, r_set.with(b_k)),
              "b_k not spanned by R in N");
      ++st.spanned_in_n;
    }
    require(k + 1 <= aux.delta - 1,
            "find_cap: path length would exceed delta - 1");
    if (check) ++st.length_bound;

    // Minimal p with C_N(R, b_k) meeting R_p.
    const ElementSet& c_n = support_n(b_k);
    std::optional<std::size_t> p;
    ElementId r_next = 0;
    for (ElementId y : c_n) {
      std::optional<std::size_t> level = aux.r_level(y);
      if (level && (!p || *level < *p)) {
        p = level;
        r_next = y;
      }
    }
    require(p.has_value(), "find_cap: support of b_k misses every R_i");
    const std::size_t q = cap.b_level.back();
    if (check) {
      require(*p < q, "p >= q");
      ++st.level_drop;
      bool found = false;
      for (ElementId x : aux.a[*p - 1]) {
        if (support_m(x).contains(r_next)) {
          found = true;
          break;
        }
      }
      require(found, "no x in A_p with r in C_M(R, x)");
      ++st.partner_exists;
    }

    std::optional<ElementId> b_next;
    std::size_t l = 1;
    for (; l <= *p && !b_next; ++l) {
      for (ElementId x : aux.a[l - 1]) {
        if (support_m(x).contains(r_next)) {
          b_next = x;
          break;
        }
      }
    }
    --l;
    require(b_next.has_value(), "find_cap: no b with r in its M-support");

    if (check) {
      for (std::size_t i = 0; i < k; ++i) {
        require(!support_n(cap.b[i]).contains(r_next),
                "r_{k+1} in C_N(R, b_i)");
      }
      ++st.fresh_removal;
      require(circuit_support(m_spec, rm, *b_next).contains(r_next),
              "r_{k+1} not in C_M(R_M(k), b_{k+1})");
      require(circuit_support(n_spec, rn, b_k).contains(r_next),
              "r_{k+1} not in C_N(R_N(k), b_k)");
      ++st.support_kept;
    }

    if (check) {
      require(l < cap.b_level.back(), "b source levels not decreasing");
      require(cap.r_level.empty() || *p < cap.r_level.back(),
              "r source levels not decreasing");
      ++st.monotonicity;
    }
    cap.r.push_back(r_next);
    cap.r_level.push_back(*p);
    cap.b.push_back(*b_next);
    cap.b_level.push_back(l);

    if (check) {
      const ElementSet rm_next = cap.rm(r_set);
      const ElementSet rn_next = cap.rn(r_set);
      require(same_span(m_spec, rm_next, r_set), "(P_M) fails after extension");
      require(same_span(n_spec, rn_next, r_set), "(P_N) fails after extension");
      ++st.path_conditions;
      require(rm_next.with(cap.b.front()) == rn_next.with(cap.b.back()),
              "R_M(k) + b_0 != R_N(k) + b_k after extension");
      ++st.path_identity;
    }
  }
}

RainbowSet apply_cap(const RainbowSet& rainbow, const Cap& cap,
                     const Family& family, const AuxSequence& aux) {
  RainbowSet out = rainbow;
  for (ElementId r : cap.r) {
    std::optional<std::size_t> color = rainbow.color_of(r);
    require(color.has_value(), "apply_cap: r_i is not a pick");
    out.picks[*color].reset();
  }
  for (std::size_t i = 0; i < cap.b.size(); ++i) {
    const std::size_t color = aux.colors.at(cap.b_level[i] - 1);
    require(!out.picks[color].has_value(),
            "apply_cap: two b's share a source color");
    require(family.sets[color].contains(cap.b[i]),
            "apply_cap: b_i outside its source set");
    out.picks[color] = cap.b[i];
  }
  const ElementSet elements = out.elements();
  require(out.size() == rainbow.size() + 1, "apply_cap: size did not grow");
  require(is_independent(family.m, elements),
          "apply_cap: result dependent in M");
  require(is_independent(family.n, elements),
          "apply_cap: result dependent in N");
  return out;
}

SolveReport solve(const Family& family, const SolveOptions& options) {
  validate_family(family);
  SolveReport report;
  const std::size_t n = family.size();
  report.n = n;
  RainbowSet current = options.start ? *options.start : greedy_init(family);
  if (options.start) {
    if (current.picks.size() != n) {
      throw ValidationError("start rainbow set has the wrong number of colors");
    }
    for (std::size_t c = 0; c < n; ++c) {
      if (current.picks[c] && !family.sets[c].contains(*current.picks[c])) {
        throw ValidationError("start pick outside its color set");
      }
    }
    const ElementSet start = current.elements();
    if (!is_independent(family.m, start) || !is_independent(family.n, start)) {
      throw ValidationError("start rainbow set is not independent");
    }
  }
  report.initial_size = current.size();

  while (true) {
    const std::size_t t = current.size();
    if (t == n) {
      report.certificate.full = true;
      break;
    }
    require(report.augmentations < n, "solve: too many augmentations");
    Relabeled rel = relabel(current, family);
    AuxResult aux = build_aux(rel.rainbow, rel.family, options, &report.claims);
    if (aux.complete()) {
      Certificate& cert = report.certificate;
      cert.delta = aux.aux.delta;
      for (std::size_t i = 0; i < aux.aux.a.size(); ++i) {
        cert.a_sizes.push_back(aux.aux.a[i].size());
        cert.r_sizes.push_back(aux.aux.r[i].size());
        cert.colors.push_back(rel.order.original[aux.aux.colors[i]]);
      }
      break;
    }
    Cap cap =
        find_cap(rel.family, aux.aux, *aux.breakpoint, options, &report.claims);
    RainbowSet next = apply_cap(rel.rainbow, cap, rel.family, aux.aux);
    current = restore_colors(next, rel.order);
    report.cap_lengths.push_back(cap.length());
    ++report.augmentations;
  }

  const ElementSet elements = current.elements();
  for (std::size_t c = 0; c < n; ++c) {
    if (current.picks[c]) {
      require(family.sets[c].contains(*current.picks[c]),
              "solve: pick outside its color set");
    }
  }
  require(
      is_independent(family.m, elements) && is_independent(family.n, elements),
      "solve: result is not independent in both matroids");
  const std::size_t t = current.size();
  require(t == n || (n - t) * (n - t) <= t, "solve: size bound violated");
  report.rainbow = std::move(current);
  return report;
}

}  // namespace rainbow
