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

#include "rainbow/instances.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "rainbow/errors.hpp"

namespace rainbow {
namespace {

std::vector<std::uint32_t> iota_vec(std::size_t n) {
  std::vector<std::uint32_t> v(n);
  std::iota(v.begin(), v.end(), 0u);
  return v;
}

bool is_permutation_row(const std::vector<std::uint32_t>& row, std::size_t n) {
  if (row.size() != n) return false;
  std::vector<bool> seen(n, false);
  for (std::uint32_t s : row) {
    if (s >= n || seen[s]) return false;
    seen[s] = true;
  }
  return true;
}

MatroidSpec column_partition(std::size_t n) {
  std::vector<ElementSet> blocks;
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<ElementId> ids;
    for (std::size_t r = 0; r < n; ++r) {
      ids.push_back(static_cast<ElementId>(r * n + c));
    }
    blocks.emplace_back(std::move(ids));
  }
  return MatroidSpec::partition(n * n, std::move(blocks),
                                std::vector<std::size_t>(n, 1));
}

std::vector<ElementSet> row_sets(std::size_t n) {
  std::vector<ElementSet> sets;
  for (std::size_t r = 0; r < n; ++r) {
    std::vector<ElementId> ids;
    for (std::size_t c = 0; c < n; ++c) {
      ids.push_back(static_cast<ElementId>(r * n + c));
    }
    sets.emplace_back(std::move(ids));
  }
  return sets;
}

// Random labelled tree on `vertices` vertices by random attachment.
std::vector<std::pair<std::uint32_t, std::uint32_t>> random_tree(
    std::size_t vertices, Rng& rng) {
  std::vector<std::uint32_t> order = iota_vec(vertices);
  rng.shuffle(order);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  for (std::size_t i = 1; i < vertices; ++i) {
    edges.emplace_back(order[rng.below(i)], order[i]);
  }
  rng.shuffle(edges);
  return edges;
}

std::vector<std::uint32_t> random_vector(std::size_t rows, std::uint32_t p,
                                         Rng& rng) {
  std::vector<std::uint32_t> v(rows);
  for (auto& x : v) x = static_cast<std::uint32_t>(rng.below(p));
  return v;
}

constexpr std::uint32_t kPrimes[] = {2, 3, 5, 7, 11, 13};

// One matroid of class `cls` on n^2 elements in which every set of
// `sets` is independent.
MatroidSpec planted_matroid(MatroidClass cls, std::size_t n,
                            const std::vector<ElementSet>& sets, Rng& rng) {
  const std::size_t ground = n * n;
  switch (cls) {
    case MatroidClass::kUniform:
      return MatroidSpec::uniform(ground, n + rng.below(2));
    case MatroidClass::kPartition: {
      // Each set meets each of n base blocks once; some blocks are then
      // merged pairwise with capacity 2.
      std::vector<std::vector<ElementId>> base(n);
      for (const ElementSet& set : sets) {
        std::vector<std::uint32_t> perm = iota_vec(n);
        rng.shuffle(perm);
        for (std::size_t j = 0; j < n; ++j) base[perm[j]].push_back(set[j]);
      }
      std::vector<ElementSet> blocks;
      std::vector<std::size_t> caps;
      for (std::size_t b = 0; b < n; ++b) {
        if (b + 1 < n && rng.chance(1, 4)) {
          std::vector<ElementId> merged = base[b];
          merged.insert(merged.end(), base[b + 1].begin(), base[b + 1].end());
          blocks.emplace_back(std::move(merged));
          caps.push_back(2);
          ++b;
        } else {
          blocks.emplace_back(base[b]);
          caps.push_back(1);
        }
      }
      return MatroidSpec::partition(ground, std::move(blocks), std::move(caps));
    }
    case MatroidClass::kGraphic: {
      std::vector<std::pair<std::uint32_t, std::uint32_t>> edges(ground);
      for (const ElementSet& set : sets) {
        auto tree = random_tree(n + 1, rng);
        for (std::size_t j = 0; j < n; ++j) edges[set[j]] = tree[j];
      }
      return MatroidSpec::graphic(n + 1, std::move(edges));
    }
    case MatroidClass::kLinear: {
      const std::uint32_t p = kPrimes[rng.below(std::size(kPrimes))];
      std::vector<std::vector<std::uint32_t>> cols(ground);
      for (const ElementSet& set : sets) {
        // Rejection-sample each column until it is independent of the
        // columns already placed in this set.
        std::vector<std::vector<std::uint32_t>> chosen;
        while (chosen.size() < n) {
          auto v = random_vector(n, p, rng);
          chosen.push_back(v);
          auto probe = MatroidSpec::linear(p, n, chosen);
          if (!is_independent(probe, ElementSet(iota_vec(chosen.size())))) {
            chosen.pop_back();
          }
        }
        for (std::size_t j = 0; j < n; ++j) cols[set[j]] = chosen[j];
      }
      return MatroidSpec::linear(p, n, std::move(cols));
    }
  }
  throw DomainError("unknown matroid class");
}

// ----- text format helpers -----

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::uint64_t parse_u64(std::string_view token, std::size_t line) {
  if (token.empty()) throw ParseError(line, "expected a number");
  std::uint64_t value = 0;
  for (char ch : token) {
    if (ch < '0' || ch > '9') {
      throw ParseError(line,
                       "expected a number, got '" + std::string(token) + "'");
    }
    const std::uint64_t digit = static_cast<std::uint64_t>(ch - '0');
    if (value > (UINT64_MAX - digit) / 10) {
      throw ParseError(line, "number out of range");
    }
    value = value * 10 + digit;
  }
  return value;
}

std::uint32_t parse_u32(std::string_view token, std::size_t line) {
  const std::uint64_t v = parse_u64(token, line);
  if (v > UINT32_MAX) throw ParseError(line, "number out of range");
  return static_cast<std::uint32_t>(v);
}

struct Line {
  std::size_t number;
  std::string_view text;
};

class LineReader {
 public:
  explicit LineReader(std::string_view text) {
    std::size_t number = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
      std::size_t end = text.find('\n', pos);
      if (end == std::string_view::npos) end = text.size();
      std::string_view line = text.substr(pos, end - pos);
      if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
      ++number;
      pos = end + 1;
      all_.push_back({number, line});
    }
  }

  const std::vector<Line>& all() const { return all_; }

 private:
  std::vector<Line> all_;
};

std::string join_ids(const ElementSet& s, char sep) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i > 0) out += sep;
    out += std::to_string(s[i]);
  }
  return out;
}

void write_matroid(std::string& out, char label, const MatroidSpec& spec) {
  out += "matroid ";
  out += label;
  struct Writer {
    std::string& out;
    void operator()(const MatroidSpec::Uniform& u) const {
      out += " uniform " + std::to_string(u.rank) + "\n";
    }
    void operator()(const MatroidSpec::Partition& p) const {
      out += " partition";
      for (std::size_t b = 0; b < p.blocks.size(); ++b) {
        out += " " + join_ids(p.blocks[b], ',') + "=" +
               std::to_string(p.capacities[b]);
      }
      out += "\n";
    }
    void operator()(const MatroidSpec::Graphic& g) const {
      out += " graphic " + std::to_string(g.vertices) + "\n";
      for (std::size_t e = 0; e < g.edges.size(); ++e) {
        out += "edge " + std::to_string(e) + " " +
               std::to_string(g.edges[e].first) + " " +
               std::to_string(g.edges[e].second) + "\n";
      }
    }
    void operator()(const MatroidSpec::Linear& l) const {
      out += " linear " + std::to_string(l.prime) + " " +
             std::to_string(l.rows) + "\n";
      for (std::size_t e = 0; e < l.columns.size(); ++e) {
        out += "col " + std::to_string(e);
        for (std::uint32_t x : l.columns[e]) out += " " + std::to_string(x);
        out += "\n";
      }
    }
  };
  std::visit(Writer{out}, spec.variant());
}

class InstanceParser {
 public:
  explicit InstanceParser(std::string_view text) : reader_(text) {
    for (const Line& line : reader_.all()) {
      std::string_view t = line.text;
      if (!t.empty() && t.front() == '#') {
        read_comment(t);
        continue;
      }
      if (split_ws(t).empty()) continue;
      lines_.push_back(line);
    }
  }

  InstanceFile parse() {
    expect_header();
    const std::size_t ground = read_ground();
    std::optional<MatroidSpec> m;
    std::optional<MatroidSpec> n;
    for (int i = 0; i < 2; ++i) {
      const Line& line = peek("matroid block");
      auto tokens = split_ws(line.text);
      if (tokens.size() < 3 || tokens[0] != "matroid") {
        throw ParseError(line.number, "expected 'matroid M|N <class> ...'");
      }
      std::optional<MatroidSpec>* slot = nullptr;
      if (tokens[1] == "M") {
        slot = &m;
      } else if (tokens[1] == "N") {
        slot = &n;
      } else {
        throw ParseError(line.number, "matroid label must be M or N");
      }
      if (slot->has_value()) {
        throw ParseError(line.number,
                         "matroid " + std::string(tokens[1]) + " given twice");
      }
      slot->emplace(read_matroid(ground));
    }
    std::vector<ElementSet> sets = read_family();
    if (pos_ < lines_.size()) {
      throw ParseError(lines_[pos_].number, "unexpected trailing content");
    }
    InstanceFile out{Family{std::move(*m), std::move(*n), std::move(sets)},
                     seed_, generator_};
    validate_family(out.family);
    return out;
  }

 private:
  const Line& peek(const char* what) {
    if (pos_ >= lines_.size()) {
      const std::size_t last =
          reader_.all().empty() ? 1 : reader_.all().back().number;
      throw ParseError(
          last, std::string("unexpected end of input, expected ") + what);
    }
    return lines_[pos_];
  }
  const Line& next(const char* what) {
    const Line& line = peek(what);
    ++pos_;
    return line;
  }

  void read_comment(std::string_view t) {
    t.remove_prefix(1);
    for (std::string_view tok : split_ws(t)) {
      if (tok.starts_with("seed=")) {
        try {
          seed_ = parse_u64(tok.substr(5), 0);
        } catch (const ParseError&) {
          // Comments are free-form; a non-numeric seed is ignored.
        }
      } else if (tok.starts_with("gen=")) {
        generator_ = std::string(tok.substr(4));
      }
    }
  }

  void expect_header() {
    const Line& line = next("header");
    if (split_ws(line.text) !=
        std::vector<std::string_view>{"rainbow-instance", "v1"}) {
      throw ParseError(line.number, "expected header 'rainbow-instance v1'");
    }
  }

  std::size_t read_ground() {
    const Line& line = next("'ground <size>'");
    auto tokens = split_ws(line.text);
    if (tokens.size() != 2 || tokens[0] != "ground") {
      throw ParseError(line.number, "expected 'ground <size>'");
    }
    const std::size_t ground = parse_u64(tokens[1], line.number);
    if (ground == 0) throw ParseError(line.number, "ground set is empty");
    if (ground > (1u << 24)) throw ParseError(line.number, "ground too large");
    return ground;
  }

  MatroidSpec build(std::size_t line, auto&& make) {
    try {
      return make();
    } catch (const DomainError& e) {
      throw ValidationError("line " + std::to_string(line) + ": " + e.what());
    }
  }

  MatroidSpec read_matroid(std::size_t ground) {
    const Line& head = next("matroid block");
    auto tokens = split_ws(head.text);
    const std::string_view cls = tokens[2];
    if (cls == "uniform") {
      if (tokens.size() != 4) {
        throw ParseError(head.number, "expected 'uniform <rank>'");
      }
      const std::size_t r = parse_u64(tokens[3], head.number);
      return build(head.number,
                   [&] { return MatroidSpec::uniform(ground, r); });
    }
    if (cls == "partition") {
      std::vector<ElementSet> blocks;
      std::vector<std::size_t> caps;
      for (std::size_t i = 3; i < tokens.size(); ++i) {
        const std::string_view tok = tokens[i];
        const std::size_t eq = tok.find('=');
        if (eq == std::string_view::npos) {
          throw ParseError(head.number, "partition block needs '=<cap>'");
        }
        std::vector<ElementId> ids;
        std::string_view list = tok.substr(0, eq);
        while (true) {
          const std::size_t comma = list.find(',');
          ids.push_back(parse_u32(list.substr(0, comma), head.number));
          if (comma == std::string_view::npos) break;
          list.remove_prefix(comma + 1);
        }
        caps.push_back(parse_u64(tok.substr(eq + 1), head.number));
        try {
          blocks.emplace_back(std::move(ids));
        } catch (const DomainError&) {
          throw ValidationError("line " + std::to_string(head.number) +
                                ": duplicate id inside a partition block");
        }
      }
      return build(head.number, [&] {
        return MatroidSpec::partition(ground, std::move(blocks),
                                      std::move(caps));
      });
    }
    if (cls == "graphic") {
      if (tokens.size() != 4) {
        throw ParseError(head.number, "expected 'graphic <vertices>'");
      }
      const std::size_t vertices = parse_u64(tokens[3], head.number);
      std::vector<std::pair<std::uint32_t, std::uint32_t>> edges(ground);
      std::vector<bool> seen(ground, false);
      for (std::size_t k = 0; k < ground; ++k) {
        const Line& line = next("'edge <id> <u> <v>'");
        auto t = split_ws(line.text);
        if (t.size() != 4 || t[0] != "edge") {
          throw ParseError(line.number, "expected 'edge <id> <u> <v>'");
        }
        const std::uint32_t id = parse_u32(t[1], line.number);
        if (id >= ground || seen[id]) {
          throw ParseError(line.number,
                           "edge id missing, repeated or out of "
                           "range");
        }
        seen[id] = true;
        edges[id] = {parse_u32(t[2], line.number),
                     parse_u32(t[3], line.number)};
      }
      return build(head.number, [&] {
        return MatroidSpec::graphic(vertices, std::move(edges));
      });
    }
    if (cls == "linear") {
      if (tokens.size() != 5) {
        throw ParseError(head.number, "expected 'linear <p> <rows>'");
      }
      const std::uint64_t p = parse_u64(tokens[3], head.number);
      const std::size_t rows = parse_u64(tokens[4], head.number);
      if (p > UINT32_MAX) throw ParseError(head.number, "prime out of range");
      std::vector<std::vector<std::uint32_t>> cols(ground);
      std::vector<bool> seen(ground, false);
      for (std::size_t k = 0; k < ground; ++k) {
        const Line& line = next("'col <id> <entries...>'");
        auto t = split_ws(line.text);
        if (t.size() != rows + 2 || t[0] != "col") {
          throw ParseError(line.number, "expected 'col <id>' and " +
                                            std::to_string(rows) + " entries");
        }
        const std::uint32_t id = parse_u32(t[1], line.number);
        if (id >= ground || seen[id]) {
          throw ParseError(line.number,
                           "column id missing, repeated or out "
                           "of range");
        }
        seen[id] = true;
        for (std::size_t r = 0; r < rows; ++r) {
          const std::uint32_t x = parse_u32(t[r + 2], line.number);
          if (x >= p) {
            throw ParseError(line.number, "entry not reduced modulo p");
          }
          cols[id].push_back(x);
        }
      }
      return build(head.number, [&] {
        return MatroidSpec::linear(static_cast<std::uint32_t>(p), rows,
                                   std::move(cols));
      });
    }
    throw ParseError(head.number,
                     "unknown matroid class '" + std::string(cls) + "'");
  }

  std::vector<ElementSet> read_family() {
    const Line& head = next("'family <n>'");
    auto tokens = split_ws(head.text);
    if (tokens.size() != 2 || tokens[0] != "family") {
      throw ParseError(head.number, "expected 'family <n>'");
    }
    const std::size_t n = parse_u64(tokens[1], head.number);
    std::vector<std::optional<ElementSet>> sets(n);
    for (std::size_t k = 0; k < n; ++k) {
      const Line& line = next("'set <i>: <ids...>'");
      auto t = split_ws(line.text);
      if (t.size() < 2 || t[0] != "set" || !t[1].ends_with(':')) {
        throw ParseError(line.number, "expected 'set <i>: <ids...>'");
      }
      const std::size_t i =
          parse_u64(t[1].substr(0, t[1].size() - 1), line.number);
      if (i >= n || sets[i].has_value()) {
        throw ParseError(line.number,
                         "set index missing, repeated or out of "
                         "range");
      }
      std::vector<ElementId> ids;
      for (std::size_t j = 2; j < t.size(); ++j) {
        ids.push_back(parse_u32(t[j], line.number));
      }
      try {
        sets[i].emplace(std::move(ids));
      } catch (const DomainError&) {
        throw ValidationError("set " + std::to_string(i) +
                              " repeats an element");
      }
    }
    std::vector<ElementSet> out;
    for (auto& s : sets) out.push_back(std::move(*s));
    return out;
  }

  LineReader reader_;
  std::vector<Line> lines_;
  std::size_t pos_ = 0;
  std::optional<std::uint64_t> seed_;
  std::string generator_;
};

}  // namespace

void validate_latin(const LatinSquare& square, bool rows_only) {
  const std::size_t n = square.n;
  if (square.cells.size() != n) {
    throw ValidationError("latin square needs n rows");
  }
  for (std::size_t r = 0; r < n; ++r) {
    if (!is_permutation_row(square.cells[r], n)) {
      throw ValidationError("row " + std::to_string(r) +
                            " is not a permutation of the symbols");
    }
  }
  if (rows_only) return;
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::uint32_t> column;
    for (std::size_t r = 0; r < n; ++r) column.push_back(square.cells[r][c]);
    if (!is_permutation_row(column, n)) {
      throw ValidationError("column " + std::to_string(c) +
                            " is not a permutation of the symbols");
    }
  }
}

LatinSquare cyclic_latin(std::size_t n) {
  LatinSquare sq{n, std::vector<std::vector<std::uint32_t>>(
                        n, std::vector<std::uint32_t>(n))};
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      sq.cells[r][c] = static_cast<std::uint32_t>((r + c) % n);
    }
  }
  return sq;
}

LatinSquare random_latin(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  const LatinSquare base = cyclic_latin(n);
  auto rows = iota_vec(n);
  auto cols = iota_vec(n);
  auto syms = iota_vec(n);
  rng.shuffle(rows);
  rng.shuffle(cols);
  rng.shuffle(syms);
  LatinSquare sq = base;
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      sq.cells[r][c] = syms[base.cells[rows[r]][cols[c]]];
    }
  }
  return sq;
}

Family latin_to_family(const LatinSquare& square) {
  validate_latin(square, /*rows_only=*/true);
  const std::size_t n = square.n;
  if (n == 0) throw ValidationError("latin square of order 0");
  std::vector<std::vector<ElementId>> by_symbol(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      by_symbol[square.cells[r][c]].push_back(
          static_cast<ElementId>(r * n + c));
    }
  }
  std::vector<ElementSet> symbol_blocks;
  for (auto& ids : by_symbol) symbol_blocks.emplace_back(std::move(ids));
  Family family{column_partition(n),
                MatroidSpec::partition(n * n, std::move(symbol_blocks),
                                       std::vector<std::size_t>(n, 1)),
                row_sets(n)};
  validate_family(family);
  return family;
}

void validate_rowmls(const RowMls& mls) {
  const std::size_t n = mls.n;
  if (n == 0) throw ValidationError("row MLS of degree 0");
  if (mls.cells.size() != n) throw ValidationError("row MLS needs n rows");
  const std::size_t ground = mls.matroid.ground_size();
  if (rank(mls.matroid, ElementSet(iota_vec(ground))) != n) {
    throw ValidationError("row MLS matroid must have rank n");
  }
  for (std::size_t r = 0; r < n; ++r) {
    if (mls.cells[r].size() != n) {
      throw ValidationError("row " + std::to_string(r) + " needs n entries");
    }
    for (ElementId e : mls.cells[r]) {
      if (e >= ground) {
        throw ValidationError("row " + std::to_string(r) +
                              " holds an id outside the ground set");
      }
    }
    std::vector<ElementId> row = mls.cells[r];
    std::sort(row.begin(), row.end());
    if (std::adjacent_find(row.begin(), row.end()) != row.end() ||
        !is_independent(mls.matroid, ElementSet(row))) {
      throw ValidationError("row " + std::to_string(r) + " is not a basis");
    }
  }
}

Family rowmls_to_family(const RowMls& mls) {
  validate_rowmls(mls);
  const std::size_t n = mls.n;
  const std::size_t cells = n * n;
  auto entry = [&](std::size_t cell) { return mls.cells[cell / n][cell % n]; };
  std::vector<std::size_t> uses(mls.matroid.ground_size(), 0);
  for (std::size_t cell = 0; cell < cells; ++cell) ++uses[entry(cell)];

  struct Lifter {
    const RowMls& mls;
    const std::vector<std::size_t>& uses;
    std::size_t n;
    std::size_t cells;
    decltype(entry)& entry_of;

    MatroidSpec operator()(const MatroidSpec::Uniform& u) const {
      for (std::size_t c : uses) {
        if (c > 1) {
          throw ValidationError(
              "uniform row MLS must not repeat entries across cells");
        }
      }
      return MatroidSpec::uniform(cells, u.rank);
    }
    MatroidSpec operator()(const MatroidSpec::Partition& p) const {
      std::vector<std::vector<ElementId>> members(p.blocks.size());
      for (std::size_t cell = 0; cell < cells; ++cell) {
        const ElementId e = entry_of(cell);
        const std::size_t b = p.block_of[e];
        if (uses[e] > 1 && p.capacities[b] != 1) {
          throw ValidationError(
              "repeated entry in a partition block of capacity > 1");
        }
        members[b].push_back(static_cast<ElementId>(cell));
      }
      std::vector<ElementSet> blocks;
      std::vector<std::size_t> caps;
      for (std::size_t b = 0; b < members.size(); ++b) {
        if (members[b].empty()) continue;
        blocks.emplace_back(std::move(members[b]));
        caps.push_back(p.capacities[b]);
      }
      return MatroidSpec::partition(cells, std::move(blocks), std::move(caps));
    }
    MatroidSpec operator()(const MatroidSpec::Graphic& g) const {
      std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
      for (std::size_t cell = 0; cell < cells; ++cell) {
        edges.push_back(g.edges[entry_of(cell)]);
      }
      return MatroidSpec::graphic(g.vertices, std::move(edges));
    }
    MatroidSpec operator()(const MatroidSpec::Linear& l) const {
      std::vector<std::vector<std::uint32_t>> cols;
      for (std::size_t cell = 0; cell < cells; ++cell) {
        cols.push_back(l.columns[entry_of(cell)]);
      }
      return MatroidSpec::linear(l.prime, l.rows, std::move(cols));
    }
  };
  MatroidSpec lifted =
      std::visit(Lifter{mls, uses, n, cells, entry}, mls.matroid.variant());
  Family family{std::move(lifted), column_partition(n), row_sets(n)};
  validate_family(family);
  return family;
}

RowMls random_rowmls_graphic(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  for (std::uint32_t u = 0; u <= n; ++u) {
    for (std::uint32_t v = u + 1; v <= n; ++v) edges.emplace_back(u, v);
  }
  MatroidSpec k_complete = MatroidSpec::graphic(n + 1, edges);
  std::vector<std::vector<ElementId>> cells;
  for (std::size_t r = 0; r < n; ++r) {
    auto order = iota_vec(edges.size());
    rng.shuffle(order);
    ElementSet tree;
    std::vector<ElementId> row;
    for (ElementId e : order) {
      ElementSet next = tree.with(e);
      if (is_independent(k_complete, next)) {
        tree = std::move(next);
        row.push_back(e);
      }
    }
    cells.push_back(std::move(row));
  }
  RowMls mls{n, std::move(k_complete), std::move(cells)};
  validate_rowmls(mls);
  return mls;
}

RowMls random_rowmls_linear(std::size_t n, std::uint32_t prime,
                            std::uint64_t seed) {
  Rng rng(seed);
  const std::size_t ground = 2 * n;
  std::optional<MatroidSpec> space;
  for (int attempt = 0; attempt < 1000 && !space; ++attempt) {
    std::vector<std::vector<std::uint32_t>> cols;
    for (std::size_t i = 0; i < ground; ++i) {
      cols.push_back(random_vector(n, prime, rng));
    }
    MatroidSpec candidate = MatroidSpec::linear(prime, n, std::move(cols));
    if (rank(candidate, ElementSet(iota_vec(ground))) == n) {
      space.emplace(std::move(candidate));
    }
  }
  if (!space) throw GenerationError("no spanning vector configuration found");
  std::vector<std::vector<ElementId>> cells;
  for (std::size_t r = 0; r < n; ++r) {
    auto order = iota_vec(ground);
    rng.shuffle(order);
    ElementSet basis;
    std::vector<ElementId> row;
    for (ElementId e : order) {
      ElementSet next = basis.with(e);
      if (is_independent(*space, next)) {
        basis = std::move(next);
        row.push_back(e);
      }
    }
    cells.push_back(std::move(row));
  }
  RowMls mls{n, std::move(*space), std::move(cells)};
  validate_rowmls(mls);
  return mls;
}

MatroidSpec random_matroid(MatroidClass cls, std::size_t ground, Rng& rng) {
  switch (cls) {
    case MatroidClass::kUniform:
      return MatroidSpec::uniform(ground, rng.between(0, ground));
    case MatroidClass::kPartition: {
      const std::size_t count =
          rng.between(1, std::min<std::size_t>(ground, 4));
      auto order = iota_vec(ground);
      rng.shuffle(order);
      std::vector<std::vector<ElementId>> members(count);
      for (std::size_t i = 0; i < ground; ++i) {
        members[i < count ? i : rng.below(count)].push_back(order[i]);
      }
      std::vector<ElementSet> blocks;
      std::vector<std::size_t> caps;
      for (auto& m : members) {
        blocks.emplace_back(std::move(m));
        caps.push_back(rng.between(0, 2));
      }
      return MatroidSpec::partition(ground, std::move(blocks), std::move(caps));
    }
    case MatroidClass::kGraphic: {
      const std::size_t vertices = rng.between(2, 5);
      std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
      for (std::size_t e = 0; e < ground; ++e) {
        edges.emplace_back(rng.below(vertices), rng.below(vertices));
      }
      return MatroidSpec::graphic(vertices, std::move(edges));
    }
    case MatroidClass::kLinear: {
      constexpr std::uint32_t kSmall[] = {2, 3, 5};
      const std::uint32_t p = kSmall[rng.below(3)];
      const std::size_t rows = rng.between(1, 4);
      std::vector<std::vector<std::uint32_t>> cols;
      for (std::size_t e = 0; e < ground; ++e) {
        cols.push_back(random_vector(rows, p, rng));
      }
      return MatroidSpec::linear(p, rows, std::move(cols));
    }
  }
  throw DomainError("unknown matroid class");
}

Family gen_random_family(const MatroidSpec& m, const MatroidSpec& n_spec,
                         std::size_t n, std::uint64_t seed,
                         std::size_t restarts) {
  if (m.ground_size() != n_spec.ground_size()) {
    throw GenerationError("matroids have different ground sets");
  }
  const std::size_t ground = m.ground_size();
  if (n == 0 || ground < n * n) {
    throw GenerationError("ground set smaller than n^2");
  }
  Rng rng(seed);
  for (std::size_t attempt = 0; attempt <= restarts; ++attempt) {
    auto pool = iota_vec(ground);
    rng.shuffle(pool);
    std::vector<bool> used(ground, false);
    std::vector<ElementSet> sets;
    for (std::size_t c = 0; c < n; ++c) {
      ElementSet current;
      for (ElementId e : pool) {
        if (used[e]) continue;
        ElementSet next = current.with(e);
        if (is_independent(m, next) && is_independent(n_spec, next)) {
          current = std::move(next);
          if (current.size() == n) break;
        }
      }
      if (current.size() < n) break;
      for (ElementId e : current) used[e] = true;
      sets.push_back(std::move(current));
      rng.shuffle(pool);
    }
    if (sets.size() == n) {
      Family family{m, n_spec, std::move(sets)};
      validate_family(family);
      return family;
    }
  }
  throw GenerationError("no family found within " + std::to_string(restarts) +
                        " restarts");
}

Family gen_bipartite_family(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  const std::size_t ground = n * n;
  auto ids = iota_vec(ground);
  rng.shuffle(ids);
  std::vector<std::vector<ElementId>> left(n);
  std::vector<std::vector<ElementId>> right(n);
  std::vector<ElementSet> matchings;
  for (std::size_t k = 0; k < n; ++k) {
    auto perm = iota_vec(n);
    rng.shuffle(perm);
    std::vector<ElementId> matching;
    for (std::size_t i = 0; i < n; ++i) {
      const ElementId edge = ids[k * n + i];
      left[i].push_back(edge);
      right[perm[i]].push_back(edge);
      matching.push_back(edge);
    }
    matchings.emplace_back(std::move(matching));
  }
  auto to_sets = [](std::vector<std::vector<ElementId>>& v) {
    std::vector<ElementSet> out;
    for (auto& ids : v) out.emplace_back(std::move(ids));
    return out;
  };
  MatroidSpec m = MatroidSpec::partition(ground, to_sets(left),
                                         std::vector<std::size_t>(n, 1));
  MatroidSpec nn = MatroidSpec::partition(ground, to_sets(right),
                                          std::vector<std::size_t>(n, 1));
  Family family{std::move(m), std::move(nn), std::move(matchings)};
  validate_family(family);
  return family;
}

Family gen_planted_family(MatroidClass m_class, MatroidClass n_class,
                          std::size_t n, std::uint64_t seed) {
  if (n == 0) throw GenerationError("n must be positive");
  Rng rng(seed);
  auto ids = iota_vec(n * n);
  rng.shuffle(ids);
  std::vector<ElementSet> sets;
  for (std::size_t c = 0; c < n; ++c) {
    sets.emplace_back(
        std::vector<ElementId>(ids.begin() + c * n, ids.begin() + (c + 1) * n));
  }
  MatroidSpec m = planted_matroid(m_class, n, sets, rng);
  MatroidSpec nn = planted_matroid(n_class, n, sets, rng);
  Family family{std::move(m), std::move(nn), std::move(sets)};
  validate_family(family);
  return family;
}

std::vector<std::string> generator_names() {
  std::vector<std::string> names;
  for (MatroidClass a : {MatroidClass::kUniform, MatroidClass::kPartition,
                         MatroidClass::kGraphic, MatroidClass::kLinear}) {
    for (MatroidClass b : {MatroidClass::kUniform, MatroidClass::kPartition,
                           MatroidClass::kGraphic, MatroidClass::kLinear}) {
      names.push_back(std::string(class_name(a)) + "," +
                      std::string(class_name(b)));
    }
  }
  for (const char* special :
       {"latin", "rowmls-graphic", "rowmls-linear", "bipartite"}) {
    names.emplace_back(special);
  }
  return names;
}

InstanceFile generate_instance(std::string_view generator, std::size_t n,
                               std::uint64_t seed) {
  if (n == 0) throw GenerationError("n must be positive");
  InstanceFile out{
      Family{MatroidSpec::uniform(1, 0), MatroidSpec::uniform(1, 0), {}}, seed,
      std::string(generator)};
  if (generator == "latin") {
    out.family = latin_to_family(random_latin(n, seed));
  } else if (generator == "rowmls-graphic") {
    out.family = rowmls_to_family(random_rowmls_graphic(n, seed));
  } else if (generator == "rowmls-linear") {
    Rng rng(seed);
    const std::uint32_t p = kPrimes[rng.below(4)];
    out.family = rowmls_to_family(random_rowmls_linear(n, p, rng.next()));
  } else if (generator == "bipartite") {
    out.family = gen_bipartite_family(n, seed);
  } else {
    const std::size_t comma = generator.find(',');
    if (comma == std::string_view::npos) {
      throw DomainError("unknown generator '" + std::string(generator) + "'");
    }
    out.family =
        gen_planted_family(parse_class(generator.substr(0, comma)),
                           parse_class(generator.substr(comma + 1)), n, seed);
  }
  return out;
}

std::string serialize(const InstanceFile& instance) {
  const Family& f = instance.family;
  std::string out = "rainbow-instance v1\n";
  out += "ground " + std::to_string(f.m.ground_size()) + "\n";
  write_matroid(out, 'M', f.m);
  write_matroid(out, 'N', f.n);
  out += "family " + std::to_string(f.size()) + "\n";
  for (std::size_t c = 0; c < f.size(); ++c) {
    out += "set " + std::to_string(c) + ":";
    for (ElementId e : f.sets[c]) out += " " + std::to_string(e);
    out += "\n";
  }
  if (instance.seed || !instance.generator.empty()) {
    out += "#";
    if (instance.seed) out += " seed=" + std::to_string(*instance.seed);
    if (!instance.generator.empty()) out += " gen=" + instance.generator;
    out += "\n";
  }
  return out;
}

InstanceFile parse_instance(std::string_view text) {
  return InstanceParser(text).parse();
}

}  // namespace rainbow
