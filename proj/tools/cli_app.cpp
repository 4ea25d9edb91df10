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

#include "cli_app.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "rainbow/errors.hpp"
#include "rainbow/instances.hpp"
#include "rainbow/solver.hpp"
#include "rainbow/verifier.hpp"

namespace rainbow::cli {
namespace {

constexpr std::size_t kMaxBruteLimit = 6;

struct InputFailure {
  std::string message;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputFailure{"cannot read '" + path + "'"};
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputFailure{"cannot write '" + path + "'"};
  out << text;
}

InstanceFile load_instance(const std::string& path) {
  const std::string text = read_file(path);
  try {
    return parse_instance(text);
  } catch (const ParseError& e) {
    throw InputFailure{path + ": " + e.what()};
  } catch (const ValidationError& e) {
    throw InputFailure{path + ": invalid instance: " + e.what()};
  }
}

std::string join(const std::vector<std::size_t>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(v[i]);
  }
  return out.empty() ? "-" : out;
}

std::string picks_line(const RainbowSet& r) {
  std::string out = "picks:";
  for (std::size_t c = 0; c < r.picks.size(); ++c) {
    if (r.picks[c]) {
      out += " " + std::to_string(c) + "->" + std::to_string(*r.picks[c]);
    }
  }
  return out;
}

int cmd_solve(const std::string& path, bool certify, bool check_claims,
              std::ostream& out) {
  const InstanceFile inst = load_instance(path);
  SolveOptions options;
  options.check_claims = check_claims;
  const SolveReport report = solve(inst.family, options);
  const std::size_t n = report.n;
  std::string diagnostic;
  const bool valid = check_rainbow(report.rainbow, inst.family, &diagnostic);
  const bool bound_ok = check_bound(report.size(), n);
  out << "n=" << n << "\n";
  out << "size=" << report.size() << "\n";
  out << "bound_floor=" << bound_floor(n) << "\n";
  out << "bound_ok=" << (bound_ok ? 1 : 0) << "\n";
  out << "valid=" << (valid ? 1 : 0) << "\n";
  out << "initial_size=" << report.initial_size << "\n";
  out << "augmentations=" << report.augmentations << "\n";
  out << "cap_lengths=" << join(report.cap_lengths) << "\n";
  out << picks_line(report.rainbow) << "\n";
  if (certify) {
    const Certificate& cert = report.certificate;
    if (cert.full) {
      out << "certificate: full (t = n)\n";
    } else {
      out << "certificate: delta=" << cert.delta << " t=" << report.size()
          << " delta^2=" << cert.delta * cert.delta << "\n";
      out << "certificate A_sizes=" << join(cert.a_sizes) << "\n";
      out << "certificate R_sizes=" << join(cert.r_sizes) << "\n";
      out << "certificate colors=" << join(cert.colors) << "\n";
    }
  }
  if (check_claims) {
    out << "claims_checked=" << report.claims.total() << "\n";
  }
  if (!valid) out << "diagnostic: " << diagnostic << "\n";
  return valid && bound_ok ? kOk : kCheckFailed;
}

int cmd_gen(const std::string& generator, std::size_t n, std::uint64_t seed,
            const std::string& output, std::ostream& out) {
  std::optional<InstanceFile> inst;
  try {
    inst = generate_instance(generator, n, seed);
  } catch (const DomainError& e) {
    throw InputFailure{e.what()};
  }
  const std::string text = serialize(*inst);
  if (output.empty()) {
    out << text;
  } else {
    write_file(output, text);
    out << "wrote " << output << " (n=" << n << ", gen=" << generator
        << ", seed=" << seed << ")\n";
  }
  return kOk;
}

int cmd_verify(const std::string& path, std::size_t brute_limit,
               bool check_claims, std::ostream& out) {
  const InstanceFile inst = load_instance(path);
  SolveOptions options;
  options.check_claims = check_claims;
  const VerifyReport report = verify_family(inst.family, brute_limit, options);
  out << render_text(report);
  out << "---\n";
  out << render_kv(report);
  return report.valid && report.bound_ok ? kOk : kCheckFailed;
}

int cmd_props(std::size_t trials, std::uint64_t seed, std::ostream& out) {
  const PropertyReport report = property_suite(seed, trials);
  out << render_text(report);
  return report.ok() ? kOk : kCheckFailed;
}

struct BenchRow {
  std::string generator;
  std::size_t n = 0;
  std::uint64_t seed = 0;
};

std::uint64_t parse_number(const std::string& s, std::size_t line) {
  if (s.empty() || !std::all_of(s.begin(), s.end(),
                                [](char c) { return c >= '0' && c <= '9'; })) {
    throw InputFailure{"bench spec line " + std::to_string(line) +
                       ": expected a number, got '" + s + "'"};
  }
  return std::stoull(s);
}

// Lines: "<generator> n=<k> seeds=<first>..<last>" ('#' starts a comment).
std::vector<BenchRow> parse_bench_spec(const std::string& text) {
  std::vector<BenchRow> rows;
  std::istringstream in(text);
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (const auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    std::istringstream tokens(line);
    std::string generator;
    if (!(tokens >> generator)) continue;
    std::optional<std::size_t> n;
    std::optional<std::pair<std::uint64_t, std::uint64_t>> seeds;
    std::string tok;
    while (tokens >> tok) {
      if (tok.starts_with("n=")) {
        n = parse_number(tok.substr(2), number);
      } else if (tok.starts_with("seeds=")) {
        const std::string range = tok.substr(6);
        const auto dots = range.find("..");
        const std::uint64_t first = parse_number(range.substr(0, dots), number);
        const std::uint64_t last =
            dots == std::string::npos
                ? first
                : parse_number(range.substr(dots + 2), number);
        if (last < first) {
          throw InputFailure{"bench spec line " + std::to_string(number) +
                             ": empty seed range"};
        }
        seeds = {first, last};
      } else {
        throw InputFailure{"bench spec line " + std::to_string(number) +
                           ": unknown token '" + tok + "'"};
      }
    }
    if (!n || !seeds) {
      throw InputFailure{"bench spec line " + std::to_string(number) +
                         ": needs n=<k> and seeds=<a>..<b>"};
    }
    for (std::uint64_t s = seeds->first; s <= seeds->second; ++s) {
      rows.push_back({generator, *n, s});
    }
  }
  return rows;
}

int cmd_bench(const std::string& spec_path, const std::string& output,
              std::size_t brute_limit, bool timing, std::ostream& out) {
  const std::vector<BenchRow> rows = parse_bench_spec(read_file(spec_path));
  std::string csv =
      "n,seed,generator,solver_size,bound_floor,optimum,bound_ok,valid,"
      "wall_ms\n";
  bool any_failed = false;
  bool any_generation_failed = false;
  for (const BenchRow& row : rows) {
    const std::string prefix = std::to_string(row.n) + "," +
                               std::to_string(row.seed) + ",\"" +
                               row.generator + "\",";
    std::optional<InstanceFile> inst;
    try {
      inst = generate_instance(row.generator, row.n, row.seed);
    } catch (const std::exception&) {
      any_generation_failed = true;
      csv += prefix + "error,,,,,\n";
      continue;
    }
    const auto start = std::chrono::steady_clock::now();
    const VerifyReport report = verify_family(inst->family, brute_limit);
    const auto elapsed = std::chrono::steady_clock::now() - start;
    any_failed |= !report.valid || !report.bound_ok;
    std::ostringstream ms;
    if (timing) {
      ms.setf(std::ios::fixed);
      ms.precision(3);
      ms << std::chrono::duration<double, std::milli>(elapsed).count();
    } else {
      ms << "-";
    }
    csv += prefix + std::to_string(report.solver_size) + "," +
           std::to_string(bound_floor(row.n)) + "," +
           (report.optimum ? std::to_string(*report.optimum) : "") + "," +
           (report.bound_ok ? "1" : "0") + "," + (report.valid ? "1" : "0") +
           "," + ms.str() + "\n";
  }
  if (output.empty()) {
    out << csv;
  } else {
    write_file(output, csv);
    out << "wrote " << output << " (" << rows.size() << " rows)\n";
  }
  if (any_failed) return kCheckFailed;
  return any_generation_failed ? kGenerationFailed : kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{
      "Rainbow independent matchings in the intersection of two "
      "matroids"};
  app.require_subcommand(1);

  std::string path;
  bool certify = false;
  bool check_claims = false;
  auto* solve_cmd = app.add_subcommand("solve", "Solve an instance file");
  solve_cmd->add_option("file", path, "Instance file")->required();
  solve_cmd->add_flag("--certify", certify, "Print the size certificate");
  solve_cmd->add_flag("--check-claims", check_claims,
                      "Assert every intermediate claim while solving");

  std::string generator;
  std::size_t n = 0;
  std::uint64_t seed = 0;
  std::string output;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a random instance");
  gen_cmd
      ->add_option("--class", generator,
                   "<m-class>,<n-class> or latin | rowmls-graphic | "
                   "rowmls-linear | bipartite")
      ->required();
  gen_cmd->add_option("--n", n, "Number of sets")->required();
  gen_cmd->add_option("--seed", seed, "Random seed")->required();
  gen_cmd->add_option("-o,--output", output, "Output file (default stdout)");

  std::size_t brute_limit = kDefaultBruteLimit;
  auto* verify_cmd =
      app.add_subcommand("verify", "Solve and check against brute force");
  verify_cmd->add_option("file", path, "Instance file")->required();
  verify_cmd->add_option("--brute-limit", brute_limit,
                         "Largest n to brute-force (at most 6)");
  verify_cmd->add_flag("--check-claims", check_claims,
                       "Assert every intermediate claim while solving");

  std::size_t trials = 0;
  auto* props_cmd = app.add_subcommand("props", "Run the property suite");
  props_cmd->add_option("--trials", trials, "Trials per property")->required();
  props_cmd->add_option("--seed", seed, "Random seed")->required();

  std::string spec_path;
  bool no_time = false;
  auto* bench_cmd = app.add_subcommand("bench", "Benchmark over a corpus");
  bench_cmd->add_option("--spec", spec_path, "Corpus description")->required();
  bench_cmd->add_option("-o,--output", output, "CSV file (default stdout)");
  bench_cmd->add_option("--brute-limit", brute_limit,
                        "Largest n to brute-force (at most 6)");
  bench_cmd->add_flag("--no-time", no_time,
                      "Write '-' for wall time so output is reproducible");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  try {
    if (brute_limit > kMaxBruteLimit) {
      throw InputFailure{"--brute-limit above " +
                         std::to_string(kMaxBruteLimit) + " is not supported"};
    }
    if (*solve_cmd) return cmd_solve(path, certify, check_claims, out);
    if (*gen_cmd) return cmd_gen(generator, n, seed, output, out);
    if (*verify_cmd) return cmd_verify(path, brute_limit, check_claims, out);
    if (*props_cmd) return cmd_props(trials, seed, out);
    if (*bench_cmd) {
      return cmd_bench(spec_path, output, brute_limit, !no_time, out);
    }
  } catch (const InputFailure& e) {
    err << "error: " << e.message << "\n";
    return kInputError;
  } catch (const GenerationError& e) {
    err << "error: generation failed: " << e.what() << "\n";
    return kGenerationFailed;
  } catch (const ContractError& e) {
    err << "internal error: " << e.what() << "\n";
    return kCheckFailed;
  }
  return kInputError;
}

}  // namespace rainbow::cli
