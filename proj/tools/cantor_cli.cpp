// Copyright 2026 The Cantor Representation Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// cantor: represent patterns as Cantor-set fibers, embed them on the
// middle-third set, and run the invariant suite.
//
// Exit status: 0 success, 1 representation or verification failure,
// 2 usage or parse error.

#include "cantor/compiler.hpp"
#include "cantor/embed.hpp"
#include "cantor/error.hpp"
#include "cantor/oracle.hpp"
#include "cantor/pattern.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kUsage = 2;

struct Options {
  std::string pattern_path;
  std::optional<std::string> points_path;
  std::optional<std::size_t> samples;
  std::size_t depth = 12;
  int precision = 6;
  std::string out_path;
  std::vector<std::string> corpus;
  std::uint64_t seed = 20201;
  std::size_t sample_count = 1000;
  bool inject_fault = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw cantor::ParseError(cantor::ParseError::Kind::kSyntax, "cannot read " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void emit(const Options& opts, const std::string& text) {
  if (opts.out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(opts.out_path, std::ios::binary);
  if (!out) throw cantor::Error("cannot write " + opts.out_path);
  out << text;
}

int cmd_represent(const Options& opts) {
  const cantor::Pattern pattern = cantor::parse_pattern(read_file(opts.pattern_path));
  nlohmann::json rows = nlohmann::json::array();
  int status = kOk;
  if (opts.points_path) {
    const auto points = cantor::parse_points(read_file(*opts.points_path));
    for (std::size_t i = 0; i < points.size(); ++i) {
      try {
        rows.push_back(cantor::to_json(cantor::represent_point(pattern, points[i])));
      } catch (const cantor::Error& e) {
        std::cerr << "point " << i + 1 << " " << points[i].to_string() << ": " << e.what() << '\n';
        status = kFailure;
      }
    }
  } else if (opts.samples) {
    for (const auto& entry : cantor::enumerate_table(pattern, *opts.samples)) {
      rows.push_back(cantor::to_json(entry));
    }
  } else {
    std::cerr << "represent needs --points or --samples\n";
    return kUsage;
  }
  emit(opts, rows.dump(2) + "\n");
  return status;
}

int cmd_embed(const Options& opts) {
  const cantor::Pattern pattern = cantor::parse_pattern(read_file(opts.pattern_path));
  emit(opts, cantor::embed_csv(pattern, opts.samples.value_or(2), opts.precision));
  return kOk;
}

int cmd_verify(const Options& opts) {
  cantor::SuiteConfig config;
  config.depth = opts.depth;
  config.samples = opts.sample_count;
  config.seed = opts.seed;
  config.sample_denominator = opts.samples.value_or(8);
  config.inject_fault = opts.inject_fault;
  if (opts.corpus.empty()) {
    config.corpus.emplace_back(CANTOR_CORPUS_DIR);
  } else {
    config.corpus.assign(opts.corpus.begin(), opts.corpus.end());
  }
  const cantor::SuiteReport report = cantor::run_suite(config);
  for (const auto& c : report.checks) {
    std::cerr << (c.passed ? "PASS " : "FAIL ") << c.name;
    if (!c.passed) std::cerr << "  witness: " << c.witness << "  (" << c.detail << ")";
    std::cerr << '\n';
  }
  emit(opts, report.to_json().dump(2) + "\n");
  return report.passed() ? kOk : kFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Cantor-set representations of geometric patterns"};
  app.require_subcommand(1);
  Options opts;

  auto* represent = app.add_subcommand("represent", "Compile pattern points into fibers");
  represent->add_option("--pattern", opts.pattern_path, "Pattern document")->required();
  represent->add_option("--points", opts.points_path, "Query point document");
  represent->add_option("--samples", opts.samples, "Tabulate arc points t = k/D")
      ->check(CLI::Range(std::size_t{2}, std::size_t{1} << 20));
  represent->add_option("--out", opts.out_path, "Output file (default: stdout)");

  auto* embed = app.add_subcommand("embed", "CSV of middle-third-set coordinates");
  embed->add_option("--pattern", opts.pattern_path, "Pattern document")->required();
  embed->add_option("--samples", opts.samples, "Tabulate arc points t = k/D")
      ->check(CLI::Range(std::size_t{2}, std::size_t{1} << 20));
  embed->add_option("--precision", opts.precision, "Decimal digits")
      ->check(CLI::Range(1, 1000));
  embed->add_option("--out", opts.out_path, "Output file (default: stdout)");

  auto* verify = app.add_subcommand("verify", "Run the invariant suite");
  verify->add_option("--depth", opts.depth, "Truncation depth")->check(CLI::Range(1, 24));
  verify->add_option("--samples", opts.samples, "Largest sample denominator for table checks")
      ->check(CLI::Range(std::size_t{2}, std::size_t{64}));
  verify->add_option("--count", opts.sample_count, "Random samples per property")
      ->check(CLI::Range(std::size_t{1}, std::size_t{1000000}));
  verify->add_option("--seed", opts.seed, "Sampling seed");
  verify->add_option("--corpus", opts.corpus, "Pattern files or directories");
  verify->add_option("--out", opts.out_path, "Report file (default: stdout)");
  // Test-only: adds a check that must fail.
  verify->add_flag("--inject-fault", opts.inject_fault)->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (represent->parsed()) return cmd_represent(opts);
    if (embed->parsed()) return cmd_embed(opts);
    return cmd_verify(opts);
  } catch (const cantor::ParseError& e) {
    std::cerr << e.what() << '\n';
    return kUsage;
  } catch (const cantor::InvalidInput& e) {
    std::cerr << e.what() << '\n';
    return kUsage;
  } catch (const cantor::Error& e) {
    std::cerr << e.what() << '\n';
    return kFailure;
  }
}
