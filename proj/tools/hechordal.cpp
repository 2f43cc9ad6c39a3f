// Copyright 2026 The hechordal Authors
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

// hechordal: chordality checks on homomorphically encrypted graphs.
//
// Exit codes: 0 chordal / success, 1 not chordal, 2 usage error, 3 aborted.

#include <charconv>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hechordal/graph.hpp"
#include "hechordal/he.hpp"
#include "hechordal/protocol.hpp"
#include "hechordal/timing.hpp"
#include "hechordal/wire.hpp"

namespace {

using namespace hechordal;

constexpr int kExitChordal = 0;
constexpr int kExitNotChordal = 1;
constexpr int kExitUsage = 2;
constexpr int kExitAborted = 3;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::optional<std::uint32_t> parse_budget(const std::string& text) {
  if (text == "unbounded") return std::nullopt;
  std::uint32_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw UsageError("--budget: expected a non-negative integer or 'unbounded', got '" + text + "'");
  }
  return value;
}

Graph load(const std::string& spec) {
  try {
    return load_graph(spec);
  } catch (const GraphError& e) {
    throw UsageError(std::string("--graph: ") + e.what());
  }
}

int exit_code_for(const Verdict& v) {
  switch (v.outcome) {
    case Outcome::chordal:
      return kExitChordal;
    case Outcome::not_chordal:
      return kExitNotChordal;
    case Outcome::aborted:
      return kExitAborted;
  }
  return kExitAborted;
}

void write_transcript(const std::string& path, const Transcript& t, bool timing) {
  if (path.empty()) return;
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("--transcript: cannot write '" + path + "'");
  out << t.to_jsonl(timing);
}

struct ProtocolFlags {
  std::string graph;
  std::string backend = "masked";
  std::string budget = "unbounded";
  bool refresh = false;
  std::uint64_t seed = 0;
  std::string transcript;
  bool no_timing = false;

  void attach(CLI::App* cmd) {
    cmd->add_option("--graph", graph, "Graph file or builtin name (fig1a, fig1b, fig3, path-k, cycle-k, complete-k)")
        ->required();
    cmd->add_option("--backend", backend, "masked | passthrough")
        ->check(CLI::IsMember({"masked", "passthrough"}));
    cmd->add_option("--budget", budget, "Multiplicative depth budget, or 'unbounded'");
    cmd->add_flag("--refresh", refresh, "Re-encrypt the adjacency matrix every round");
    cmd->add_option("--seed", seed, "Randomness seed");
    cmd->add_option("--transcript", transcript, "Write a JSON-lines transcript to FILE");
    cmd->add_flag("--no-timing", no_timing, "Write millis as 0 in the transcript");
  }

  he::HeParams params(std::size_t n) const {
    return he::HeParams::for_vertices(n, he::parse_backend(backend), parse_budget(budget), seed);
  }
};

struct NetFlags {
  std::optional<std::uint64_t> timeout_ms;
  std::optional<std::size_t> max_msg;

  void attach(CLI::App* cmd) {
    cmd->add_option("--timeout-ms", timeout_ms, "Read/write timeout (env HECHORDAL_TIMEOUT_MS)");
    cmd->add_option("--max-msg", max_msg, "Maximum message size in bytes (env HECHORDAL_MAX_MSG)");
  }

  wire::SessionConfig config(const std::string& endpoint) const {
    wire::SessionConfig cfg = wire::SessionConfig::from_env();
    wire::parse_endpoint(endpoint, cfg);
    if (timeout_ms) cfg.timeout = std::chrono::milliseconds(*timeout_ms);
    if (max_msg) cfg.max_message = *max_msg;
    return cfg;
  }
};

int cmd_gen(const std::string& type, std::size_t n, double p, std::uint64_t seed,
            const std::string& out) {
  Graph g;
  if (type == "gnp") {
    g = gen_gnp(n, p, seed);
  } else if (type == "chordal") {
    g = gen_chordal(n, seed);
  } else if (type == "path") {
    g = path_graph(n);
  } else if (type == "cycle") {
    g = cycle_graph(n);
  } else {
    g = complete_graph(n);
  }
  write_graph_file(out, g);
  std::cout << "wrote " << out << " (n=" << g.size() << ", m=" << g.edge_count() << ")\n";
  return 0;
}

int cmd_oracle(const std::string& graph, const std::string& method) {
  const Graph g = load(graph);
  bool chordal = false;
  if (method == "eliminate") {
    chordal = eliminate(g).is_chordal;
  } else if (method == "mcs") {
    chordal = mcs_peo(g).is_chordal;
  } else {
    try {
      chordal = !chord_free_cycle_exists(g);
    } catch (const GraphError& e) {
      throw UsageError(std::string("--method exhaustive: ") + e.what());
    }
  }
  std::cout << (chordal ? "CHORDAL" : "NOT_CHORDAL") << '\n';
  return chordal ? kExitChordal : kExitNotChordal;
}

int cmd_check(const ProtocolFlags& f) {
  const Graph g = load(f.graph);
  const auto result = run_local(g, f.params(g.size()), ProtocolOptions{f.refresh});
  std::cout << summary(result.verdict) << '\n';
  write_transcript(f.transcript, result.transcript, !f.no_timing);
  return exit_code_for(result.verdict);
}

int cmd_connect(const std::string& addr, const ProtocolFlags& f, const NetFlags& net) {
  const Graph g = load(f.graph);
  const auto cfg = net.config(addr);
  const auto result = wire::connect(cfg, g, f.params(g.size()), ProtocolOptions{f.refresh});
  std::cout << summary(result.verdict) << '\n';
  write_transcript(f.transcript, result.transcript, !f.no_timing);
  return exit_code_for(result.verdict);
}

int cmd_serve(const std::string& listen, const std::string& backend, const NetFlags& net,
              std::size_t max_sessions) {
  const auto cfg = net.config(listen);
  wire::Server server(cfg, he::parse_backend(backend));
  const auto port = server.listen();
  std::cout << "listening on " << cfg.host << ':' << port << " (backend " << backend << ")"
            << std::endl;
  server.run(max_sessions);
  return 0;
}

std::vector<std::size_t> parse_sizes(const std::string& text) {
  std::vector<std::size_t> sizes;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (ec != std::errc() || ptr != item.data() + item.size() || v == 0) {
      throw UsageError("--sizes: '" + item + "' is not a positive integer");
    }
    sizes.push_back(v);
  }
  if (sizes.empty()) throw UsageError("--sizes: no sizes given");
  return sizes;
}

int cmd_bench(const std::string& sizes_text, bool rounds_only, const std::string& backend,
              int reps, std::uint64_t seed) {
  const auto sizes = parse_sizes(sizes_text);
  const auto be = he::parse_backend(backend);
  std::vector<double> round_ms;
  std::cout << std::fixed << std::setprecision(3);
  for (std::size_t n : sizes) {
    const double ms = time_bob_round(n, be, reps, seed);
    round_ms.push_back(ms);
    std::cout << "n=" << n << " round_ms=" << ms;
    if (!rounds_only) {
      const Graph g = gen_chordal(n, seed);
      const auto start = std::chrono::steady_clock::now();
      const auto result = run_local(g, he::HeParams::for_vertices(n, be, std::nullopt, seed));
      const double total =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      std::cout << " chordal_run=" << summary(result.verdict) << " total_ms=" << total;
    }
    std::cout << '\n';
  }
  for (std::size_t i = 1; i < sizes.size(); ++i) {
    std::cout << "ratio " << sizes[i] << '/' << sizes[i - 1] << " = "
              << round_ms[i] / round_ms[i - 1] << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Chordality checks on homomorphically encrypted graphs"};
  app.require_subcommand(1);

  std::string gen_type, gen_out;
  std::size_t gen_n = 0;
  double gen_p = 0.3;
  std::uint64_t gen_seed = 0;
  auto* gen = app.add_subcommand("gen", "Generate a graph file");
  gen->add_option("--type", gen_type, "gnp | chordal | path | cycle | complete")
      ->required()
      ->check(CLI::IsMember({"gnp", "chordal", "path", "cycle", "complete"}));
  gen->add_option("--n", gen_n, "Vertex count")->required();
  gen->add_option("--p", gen_p, "Edge probability (gnp)")->check(CLI::Range(0.0, 1.0));
  gen->add_option("--seed", gen_seed, "Seed");
  gen->add_option("-o,--output", gen_out, "Output file")->required();

  std::string oracle_graph, oracle_method = "eliminate";
  auto* oracle = app.add_subcommand("oracle", "Plaintext chordality oracle");
  oracle->add_option("--graph", oracle_graph, "Graph file or builtin name")->required();
  oracle->add_option("--method", oracle_method, "eliminate | exhaustive | mcs")
      ->check(CLI::IsMember({"eliminate", "exhaustive", "mcs"}));

  ProtocolFlags check_flags;
  auto* check = app.add_subcommand("check", "Run the encrypted protocol in-process");
  check_flags.attach(check);

  std::string listen_addr, serve_backend = "masked";
  std::size_t max_sessions = 0;
  NetFlags serve_net;
  auto* serve = app.add_subcommand("serve", "Run Bob as a TCP server");
  serve->add_option("--listen", listen_addr, "HOST:PORT")->required();
  serve->add_option("--backend", serve_backend, "masked | passthrough")
      ->check(CLI::IsMember({"masked", "passthrough"}));
  serve->add_option("--max-sessions", max_sessions, "Exit after this many sessions (0 = never)");
  serve_net.attach(serve);

  std::string connect_addr;
  ProtocolFlags connect_flags;
  NetFlags connect_net;
  auto* connect = app.add_subcommand("connect", "Run Alice against a Bob server");
  connect->add_option("--addr", connect_addr, "HOST:PORT")->required();
  connect_flags.attach(connect);
  connect_net.attach(connect);

  std::string bench_sizes, bench_backend = "masked";
  bool rounds_only = false;
  int bench_reps = 3;
  std::uint64_t bench_seed = 0;
  auto* bench = app.add_subcommand("bench", "Time one protocol round per graph size");
  bench->add_option("--sizes", bench_sizes, "Comma-separated vertex counts")->required();
  bench->add_flag("--rounds-only", rounds_only, "Only time single Bob rounds");
  bench->add_option("--backend", bench_backend, "masked | passthrough")
      ->check(CLI::IsMember({"masked", "passthrough"}));
  bench->add_option("--reps", bench_reps, "Repetitions per size")->check(CLI::PositiveNumber);
  bench->add_option("--seed", bench_seed, "Seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*gen) return cmd_gen(gen_type, gen_n, gen_p, gen_seed, gen_out);
    if (*oracle) return cmd_oracle(oracle_graph, oracle_method);
    if (*check) return cmd_check(check_flags);
    if (*serve) return cmd_serve(listen_addr, serve_backend, serve_net, max_sessions);
    if (*connect) return cmd_connect(connect_addr, connect_flags, connect_net);
    if (*bench) return cmd_bench(bench_sizes, rounds_only, bench_backend, bench_reps, bench_seed);
  } catch (const UsageError& e) {
    std::cerr << "hechordal: " << e.what() << '\n';
    return kExitUsage;
  } catch (const GraphError& e) {
    std::cerr << "hechordal: " << e.what() << '\n';
    return kExitUsage;
  } catch (const he::ParamsError& e) {
    std::cerr << "hechordal: " << e.what() << '\n';
    return kExitUsage;
  } catch (const wire::WireError& e) {
    std::cerr << "hechordal: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "hechordal: " << e.what() << '\n';
    return kExitAborted;
  }
  return kExitUsage;
}
