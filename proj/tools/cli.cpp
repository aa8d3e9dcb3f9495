// Copyright 2026 The dskernel Authors
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

#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <system_error>

#include "CLI11.hpp"
#include "dskernel/bench.hpp"
#include "dskernel/graph_io.hpp"
#include "dskernel/plangen.hpp"
#include "dskernel/reduction.hpp"
#include "dskernel/report.hpp"
#include "dskernel/solver.hpp"
#include "dskernel/verify.hpp"

namespace dskernel::cli {
namespace {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ModeFlags {
  std::string mode = "gadget";
  bool extra_rules = false;

  Mode Resolve() const {
    Mode m = mode == "annotated" ? Mode::Annotated(extra_rules)
                                 : Mode::Gadget();
    if (extra_rules && !m.annotated()) {
      throw CLI::ValidationError("--extra-rules", "requires --mode annotated");
    }
    return m;
  }
};

void AddModeFlags(CLI::App* cmd, ModeFlags& flags) {
  cmd->add_option("--mode", flags.mode, "Reduction variant")
      ->check(CLI::IsMember({"gadget", "annotated"}))
      ->capture_default_str();
  cmd->add_flag("--extra-rules", flags.extra_rules,
                "Also delete removable white vertices (annotated only)");
}

Graph ReadInput(const std::string& path, std::istream& in) {
  if (path.empty() || path == "-") return ReadGraph(in);
  std::ifstream file(path);
  if (!file) throw IoError("cannot open " + path);
  return ReadGraph(file);
}

// Writes to `path`, or to `fallback` when the path is empty.
template <typename Writer>
void Emit(const std::string& path, std::ostream& fallback, Writer write) {
  if (path.empty()) {
    write(fallback);
    return;
  }
  std::ofstream file(path);
  if (!file) throw IoError("cannot write " + path);
  write(file);
  if (!file) throw IoError("write failed for " + path);
}

std::string FileNumbers(const std::vector<VertexId>& ids) {
  std::ostringstream os;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    os << (i ? " " : "") << ids[i].value + 1;
  }
  return os.str();
}

}  // namespace

int Run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err) {
  CLI::App app{"Data reduction and exact solving for dominating set",
               "dskernel"};
  app.require_subcommand(1);

  // gen
  GenSpec gen_spec;
  std::string gen_out;
  auto* gen = app.add_subcommand("gen", "Generate a random planar graph");
  gen->add_option("--n", gen_spec.n, "Vertex count (>= 3)")->required();
  gen->add_option("--m", gen_spec.m, "Edge count (<= 3n-6)")->required();
  gen->add_option("--seed", gen_spec.seed, "Random seed")
      ->capture_default_str();
  gen->add_option("--out", gen_out, "Output file (default stdout)");

  // reduce
  std::string reduce_in;
  std::string reduce_out;
  std::string reduce_stats;
  ModeFlags reduce_mode;
  auto* reduce = app.add_subcommand("reduce", "Reduce a graph to its kernel");
  reduce->add_option("input", reduce_in, "Graph file ('-' for stdin)");
  AddModeFlags(reduce, reduce_mode);
  reduce->add_option("--out", reduce_out, "Kernel output file (default stdout)");
  reduce->add_option("--stats", reduce_stats, "Write statistics JSON here");

  // solve
  std::string solve_in;
  std::string solve_format = "text";
  std::string solver_name = "branch";
  ModeFlags solve_mode;
  auto* solve = app.add_subcommand("solve", "Compute the domination number");
  solve->add_option("input", solve_in, "Graph file ('-' for stdin)");
  AddModeFlags(solve, solve_mode);
  solve->add_option("--solver", solver_name, "Exact solver")
      ->check(CLI::IsMember({"branch", "brute"}))
      ->capture_default_str();
  solve->add_option("--format", solve_format)
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  // verify
  std::string verify_in;
  std::uint32_t verify_trials = 100;
  std::uint32_t verify_max_n = 16;
  std::uint64_t verify_seed = 1;
  std::string verify_dump = "verify-failures";
  std::string verify_format = "text";
  ModeFlags verify_mode;
  auto* verify = app.add_subcommand(
      "verify", "Check reduction against the exact oracle");
  verify->add_option("input", verify_in,
                     "Graph file; random planar trials when omitted");
  AddModeFlags(verify, verify_mode);
  verify->add_option("--trials", verify_trials)->capture_default_str();
  verify->add_option("--max-n", verify_max_n)->capture_default_str();
  verify->add_option("--seed", verify_seed)->capture_default_str();
  verify->add_option("--dump", verify_dump,
                     "Directory for failing instances")
      ->capture_default_str();
  verify->add_option("--format", verify_format)
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  // bench
  BenchConfig bench_config;
  bench_config.sizes.assign(kExperimentSizes.begin(), kExperimentSizes.end());
  std::string bench_format = "text";
  std::string bench_out;
  ModeFlags bench_mode{"annotated", false};
  bool no_timing = false;
  auto* bench = app.add_subcommand(
      "bench", "Reduce random planar sample sets and report removal rates");
  bench->add_option("--sizes", bench_config.sizes, "Vertex counts")
      ->delimiter(',')
      ->capture_default_str();
  bench->add_option("--count", bench_config.count, "Instances per size")
      ->capture_default_str();
  bench->add_option("--seed", bench_config.seed)->capture_default_str();
  AddModeFlags(bench, bench_mode);
  bench->add_option("--threads", bench_config.threads)->capture_default_str();
  bench->add_flag("--no-timing", no_timing,
                  "Report elapsed times as 0 for reproducible output");
  bench->add_option("--format", bench_format)
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  bench->add_option("--out", bench_out, "Report file (default stdout)");

  std::vector<const char*> argv{"dskernel"};
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (gen->parsed()) {
      Graph g = RandomPlanar(gen_spec);
      Emit(gen_out, out, [&](std::ostream& os) { WriteGraph(g, os); });
      return kExitOk;
    }

    if (reduce->parsed()) {
      Mode mode = reduce_mode.Resolve();
      ReductionResult result = Reduce(ReadInput(reduce_in, in), mode);
      Emit(reduce_out, out,
           [&](std::ostream& os) { WriteGraph(result.graph, os); });
      if (!reduce_stats.empty()) {
        std::string id = reduce_in.empty() ? "-" : reduce_in;
        BenchRecord record = MakeRecord(id, result, OracleGamma(result));
        Emit(reduce_stats, out, [&](std::ostream& os) {
          os << ToJson(record).dump(2) << '\n';
        });
      }
      return kExitOk;
    }

    if (solve->parsed()) {
      Mode mode = solve_mode.Resolve();
      Graph g = ReadInput(solve_in, in);
      SolveResult r = solver_name == "brute" ? BruteForceGamma(g)
                                             : BranchAndReduce(g, mode);
      bool certified = VerifyCertificate(g, r.witness);
      if (solve_format == "json") {
        std::vector<std::uint32_t> witness;
        for (VertexId v : r.witness) witness.push_back(v.value + 1);
        nlohmann::json j = {{"gamma", r.gamma},
                            {"witness", witness},
                            {"nodes_explored", r.nodes_explored},
                            {"certified", certified}};
        out << j.dump(2) << '\n';
      } else {
        out << "gamma " << r.gamma << '\n'
            << "witness " << FileNumbers(r.witness) << '\n'
            << "nodes " << r.nodes_explored << '\n';
      }
      return certified ? kExitOk : kExitVerifyFailed;
    }

    if (verify->parsed()) {
      Mode mode = verify_mode.Resolve();
      std::vector<VerifyCase> cases;
      if (verify_in.empty()) {
        cases = RandomPlanarCases(verify_trials, verify_seed, verify_max_n);
      } else {
        cases.push_back({verify_in, ReadInput(verify_in, in), false, {}});
      }
      Reducer reducer = [mode](const Graph& g) { return Reduce(g, mode); };
      VerifyReport report = RunVerification(cases, reducer, verify_dump);
      auto status_name = [](VerifyStatus s) {
        switch (s) {
          case VerifyStatus::kPass:
            return "pass";
          case VerifyStatus::kFail:
            return "FAIL";
          case VerifyStatus::kSkipped:
            return "skipped";
        }
        return "?";
      };
      if (verify_format == "json") {
        nlohmann::json outcomes = nlohmann::json::array();
        for (const VerifyOutcome& o : report.outcomes) {
          auto opt = [](const auto& x) {
            return x ? nlohmann::json(*x) : nlohmann::json(nullptr);
          };
          outcomes.push_back(
              {{"id", o.id},
               {"status", status_name(o.status)},
               {"vertices", o.vertices},
               {"kernel_vertices", o.kernel_vertices},
               {"forced", o.forced},
               {"gamma", opt(o.gamma)},
               {"kernel_gamma", opt(o.kernel_gamma)},
               {"kernel_bound_ok", opt(o.kernel_bound_ok)},
               {"message", o.message},
               {"dump", o.dump ? nlohmann::json(o.dump->string())
                               : nlohmann::json(nullptr)}});
        }
        out << nlohmann::json{{"passed", report.Count(VerifyStatus::kPass)},
                              {"failed", report.Count(VerifyStatus::kFail)},
                              {"skipped", report.Count(VerifyStatus::kSkipped)},
                              {"outcomes", outcomes}}
                   .dump(2)
            << '\n';
      } else {
        for (const VerifyOutcome& o : report.outcomes) {
          out << status_name(o.status) << ' ' << o.id;
          if (o.gamma && o.kernel_gamma) {
            out << " gamma " << *o.gamma << " = " << *o.kernel_gamma;
          }
          out << " kernel " << o.kernel_vertices;
          if (o.kernel_bound_ok) {
            out << (*o.kernel_bound_ok ? " <= " : " > ") << kPlanarKernelFactor
                << "*gamma";
          }
          if (!o.message.empty()) out << " (" << o.message << ')';
          if (o.dump) out << " dumped to " << o.dump->string();
          out << '\n';
        }
        out << report.Count(VerifyStatus::kPass) << " passed, "
            << report.Count(VerifyStatus::kFail) << " failed, "
            << report.Count(VerifyStatus::kSkipped) << " skipped\n";
      }
      return report.AllPassed() ? kExitOk : kExitVerifyFailed;
    }

    if (bench->parsed()) {
      bench_config.mode = bench_mode.Resolve();
      bench_config.timing = !no_timing;
      BenchReport report = RunBench(bench_config);
      Emit(bench_out, out, [&](std::ostream& os) {
        if (bench_format == "json") {
          os << ToJson(report).dump(2) << '\n';
        } else {
          WriteTable(report, os);
        }
      });
      return kExitOk;
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const IoError& e) {
    err << "i/o error: " << e.what() << '\n';
    return kExitIo;
  } catch (const CLI::ValidationError& e) {
    err << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace dskernel::cli
