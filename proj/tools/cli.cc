// Copyright 2026 The GFR Codes Authors
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

#include "cli.h"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <memory>
#include <sstream>

#include "CLI11.hpp"
#include "gfr/errors.h"
#include "gfr/family.h"
#include "gfr/gfr_code.h"
#include "gfr/repair_graph.h"
#include "gfr/serialize.h"
#include "gfr/storage_sim.h"
#include "gfr/verify.h"

namespace gfr::cli {
namespace {

std::string join(const std::vector<int>& items) {
  std::string out = "{";
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(items[i]);
  }
  return out + "}";
}

int exhaustive_edge_limit() {
  const char* env = std::getenv("GFR_MAX_EXHAUSTIVE_EDGES");
  if (env == nullptr || *env == '\0') return kDefaultExhaustiveEdgeLimit;
  try {
    std::size_t used = 0;
    const int limit = std::stoi(env, &used);
    if (used != std::string(env).size() || limit < 0) throw std::invalid_argument(env);
    return limit;
  } catch (const std::exception&) {
    throw ValidationError(std::string("GFR_MAX_EXHAUSTIVE_EDGES is not a "
                                      "non-negative integer: '") + env + "'");
  }
}

GfrCode load_code(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return code_from_json(parse_json(buffer.str()));
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot write " + path);
  out << text;
}

struct Options {
  SystemParams params;
  std::string scheme = "fhs";
  bool compare = false;
  int n_max = 12;
  int m = 8;
  std::string poly;
  std::uint64_t seed = 1;
  int max_attempts = kDefaultMaxAttempts;
  std::string output;
  std::string input;
  bool exhaustive = false;
  int failures = 100;
  std::string report;
  int packet_len = 1;
  int spot_checks = 64;
  std::string format = "dot";
};

int cmd_mbr(const Options& o, std::ostream& out) {
  validate(o.params);
  PacketCount m = 0;
  if (o.scheme == "bhs") {
    m = mbr_file_size_bhs(o.params);
  } else {
    m = scheme_file_size(o.params, parse_scheme(o.scheme));
  }
  out << m << "\n";
  if (o.compare) {
    out << "bhs=" << mbr_file_size_bhs(o.params) << "\n";
    out << "helps=" << (helper_selection_helps(o.params) ? "true" : "false")
        << "\n";
  }
  return kExitOk;
}

int cmd_sweep(const Options& o, std::ostream& out) {
  if (o.n_max < 2 || o.n_max > kMaxSweepN) {
    throw ValidationError("--n-max must be in [2, " + std::to_string(kMaxSweepN) +
                          "]");
  }
  out << "n,k,d,m_bhs,m_fhs,m_plus,helps\n";
  for (int n = 2; n <= o.n_max; ++n) {
    for (int k = 1; k < n; ++k) {
      for (int d = 1; d < n; ++d) {
        const SystemParams p{n, k, d};
        out << n << "," << k << "," << d << "," << mbr_file_size_bhs(p) << ","
            << mbr_file_size_fhs(p) << "," << mbr_file_size_family_plus(p)
            << "," << (helper_selection_helps(p) ? "true" : "false") << "\n";
      }
    }
  }
  return kExitOk;
}

int cmd_construct(const Options& o, std::ostream& out, std::ostream& err) {
  validate(o.params);
  const Scheme scheme = parse_scheme(o.scheme);
  FieldSpec field =
      o.poly.empty()
          ? FieldSpec(o.m)
          : field_from_json(Json{{"m", o.m}, {"poly", o.poly}});
  Phase2Policy policy;
  policy.exhaustive_edge_limit = exhaustive_edge_limit();
  try {
    const GfrCode code =
        construct(o.params, scheme, field, o.max_attempts, o.seed, policy);
    const std::string text = dump(to_json(code));
    if (o.output.empty()) {
      out << text;
    } else {
      write_text(o.output, text);
      out << "constructed " << to_string(scheme) << " (n,k,d)=(" << o.params.n
          << "," << o.params.k << "," << o.params.d << ") M=" << code.file_size
          << " over GF(2^" << field.m() << ") seed=" << code.seed
          << " attempts=" << code.attempts << " edges=" << code.graph.edges().size()
          << " -> " << o.output << "\n";
    }
    return kExitOk;
  } catch (const ExhaustionError& e) {
    err << "construct: " << e.what() << "; last witness " << join(e.witness())
        << "\n";
    return kExitFailed;
  }
}

int cmd_verify(const Options& o, std::ostream& out) {
  const GfrCode code = load_code(o.input);
  const int limit = exhaustive_edge_limit();
  if (o.exhaustive && static_cast<int>(code.graph.edges().size()) > limit) {
    throw LimitError("code has " + std::to_string(code.graph.edges().size()) +
                     " edges, above the exhaustive limit " +
                     std::to_string(limit) +
                     "; run verify without --exhaustive for the k-subset check "
                     "or raise GFR_MAX_EXHAUSTIVE_EDGES");
  }
  bool ok = true;

  const VerifyResult p1 = verify_property1(code);
  if (p1.ok) {
    out << "property1: ok (" << p1.checked << " dashed edges)\n";
  } else {
    out << "property1: FAILED at edge " << join(p1.witness) << "\n";
    ok = false;
  }

  const VerifyResult rec = verify_reconstruction(code, code.params.k);
  if (rec.ok) {
    out << "reconstruction: ok (" << rec.checked << " k-subsets reach rank "
        << code.file_size << ")\n";
  } else {
    out << "reconstruction: FAILED for nodes " << join(rec.witness) << "\n";
    ok = false;
  }

  if (o.exhaustive) {
    const VerifyResult p2 = verify_property2_exhaustive(code, limit);
    if (p2.ok) {
      out << "property2: ok (" << p2.checked << " edge subsets)\n";
    } else {
      out << "property2: FAILED for edges " << join(p2.witness) << "\n";
      ok = false;
    }
  }
  return ok ? kExitOk : kExitFailed;
}

int cmd_simulate(const Options& o, std::ostream& out) {
  auto code = std::make_shared<const GfrCode>(load_code(o.input));
  if (o.packet_len < 1) throw ValidationError("--packet-len must be positive");
  SystemState state = encode_file(
      code, random_file(*code, static_cast<std::size_t>(o.packet_len), o.seed));
  const auto trace = random_trace(*code, o.failures, o.seed + 1);
  const TraceReport report =
      run_trace(state, trace, {.spot_checks = o.spot_checks, .seed = o.seed + 2});

  Json j{{"params",
          {{"n", code->params.n}, {"k", code->params.k}, {"d", code->params.d}}},
         {"scheme", to_string(code->scheme)},
         {"M", code->file_size},
         {"seed", o.seed},
         {"failures", o.failures},
         {"packet_len", o.packet_len},
         {"trace", to_json(report)}};
  if (!o.report.empty()) write_text(o.report, dump(j));

  out << "repairs=" << report.repairs
      << " bandwidth=" << report.bandwidth_packets
      << " transferred=" << report.transferred_packets
      << " computed=" << report.computed_packets
      << " exact=" << (report.all_exact ? "true" : "false")
      << " reconstructions=" << report.reconstructions_checked
      << " failed=" << report.reconstructions_failed << "\n";
  const bool ok = report.all_exact && report.reconstructions_failed == 0;
  return ok ? kExitOk : kExitFailed;
}

int cmd_inspect_graph(const Options& o, std::ostream& out) {
  const Scheme scheme = parse_scheme(o.scheme);
  RepairGraph graph =
      scheme == Scheme::fhs
          ? build_repair_graph(partition_families(o.params.n, o.params.d))
          : build_family_plus_graph(family_plus_partition(o.params.n, o.params.d),
                                    o.params.d);
  if (o.format == "dot") {
    out << export_dot(graph);
  } else if (o.format == "json") {
    out << dump(to_json(graph));
  } else {
    throw ValidationError("--format must be dot or json");
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Generalized fractional repetition codes"};
  app.require_subcommand(1);
  Options o;

  auto add_nkd = [&](CLI::App* sub, bool with_k) {
    sub->add_option("--n", o.params.n, "node count")->required();
    if (with_k) sub->add_option("--k", o.params.k, "reconstruction threshold")->required();
    sub->add_option("--d", o.params.d, "helper count")->required();
  };

  auto* mbr = app.add_subcommand("mbr", "print the MBR file size in packets");
  add_nkd(mbr, true);
  mbr->add_option("--scheme", o.scheme, "fhs, bhs or family-plus")
      ->check(CLI::IsMember({"fhs", "bhs", "family-plus"}));
  mbr->add_flag("--compare", o.compare, "also print the BHS size and verdict");

  auto* sweep = app.add_subcommand("sweep", "CSV of file sizes for all (n,k,d)");
  sweep->add_option("--n-max", o.n_max, "largest n");

  auto* cons = app.add_subcommand("construct", "build and verify a code");
  add_nkd(cons, true);
  cons->add_option("--m", o.m, "field bit-width");
  cons->add_option("--poly", o.poly, "reduction polynomial, hex");
  cons->add_option("--seed", o.seed, "base seed");
  cons->add_option("--max-attempts", o.max_attempts, "retry budget");
  cons->add_option("--scheme", o.scheme, "fhs or family-plus")
      ->check(CLI::IsMember({"fhs", "family-plus"}));
  cons->add_option("-o,--output", o.output, "output JSON path");

  auto* ver = app.add_subcommand("verify", "check a code file");
  ver->add_option("code", o.input, "code JSON")->required();
  ver->add_flag("--exhaustive", o.exhaustive, "scan every edge subset");

  auto* sim = app.add_subcommand("simulate", "run a failure trace");
  sim->add_option("code", o.input, "code JSON")->required();
  sim->add_option("--failures", o.failures, "number of failures");
  sim->add_option("--seed", o.seed, "file and trace seed");
  sim->add_option("--report", o.report, "report JSON path");
  sim->add_option("--packet-len", o.packet_len, "symbols per packet");
  sim->add_option("--spot-checks", o.spot_checks, "reconstruction checks");

  auto* insp = app.add_subcommand("inspect-graph", "print the repair graph");
  add_nkd(insp, false);
  insp->add_option("--scheme", o.scheme, "fhs or family-plus")
      ->check(CLI::IsMember({"fhs", "family-plus"}));
  insp->add_option("--format", o.format, "dot or json");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (mbr->parsed()) return cmd_mbr(o, out);
    if (sweep->parsed()) return cmd_sweep(o, out);
    if (cons->parsed()) return cmd_construct(o, out, err);
    if (ver->parsed()) return cmd_verify(o, out);
    if (sim->parsed()) return cmd_simulate(o, out);
    if (insp->parsed()) return cmd_inspect_graph(o, out);
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const FormatError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const LimitError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailed;
  }
  return kExitUsage;
}

}  // namespace gfr::cli
