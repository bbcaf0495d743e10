// Copyright 2026 The dicrit Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dicrit/cli.h"

#include <filesystem>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "dicrit/constructions.h"
#include "dicrit/dg_format.h"
#include "dicrit/dicolouring.h"
#include "dicrit/lab.h"
#include "dicrit/subdivision.h"
#include "dicrit/witness_json.h"

namespace dicrit {

namespace {

// "3" means uniform 3; "0->1=2,1->2=0" gives per-arc values.
std::map<Arc, int> ParseCounts(const std::string& text, const Digraph& pattern) {
  if (text.empty()) return {};
  if (text.find("->") == std::string::npos) {
    return UniformCounts(pattern, std::stoi(text));
  }
  std::map<Arc, int> counts;
  std::stringstream items(text);
  std::string item;
  while (std::getline(items, item, ',')) {
    const auto arrow = item.find("->");
    const auto eq = item.find('=');
    if (arrow == std::string::npos || eq == std::string::npos || eq < arrow) {
      throw ConstructionError("count entries look like u->v=c, got `" + item + "`");
    }
    counts[{std::stoi(item.substr(0, arrow)),
            std::stoi(item.substr(arrow + 2, eq - arrow - 2))}] =
        std::stoi(item.substr(eq + 1));
  }
  return counts;
}

// A file path, or `<family>[:p1,p2,...]`.
Digraph LoadPattern(const std::string& spec) {
  if (std::filesystem::exists(spec)) return ReadDgFile(spec);
  const auto colon = spec.find(':');
  const std::string tag = spec.substr(0, colon);
  const auto family = ParseFamily(tag);
  if (!family) throw ConstructionError("no such file or family `" + spec + "`");
  FamilySpec fs{*family, {}, std::nullopt};
  if (colon != std::string::npos) {
    std::stringstream items(spec.substr(colon + 1));
    std::string item;
    while (std::getline(items, item, ',')) fs.params.push_back(std::stoi(item));
  }
  return Build(fs);
}

void PrintWitness(std::ostream& out, const SubdivisionWitness& w) {
  out << WitnessToJson(w, 2) << "\n";
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"dicrit: dichromatic number, dicritical digraphs and subdivisions"};
  app.require_subcommand(1);
  int result = kExitOk;

  // gen
  std::string family_tag, out_file, base_file;
  std::vector<int> gen_params;
  auto* gen = app.add_subcommand("gen", "build a named family, write .dg");
  gen->add_option("family", family_tag)->required();
  gen->add_option("params", gen_params);
  gen->add_option("-o,--output", out_file, "output file (default stdout)");
  gen->add_option("--base", base_file, "base digraph for universal_join");

  std::string file, host_file;
  int k = 0, l = 0, u = 0;
  auto* chi = app.add_subcommand("chi", "exact dichromatic number");
  chi->add_option("file", file)->required();

  auto* dicritical = app.add_subcommand("dicritical", "test k-dicriticality");
  dicritical->add_option("file", file)->required();
  dicritical->add_option("--k", k)->required();

  auto* digirth = app.add_subcommand("digirth", "shortest directed cycle length");
  digirth->add_option("file", file)->required();

  auto* longest = app.add_subcommand("longest-path", "longest directed path");
  longest->add_option("file", file)->required();

  std::string pattern_spec, counts_text, mode_text = "oriented";
  auto* find = app.add_subcommand("find", "subdivision containment search");
  find->add_option("pattern", pattern_spec, "pattern .dg file or family[:params]")
      ->required();
  find->add_option("host", host_file)->required();
  find->add_option("--min-counts", counts_text, "uniform c or u->v=c,...");

  auto* spindle = app.add_subcommand("find-spindle", "subdivision of C(k,k)");
  spindle->add_option("file", file)->required();
  spindle->add_option("--k", k)->required();

  auto* outstar = app.add_subcommand("find-outstar", "copy of S_k^{+(l)} at u");
  outstar->add_option("file", file)->required();
  outstar->add_option("--u", u)->required();
  outstar->add_option("--k", k)->required();
  outstar->add_option("--l", l)->required();

  auto* tree = app.add_subcommand("find-tree", "tree subdivision by peeling");
  tree->add_option("tree", pattern_spec)->required();
  tree->add_option("host", host_file)->required();
  tree->add_option("--counts", counts_text)->required();
  tree->add_option("--mode", mode_text)
      ->check(CLI::IsMember({"oriented", "bidirected"}));

  std::string suite_id, dump_file;
  SuiteOptions options;
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", suite_id)->required();
  verify->add_option("--max-n", options.max_n);
  verify->add_option("--jobs", options.jobs);
  verify->add_option("--dump", dump_file, "write the counterexample .dg here");

  EnumerationSpec espec;
  bool count_only = false, labeled = false;
  auto* enumerate = app.add_subcommand("enumerate", "enumerate small digraphs");
  enumerate->add_option("--n", espec.n)->required();
  enumerate->add_flag("--oriented", espec.oriented_only);
  enumerate->add_option("--min-out", espec.min_out_degree);
  enumerate->add_option("--min-digirth", espec.min_digirth);
  enumerate->add_flag("--connected", espec.connected);
  enumerate->add_flag("--strong", espec.strongly_connected);
  enumerate->add_flag("--labeled", labeled, "all labelled digraphs");
  enumerate->add_flag("--count", count_only, "print only the count");
  enumerate->add_option("--jobs", options.jobs);

  std::vector<std::string> argv_store{"dicrit"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (gen->parsed()) {
      const auto family = ParseFamily(family_tag);
      if (!family) throw ConstructionError("unknown family `" + family_tag + "`");
      FamilySpec fs{*family, gen_params, std::nullopt};
      if (!base_file.empty()) fs.base = ReadDgFile(base_file);
      const Digraph d = Build(fs);
      if (out_file.empty()) {
        out << WriteDg(d);
      } else {
        WriteDgFile(out_file, d);
      }
    } else if (chi->parsed()) {
      out << DichromaticNumber(ReadDgFile(file)).chi << "\n";
    } else if (dicritical->parsed()) {
      const DicriticalityResult r = CheckDicritical(ReadDgFile(file), k);
      if (r.dicritical) {
        out << k << "-dicritical\n";
      } else {
        out << "not " << k << "-dicritical: chi = " << r.chi;
        if (r.stubborn_arc) {
          out << ", deleting arc " << r.stubborn_arc->first << "->"
              << r.stubborn_arc->second << " keeps chi = " << k;
        }
        if (r.isolated_vertex) out << ", isolated vertex " << *r.isolated_vertex;
        out << "\n";
        result = kExitNotFound;
      }
    } else if (digirth->parsed()) {
      out << Digirth(ReadDgFile(file)) << "\n";
    } else if (longest->parsed()) {
      const DirectedPath p = LongestDirectedPath(ReadDgFile(file));
      out << p.order();
      for (Vertex v : p.vertices) out << " " << v;
      out << "\n";
    } else if (find->parsed()) {
      const Digraph pattern = LoadPattern(pattern_spec);
      const auto w = ContainsSubdivision(ReadDgFile(host_file), pattern,
                                         ParseCounts(counts_text, pattern));
      if (w) {
        PrintWitness(out, *w);
      } else {
        out << "no subdivision of the pattern\n";
        result = kExitNotFound;
      }
    } else if (spindle->parsed()) {
      const auto w = FindSpindle(ReadDgFile(file), k);
      if (w) {
        PrintWitness(out, *w);
      } else {
        out << "no subdivision of C(" << k << "," << k << ")\n";
        result = kExitNotFound;
      }
    } else if (outstar->parsed()) {
      const auto w = FindOutStar(ReadDgFile(file), u, k, l);
      if (w) {
        PrintWitness(out, *w);
      } else {
        out << "no copy of S_" << k << "^(" << l << ") centred at " << u << "\n";
        result = kExitNotFound;
      }
    } else if (tree->parsed()) {
      const Digraph t = LoadPattern(pattern_spec);
      const TreeSearchResult r = FindTreeSubdivision(
          ReadDgFile(host_file), t, ParseCounts(counts_text, t),
          mode_text == "bidirected" ? TreeMode::kBidirected : TreeMode::kOriented);
      if (r.witness) {
        PrintWitness(out, *r.witness);
      } else {
        out << "failure: " << r.failure << "\n";
        result = kExitNotFound;
      }
    } else if (verify->parsed()) {
      const Verdict v = Verify(suite_id, options);
      out << VerdictLine(v) << "\n";
      for (const std::string& line : v.log) out << "# " << line << "\n";
      if (v.outcome == Outcome::kFail) {
        out << "counterexample: " << v.counterexample->label << "\n"
            << "violation: " << v.violation << "\n"
            << WriteDg(v.counterexample->digraph);
        if (!dump_file.empty()) WriteDgFile(dump_file, v.counterexample->digraph);
        result = kExitNotFound;
      } else if (v.outcome == Outcome::kRefused) {
        err << "refused: " << v.refusal << "\n";
        result = kExitUsage;
      }
    } else if (enumerate->parsed()) {
      espec.up_to_iso = !labeled;
      std::mutex mu;
      const auto count = Enumerate(espec, [&](const Digraph& d) {
        if (count_only) return;
        std::lock_guard<std::mutex> lock(mu);
        out << WriteDg(d) << "\n";
      }, options.jobs);
      if (count_only) out << count << "\n";
    }
  } catch (const BudgetExceeded& e) {
    err << "refused: " << e.what() << "\n";
    return kExitUsage;
  } catch (const PreconditionError& e) {
    err << "precondition failed: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvariantBreach& e) {
    err << "invariant breach (please report): " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return result;
}

}  // namespace dicrit
