// command-line front end: every subcommand maps 1:1 onto a library operation.
// Exit codes: 0 = generates / accepted / complete, 2 = unknown / incomplete,
// 1 = error.  Timing goes to stderr so stdout stays byte-deterministic.

#include <chrono>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "quigen/certificate.hpp"
#include "quigen/decompose.hpp"
#include "quigen/errors.hpp"
#include "quigen/io.hpp"
#include "quigen/search.hpp"

using namespace quigen;

namespace {

struct Timer {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  ~Timer() {
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    std::cerr << "elapsed: " << ms << " ms\n";
  }
};

// selector: regular | simple:V | projective:V | injective:V | <module file>,
// vertices 1-based as in the file formats
RepPtr select_module(const Canon& C, const std::string& sel) {
  auto indexed = [&](const std::string& prefix,
                     const std::vector<RepPtr>& family) -> RepPtr {
    std::string num = sel.substr(prefix.size());
    int v = 0;
    try {
      v = std::stoi(num);
    } catch (...) {
      throw Error("bad vertex in module selector: " + sel);
    }
    if (v < 1 || v > C.alg->vertices())
      throw Error("vertex out of range in module selector: " + sel);
    return family[v - 1];
  };
  if (sel == "regular") return regular_rep(C.alg);
  if (sel.rfind("simple:", 0) == 0) return indexed("simple:", C.simples);
  if (sel.rfind("projective:", 0) == 0)
    return indexed("projective:", C.projectives);
  if (sel.rfind("injective:", 0) == 0) return indexed("injective:", C.injectives);
  return load_module_file(sel, C.alg);
}

int cmd_verdict(const std::string& algebra_path, int max_nodes, int max_dim,
                int max_steps, unsigned long long seed, int threads,
                const std::string& cert_path) {
  if (threads != 1)
    std::cerr << "note: serial implementation; --threads accepted for "
                 "interface stability\n";
  AlgebraPtr A = load_algebra_file(algebra_path);
  SearchCaps caps;
  caps.sweep = GraphCaps{max_nodes, max_dim};
  caps.resolution_cap = max_steps;
  caps.seed = seed;
  Verdict v = decide_generates(A, caps);
  std::cout << "algebra: " << A->spec().label << " (dim " << A->dim() << ")\n"
            << "caps: nodes " << caps.sweep.max_nodes << ", dim "
            << caps.sweep.max_dim << ", steps " << caps.resolution_cap
            << ", seed " << caps.seed << "\n"
            << verdict_text(v);
  if (v.generates && !cert_path.empty()) {
    write_file(cert_path, v.certificate.dump(2) + "\n");
    std::cout << "certificate: " << cert_path << "\n";
  }
  return v.generates ? 0 : 2;
}

int cmd_resolve(const std::string& algebra_path, const std::string& sel,
                int max_steps, int max_nodes, int max_dim,
                const std::string& graph_path) {
  AlgebraPtr A = load_algebra_file(algebra_path);
  Canon C = Canon::make(A);
  RepPtr M = select_module(C, sel);
  std::cout << "module: " << dims_str(*M) << "\n";
  Resolution res = injective_resolution(C, M, max_steps);
  for (size_t k = 0; k < res.steps.size(); ++k) {
    const HullStep& s = res.steps[k];
    std::cout << "step " << k << ": hull";
    for (int v = 0; v < A->vertices(); ++v)
      for (int c = 0; c < s.mults[v]; ++c) std::cout << " I" << (v + 1);
    std::cout << "  cosyzygy " << dims_str(*s.cosyz.rep) << "\n";
  }
  if (res.finite)
    std::cout << "injective-dimension: " << res.injdim << "\n";
  else
    std::cout << "not resolved within " << max_steps << " steps\n";

  Registry reg(C);
  CosyzygyGraph g = cosyzygy_graph(C, reg, {M}, GraphCaps{max_nodes, max_dim});
  std::string text = graph_to_text(g, A->hash_hex());
  std::cout << text;
  if (!graph_path.empty()) {
    write_file(graph_path, text);
    std::cout << "graph: " << graph_path << "\n";
  }
  return 0;
}

int cmd_graph(const std::string& algebra_path,
              const std::vector<std::string>& sels, int max_nodes, int max_dim,
              const std::string& graph_path) {
  AlgebraPtr A = load_algebra_file(algebra_path);
  Canon C = Canon::make(A);
  std::vector<RepPtr> seeds;
  for (const std::string& s : sels) seeds.push_back(select_module(C, s));
  Registry reg(C);
  CosyzygyGraph g = cosyzygy_graph(C, reg, seeds, GraphCaps{max_nodes, max_dim});
  std::string text = graph_to_text(g, A->hash_hex());
  std::cout << text;
  if (!graph_path.empty()) {
    write_file(graph_path, text);
    std::cout << "graph: " << graph_path << "\n";
  }
  if (g.complete) {
    RepetitionIndex ri = repetition_index(g);
    if (ri.known) std::cout << "repetition-index: " << ri.index << "\n";
    return 0;
  }
  return 2;  // capped closure proves nothing either way
}

int cmd_check(const std::string& algebra_path, const std::string& cert_path) {
  AlgebraPtr A = load_algebra_file(algebra_path);
  Json cert = Json::parse(read_file(cert_path));
  CheckResult r = check_certificate(A, cert);
  if (r.accepted) {
    std::cout << "Accepted\n";
    return 0;
  }
  std::cout << "Rejected";
  if (r.step >= 0) std::cout << " at step " << r.step;
  std::cout << ": " << r.reason << "\n";
  return 1;
}

int cmd_decompose(const std::string& algebra_path, const std::string& sel) {
  AlgebraPtr A = load_algebra_file(algebra_path);
  Canon C = Canon::make(A);
  RepPtr M = select_module(C, sel);
  Decomposition d = decompose(M);
  // group iso-classes, preserving first-seen order
  std::vector<RepPtr> reps;
  std::vector<int> counts;
  for (const auto& p : d.pieces) {
    bool matched = false;
    for (size_t i = 0; i < reps.size() && !matched; ++i)
      if (iso_indec(reps[i], p)) {
        ++counts[i];
        matched = true;
      }
    if (!matched) {
      reps.push_back(p);
      counts.push_back(1);
    }
  }
  std::cout << "module: " << dims_str(*M) << "\n"
            << "summands: " << d.pieces.size() << "\n";
  for (size_t i = 0; i < reps.size(); ++i)
    std::cout << "  " << dims_str(*reps[i]) << " x" << counts[i] << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact homological toolkit for bound quiver algebras"};
  app.require_subcommand(1);

  std::string algebra, module_sel = "regular", cert_path, emit_cert, emit_graph;
  std::vector<std::string> seeds;
  int max_nodes = 0, max_dim = 0, max_steps = 0, threads = 1;
  unsigned long long seed = SearchCaps{}.seed;

  auto* verdict = app.add_subcommand(
      "verdict", "decide whether injectives generate; emit a certificate");
  verdict->add_option("algebra", algebra, "algebra file")->required();
  verdict->add_option("--max-nodes", max_nodes, "closure sweep node budget");
  verdict->add_option("--max-dim", max_dim, "closure sweep dimension budget");
  verdict->add_option("--max-steps", max_steps, "resolution length budget");
  verdict->add_option("--seed", seed, "search seed");
  verdict->add_option("--threads", threads, "reserved; serial implementation");
  verdict->add_option("--emit-cert", emit_cert, "write the certificate here");

  auto* resolve = app.add_subcommand(
      "resolve", "minimal injective resolution and cosyzygy orbit");
  resolve->add_option("algebra", algebra, "algebra file")->required();
  resolve->add_option("--module", module_sel,
                      "regular | simple:V | projective:V | injective:V | file");
  resolve->add_option("--max-steps", max_steps, "resolution length budget");
  resolve->add_option("--max-nodes", max_nodes, "orbit node budget");
  resolve->add_option("--max-dim", max_dim, "orbit dimension budget");
  resolve->add_option("--emit-graph", emit_graph, "write the orbit graph here");

  auto* graph = app.add_subcommand(
      "cosyzygy-graph", "closure of seed modules under the cosyzygy operator");
  graph->add_option("algebra", algebra, "algebra file")->required();
  graph->add_option("--module", seeds,
                    "seed selector, repeatable (default: regular)");
  graph->add_option("--max-nodes", max_nodes, "node budget");
  graph->add_option("--max-dim", max_dim, "dimension budget");
  graph->add_option("--emit-graph", emit_graph, "write the graph here");

  auto* check = app.add_subcommand("check", "verify a certificate file");
  check->add_option("algebra", algebra, "algebra file")->required();
  check->add_option("certificate", cert_path, "certificate file")->required();

  auto* dec = app.add_subcommand("decompose",
                                 "indecomposable summands with multiplicity");
  dec->add_option("algebra", algebra, "algebra file")->required();
  dec->add_option("--module", module_sel,
                  "regular | simple:V | projective:V | injective:V | file");

  CLI11_PARSE(app, argc, argv);

  try {
    Timer t;
    if (verdict->parsed()) {
      SearchCaps d;
      return cmd_verdict(algebra, max_nodes > 0 ? max_nodes : d.sweep.max_nodes,
                         max_dim > 0 ? max_dim : d.sweep.max_dim,
                         max_steps > 0 ? max_steps : d.resolution_cap, seed,
                         threads, emit_cert);
    }
    if (resolve->parsed())
      return cmd_resolve(algebra, module_sel, max_steps > 0 ? max_steps : 8,
                         max_nodes > 0 ? max_nodes : GraphCaps{}.max_nodes,
                         max_dim > 0 ? max_dim : GraphCaps{}.max_dim, emit_graph);
    if (graph->parsed()) {
      if (seeds.empty()) seeds.push_back("regular");
      return cmd_graph(algebra, seeds,
                       max_nodes > 0 ? max_nodes : GraphCaps{}.max_nodes,
                       max_dim > 0 ? max_dim : GraphCaps{}.max_dim, emit_graph);
    }
    if (check->parsed()) return cmd_check(algebra, cert_path);
    if (dec->parsed()) return cmd_decompose(algebra, module_sel);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
