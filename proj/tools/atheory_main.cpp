// Command line front end: graph construction, rank computation, 6-cycle
// class reports, product-construction verification, and the word engine.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "atheory/gamma.hpp"
#include "atheory/graph.hpp"
#include "atheory/homotopy_rank.hpp"
#include "atheory/report.hpp"
#include "atheory/shuffle.hpp"
#include "atheory/six_cycles.hpp"
#include "atheory/word.hpp"

namespace {

using namespace atheory;

// "n-3", "n-4", or a plain integer.
int resolve_q(const std::string& q_text, int n) {
  if (q_text == "n-3") return n - 3;
  if (q_text == "n-4") return n - 4;
  std::size_t pos = 0;
  const int q = std::stoi(q_text, &pos);
  if (pos != q_text.size()) throw CLI::ValidationError("--q", "expected an integer, n-3, or n-4");
  return q;
}

RankOptions parse_primes(const std::string& primes_text) {
  RankOptions opts;
  if (primes_text.empty()) return opts;
  std::istringstream is(primes_text);
  std::string tok;
  std::vector<std::uint64_t> ps;
  while (std::getline(is, tok, ',')) ps.push_back(std::stoull(tok));
  if (ps.size() != 2) throw CLI::ValidationError("--primes", "expected two comma-separated primes");
  opts.prime1 = ps[0];
  opts.prime2 = ps[1];
  return opts;
}

struct OutputSink {
  std::ofstream file;
  std::ostream* os = &std::cout;

  explicit OutputSink(const std::string& path) {
    if (path.empty() || path == "-") return;
    file.open(path);
    if (!file) throw std::runtime_error("cannot open output path: " + path);
    os = &file;
  }
};

int run(int argc, char** argv) {
  CLI::App app{"discrete homotopy toolkit for permutahedron and chain graphs"};
  app.require_subcommand(1);

  // ---- build ----
  auto* build = app.add_subcommand("build", "construct a graph and write it out");
  int build_n = 4;
  std::string build_q = "n-3";
  std::string build_construction = "direct";
  std::string build_format = "edgelist";
  std::string build_out = "-";
  bool build_force = false;
  build->add_option("--n", build_n, "size parameter n")->required();
  build->add_option("--q", build_q, "q as an integer, n-3, or n-4 (default n-3)");
  build->add_option("--construction", build_construction, "direct | shuffle-product")
      ->check(CLI::IsMember({"direct", "shuffle-product"}));
  build->add_option("--format", build_format, "edgelist | dot | json")
      ->check(CLI::IsMember({"edgelist", "dot", "json"}));
  build->add_option("--out", build_out, "output path, - for stdout");
  build->add_flag("--force-large", build_force, "override the size cap");

  // ---- rank ----
  auto* rank = app.add_subcommand("rank", "rank of the abelianized A1 group (JSON report)");
  int rank_n = 0;
  std::string rank_q = "n-3";
  std::string rank_input;
  std::string rank_primes;
  std::string rank_out = "-";
  bool rank_torsion = false;
  bool rank_force = false;
  rank->add_option("--n", rank_n, "build the graph for this n");
  rank->add_option("--q", rank_q, "q as an integer, n-3, or n-4 (default n-3)");
  rank->add_option("--input", rank_input, "read an edge-list file instead of building");
  rank->add_option("--primes", rank_primes, "two comma-separated primes for the modular passes");
  rank->add_flag("--torsion", rank_torsion, "also report Smith invariant factors");
  rank->add_flag("--force-large", rank_force, "override the size cap");
  rank->add_option("--out", rank_out, "output path, - for stdout");

  // ---- classes ----
  auto* classes = app.add_subcommand("classes", "6-cycle equivalence class report (JSON)");
  int classes_n = 4;
  std::string classes_out = "-";
  bool classes_force = false;
  bool classes_no_rank = false;
  classes->add_option("--n", classes_n, "size parameter n")->required();
  classes->add_flag("--no-rank", classes_no_rank, "skip the linear-algebra rank column");
  classes->add_flag("--force-large", classes_force, "override the size cap");
  classes->add_option("--out", classes_out, "output path, - for stdout");

  // ---- product-verify ----
  auto* pverify = app.add_subcommand("product-verify",
                                     "check the shuffle-product construction against the direct graph");
  int pv_n = 4;
  bool pv_force = false;
  pverify->add_option("--n", pv_n, "size parameter n")->required();
  pverify->add_flag("--force-large", pv_force, "override the size cap");

  // ---- word-reduce ----
  auto* wreduce = app.add_subcommand("word-reduce", "canonical form of a generator word");
  std::string wr_word;
  int wr_n = 0;
  wreduce->add_option("word", wr_word, "space-separated generator indices, e.g. \"1 2 1 2 1 2\"")
      ->required();
  wreduce->add_option("--n", wr_n, "alphabet parameter (default: max letter + 1)");

  // ---- word-equiv ----
  auto* wequiv = app.add_subcommand("word-equiv", "decide equivalence of two generator words");
  std::string we_a, we_b;
  int we_n = 0;
  wequiv->add_option("word1", we_a, "first word")->required();
  wequiv->add_option("word2", we_b, "second word");
  wequiv->add_option("--n", we_n, "alphabet parameter (default: max letter + 1)");

  // ---- report ----
  auto* report = app.add_subcommand("report", "full consistency pipeline for one n (JSON)");
  int report_n = 4;
  std::string report_q = "n-3";
  std::string report_primes;
  std::string report_out = "-";
  bool report_force = false;
  bool report_torsion = false;
  report->add_option("--n", report_n, "size parameter n")->required();
  report->add_option("--q", report_q, "n-3 (default) or n-4");
  report->add_option("--primes", report_primes, "two comma-separated primes");
  report->add_flag("--torsion", report_torsion, "include the torsion check");
  report->add_flag("--force-large", report_force, "override the size cap");
  report->add_option("--out", report_out, "output path, - for stdout");

  CLI11_PARSE(app, argc, argv);

  if (build->parsed()) {
    const int q = resolve_q(build_q, build_n);
    LabeledGraph graph;
    std::optional<std::vector<int>> levels;
    if (build_construction == "shuffle-product") {
      const GradedPoset l1 = boolean_lattice(build_n - 1, build_force);
      const GradedPoset l2 = boolean_lattice(1);
      const IntermediateGraph gt = intermediate_graph(l1, l2);
      const LabeledGraph pruned = prune_edges(gt);
      // relabel by the resulting permutations, with derived generator labels
      graph = LabeledGraph(pruned.vertex_count());
      std::vector<Permutation> perms;
      perms.reserve(pruned.vertex_count());
      for (Vertex v = 0; v < pruned.vertex_count(); ++v) {
        perms.push_back(triple_to_permutation(gt, l1, v));
        graph.set_vertex_label(v, perms.back().to_string() + "=" + pruned.vertex_label(v));
      }
      for (const Edge& e : pruned.edges()) {
        int label = kUnlabeled;
        for (int j = 1; j <= build_n - 1; ++j) {
          if (perms[e.u].apply_generator(j) == perms[e.v]) {
            label = j;
            break;
          }
        }
        graph.add_edge(e.u, e.v, label);
      }
    } else if (q == build_n - 3) {
      PermutahedronGraph pg = permutahedron_graph(build_n, build_force);
      levels = pg.levels();
      graph = std::move(pg.graph);
    } else {
      const GradedPoset bn = boolean_lattice(build_n, build_force);
      GammaGraph gg = gamma_graph(bn, q);
      levels.emplace();
      levels->reserve(gg.chains.size());
      for (const MaximalChain& c : gg.chains) {
        levels->push_back(chain_to_permutation(c, bn, build_n).level());
      }
      graph = std::move(gg.graph);
    }
    OutputSink sink(build_out);
    if (build_format == "edgelist") {
      write_edge_list(graph, *sink.os);
    } else if (build_format == "dot") {
      write_dot(graph, *sink.os);
    } else {
      *sink.os << graph_to_json(graph, levels ? &*levels : nullptr).dump(2) << "\n";
    }
    return 0;
  }

  if (rank->parsed()) {
    if (rank_input.empty() && rank_n == 0) {
      throw CLI::ValidationError("rank", "give either --n or --input");
    }
    LabeledGraph graph;
    if (!rank_input.empty()) {
      std::ifstream in(rank_input);
      if (!in) throw std::runtime_error("cannot open input path: " + rank_input);
      graph = read_edge_list(in);
    } else {
      const int q = resolve_q(rank_q, rank_n);
      if (q == rank_n - 3) {
        graph = permutahedron_graph(rank_n, rank_force).graph;
      } else {
        graph = gamma_graph(boolean_lattice(rank_n, rank_force), q).graph;
      }
    }
    RankReport rep = a1_rank_report(graph, parse_primes(rank_primes));
    if (rank_torsion) rep.invariant_factors = torsion_check(graph);
    OutputSink sink(rank_out);
    *sink.os << rep.to_json().dump(2) << "\n";
    return 0;
  }

  if (classes->parsed()) {
    SixCycleClasses cls = equivalence_classes(classes_n, classes_force);
    if (!classes_no_rank && classes_n <= 6) {
      cls.report.rank_linear_algebra = a1_rank(permutahedron_graph(classes_n, classes_force).graph);
    }
    OutputSink sink(classes_out);
    *sink.os << cls.report.to_json().dump(2) << "\n";
    return 0;
  }

  if (pverify->parsed()) {
    const ProductVerification v = verify_product_construction(pv_n, pv_force);
    std::cout << "vertices: " << v.vertices << "\n"
              << "direct edges: " << v.direct_edges << "\n"
              << "pruned product edges: " << v.pruned_edges << "\n"
              << "vertex sets match: " << (v.vertex_sets_match ? "yes" : "no") << "\n"
              << "edge sets match: " << (v.edge_sets_match ? "yes" : "no") << "\n";
    return v.ok() ? 0 : 1;
  }

  auto alphabet_for = [](const std::string& text, int explicit_n) {
    if (explicit_n > 0) return explicit_n;
    int max_letter = 0;
    std::istringstream is(text);
    int x;
    while (is >> x) max_letter = std::max(max_letter, x);
    return max_letter + 1;
  };

  if (wreduce->parsed()) {
    const GenWord w = GenWord::parse(wr_word, alphabet_for(wr_word, wr_n));
    std::cout << racg_normal_form(w).to_string() << "\n";
    return 0;
  }

  if (wequiv->parsed()) {
    const int n = std::max(alphabet_for(we_a, we_n), alphabet_for(we_b, we_n));
    const GenWord a = GenWord::parse(we_a, n);
    const GenWord b = GenWord::parse(we_b, n);
    std::cout << (words_equivalent(a, b) ? "equivalent" : "not equivalent") << "\n";
    return 0;
  }

  if (report->parsed()) {
    PipelineOptions opts;
    opts.n = report_n;
    if (report_q == "n-3") {
      opts.q_offset = 3;
    } else if (report_q == "n-4") {
      opts.q_offset = 4;
    } else {
      throw CLI::ValidationError("--q", "report supports only n-3 and n-4");
    }
    opts.force_large = report_force;
    opts.rank = parse_primes(report_primes);
    opts.with_torsion = report_torsion;
    const nlohmann::json j = run_report(opts);
    OutputSink sink(report_out);
    *sink.os << j.dump(2) << "\n";
    return j.at("all_consistent").get<bool>() ? 0 : 1;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
