// Command-line front end: compute Wiener indices, emit named constructions,
// evaluate bounds, enumerate graph classes, and run the claim verifier.
//
// Exit codes: 0 success, 1 refuted claim (or skipped with --strict),
// 2 usage/parse error, 3 domain error (disconnected input, budget, overflow).

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "wienerdegen/bounds.hpp"
#include "wienerdegen/constructions.hpp"
#include "wienerdegen/distance.hpp"
#include "wienerdegen/enumeration.hpp"
#include "wienerdegen/graph.hpp"
#include "wienerdegen/verify.hpp"

namespace {

using nlohmann::json;

wdegen::Graph load_graph(std::istream& in, const std::string& format) {
  if (format == "g6") {
    std::string line;
    if (!std::getline(in, line))
      throw wdegen::GraphFormatError("expected one graph6 line");
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    return wdegen::from_graph6(line);
  }
  return wdegen::read_edge_list(in);
}

wdegen::Graph load_graph_path(const std::string& path, const std::string& format) {
  if (path.empty() || path == "-") return load_graph(std::cin, format);
  std::ifstream in(path);
  if (!in) throw wdegen::GraphFormatError("cannot open " + path);
  return load_graph(in, format);
}

void emit_graph(std::ostream& out, const wdegen::Graph& g, const std::string& format) {
  if (format == "g6")
    out << wdegen::to_graph6(g) << '\n';
  else
    wdegen::write_edge_list(g, out);
}

wdegen::ConstructionTrace trace_from_json(const json& j) {
  wdegen::ConstructionTrace t;
  t.k = j.at("k").get<int>();
  t.base_order = j.value("baseOrder", t.k);
  t.clique_roots_required = j.value("cliqueRootsRequired", true);
  for (const auto& step : j.at("steps")) t.steps.push_back(step.get<std::vector<int>>());
  return t;
}

struct WienerArgs {
  std::string input = "-";
  std::string format = "edgelist";
  bool as_json = false;
};

int run_wiener(const WienerArgs& a) {
  const wdegen::Graph g = load_graph_path(a.input, a.format);
  const wdegen::DistanceSummary d = wdegen::distances(g);
  if (!d.connected) {
    std::cerr << "error: graph is disconnected; Wiener index undefined\n";
    return 3;
  }
  if (a.as_json) {
    json dist = json::array();
    for (std::size_t i = 0; i < d.distance_distribution.size(); ++i)
      dist.push_back(d.distance_distribution[i]);
    json out = {{"schema", 1},
                {"n", g.order()},
                {"m", g.edge_count()},
                {"wiener", d.wiener},
                {"diameter", d.diameter},
                {"status", d.status},
                {"eccentricity", d.eccentricity},
                {"distanceDistribution", dist}};
    std::cout << out.dump(2) << '\n';
    return 0;
  }
  std::int64_t smin = d.status.empty() ? 0 : d.status.front();
  std::int64_t smax = smin;
  for (std::int64_t s : d.status) {
    smin = std::min(smin, s);
    smax = std::max(smax, s);
  }
  std::cout << "n=" << g.order() << " m=" << g.edge_count() << " W=" << d.wiener
            << " diameter=" << d.diameter << '\n';
  std::cout << "status: min=" << smin << " max=" << smax << '\n';
  return 0;
}

struct GenerateArgs {
  std::string name;
  int n = 0;
  int k = 0;
  bool has_n = false;
  bool has_k = false;
  std::string tree_file;
  std::string trace_file;
  std::string format = "edgelist";
  bool as_json = false;
};

int run_generate(const GenerateArgs& a) {
  wdegen::Graph g;
  if (!a.trace_file.empty()) {
    if (!a.name.empty())
      throw std::invalid_argument("give either a construction name or --trace-file");
    std::ifstream in(a.trace_file);
    if (!in) throw wdegen::GraphFormatError("cannot open " + a.trace_file);
    json j;
    in >> j;
    const wdegen::ConstructionTrace t = trace_from_json(j);
    g = t.clique_roots_required ? wdegen::construct_k_tree(t)
                                : wdegen::construct_maximal_k_degenerate(t);
  } else if (!a.name.empty()) {
    wdegen::NamedGraphParams params;
    if (a.has_n) params.n = a.n;
    if (a.has_k) params.k = a.k;
    if (!a.tree_file.empty())
      params.tree = load_graph_path(a.tree_file, "edgelist");
    g = wdegen::named_graph(a.name, params);
  } else {
    throw std::invalid_argument("give a construction name or --trace-file");
  }
  if (a.as_json) {
    json edges = json::array();
    for (auto [u, v] : wdegen::edges_of(g)) edges.push_back({u, v});
    json out = {{"schema", 1},
                {"n", g.order()},
                {"m", g.edge_count()},
                {"graph6", wdegen::to_graph6(g)},
                {"edges", edges}};
    if (!a.name.empty()) out["name"] = a.name;
    std::cout << out.dump(2) << '\n';
    return 0;
  }
  emit_graph(std::cout, g, a.format);
  return 0;
}

struct BoundsArgs {
  int n = 0;
  int k = 0;
  bool as_json = false;
};

int run_bounds(const BoundsArgs& a) {
  const wdegen::BoundsReport r = wdegen::bounds_report(a.n, a.k);
  if (a.as_json) {
    json out = {{"schema", 1},
                {"n", r.n},
                {"k", r.k},
                {"D", r.D},
                {"residue", r.residue},
                {"lower", r.lower},
                {"upperSum", r.upper_sum},
                {"upperClosed", r.upper_closed},
                {"coincide", r.coincide}};
    out["statusBound"] =
        r.status_bound_value ? json(*r.status_bound_value) : json(nullptr);
    std::cout << out.dump(2) << '\n';
    return 0;
  }
  std::cout << "n=" << r.n << " k=" << r.k << " D=" << r.D << " residue=" << r.residue
            << '\n';
  std::cout << "lower=" << r.lower << " upperSum=" << r.upper_sum
            << " upperClosed=" << r.upper_closed;
  if (r.status_bound_value) std::cout << " statusBound=" << *r.status_bound_value;
  std::cout << " coincide=" << (r.coincide ? "true" : "false") << '\n';
  return 0;
}

struct SequenceArgs {
  int k = 0;
  int terms = 10;
  bool as_json = false;
};

int run_sequence(const SequenceArgs& a) {
  const std::vector<std::int64_t> vals = wdegen::sequence(a.k, a.terms);
  if (a.as_json) {
    json out = {{"schema", 1}, {"k", a.k}, {"terms", vals}};
    std::cout << out.dump(2) << '\n';
    return 0;
  }
  std::cout << "k=" << a.k << ":";
  for (std::int64_t v : vals) std::cout << ' ' << v;
  std::cout << '\n';
  return 0;
}

struct EnumerateArgs {
  int n = 0;
  int k = 0;
  std::string cls = "ktree";
  int ceiling = 0;
  int workers = 0;
  bool show_extremal = false;
  bool as_json = false;
};

int run_enumerate(const EnumerateArgs& a) {
  wdegen::EnumerationOptions opts;
  if (a.ceiling > 0) opts.ceiling = a.ceiling;
  opts.workers = a.workers;
  const wdegen::GraphClass cls = a.cls == "mkd"
                                     ? wdegen::GraphClass::maximal_k_degenerate
                                     : wdegen::GraphClass::k_tree;
  const wdegen::EnumerationSummary s =
      cls == wdegen::GraphClass::k_tree
          ? wdegen::enumerate_k_trees(a.n, a.k, opts)
          : wdegen::enumerate_maximal_k_degenerate(a.n, a.k, opts);
  auto g6_list = [](const std::vector<wdegen::CanonicalForm>& forms) {
    json out = json::array();
    for (const wdegen::CanonicalForm& f : forms)
      out.push_back(wdegen::to_graph6(wdegen::graph_from_canonical(f)));
    return out;
  };
  if (a.as_json) {
    json hist = json::object();
    for (auto [diam, count] : s.diameter_histogram)
      hist[std::to_string(diam)] = count;
    json out = {{"schema", 1},
                {"class", a.cls},
                {"n", s.n},
                {"k", s.k},
                {"count", s.count},
                {"wienerMin", s.wiener_min},
                {"wienerMax", s.wiener_max},
                {"minimizers", g6_list(s.minimizers)},
                {"maximizers", g6_list(s.maximizers)},
                {"diameterHistogram", hist}};
    std::cout << out.dump(2) << '\n';
    return 0;
  }
  std::cout << "class=" << a.cls << " n=" << s.n << " k=" << s.k << '\n';
  std::cout << "count=" << s.count << " wienerMin=" << s.wiener_min
            << " wienerMax=" << s.wiener_max << '\n';
  std::cout << "diameters:";
  for (auto [diam, count] : s.diameter_histogram)
    std::cout << ' ' << diam << ':' << count;
  std::cout << '\n';
  if (a.show_extremal) {
    std::cout << "minimizers (" << s.minimizers.size() << "):\n";
    for (const auto& f : s.minimizers)
      std::cout << "  " << wdegen::to_graph6(wdegen::graph_from_canonical(f)) << '\n';
    std::cout << "maximizers (" << s.maximizers.size() << "):\n";
    for (const auto& f : s.maximizers)
      std::cout << "  " << wdegen::to_graph6(wdegen::graph_from_canonical(f)) << '\n';
  } else {
    std::cout << "minimizers=" << s.minimizers.size()
              << " maximizers=" << s.maximizers.size() << '\n';
  }
  return 0;
}

struct VerifyArgs {
  std::string suite = "all";
  int k = 0;
  int max_n = 0;
  int workers = 0;
  bool strict = false;
  bool as_json = false;
};

int run_verify(const VerifyArgs& a) {
  wdegen::VerifyOptions opts;
  if (a.k > 0) opts.k = a.k;
  if (a.max_n > 0) opts.max_n = a.max_n;
  opts.strict = a.strict;
  opts.workers = a.workers;
  const wdegen::VerificationReport report = wdegen::run_suite(a.suite, opts);
  int verified = 0, refuted = 0, skipped = 0;
  for (const wdegen::ClaimResult& c : report.claims) {
    switch (c.status) {
      case wdegen::ClaimStatus::verified: ++verified; break;
      case wdegen::ClaimStatus::refuted: ++refuted; break;
      case wdegen::ClaimStatus::skipped: ++skipped; break;
    }
  }
  if (a.as_json) {
    std::cout << wdegen::report_to_json(report).dump(2) << '\n';
  } else {
    std::cout << "suite=" << report.suite << '\n';
    for (const wdegen::ClaimResult& c : report.claims) {
      std::ostringstream line;
      line << std::left << std::setw(22) << c.id << ' ' << std::setw(9)
           << wdegen::claim_status_name(c.status) << ' ' << c.detail;
      std::cout << line.str();
      if (!c.witness_g6.empty()) std::cout << " witness=" << c.witness_g6;
      std::cout << " (" << std::fixed << std::setprecision(2) << c.seconds << "s)\n";
    }
    std::cout << "result: verified=" << verified << " refuted=" << refuted
              << " skipped=" << skipped << " (" << std::fixed << std::setprecision(2)
              << report.runtime_seconds << "s)\n";
  }
  if (refuted > 0) return 1;
  if (a.strict && skipped > 0) return 1;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Wiener-index bounds for maximal k-degenerate graphs and k-trees"};
  app.require_subcommand(1);

  WienerArgs wa;
  CLI::App* wiener = app.add_subcommand("wiener", "compute distance invariants of a graph");
  wiener->add_option("input", wa.input, "input file, or - for stdin")->capture_default_str();
  wiener->add_option("--format", wa.format, "input format")
      ->check(CLI::IsMember({"edgelist", "g6"}))
      ->capture_default_str();
  wiener->add_flag("--json", wa.as_json, "emit JSON");

  GenerateArgs ga;
  CLI::App* generate = app.add_subcommand("generate", "emit a named graph construction");
  generate->add_option("name", ga.name, "construction name (see README)");
  auto* gen_n = generate->add_option("--n", ga.n, "order parameter");
  auto* gen_k = generate->add_option("--k", ga.k, "degeneracy parameter");
  generate->add_option("--tree-file", ga.tree_file, "edge-list file of a tree (tree-join)");
  generate->add_option("--trace-file", ga.trace_file, "JSON construction trace");
  generate->add_option("--format", ga.format, "output format")
      ->check(CLI::IsMember({"edgelist", "g6"}))
      ->capture_default_str();
  generate->add_flag("--json", ga.as_json, "emit JSON");

  BoundsArgs ba;
  CLI::App* bounds = app.add_subcommand("bounds", "evaluate the Wiener bounds at (n, k)");
  bounds->add_option("--n", ba.n, "order")->required();
  bounds->add_option("--k", ba.k, "degeneracy")->required();
  bounds->add_flag("--json", ba.as_json, "emit JSON");

  SequenceArgs sa;
  CLI::App* seq = app.add_subcommand("sequence", "maximum-Wiener sequence for fixed k");
  seq->add_option("--k", sa.k, "degeneracy")->required();
  seq->add_option("--terms", sa.terms, "number of terms (n = 1..terms)")
      ->capture_default_str();
  seq->add_flag("--json", sa.as_json, "emit JSON");

  EnumerateArgs ea;
  CLI::App* enumerate =
      app.add_subcommand("enumerate", "isomorph-free census of a graph class");
  enumerate->add_option("--n", ea.n, "order")->required();
  enumerate->add_option("--k", ea.k, "degeneracy")->required();
  enumerate->add_option("--class", ea.cls, "graph class")
      ->check(CLI::IsMember({"ktree", "mkd"}))
      ->capture_default_str();
  enumerate->add_option("--ceiling", ea.ceiling, "override the order budget");
  enumerate->add_option("--workers", ea.workers, "worker threads (0 = env or 1)");
  enumerate->add_flag("--show-extremal", ea.show_extremal,
                      "list extremal classes as graph6");
  enumerate->add_flag("--json", ea.as_json, "emit JSON");

  VerifyArgs va;
  CLI::App* verify = app.add_subcommand("verify", "run a claim-verification suite");
  verify->add_option("suite", va.suite, "formulas|sharpness|prop4|thm5|cor2|all")
      ->check(CLI::IsMember(wdegen::suite_names()))
      ->capture_default_str();
  verify->add_option("--k", va.k, "restrict to one k");
  verify->add_option("--max-n", va.max_n, "cap every order range");
  verify->add_option("--workers", va.workers, "worker threads (0 = env or 1)");
  verify->add_flag("--strict", va.strict, "treat skipped claims as failures");
  verify->add_flag("--json", va.as_json, "emit JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    ga.has_n = gen_n->count() > 0;
    ga.has_k = gen_k->count() > 0;
    if (wiener->parsed()) return run_wiener(wa);
    if (generate->parsed()) return run_generate(ga);
    if (bounds->parsed()) return run_bounds(ba);
    if (seq->parsed()) return run_sequence(sa);
    if (enumerate->parsed()) return run_enumerate(ea);
    if (verify->parsed()) return run_verify(va);
  } catch (const wdegen::GraphFormatError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const wdegen::BudgetError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
  return 0;
}
