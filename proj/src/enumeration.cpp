#include "wienerdegen/enumeration.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <set>
#include <string>
#include <thread>

#include "wienerdegen/bounds.hpp"
#include "wienerdegen/constructions.hpp"
#include "wienerdegen/distance.hpp"

namespace wdegen {

namespace {

int resolve_workers(int requested) {
  if (requested > 0) return std::min(requested, 64);
  if (const char* env = std::getenv("WIENER_DEGEN_THREADS")) {
    const int parsed = std::atoi(env);
    if (parsed >= 1) return std::min(parsed, 64);
  }
  return 1;
}

template <typename Fn>
void for_each_k_subset(int m, int k, Fn&& fn) {
  std::vector<int> pick(k);
  for (int i = 0; i < k; ++i) pick[i] = i;
  if (k > m) return;
  while (true) {
    fn(pick);
    int i = k - 1;
    while (i >= 0 && pick[i] == m - k + i) --i;
    if (i < 0) return;
    ++pick[i];
    for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
}

bool is_clique(const Graph& g, const std::vector<int>& vs) {
  for (std::size_t a = 0; a < vs.size(); ++a)
    for (std::size_t b = a + 1; b < vs.size(); ++b)
      if (!g.has_edge(vs[a], vs[b])) return false;
  return true;
}

Graph extend(const Graph& parent, const std::vector<int>& roots) {
  std::vector<std::pair<int, int>> edges = edges_of(parent);
  const int v = parent.order();
  for (int r : roots) edges.emplace_back(r, v);
  return Graph::from_edge_list(v + 1, edges);
}

// All isomorphism classes one order up from the given representatives.
std::set<CanonicalForm> extend_range(const std::vector<ClassRep>& prev, std::size_t lo,
                                     std::size_t hi, int k, GraphClass cls) {
  std::set<CanonicalForm> found;
  for (std::size_t i = lo; i < hi; ++i) {
    const Graph& parent = prev[i].graph;
    for_each_k_subset(parent.order(), k, [&](const std::vector<int>& roots) {
      if (cls == GraphClass::k_tree && !is_clique(parent, roots)) return;
      found.insert(canonical_form(extend(parent, roots)));
    });
  }
  return found;
}

}  // namespace

int default_ceiling(int k) {
  switch (k) {
    case 1: return 16;
    case 2: return 12;
    case 3: return 11;
    default: return std::min(2 * k + 2, 18);
  }
}

std::vector<std::vector<ClassRep>> enumerate_levels(int n, int k, GraphClass cls,
                                                    const EnumerationOptions& opts) {
  if (k < 1) throw std::invalid_argument("enumeration needs k >= 1");
  if (n < k) throw std::invalid_argument("enumeration needs n >= k");
  const int ceiling = opts.ceiling.value_or(default_ceiling(k));
  if (n > ceiling)
    throw BudgetError("enumeration to order " + std::to_string(n) +
                      " exceeds the ceiling " + std::to_string(ceiling) +
                      "; raise the ceiling explicitly to go further");
  const int workers = resolve_workers(opts.workers);

  std::vector<std::vector<ClassRep>> levels;
  {
    CanonicalForm base = canonical_form(complete_graph(k));
    Graph g = graph_from_canonical(base);
    levels.push_back({ClassRep{std::move(base), std::move(g)}});
  }
  for (int m = k + 1; m <= n; ++m) {
    const std::vector<ClassRep>& prev = levels.back();
    std::set<CanonicalForm> merged;
    if (workers == 1 || prev.size() < 2) {
      merged = extend_range(prev, 0, prev.size(), k, cls);
    } else {
      const int used = std::min<int>(workers, static_cast<int>(prev.size()));
      std::vector<std::set<CanonicalForm>> parts(used);
      std::vector<std::exception_ptr> errors(used);
      std::vector<std::thread> threads;
      threads.reserve(used);
      for (int w = 0; w < used; ++w) {
        const std::size_t lo = prev.size() * w / used;
        const std::size_t hi = prev.size() * (w + 1) / used;
        threads.emplace_back([&, w, lo, hi] {
          try {
            parts[w] = extend_range(prev, lo, hi, k, cls);
          } catch (...) {
            errors[w] = std::current_exception();
          }
        });
      }
      for (auto& t : threads) t.join();
      for (auto& e : errors)
        if (e) std::rethrow_exception(e);
      for (auto& part : parts) merged.merge(part);
    }
    std::vector<ClassRep> next;
    next.reserve(merged.size());
    for (const CanonicalForm& form : merged)
      next.push_back(ClassRep{form, graph_from_canonical(form)});
    levels.push_back(std::move(next));
  }
  return levels;
}

namespace {

EnumerationSummary summarize(int n, int k, GraphClass cls,
                             const std::vector<ClassRep>& reps) {
  EnumerationSummary s;
  s.n = n;
  s.k = k;
  s.graph_class = cls;
  s.count = static_cast<std::int64_t>(reps.size());
  std::vector<std::int64_t> wieners;
  wieners.reserve(reps.size());
  for (const ClassRep& rep : reps) {
    const DistanceSummary d = distances(rep.graph);
    if (!d.connected)
      throw std::logic_error("enumerated graph is disconnected: " + to_graph6(rep.graph));
    if (wieners.empty() || d.wiener < s.wiener_min) s.wiener_min = d.wiener;
    if (wieners.empty() || d.wiener > s.wiener_max) s.wiener_max = d.wiener;
    wieners.push_back(d.wiener);
    s.diameter_histogram[d.diameter] += 1;
  }
  for (std::size_t i = 0; i < reps.size(); ++i) {
    if (wieners[i] == s.wiener_min) s.minimizers.push_back(reps[i].form);
    if (wieners[i] == s.wiener_max) s.maximizers.push_back(reps[i].form);
  }
  // reps arrive sorted by form, so these lists are already sorted.
  return s;
}

}  // namespace

EnumerationSummary enumerate_k_trees(int n, int k, const EnumerationOptions& opts) {
  const auto levels = enumerate_levels(n, k, GraphClass::k_tree, opts);
  return summarize(n, k, GraphClass::k_tree, levels.back());
}

EnumerationSummary enumerate_maximal_k_degenerate(int n, int k,
                                                  const EnumerationOptions& opts) {
  const auto levels = enumerate_levels(n, k, GraphClass::maximal_k_degenerate, opts);
  return summarize(n, k, GraphClass::maximal_k_degenerate, levels.back());
}

EnumerationSummary extremal_census(int n, int k, GraphClass cls,
                                   const EnumerationOptions& opts) {
  const auto levels = enumerate_levels(n, k, cls, opts);
  const std::vector<ClassRep>& reps = levels.back();
  EnumerationSummary s = summarize(n, k, cls, reps);
  if (s.wiener_min != lower_bound(n, k))
    throw std::logic_error("census: minimum Wiener index misses the lower bound");
  if (n >= 2 && s.wiener_max != upper_bound_sum(n, k))
    throw std::logic_error("census: maximum Wiener index misses the upper bound");
  for (const ClassRep& rep : reps) {
    const DistanceSummary d = distances(rep.graph);
    if ((d.wiener == s.wiener_min) != (d.diameter <= 2))
      throw std::logic_error(
          "census: lower-bound equality and diameter <= 2 disagree on " +
          to_graph6(rep.graph));
  }
  return s;
}

}  // namespace wdegen
