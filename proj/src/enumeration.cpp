#include "enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "families.hpp"
#include "resistance.hpp"

namespace drd {

namespace {

constexpr int kMaxCanonical = 10;

// All permutations that keep each refinement class fixed, as segment
// permutations of `slots`. Calls fn for every arrangement.
void for_each_class_permutation(std::vector<int>& slots,
                                const std::vector<size_t>& class_ends,
                                size_t class_index,
                                const std::function<void()>& fn) {
  if (class_index == class_ends.size()) {
    fn();
    return;
  }
  size_t begin = class_index == 0 ? 0 : class_ends[class_index - 1];
  size_t end = class_ends[class_index];
  std::sort(slots.begin() + static_cast<long>(begin),
            slots.begin() + static_cast<long>(end));
  do {
    for_each_class_permutation(slots, class_ends, class_index + 1, fn);
  } while (std::next_permutation(slots.begin() + static_cast<long>(begin),
                                 slots.begin() + static_cast<long>(end)));
}

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
  int n = g.vertex_count();
  if (n > kMaxCanonical)
    throw Error(ErrorCode::InvalidArgument,
                "exhaustive canonicalization capped at n = 10");
  // Refine by degree, then by sorted neighbor degrees; both are preserved by
  // isomorphism, so the minimum over class-respecting permutations is a
  // complete invariant.
  std::vector<std::pair<std::vector<int>, int>> keyed(static_cast<size_t>(n));
  for (int v = 0; v < n; ++v) {
    std::vector<int> key{g.degree(v)};
    std::vector<int> nd;
    for (int w : g.neighbors(v)) nd.push_back(g.degree(w));
    std::sort(nd.begin(), nd.end());
    key.insert(key.end(), nd.begin(), nd.end());
    keyed[static_cast<size_t>(v)] = {std::move(key), v};
  }
  std::sort(keyed.begin(), keyed.end());
  std::vector<int> slots(static_cast<size_t>(n));
  std::vector<size_t> class_ends;
  for (size_t i = 0; i < keyed.size(); ++i) {
    slots[i] = keyed[i].second;
    if (i + 1 == keyed.size() || keyed[i + 1].first != keyed[i].first)
      class_ends.push_back(i + 1);
  }
  std::vector<std::uint16_t> adj(static_cast<size_t>(n), 0);
  for (auto [u, v] : g.edges()) {
    adj[static_cast<size_t>(u)] |= static_cast<std::uint16_t>(1u << v);
    adj[static_cast<size_t>(v)] |= static_cast<std::uint16_t>(1u << u);
  }
  CanonicalForm best = ~0ull;
  for_each_class_permutation(slots, class_ends, 0, [&] {
    CanonicalForm bits = 0;
    int shift = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j, ++shift)
        if (adj[static_cast<size_t>(slots[static_cast<size_t>(i)])] &
            (1u << slots[static_cast<size_t>(j)]))
          bits |= 1ull << shift;
    best = std::min(best, bits);
  });
  return best;
}

namespace {

struct KEdges {
  std::vector<std::pair<int, int>> all;  // edges of K_n
};

KEdges complete_edges(int n) {
  KEdges k;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) k.all.emplace_back(u, v);
  return k;
}

bool subset_connected(int n, const EdgeList& edges) {
  static thread_local std::vector<int> parent;
  parent.assign(static_cast<size_t>(n), -1);
  auto find = [&](int x) {
    while (parent[static_cast<size_t>(x)] >= 0) x = parent[static_cast<size_t>(x)];
    return x;
  };
  int components = n;
  for (auto [u, v] : edges) {
    int a = find(u), b = find(v);
    if (a != b) {
      parent[static_cast<size_t>(a)] = b;
      --components;
    }
  }
  return components == 1;
}

// Light classification: the caller guarantees connected with m = n+1.
BicyclicKind bicyclic_kind(const Graph& g) {
  TwoCore core = two_core(g);
  return cut_vertices(core.core).empty() ? BicyclicKind::Theta
                                         : BicyclicKind::TwoCycles;
}

void check_enumeration_range(int n, bool allow_large) {
  if (n < 5 || n > 9 || (n == 9 && !allow_large))
    throw Error(ErrorCode::InvalidArgument,
                "enumeration supports 5 <= n <= 8 (n = 9 behind a flag)");
}

// Fraction-free (Bareiss) determinant. The matrices here are positive
// definite Laplacian minors, so no pivoting is ever needed.
long long bareiss_det(std::vector<long long>& a, int k) {
  if (k == 0) return 1;
  long long prev = 1;
  for (int col = 0; col < k - 1; ++col) {
    long long pivot = a[static_cast<size_t>(col) * k + col];
    for (int row = col + 1; row < k; ++row) {
      for (int j = col + 1; j < k; ++j) {
        a[static_cast<size_t>(row) * k + j] =
            (pivot * a[static_cast<size_t>(row) * k + j] -
             a[static_cast<size_t>(row) * k + col] *
                 a[static_cast<size_t>(col) * k + j]) /
            prev;
      }
      a[static_cast<size_t>(row) * k + col] = 0;
    }
    prev = pivot;
  }
  return a[static_cast<size_t>(k - 1) * k + (k - 1)];
}

}  // namespace

Rational degree_resistance_small(const Graph& g) {
  int n = g.vertex_count();
  if (n > 12)
    throw Error(ErrorCode::InvalidArgument,
                "integer minor path is sized for n <= 12");
  if (!is_connected(g))
    throw Error(ErrorCode::Disconnected, "degree resistance needs connectivity");
  std::vector<long long> lap(static_cast<size_t>(n) * n, 0);
  for (int v = 0; v < n; ++v)
    lap[static_cast<size_t>(v) * n + v] = g.degree(v);
  for (auto [u, v] : g.edges()) {
    lap[static_cast<size_t>(u) * n + v] = -1;
    lap[static_cast<size_t>(v) * n + u] = -1;
  }
  std::vector<long long> work;
  auto minor_det = [&](int skip1, int skip2) {
    int k = n - (skip2 >= 0 ? 2 : 1);
    work.assign(static_cast<size_t>(k) * k, 0);
    int ri = 0;
    for (int i = 0; i < n; ++i) {
      if (i == skip1 || i == skip2) continue;
      int cj = 0;
      for (int j = 0; j < n; ++j) {
        if (j == skip1 || j == skip2) continue;
        work[static_cast<size_t>(ri) * k + cj] = lap[static_cast<size_t>(i) * n + j];
        ++cj;
      }
      ++ri;
    }
    return bareiss_det(work, k);
  };
  long long trees = minor_det(0, -1);  // spanning tree count
  long long numerator = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      numerator += static_cast<long long>(g.degree(u) + g.degree(v)) *
                   minor_det(u, v);  // r(u,v) = det L(u,v) / trees
  Rational result(static_cast<long>(numerator), static_cast<long>(trees));
  result.canonicalize();
  return result;
}

void enumerate_bicyclic(
    int n, Population population,
    const std::function<void(const Graph&, BicyclicKind)>& visit,
    bool allow_large) {
  check_enumeration_range(n, allow_large);
  KEdges k = complete_edges(n);
  int total = static_cast<int>(k.all.size());
  int pick = n + 1;
  std::vector<int> idx(static_cast<size_t>(pick));
  for (int i = 0; i < pick; ++i) idx[static_cast<size_t>(i)] = i;
  EdgeList edges(static_cast<size_t>(pick));
  while (true) {
    for (int i = 0; i < pick; ++i)
      edges[static_cast<size_t>(i)] = k.all[static_cast<size_t>(idx[static_cast<size_t>(i)])];
    if (subset_connected(n, edges)) {
      Graph g(n, edges);
      BicyclicKind kind = bicyclic_kind(g);
      if (population == Population::AllBicyclic ||
          kind == BicyclicKind::TwoCycles)
        visit(g, kind);
    }
    int i = pick - 1;
    while (i >= 0 && idx[static_cast<size_t>(i)] == total - pick + i) --i;
    if (i < 0) break;
    ++idx[static_cast<size_t>(i)];
    for (int j = i + 1; j < pick; ++j)
      idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
  }
}

namespace {

struct SearchState {
  long long count = 0;
  long long theta = 0;
  bool any = false;
  Rational min_value, max_value;
  std::map<CanonicalForm, EdgeList> min_attainers, max_attainers;

  void offer(const Graph& g, const Rational& dr) {
    if (!any) {
      any = true;
      min_value = max_value = dr;
      CanonicalForm c = canonical_form(g);
      min_attainers[c] = g.edges();
      max_attainers[c] = g.edges();
      return;
    }
    if (dr < min_value) {
      min_value = dr;
      min_attainers.clear();
    }
    if (dr == min_value) min_attainers.emplace(canonical_form(g), g.edges());
    if (dr > max_value) {
      max_value = dr;
      max_attainers.clear();
    }
    if (dr == max_value) max_attainers.emplace(canonical_form(g), g.edges());
  }

  void merge(SearchState&& other) {
    count += other.count;
    theta += other.theta;
    if (!other.any) return;
    if (!any) {
      any = true;
      min_value = std::move(other.min_value);
      max_value = std::move(other.max_value);
      min_attainers = std::move(other.min_attainers);
      max_attainers = std::move(other.max_attainers);
      return;
    }
    if (other.min_value < min_value) {
      min_value = other.min_value;
      min_attainers = std::move(other.min_attainers);
    } else if (other.min_value == min_value) {
      min_attainers.merge(other.min_attainers);
    }
    if (other.max_value > max_value) {
      max_value = other.max_value;
      max_attainers = std::move(other.max_attainers);
    } else if (other.max_value == max_value) {
      max_attainers.merge(other.max_attainers);
    }
  }
};

// Enumerates the combinations whose first edge index is claimed from the
// shared counter; the merge step keeps the result order-independent.
SearchState search_worker(int n, Population population,
                          std::atomic<int>& next_first) {
  KEdges k = complete_edges(n);
  int total = static_cast<int>(k.all.size());
  int pick = n + 1;
  SearchState state;
  std::vector<int> idx(static_cast<size_t>(pick));
  EdgeList edges(static_cast<size_t>(pick));
  for (int first = next_first.fetch_add(1); first <= total - pick;
       first = next_first.fetch_add(1)) {
    for (int i = 0; i < pick; ++i) idx[static_cast<size_t>(i)] = first + i;
    while (true) {
      for (int i = 0; i < pick; ++i)
        edges[static_cast<size_t>(i)] =
            k.all[static_cast<size_t>(idx[static_cast<size_t>(i)])];
      if (subset_connected(n, edges)) {
        Graph g(n, edges);
        BicyclicKind kind = bicyclic_kind(g);
        bool in_population = population == Population::AllBicyclic ||
                             kind == BicyclicKind::TwoCycles;
        if (in_population) {
          if (kind == BicyclicKind::Theta) ++state.theta;
          ++state.count;
          state.offer(g, degree_resistance_small(g));
        }
      }
      int i = pick - 1;
      while (i >= 1 && idx[static_cast<size_t>(i)] == total - pick + i) --i;
      if (i < 1) break;  // first index is fixed per claim
      ++idx[static_cast<size_t>(i)];
      for (int j = i + 1; j < pick; ++j)
        idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
    }
  }
  return state;
}

}  // namespace

ExtremalReport extremal_search(int n, Population population, int jobs,
                               bool allow_large) {
  check_enumeration_range(n, allow_large);
  if (jobs < 1) throw Error(ErrorCode::InvalidArgument, "jobs must be >= 1");
  std::atomic<int> next_first{0};
  std::vector<SearchState> states(static_cast<size_t>(jobs));
  if (jobs == 1) {
    states[0] = search_worker(n, population, next_first);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(static_cast<size_t>(jobs));
    for (int t = 0; t < jobs; ++t)
      threads.emplace_back([&, t] {
        states[static_cast<size_t>(t)] = search_worker(n, population, next_first);
      });
    for (auto& th : threads) th.join();
  }
  SearchState merged;
  for (auto& s : states) merged.merge(std::move(s));

  ExtremalReport report;
  report.n = n;
  report.population = population;
  report.count_labeled = merged.count;
  report.theta_count_labeled = merged.theta;
  report.min_value = merged.min_value;
  report.max_value = merged.max_value;
  report.min_attainers = std::move(merged.min_attainers);
  report.max_attainers = std::move(merged.max_attainers);
  report.expected_min = closed_form_S33(n);
  report.expected_max = closed_form_P33(n);
  report.agrees_min = merged.any && report.min_value == report.expected_min;
  report.agrees_max = merged.any && report.max_value == report.expected_max;
  return report;
}

WithinClassReport verify_within_class(int n, int p, int q) {
  if (p > q) std::swap(p, q);
  WithinClassReport report;
  report.n = n;
  report.p = p;
  report.q = q;
  report.coincident = (n == p + q - 1);
  SearchState state;
  enumerate_bicyclic(n, Population::TwoCyclesOnly,
                     [&](const Graph& g, BicyclicKind) {
                       BicyclicClass cls = classify_bicyclic(g);
                       if (cls.p != p || cls.q != q) return;
                       ++state.count;
                       state.offer(g, degree_resistance_small(g));
                     });
  report.count_labeled = state.count;
  report.min_value = state.min_value;
  report.max_value = state.max_value;
  report.min_attainers = std::move(state.min_attainers);
  report.max_attainers = std::move(state.max_attainers);
  CanonicalForm s_form = canonical_form(make_S(n, p, q));
  CanonicalForm p_form = canonical_form(make_P(n, p, q));
  report.min_unique_is_S =
      report.min_attainers.size() == 1 && report.min_attainers.count(s_form) == 1;
  report.max_unique_is_P =
      report.max_attainers.size() == 1 && report.max_attainers.count(p_form) == 1;
  return report;
}

const char* population_name(Population population) {
  return population == Population::TwoCyclesOnly ? "two-cycle" : "all";
}

}  // namespace drd
