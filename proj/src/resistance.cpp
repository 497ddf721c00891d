#include "resistance.hpp"

namespace drd {

namespace {

void require_connected(const Graph& g) {
  if (!is_connected(g))
    throw Error(ErrorCode::Disconnected,
                "effective resistance is undefined across components");
}

// Inverse of the Laplacian with row/column 0 removed. Exact arithmetic needs
// no numerical pivoting; the reduced Laplacian of a connected graph is
// nonsingular, so the first nonzero pivot in column order always exists.
std::vector<std::vector<Rational>> reduced_laplacian_inverse(const Graph& g) {
  int k = g.vertex_count() - 1;
  std::vector<std::vector<Rational>> a(static_cast<size_t>(k)),
      inv(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) {
    a[static_cast<size_t>(i)].assign(static_cast<size_t>(k), Rational(0));
    inv[static_cast<size_t>(i)].assign(static_cast<size_t>(k), Rational(0));
    a[static_cast<size_t>(i)][static_cast<size_t>(i)] = g.degree(i + 1);
    inv[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;
    for (int w : g.neighbors(i + 1))
      if (w >= 1) a[static_cast<size_t>(i)][static_cast<size_t>(w - 1)] = -1;
  }
  for (int col = 0; col < k; ++col) {
    int pivot = col;
    while (pivot < k && a[static_cast<size_t>(pivot)][static_cast<size_t>(col)] == 0)
      ++pivot;
    if (pivot == k)
      throw Error(ErrorCode::Disconnected, "singular reduced Laplacian");
    std::swap(a[static_cast<size_t>(pivot)], a[static_cast<size_t>(col)]);
    std::swap(inv[static_cast<size_t>(pivot)], inv[static_cast<size_t>(col)]);
    Rational p = a[static_cast<size_t>(col)][static_cast<size_t>(col)];
    for (int j = 0; j < k; ++j) {
      a[static_cast<size_t>(col)][static_cast<size_t>(j)] /= p;
      inv[static_cast<size_t>(col)][static_cast<size_t>(j)] /= p;
    }
    for (int row = 0; row < k; ++row) {
      if (row == col) continue;
      Rational f = a[static_cast<size_t>(row)][static_cast<size_t>(col)];
      if (f == 0) continue;
      for (int j = 0; j < k; ++j) {
        a[static_cast<size_t>(row)][static_cast<size_t>(j)] -=
            f * a[static_cast<size_t>(col)][static_cast<size_t>(j)];
        inv[static_cast<size_t>(row)][static_cast<size_t>(j)] -=
            f * inv[static_cast<size_t>(col)][static_cast<size_t>(j)];
      }
    }
  }
  return inv;
}

}  // namespace

ResistanceMatrix resistance_matrix(const Graph& g) {
  if (g.vertex_count() < 1)
    throw Error(ErrorCode::InvalidArgument, "empty graph");
  require_connected(g);
  int n = g.vertex_count();
  ResistanceMatrix r(n);
  if (n == 1) return r;
  auto m = reduced_laplacian_inverse(g);
  auto entry = [&m](int u, int v) -> Rational {
    if (u == 0 || v == 0) return Rational(0);
    return m[static_cast<size_t>(u - 1)][static_cast<size_t>(v - 1)];
  };
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      Rational val = entry(u, u) + entry(v, v) - 2 * entry(u, v);
      r.at(u, v) = val;
      r.at(v, u) = val;
    }
  return r;
}

Rational effective_resistance(const Graph& g, int u, int v) {
  if (u < 0 || u >= g.vertex_count() || v < 0 || v >= g.vertex_count())
    throw Error(ErrorCode::IndexOutOfRange, "vertex out of range");
  if (u == v) return Rational(0);
  return resistance_matrix(g).at(u, v);
}

InvariantReport invariants(const Graph& g) {
  require_connected(g);
  int n = g.vertex_count();
  ResistanceMatrix r = resistance_matrix(g);
  auto hops = shortest_distances(g);
  InvariantReport rep;
  rep.wiener = 0;
  rep.kirchhoff = 0;
  rep.degree_distance = 0;
  rep.degree_resistance = 0;
  rep.kf_v.assign(static_cast<size_t>(n), Rational(0));
  rep.d_v.assign(static_cast<size_t>(n), Rational(0));
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      int dsum = g.degree(u) + g.degree(v);
      const Rational& res = r.at(u, v);
      int hop = hops[static_cast<size_t>(u)][static_cast<size_t>(v)];
      rep.wiener += hop;
      rep.kirchhoff += res;
      rep.degree_distance += dsum * Rational(hop);
      rep.degree_resistance += dsum * res;
      rep.kf_v[static_cast<size_t>(u)] += res;
      rep.kf_v[static_cast<size_t>(v)] += res;
      rep.d_v[static_cast<size_t>(u)] += g.degree(v) * res;
      rep.d_v[static_cast<size_t>(v)] += g.degree(u) * res;
    }
  return rep;
}

CycleClosedForms cycle_closed_forms(int k) {
  if (k < 3) throw Error(ErrorCode::InvalidCycle, "cycle length must be >= 3");
  long kk = k;
  return {rational(kk * kk * kk - kk, 12), rational(kk * kk * kk - kk, 3),
          rational(kk * kk - 1, 6), rational(kk * kk - 1, 3)};
}

Rational cycle_pair_resistance(int k, int i, int j) {
  if (k < 3) throw Error(ErrorCode::InvalidCycle, "cycle length must be >= 3");
  if (i < 1 || j <= i || j > k)
    throw Error(ErrorCode::IndexOutOfRange, "positions must satisfy 1 <= i < j <= k");
  return rational(static_cast<long>(j - i) * (k + i - j), k);
}

Rational compose_identified(const Graph& g1, int u1, const Graph& g2, int u2) {
  require_connected(g1);
  require_connected(g2);
  InvariantReport a = invariants(g1);
  InvariantReport b = invariants(g2);
  long n1 = g1.vertex_count(), n2 = g2.vertex_count();
  long m1 = g1.edge_count(), m2 = g2.edge_count();
  return a.degree_resistance + b.degree_resistance +
         2 * m2 * a.kf_v[static_cast<size_t>(u1)] +
         2 * m1 * b.kf_v[static_cast<size_t>(u2)] +
         (n2 - 1) * a.d_v[static_cast<size_t>(u1)] +
         (n1 - 1) * b.d_v[static_cast<size_t>(u2)];
}

}  // namespace drd
