#include "families.hpp"

#include <json.hpp>

#include <algorithm>

namespace drd {

namespace {

void check_family_params(int n, int p, int q) {
  if (p < 3 || q < 3)
    throw Error(ErrorCode::InvalidCycle, "cycle lengths must be >= 3");
  if (n < p + q - 1)
    throw Error(ErrorCode::InvalidArgument,
                "need n >= p+q-1, got n=" + std::to_string(n));
}

}  // namespace

Graph make_cycle(int k) {
  if (k < 3) throw Error(ErrorCode::InvalidCycle, "cycle length must be >= 3");
  EdgeList edges;
  for (int i = 0; i < k; ++i) edges.emplace_back(i, (i + 1) % k);
  return Graph(k, edges);
}

Graph make_path(int k) {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "path needs >= 1 vertex");
  EdgeList edges;
  for (int i = 0; i + 1 < k; ++i) edges.emplace_back(i, i + 1);
  return Graph(k, edges);
}

Graph make_S(int n, int p, int q) {
  check_family_params(n, p, q);
  EdgeList edges;
  // First cycle on 0..p-1 with the shared vertex at 0.
  for (int i = 0; i < p; ++i) edges.emplace_back(i, (i + 1) % p);
  // Second cycle through 0 and p..p+q-2.
  edges.emplace_back(0, p);
  for (int j = p; j < p + q - 2; ++j) edges.emplace_back(j, j + 1);
  edges.emplace_back(p + q - 2, 0);
  // Pendants at the shared vertex.
  for (int v = p + q - 1; v < n; ++v) edges.emplace_back(0, v);
  return Graph(n, edges);
}

Graph make_P(int n, int p, int q) {
  check_family_params(n, p, q);
  int m = n + 1 - p - q;
  if (m == 0) return make_S(n, p, q);
  EdgeList edges;
  for (int i = 0; i < p; ++i) edges.emplace_back(i, (i + 1) % p);
  for (int j = 0; j < q; ++j) edges.emplace_back(p + j, p + (j + 1) % q);
  // Path of m edges from vertex 0 to vertex p through p+q..p+q+m-2.
  int prev = 0;
  for (int k = 0; k < m - 1; ++k) {
    edges.emplace_back(prev, p + q + k);
    prev = p + q + k;
  }
  edges.emplace_back(prev, p);
  return Graph(n, edges);
}

Graph make_B(const BicyclicShape& shape) {
  int p = shape.p, q = shape.q, m = shape.m;
  if (p < 3 || q < 3)
    throw Error(ErrorCode::InvalidCycle, "cycle lengths must be >= 3");
  if (m < 0) throw Error(ErrorCode::InvalidArgument, "negative path length");
  int base_n = p + q + m - 1;
  // make_P(base_n, p, q) has joining-path length exactly m.
  Graph base = make_P(base_n, p, q);

  auto role_vertex = [&](const std::string& at) -> int {
    auto colon = at.find(':');
    if (colon == std::string::npos)
      throw Error(ErrorCode::ParseError, "malformed attachment role: " + at);
    std::string kind = at.substr(0, colon);
    int idx;
    try {
      idx = std::stoi(at.substr(colon + 1));
    } catch (const std::exception&) {
      throw Error(ErrorCode::ParseError, "malformed attachment role: " + at);
    }
    if (kind == "c1") {
      if (idx < 0 || idx >= p)
        throw Error(ErrorCode::IndexOutOfRange, "cycle-1 position " + at);
      return idx;
    }
    if (kind == "c2") {
      if (idx < 0 || idx >= q)
        throw Error(ErrorCode::IndexOutOfRange, "cycle-2 position " + at);
      if (m == 0) return idx == 0 ? 0 : p + idx - 1;
      return p + idx;
    }
    if (kind == "path") {
      if (idx < 1 || idx > m - 1)
        throw Error(ErrorCode::IndexOutOfRange, "path position " + at);
      return p + q + idx - 1;
    }
    throw Error(ErrorCode::ParseError, "unknown attachment role: " + at);
  };

  EdgeList edges = base.edges();
  int next = base_n;
  for (const auto& att : shape.attachments) {
    int root = role_vertex(att.at);
    int t = 0;
    for (auto [u, v] : att.tree_edges) t = std::max({t, u, v});
    if (static_cast<int>(att.tree_edges.size()) != t)
      throw Error(ErrorCode::PreconditionViolation,
                  "attachment at " + att.at + " is not a tree");
    // Map tree label 0 to the base vertex, labels 1..t to fresh vertices,
    // then let Graph validation plus a connectivity check reject non-trees.
    std::vector<char> seen(static_cast<size_t>(t) + 1, 0);
    seen[0] = 1;
    auto map_label = [&](int label) {
      if (label < 0 || label > t)
        throw Error(ErrorCode::IndexOutOfRange, "tree label out of range");
      seen[static_cast<size_t>(label)] = 1;
      return label == 0 ? root : next + label - 1;
    };
    for (auto [u, v] : att.tree_edges) edges.emplace_back(map_label(u), map_label(v));
    if (std::find(seen.begin(), seen.end(), char(0)) != seen.end())
      throw Error(ErrorCode::PreconditionViolation,
                  "attachment at " + att.at + " skips a tree label");
    next += t;
  }
  Graph g(next, edges);
  if (!is_connected(g))
    throw Error(ErrorCode::PreconditionViolation,
                "attachment trees must be connected to their roots");
  return g;
}

BicyclicShape shape_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("bad shape JSON: ") + e.what());
  }
  BicyclicShape shape;
  try {
    shape.p = j.at("p").get<int>();
    shape.q = j.at("q").get<int>();
    shape.m = j.at("m").get<int>();
    if (j.contains("attachments")) {
      for (const auto& a : j.at("attachments")) {
        BicyclicShape::Attachment att;
        att.at = a.at("at").get<std::string>();
        for (const auto& e : a.at("tree_edges"))
          att.tree_edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
        shape.attachments.push_back(std::move(att));
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("bad shape JSON: ") + e.what());
  }
  return shape;
}

Rational closed_form_S(int n, int p, int q) {
  check_family_params(n, p, q);
  Rational P(p), Q(q), N(n);
  Rational val = -P * P * P - Q * Q * Q + (2 * N + 1) * (P * P + Q * Q) +
                 (1 - 9 * N) * (P + Q) + 9 * N * N + 5 * N - 2;
  return val / 3;
}

PClosedForm closed_form_P(int n, int p, int q) {
  check_family_params(n, p, q);
  Rational P(p), Q(q), N(n), M(n + 1 - p - q);
  Rational raw = P * P * P + Q * Q * Q + (2 * Q + 2 * M - 1) * P * P +
                 (2 * P + 2 * M - 1) * Q * Q +
                 (6 * M * M - 3 * M - 3) * (P + Q) + 12 * M * P * Q +
                 2 * M * M * M - 3 * M * M - 3 * M + 2;
  Rational eq2 = 3 * P * P * P + 3 * Q * Q * Q + (4 * N + 5) * (P * P + Q * Q) +
                 (3 * N + 3) * (P + Q) + 2 * N * N * N + 3 * N * N - 3 * N - 2;
  return {raw / 3, eq2 / 3};
}

Rational closed_form_S33(int n) {
  if (n < 5) throw Error(ErrorCode::InvalidArgument, "need n >= 5");
  Rational N(n);
  return 3 * N * N - rational(13L * n, 3) - rational(32, 3);
}

Rational closed_form_P33(int n) {
  if (n < 5) throw Error(ErrorCode::InvalidArgument, "need n >= 5");
  Rational N(n);
  return rational(2, 3) * N * N * N + N * N - 19 * N + rational(88, 3);
}

}  // namespace drd
