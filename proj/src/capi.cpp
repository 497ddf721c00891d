#include "drd.h"

#include <cstring>
#include <json.hpp>
#include <sstream>
#include <string>

#include "enumeration.hpp"
#include "families.hpp"
#include "graph.hpp"
#include "resistance.hpp"
#include "transforms.hpp"
#include "verify.hpp"

using json = nlohmann::ordered_json;

struct drd_graph {
  drd::Graph g;
};

namespace {

thread_local std::string g_last_error;

drd_status fail(drd_status status, const std::string& message) {
  g_last_error = message;
  return status;
}

drd_status from_code(drd::ErrorCode code) {
  switch (code) {
    case drd::ErrorCode::InvalidArgument:
    case drd::ErrorCode::IndexOutOfRange:
    case drd::ErrorCode::SelfLoop:
    case drd::ErrorCode::DuplicateEdge:
    case drd::ErrorCode::InvalidCycle:
    case drd::ErrorCode::CycleTooSmall:
      return DRD_ERR_INVALID_ARGUMENT;
    case drd::ErrorCode::Disconnected:
    case drd::ErrorCode::EmptyCore:
    case drd::ErrorCode::PreconditionViolation:
    case drd::ErrorCode::EdgeAbsent:
    case drd::ErrorCode::EdgePresent:
    case drd::ErrorCode::Disconnects:
      return DRD_ERR_PRECONDITION;
    case drd::ErrorCode::ParseError:
      return DRD_ERR_PARSE;
    case drd::ErrorCode::IoError:
      return DRD_ERR_IO;
  }
  return DRD_ERR_INTERNAL;
}

// Runs the body, converting exceptions into status codes and messages.
template <typename F>
drd_status guarded(F&& body) {
  try {
    return body();
  } catch (const drd::Error& e) {
    return fail(from_code(e.code()),
                std::string(drd::error_code_name(e.code())) + ": " + e.what());
  } catch (const std::exception& e) {
    return fail(DRD_ERR_INTERNAL, e.what());
  }
}

char* copy_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

drd_status emit(char** out, const std::string& s) {
  if (!out) return fail(DRD_ERR_INVALID_ARGUMENT, "null output pointer");
  *out = copy_string(s);
  return DRD_OK;
}

drd_status emit_graph(drd_graph** out, drd::Graph g) {
  if (!out) return fail(DRD_ERR_INVALID_ARGUMENT, "null output pointer");
  *out = new drd_graph{std::move(g)};
  return DRD_OK;
}

json edges_json(const drd::EdgeList& edges) {
  json out = json::array();
  for (auto [u, v] : edges) out.push_back(json::array({u, v}));
  return out;
}

json graph_json(const drd::Graph& g) {
  return json{{"n", g.vertex_count()}, {"edges", edges_json(g.edges())}};
}

json rationals_json(const std::vector<drd::Rational>& values) {
  json out = json::array();
  for (const drd::Rational& r : values) out.push_back(drd::to_string(r));
  return out;
}

json invariants_json(const drd::Graph& g) {
  drd::InvariantReport inv = drd::invariants(g);
  return json{{"wiener", drd::to_string(inv.wiener)},
              {"kirchhoff", drd::to_string(inv.kirchhoff)},
              {"degree_distance", drd::to_string(inv.degree_distance)},
              {"degree_resistance", drd::to_string(inv.degree_resistance)},
              {"kf_v", rationals_json(inv.kf_v)},
              {"d_v", rationals_json(inv.d_v)}};
}

json attainers_json(const std::map<drd::CanonicalForm, drd::EdgeList>& att) {
  json out = json::array();
  for (const auto& [form, edges] : att)
    out.push_back(json{{"canonical_form", form}, {"edges", edges_json(edges)}});
  return out;
}

json extremal_json(const drd::ExtremalReport& r) {
  return json{{"n", r.n},
              {"population", drd::population_name(r.population)},
              {"count_labeled", r.count_labeled},
              {"theta_count_labeled", r.theta_count_labeled},
              {"min_value", drd::to_string(r.min_value)},
              {"max_value", drd::to_string(r.max_value)},
              {"min_attainers", attainers_json(r.min_attainers)},
              {"max_attainers", attainers_json(r.max_attainers)},
              {"expected_min", drd::to_string(r.expected_min)},
              {"expected_max", drd::to_string(r.expected_max)},
              {"agrees_min", r.agrees_min},
              {"agrees_max", r.agrees_max}};
}

json suite_json(const drd::SuiteReport& r) {
  json checks = json::array();
  for (const drd::SuiteCheck& c : r.checks) {
    json failures = json::array();
    for (const std::string& f : c.failures) failures.push_back(f);
    checks.push_back(json{{"name", c.name},
                          {"instances", c.instances},
                          {"strict", c.strict},
                          {"equal", c.equal},
                          {"passed", c.passed},
                          {"failures", failures}});
  }
  return json{{"suite", r.suite}, {"passed", r.passed}, {"checks", checks}};
}

}  // namespace

extern "C" {

const char* drd_last_error(void) { return g_last_error.c_str(); }

void drd_string_free(char* s) { delete[] s; }

void drd_graph_free(drd_graph* g) { delete g; }

drd_status drd_graph_create(int n, const int* endpoints, int edge_count,
                            drd_graph** out) {
  return guarded([&] {
    if (edge_count > 0 && !endpoints)
      return fail(DRD_ERR_INVALID_ARGUMENT, "null endpoint array");
    drd::EdgeList edges;
    for (int i = 0; i < edge_count; ++i)
      edges.emplace_back(endpoints[2 * i], endpoints[2 * i + 1]);
    return emit_graph(out, drd::Graph(n, edges));
  });
}

drd_status drd_graph_read_file(const char* path, drd_graph** out) {
  return guarded([&] {
    if (!path) return fail(DRD_ERR_INVALID_ARGUMENT, "null path");
    return emit_graph(out, drd::read_edge_list_file(path));
  });
}

drd_status drd_graph_parse(const char* text, drd_graph** out) {
  return guarded([&] {
    if (!text) return fail(DRD_ERR_INVALID_ARGUMENT, "null text");
    std::istringstream in(text);
    return emit_graph(out, drd::read_edge_list(in));
  });
}

drd_status drd_graph_write_text(const drd_graph* g, char** out) {
  return guarded([&] {
    if (!g) return fail(DRD_ERR_INVALID_ARGUMENT, "null graph");
    std::ostringstream s;
    drd::write_edge_list(s, g->g);
    return emit(out, s.str());
  });
}

int drd_graph_vertex_count(const drd_graph* g) {
  return g ? g->g.vertex_count() : -1;
}

int drd_graph_edge_count(const drd_graph* g) {
  return g ? g->g.edge_count() : -1;
}

drd_status drd_classify_json(const drd_graph* g, char** out) {
  return guarded([&] {
    if (!g) return fail(DRD_ERR_INVALID_ARGUMENT, "null graph");
    drd::BicyclicClass c = drd::classify_bicyclic(g->g);
    json report;
    switch (c.kind) {
      case drd::BicyclicKind::NotBicyclic:
        report = json{{"kind", "not-bicyclic"}};
        break;
      case drd::BicyclicKind::Theta:
        report = json{{"kind", "theta"}};
        break;
      case drd::BicyclicKind::TwoCycles:
        report = json{{"kind", "two-cycles"},
                      {"p", c.p},
                      {"q", c.q},
                      {"path_len", c.path_len}};
        break;
    }
    return emit(out, report.dump());
  });
}

drd_status drd_invariants_json(const drd_graph* g, char** out) {
  return guarded([&] {
    if (!g) return fail(DRD_ERR_INVALID_ARGUMENT, "null graph");
    return emit(out, invariants_json(g->g).dump());
  });
}

drd_status drd_effective_resistance(const drd_graph* g, int u, int v,
                                    char** out) {
  return guarded([&] {
    if (!g) return fail(DRD_ERR_INVALID_ARGUMENT, "null graph");
    return emit(out, drd::to_string(drd::effective_resistance(g->g, u, v)));
  });
}

drd_status drd_rational_decimal(const char* value, int digits, char** out) {
  return guarded([&] {
    if (!value) return fail(DRD_ERR_INVALID_ARGUMENT, "null value");
    return emit(out, drd::to_decimal(drd::rational_from_string(value), digits));
  });
}

drd_status drd_make_S(int n, int p, int q, drd_graph** out) {
  return guarded([&] { return emit_graph(out, drd::make_S(n, p, q)); });
}

drd_status drd_make_P(int n, int p, int q, drd_graph** out) {
  return guarded([&] { return emit_graph(out, drd::make_P(n, p, q)); });
}

drd_status drd_make_B_json(const char* shape_json, drd_graph** out) {
  return guarded([&] {
    if (!shape_json) return fail(DRD_ERR_INVALID_ARGUMENT, "null shape");
    return emit_graph(out, drd::make_B(drd::shape_from_json(shape_json)));
  });
}

drd_status drd_closed_forms_json(int n, int p, int q, char** out) {
  return guarded([&] {
    drd::PClosedForm forms = drd::closed_form_P(n, p, q);
    json report{{"n", n},
                {"p", p},
                {"q", q},
                {"S", drd::to_string(drd::closed_form_S(n, p, q))},
                {"P", drd::to_string(forms.raw)},
                {"P_printed_display", drd::to_string(forms.printed_eq2)},
                {"S33", drd::to_string(drd::closed_form_S33(n))},
                {"P33", drd::to_string(drd::closed_form_P33(n))}};
    return emit(out, report.dump());
  });
}

drd_status drd_transform(const drd_graph* g, const char* op, const int* args,
                         int nargs, char** outcome_json, drd_graph** after) {
  return guarded([&] {
    if (!g || !op) return fail(DRD_ERR_INVALID_ARGUMENT, "null graph or op");
    std::string name(op);
    auto need = [&](int k) {
      if (nargs != k || (k > 0 && !args))
        throw drd::Error(drd::ErrorCode::InvalidArgument,
                         name + " takes " + std::to_string(k) + " argument(s)");
    };
    drd::Graph result = [&] {
      if (name == "sigma") {
        need(1);
        return drd::sigma_transform(g->g, args[0]);
      }
      if (name == "pi") {
        need(1);
        return drd::pi_transform(g->g, args[0]);
      }
      if (name == "relocate") {
        need(2);
        return drd::relocate_pendants(g->g, args[0], args[1]);
      }
      if (name == "rewire") {
        need(4);
        return drd::rewire_edge(g->g, {args[0], args[1]}, {args[2], args[3]});
      }
      if (name == "contract") {
        need(2);
        return drd::contract_to_pendant(g->g, {args[0], args[1]});
      }
      if (name == "shrink") {
        need(1);
        return drd::cycle_shrink(g->g, args[0]);
      }
      throw drd::Error(drd::ErrorCode::InvalidArgument,
                       "unknown transform: " + name);
    }();
    drd::TransformOutcome outcome = drd::compare_transform(g->g, result);
    if (outcome_json) {
      json report{{"op", name},
                  {"before", graph_json(outcome.before)},
                  {"after", graph_json(outcome.after)},
                  {"dr_before", drd::to_string(outcome.dr_before)},
                  {"dr_after", drd::to_string(outcome.dr_after)},
                  {"direction", drd::direction_name(outcome.direction)}};
      *outcome_json = copy_string(report.dump());
    }
    if (after) *after = new drd_graph{std::move(result)};
    return DRD_OK;
  });
}

drd_status drd_enumerate_json(int n, const char* population, int jobs,
                              int allow_large, char** out) {
  return guarded([&] {
    std::string pop = population ? population : "two-cycle";
    drd::Population p;
    if (pop == "two-cycle")
      p = drd::Population::TwoCyclesOnly;
    else if (pop == "all")
      p = drd::Population::AllBicyclic;
    else
      return fail(DRD_ERR_INVALID_ARGUMENT, "unknown population: " + pop);
    drd::ExtremalReport report =
        drd::extremal_search(n, p, jobs, allow_large != 0);
    return emit(out, extremal_json(report).dump());
  });
}

drd_status drd_verify_json(const char* suite, int n, int jobs, uint64_t seed,
                           int allow_large, char** out) {
  return guarded([&] {
    std::string name = suite ? suite : "all";
    std::vector<drd::SuiteReport> reports;
    bool known = false;
    if (name == "closed-forms" || name == "all") {
      reports.push_back(drd::verify_closed_forms());
      known = true;
    }
    if (name == "lemmas" || name == "all") {
      reports.push_back(drd::verify_lemmas(seed));
      known = true;
    }
    if (name == "theorems" || name == "all") {
      reports.push_back(drd::verify_theorems(n, jobs, allow_large != 0));
      known = true;
    }
    if (name == "solver" || name == "all") {
      reports.push_back(drd::verify_solver_sanity(seed));
      known = true;
    }
    if (!known) return fail(DRD_ERR_INVALID_ARGUMENT, "unknown suite: " + name);
    bool passed = true;
    json suites = json::array();
    for (const drd::SuiteReport& r : reports) {
      passed = passed && r.passed;
      suites.push_back(suite_json(r));
    }
    json report{{"passed", passed}, {"suites", suites}};
    return emit(out, report.dump());
  });
}

}  // extern "C"
