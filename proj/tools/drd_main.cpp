// Command-line front end. Talks to the engine exclusively through the C
// interface in drd.h; all structure comes back as JSON text.

#include <CLI11.hpp>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "drd.h"

using json = nlohmann::ordered_json;

namespace {

constexpr std::uint64_t kDefaultSeed = 42;

struct OutputOptions {
  std::string format = "json";
  std::string out_path;
  int decimal = 0;
};

void add_output_flags(CLI::App* cmd, OutputOptions* opts) {
  cmd->add_option("--format", opts->format, "Report format")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--out", opts->out_path, "Write the report to a file");
  cmd->add_option("--decimal", opts->decimal,
                  "Add a k-digit decimal rendering next to exact values")
      ->check(CLI::Range(1, 60));
}

std::string take(char* s) {
  std::string out = s ? s : "";
  drd_string_free(s);
  return out;
}

// Input and engine errors map to exit 2; verification failures to exit 1.
[[noreturn]] void die(const std::string& message) {
  std::cerr << "error: " << message << "\n";
  std::exit(2);
}

void check(drd_status status) {
  if (status != DRD_OK) die(drd_last_error());
}

std::string decimal_of(const std::string& exact, int digits) {
  char* out = nullptr;
  check(drd_rational_decimal(exact.c_str(), digits, &out));
  return take(out);
}

// Inserts "<key>_decimal" next to each exact rational field requested.
void decorate(json& node, const std::vector<std::string>& keys, int digits) {
  if (digits <= 0) return;
  json decorated = json::object();
  for (auto& [key, value] : node.items()) {
    decorated[key] = value;
    if (value.is_string() &&
        std::find(keys.begin(), keys.end(), key) != keys.end())
      decorated[key + "_decimal"] =
          decimal_of(value.get<std::string>(), digits);
  }
  node = std::move(decorated);
}

void write_report(const OutputOptions& opts, const std::string& text) {
  if (opts.out_path.empty()) {
    std::cout << text << "\n";
    return;
  }
  std::ofstream out(opts.out_path);
  if (!out) die("cannot open output file: " + opts.out_path);
  out << text << "\n";
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

std::string scalar_csv(const json& node) {
  std::ostringstream out;
  out << "key,value";
  for (auto& [key, value] : node.items()) {
    if (value.is_structured()) continue;
    std::string text = value.is_string() ? value.get<std::string>() : value.dump();
    out << "\n" << csv_escape(key) << "," << csv_escape(text);
  }
  return out.str();
}

drd_graph* load_graph(const std::string& path) {
  drd_graph* g = nullptr;
  check(drd_graph_read_file(path.c_str(), &g));
  return g;
}

json graph_report(drd_graph* g) {
  char* text = nullptr;
  check(drd_graph_write_text(g, &text));
  char* classification = nullptr;
  check(drd_classify_json(g, &classification));
  json report;
  report["edge_list"] = take(text);
  report["classification"] = json::parse(take(classification));
  return report;
}

const std::vector<std::string> kInvariantKeys = {
    "wiener", "kirchhoff", "degree_distance", "degree_resistance"};

int run_compute(const std::string& path, const OutputOptions& opts) {
  drd_graph* g = load_graph(path);
  json report = graph_report(g);
  char* inv = nullptr;
  drd_status status = drd_invariants_json(g, &inv);
  if (status == DRD_OK) {
    json invariants = json::parse(take(inv));
    decorate(invariants, kInvariantKeys, opts.decimal);
    report["invariants"] = invariants;
  } else {
    report["invariants"] = nullptr;
    report["note"] = drd_last_error();
  }
  drd_graph_free(g);
  if (opts.format == "csv") {
    json flat = report["classification"];
    if (report["invariants"].is_object())
      for (auto& [key, value] : report["invariants"].items())
        flat[key] = value;
    write_report(opts, scalar_csv(flat));
  } else {
    write_report(opts, report.dump(2));
  }
  return 0;
}

int run_family(const std::string& type, int n, int p, int q,
               const std::string& shape_path, const OutputOptions& opts) {
  drd_graph* g = nullptr;
  if (type == "S") {
    check(drd_make_S(n, p, q, &g));
  } else if (type == "P") {
    check(drd_make_P(n, p, q, &g));
  } else {
    if (shape_path.empty()) die("--type B requires --shape");
    std::ifstream in(shape_path);
    if (!in) die("cannot open shape file: " + shape_path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    check(drd_make_B_json(buffer.str().c_str(), &g));
  }
  json report = graph_report(g);
  char* inv = nullptr;
  check(drd_invariants_json(g, &inv));
  json invariants = json::parse(take(inv));
  decorate(invariants, kInvariantKeys, opts.decimal);
  report["invariants"] = invariants;
  if (type == "S" || type == "P") {
    char* forms = nullptr;
    check(drd_closed_forms_json(n, p, q, &forms));
    json closed = json::parse(take(forms));
    decorate(closed, {"S", "P", "P_printed_display", "S33", "P33"},
             opts.decimal);
    report["closed_forms"] = closed;
  }
  drd_graph_free(g);
  if (opts.format == "csv") {
    json flat = report["invariants"];
    if (report.contains("closed_forms"))
      for (auto& [key, value] : report["closed_forms"].items())
        flat[key] = value;
    write_report(opts, scalar_csv(flat));
  } else {
    write_report(opts, report.dump(2));
  }
  return 0;
}

int run_transform(const std::string& path, const std::string& op,
                  const std::vector<int>& args, const OutputOptions& opts) {
  drd_graph* g = load_graph(path);
  char* outcome = nullptr;
  check(drd_transform(g, op.c_str(), args.data(),
                      static_cast<int>(args.size()), &outcome, nullptr));
  drd_graph_free(g);
  json report = json::parse(take(outcome));
  decorate(report, {"dr_before", "dr_after"}, opts.decimal);
  if (opts.format == "csv") {
    json flat{{"op", report["op"]},
              {"dr_before", report["dr_before"]},
              {"dr_after", report["dr_after"]},
              {"direction", report["direction"]}};
    write_report(opts, scalar_csv(flat));
  } else {
    write_report(opts, report.dump(2));
  }
  return 0;
}

int run_enumerate(int n, const std::string& population, int jobs,
                  bool allow_large, const OutputOptions& opts) {
  char* out = nullptr;
  check(drd_enumerate_json(n, population.c_str(), jobs, allow_large ? 1 : 0,
                           &out));
  json report = json::parse(take(out));
  decorate(report, {"min_value", "max_value", "expected_min", "expected_max"},
           opts.decimal);
  if (opts.format == "csv") {
    std::ostringstream csv;
    csv << "n,population,count,min,max,agrees_min,agrees_max\n"
        << report["n"].get<long long>() << ","
        << report["population"].get<std::string>() << ","
        << report["count_labeled"].get<long long>() << ","
        << csv_escape(report["min_value"].get<std::string>()) << ","
        << csv_escape(report["max_value"].get<std::string>()) << ","
        << (report["agrees_min"].get<bool>() ? "true" : "false") << ","
        << (report["agrees_max"].get<bool>() ? "true" : "false");
    write_report(opts, csv.str());
  } else {
    write_report(opts, report.dump(2));
  }
  return 0;
}

int run_verify(const std::string& suite, int n, int jobs, std::uint64_t seed,
               bool allow_large, const OutputOptions& opts) {
  char* out = nullptr;
  check(drd_verify_json(suite.c_str(), n, jobs, seed, allow_large ? 1 : 0,
                        &out));
  json report = json::parse(take(out));
  if (opts.format == "csv") {
    std::ostringstream csv;
    csv << "suite,check,instances,strict,equal,passed";
    for (const json& s : report["suites"])
      for (const json& c : s["checks"])
        csv << "\n"
            << s["suite"].get<std::string>() << ","
            << csv_escape(c["name"].get<std::string>()) << ","
            << c["instances"].get<long long>() << ","
            << c["strict"].get<long long>() << ","
            << c["equal"].get<long long>() << ","
            << (c["passed"].get<bool>() ? "true" : "false");
    write_report(opts, csv.str());
  } else {
    write_report(opts, report.dump(2));
  }
  return report["passed"].get<bool>() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact resistance-distance invariants and verification"};
  app.require_subcommand(1);

  OutputOptions compute_opts;
  std::string compute_path;
  CLI::App* compute = app.add_subcommand(
      "compute", "Invariants and classification of an edge-list file");
  compute->add_option("graph", compute_path, "Edge-list file")->required();
  add_output_flags(compute, &compute_opts);

  OutputOptions family_opts;
  std::string family_type = "S", shape_path;
  int fam_n = 0, fam_p = 3, fam_q = 3, fam_m = -1;
  CLI::App* family =
      app.add_subcommand("family", "Build a named family member");
  family->add_option("--type", family_type, "Family: S, P, or B")
      ->check(CLI::IsMember({"S", "P", "B"}));
  family->add_option("--n", fam_n, "Vertex count (S and P)");
  family->add_option("--p", fam_p, "First cycle length");
  family->add_option("--q", fam_q, "Second cycle length");
  family->add_option("--m", fam_m,
                     "Joining path edges; implied by n for S and P");
  family->add_option("--shape", shape_path, "Shape JSON file (type B)");
  add_output_flags(family, &family_opts);

  OutputOptions transform_opts;
  std::string transform_path, transform_op;
  std::vector<int> transform_args;
  CLI::App* transform =
      app.add_subcommand("transform", "Apply a graph surgery");
  transform->add_option("graph", transform_path, "Edge-list file")->required();
  transform->add_option("--op", transform_op, "Surgery name")
      ->required()
      ->check(CLI::IsMember(
          {"sigma", "pi", "relocate", "rewire", "contract", "shrink"}));
  transform->add_option("--args", transform_args,
                        "Vertex or edge indices for the surgery");
  add_output_flags(transform, &transform_opts);

  OutputOptions enum_opts;
  int enum_n = 0, enum_jobs = 1;
  bool enum_large = false;
  std::string population = "two-cycle";
  CLI::App* enumerate =
      app.add_subcommand("enumerate", "Exhaustive extremal search");
  enumerate->add_option("--n", enum_n, "Vertex count")->required();
  enumerate->add_option("--population", population, "Graph population")
      ->check(CLI::IsMember({"two-cycle", "all"}));
  enumerate->add_option("--jobs", enum_jobs, "Worker thread count")
      ->check(CLI::Range(1, 64));
  enumerate->add_flag("--allow-large", enum_large, "Permit n = 9");
  add_output_flags(enumerate, &enum_opts);

  OutputOptions verify_opts;
  std::string suite = "all";
  int verify_n = 7, verify_jobs = 1;
  bool verify_large = false;
  std::uint64_t seed = kDefaultSeed;
  CLI::App* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("--suite", suite, "Suite name")
      ->check(CLI::IsMember(
          {"lemmas", "theorems", "closed-forms", "solver", "all"}));
  verify->add_option("--n", verify_n, "Vertex count for the theorem suite");
  verify->add_option("--jobs", verify_jobs, "Worker thread count")
      ->check(CLI::Range(1, 64));
  verify->add_option("--seed", seed, "Seed for the randomized campaigns");
  verify->add_flag("--allow-large", verify_large, "Permit n = 9");
  add_output_flags(verify, &verify_opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (compute->parsed()) return run_compute(compute_path, compute_opts);
  if (family->parsed()) {
    if (family_type != "B") {
      if (fam_n <= 0) die("--n is required for types S and P");
      if (fam_m >= 0 && fam_m != fam_n + 1 - fam_p - fam_q)
        die("--m contradicts --n; the path length is n+1-p-q");
    }
    return run_family(family_type, fam_n, fam_p, fam_q, shape_path,
                      family_opts);
  }
  if (transform->parsed())
    return run_transform(transform_path, transform_op, transform_args,
                         transform_opts);
  if (enumerate->parsed())
    return run_enumerate(enum_n, population, enum_jobs, enum_large, enum_opts);
  if (verify->parsed())
    return run_verify(suite, verify_n, verify_jobs, seed, verify_large,
                      verify_opts);
  return 2;
}
