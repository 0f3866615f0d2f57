#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "iomdin/analysis.hpp"
#include "iomdin/export.hpp"
#include "iomdin/fixtures.hpp"
#include "iomdin/pipeline.hpp"

using namespace iomdin;
using nlohmann::ordered_json;

namespace {

constexpr int kOk = 0;
constexpr int kDomainError = 1;
constexpr int kUsageError = 2;

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path);
  out << text;
}

GammaC load(const std::string& path) { return parse_gammac(read_file(path)); }

ordered_json transversal_json(const TransversalReport& t) {
  ordered_json j;
  j["d"] = t.d;
  j["branches"] = t.branches;
  j["milnor"] = t.milnor;
  ordered_json classes = ordered_json::array();
  for (const KlClass& k : t.kl.classes) {
    ordered_json c;
    c["members"] = k.members.size();
    c["m"] = k.m;
    c["nu"] = k.nu;
    c["self_intersections"] = k.self_intersections;
    classes.push_back(std::move(c));
  }
  j["classes"] = std::move(classes);
  j["quotient"] = {{"vertices", t.quotient.graph.vertex_count()},
                   {"edges", t.quotient.graph.edge_count()},
                   {"vertex_data", t.quotient.data.vertex},
                   {"edge_data", t.quotient.data.edge}};
  j["arrow_nu"] = t.arrow_nu;
  j["arrow_degree"] = t.arrow_degree;
  j["graph"] = to_json(t.graph);
  return j;
}

int cmd_validate(const std::string& path) {
  const GammaC g = load(path);
  const ValidationReport report = validate_structure(g);
  for (const Issue& i : report.issues) {
    std::cout << (i.severity == Severity::Error ? "error" : "notice") << " [" << i.clause << "] "
              << i.element << ": " << i.message << "\n";
  }
  std::cout << (report.ok() ? "valid" : "invalid") << "\n";
  return report.ok() ? kOk : kDomainError;
}

int cmd_analyze(const std::string& path) {
  const Analysis a = analyze(load(path));
  ordered_json j;
  j["v1"] = a.partition.v1.size();
  j["v2"] = a.partition.v2.size();
  j["arrowheads"] = a.partition.arrowheads.size();
  j["gamma1_components"] = a.partition.gamma1.size();
  ordered_json g1 = ordered_json::array();
  for (const G1Component& c : a.g1) {
    ordered_json cj = to_json(c.graph);
    cj["convention"] = c.convention;
    cj["strict_transforms"] = c.strict_transform_supports.size();
    g1.push_back(std::move(cj));
  }
  j["g1"] = std::move(g1);
  j["branches_s"] = a.transversal.size();
  ordered_json tr = ordered_json::array();
  for (const TransversalReport& t : a.transversal) tr.push_back(transversal_json(t));
  j["transversal"] = std::move(tr);
  j["chi_coefficient"] = a.chi_coefficient;
  std::cout << j.dump(2) << "\n";
  return kOk;
}

int cmd_resolve(const std::string& path, Int k, bool embedded, bool no_minimize,
                const std::string& dot, bool force, bool aggressive) {
  ResolveOptions opt;
  opt.force = force;
  opt.minimize = !no_minimize;
  opt.mode = aggressive ? BlowDownMode::Aggressive : BlowDownMode::NormalCrossing;
  const Resolution r = resolve(load(path), k, opt);
  if (!r.verified_regime) {
    std::cerr << "warning: k below k_min; result is in the unverified regime\n";
  }
  ordered_json j;
  j["k"] = r.k;
  j["verified_regime"] = r.verified_regime;
  j["negative_definite"] = r.form.negative_definite;
  j["det_abs"] = r.form.det_abs.str();
  j["surface"] = to_json(r.surface);
  if (embedded) {
    if (!euler_check(r.embedded).empty()) throw DomainError("embedded graph fails the Euler check");
    j["embedded"] = to_json(r.embedded);
  }
  if (!dot.empty()) {
    std::string text = to_dot(r.surface, "X_k");
    if (embedded) text += to_dot(r.embedded, "X_k_g");
    write_file(dot, text);
  }
  std::cout << j.dump(2) << "\n";
  return kOk;
}

std::pair<Int, Int> parse_range(const std::string& text) {
  static const std::regex pattern(R"((-?\d+)(?:\.\.(-?\d+))?)");
  std::smatch m;
  if (!std::regex_match(text, m, pattern)) {
    throw CLI::ValidationError("--k", "expected A..B or a single integer, got " + text);
  }
  const Int a = std::stoll(m[1]);
  const Int b = m[2].matched ? std::stoll(m[2]) : a;
  if (b < a) throw CLI::ValidationError("--k", "empty range " + text);
  return {a, b};
}

int cmd_series(const std::string& path, const std::string& range, const std::string& csv,
               bool force) {
  const auto [from, to] = parse_range(range);
  ResolveOptions opt;
  opt.force = force;
  const auto rows = series(load(path), from, to, opt);
  std::ostringstream out;
  out << "k,vertices,edges,det_abs,negative_definite,embedded_vertices,stable_hash\n";
  for (const SeriesRow& r : rows) {
    out << r.k << "," << r.vertices << "," << r.edges << "," << r.det_abs << ","
        << (r.negative_definite ? "yes" : "no") << "," << r.embedded_vertices << ","
        << r.stable_hash << "\n";
  }
  if (!csv.empty()) write_file(csv, out.str());
  std::cout << out.str();
  return kOk;
}

int cmd_fixture(const std::string& name, const std::string& output) {
  const std::string doc = serialize_gammac(gammac_fixture(name));
  if (output.empty()) {
    std::cout << doc;
  } else {
    write_file(output, doc);
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Resolution graphs of the Iomdin series f + g^k from the decorated graph of (f, g)"};
  app.require_subcommand(1);

  std::string path, dot, csv, range, name, output;
  Int k = 0;
  bool embedded = false, no_minimize = false, force = false, aggressive = false;

  auto* validate_cmd = app.add_subcommand("validate", "check a graph document");
  validate_cmd->add_option("path", path, "graph document")->required();

  auto* analyze_cmd = app.add_subcommand("analyze", "partitions and transversal singularities");
  analyze_cmd->add_option("path", path, "graph document")->required();

  auto* resolve_cmd = app.add_subcommand("resolve", "resolution graph of X_k");
  resolve_cmd->add_option("path", path, "graph document")->required();
  resolve_cmd->add_option("--k", k, "exponent k")->required();
  resolve_cmd->add_flag("--embedded", embedded, "also emit the embedded graph of g on X_k");
  resolve_cmd->add_flag("--no-minimize", no_minimize, "skip blowing down (-1)-curves");
  resolve_cmd->add_option("--dot", dot, "write Graphviz output to this file");
  resolve_cmd->add_flag("--force", force, "allow k below k_min");
  resolve_cmd->add_flag("--aggressive", aggressive, "blow down (-1)-curves of any valence");

  auto* series_cmd = app.add_subcommand("series", "sweep k over a range");
  series_cmd->add_option("path", path, "graph document")->required();
  series_cmd->add_option("--k", range, "range A..B")->required();
  series_cmd->add_option("--csv", csv, "also write the table to this file");
  series_cmd->add_flag("--force", force, "allow k below k_min");

  auto* fixture_cmd = app.add_subcommand("fixture", "print a built-in graph document");
  fixture_cmd->add_option("name", name, "node, cusp, three-lines, d4, tacnode, smooth")->required();
  fixture_cmd->add_option("-o,--output", output, "write to this file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (*validate_cmd) return cmd_validate(path);
    if (*analyze_cmd) return cmd_analyze(path);
    if (*resolve_cmd) return cmd_resolve(path, k, embedded, no_minimize, dot, force, aggressive);
    if (*series_cmd) return cmd_series(path, range, csv, force);
    if (*fixture_cmd) return cmd_fixture(name, output);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const SchemaError& e) {
    for (const auto& msg : e.errors()) std::cerr << "error: " << msg << "\n";
    return kDomainError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDomainError;
  }
  return kUsageError;
}
