// Command-line front end: enumerate, structure, mon, bijection, chtop, jack, ch, verify.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ribbon/bijection.hpp"
#include "ribbon/embeddings.hpp"
#include "ribbon/enumeration.hpp"
#include "ribbon/fixtures.hpp"
#include "ribbon/jack.hpp"
#include "ribbon/json_io.hpp"
#include "ribbon/mon.hpp"
#include "ribbon/report.hpp"
#include "ribbon/stanley.hpp"
#include "ribbon/verify.hpp"

namespace {

using namespace ribbon;
using json = io::json;

struct Common {
  std::string format = "json";
  std::string out;
  bool force = false;
};

void emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out);
  if (!f) throw std::runtime_error("cannot write " + out);
  f << text;
}

void flatten(const json& j, const std::string& prefix, std::ostringstream& os) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, os);
  } else {
    os << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

/// JSON documents print pretty; text flattens them to "key: value" lines.
std::string render_json(const json& j, const std::string& format) {
  if (format == "json") return j.dump(2) + "\n";
  if (format == "text") {
    std::ostringstream os;
    flatten(j, "", os);
    return os.str();
  }
  throw std::invalid_argument("format '" + format + "' is not available for this command (use json or text)");
}

std::vector<Rational> parse_rationals(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(Rational::parse(item));
  return out;
}

NonOrientedMap load_map(const std::string& path, const std::string& fixture) {
  if (!fixture.empty()) {
    if (fixture == "klein") return fixtures::klein();
    if (fixture == "pp") return fixtures::projective_plane();
    if (fixture == "single-edge") return fixtures::single_edge();
    if (fixture == "torus") return side_label(fixtures::torus(), SideLabeling::standard(9));
    throw std::invalid_argument("unknown fixture '" + fixture + "' (klein, pp, single-edge, torus)");
  }
  if (path.empty()) throw std::invalid_argument("pass --map FILE or --fixture NAME");
  const json j = io::read_json_file(path);
  return j.contains("sigma1") ? side_label(io::oriented_from_json(j), SideLabeling::standard(j.at("n").get<int>()))
                              : io::map_from_json(j);
}

History parse_history(const std::string& text, const NonOrientedMap& m) {
  if (text.empty()) return m.edges();
  return io::history_from_json(json::parse(text));
}

/// A with A^2 = alpha: rational when alpha is a rational square, otherwise r*sqrt(2).
QSqrt2 root_of(const Rational& alpha, bool negative) {
  auto rational_sqrt = [](const Rational& x) -> std::optional<Rational> {
    if (x.sign() < 0) return std::nullopt;
    const mpz_class n = x.numerator(), d = x.denominator();
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
    if (rn * rn != n || rd * rd != d) return std::nullopt;
    return Rational(rn, rd);
  };
  QSqrt2 a;
  if (auto r = rational_sqrt(alpha))
    a = QSqrt2(*r);
  else if (auto s = rational_sqrt(alpha * Rational(2)))
    a = QSqrt2(Rational(0), *s / Rational(2));
  else
    throw std::invalid_argument("sqrt(alpha) is neither rational nor a rational multiple of sqrt 2");
  return negative ? -a : a;
}

void warn_force(bool force) {
  if (force) std::cerr << "warning: enumeration guards lifted (--force); this may take very long\n";
}

int run_enumerate(int n, const std::string& family, const std::string& pi_text, const Common& c) {
  warn_force(c.force);
  std::ostringstream os;
  long count = 0;
  auto line = [&](const json& j) {
    ++count;
    if (c.format == "json") os << j.dump() << "\n";
  };
  auto with_n = [&] {
    if (n < 1) throw std::invalid_argument("--n must be positive");
  };
  if (family == "involutions") {
    with_n();
    for_each_pairing(label_range(2 * n), [&](const Pairing& p) { line(io::pairs_json(p)); });
  } else if (family == "one-face-conservative" || family == "conservative") {
    const Partition pi = pi_text.empty() ? (with_n(), Partition{n}) : Partition::parse(pi_text);
    for_each_conservative_map(pi, [&](const NonOrientedMap& m) { line(io::to_json(m)); });
  } else if (family == "one-face-liberal") {
    with_n();
    for_each_liberal_one_face(n, [&](const NonOrientedMap& m) { line(io::to_json(m)); }, c.force);
  } else if (family == "all") {
    with_n();
    for_each_map(n, [&](const NonOrientedMap& m) { line(io::to_json(m)); }, c.force);
  } else if (family == "oriented-pairs") {
    with_n();
    for_each_permutation_pair(n, [&](const OrientedMap& m) {
      json j = io::to_json(m);
      j["transitive"] = is_transitive(m);
      line(j);
    }, c.force);
  } else {
    throw std::invalid_argument("unknown family '" + family +
                                "' (involutions, one-face-conservative, one-face-liberal, all, oriented-pairs)");
  }
  if (c.format == "text") os << family << " count: " << count << "\n";
  else if (c.format != "json") throw std::invalid_argument("enumerate supports json (JSON lines) or text");
  emit(os.str(), c.out);
  return 0;
}

json structure_json(const NonOrientedMap& m) {
  const MapStructure s = structure(m);
  const FaceDecomposition f = faces(m);
  json j;
  j["map"] = io::to_json(m);
  j["black_vertices"] = s.black_vertices;
  j["white_vertices"] = s.white_vertices;
  j["edges"] = s.edges;
  j["faces"] = s.faces;
  j["components"] = s.components;
  j["euler"] = s.euler;
  j["genus"] = s.genus().str();
  j["face_type"] = f.face_type.parts();
  j["face_orbits"] = f.faces;
  j["orientable"] = is_orientable(m);
  j["top_degree"] = is_top_degree_map(m);
  json edges = json::array();
  for (const Edge& e : m.edges()) {
    const EdgeRole role = edge_role(m, e);
    edges.push_back({{"edge", {e.a, e.b}},
                     {"kind", to_string(classify_edge(m, e))},
                     {"bridge", role.is_bridge},
                     {"leaf", role.is_leaf}});
  }
  j["edge_kinds"] = edges;
  j["canonical_form"] = canonical_form(m);
  j["graph_class"] = graph_class(m).key();
  return j;
}

int run_structure(const std::string& path, const std::string& fixture, const Common& c) {
  if (fixture == "torus" || (!path.empty() && io::read_json_file(path).contains("sigma1"))) {
    const OrientedMap om = fixture == "torus" ? fixtures::torus() : io::oriented_from_json(io::read_json_file(path));
    const OrientedStructure s = oriented_structure(om);
    json j;
    j["oriented"] = io::to_json(om);
    j["white_vertices"] = s.white_vertices;
    j["black_vertices"] = s.black_vertices;
    j["faces"] = s.faces;
    j["components"] = s.components;
    j["euler"] = s.euler;
    j["transitive"] = is_transitive(om);
    if (s.components == 1) j["genus"] = s.genus();
    j["side_labeled"] = structure_json(side_label(om, SideLabeling::standard(om.n())));
    emit(render_json(j, c.format), c.out);
    return 0;
  }
  emit(render_json(structure_json(load_map(path, fixture)), c.format), c.out);
  return 0;
}

int run_mon(const std::string& path, const std::string& fixture, const std::string& history, const Common& c) {
  const NonOrientedMap m = load_map(path, fixture);
  MonCalculator calc;
  json j = io::mon_json(m, calc);
  j["mon_text"] = calc.mon(m).str();
  j["degree_bound"] = mon_degree_bound(m);
  if (!history.empty()) {
    const History h = parse_history(history, m);
    const LemmaReport rep = lemma_equivalence_check(m, h);
    j["history"] = io::to_json(h);
    j["history_weight"] = history_weight(m, h).str();
    j["top_degree_pair"] = rep.top_degree_pair;
    j["twisted_bridge_or_leaf"] = rep.twisted_bridge_or_leaf;
    j["weight_reaches_bound"] = rep.weight_reaches_bound;
  }
  emit(render_json(j, c.format), c.out);
  return 0;
}

int run_bijection(const std::string& mode, const std::string& path, const std::string& fixture,
                  const std::string& history, const Common& c) {
  const NonOrientedMap m = load_map(path, fixture);
  const History h = parse_history(history, m);
  const bool apply = mode == "apply";
  if (!apply && mode != "invert") throw std::invalid_argument("bijection mode must be apply or invert");
  const BijectionResult r = apply ? phi(m, h) : phi_inverse(m, h);
  const BijectionResult back = apply ? phi_inverse(r.map, h) : phi(r.map, h);
  json j;
  j["map"] = io::to_json(r.map);
  j["history"] = io::to_json(h);
  j["twist_set"] = io::to_json(r.twist_set);
  j["checks"] = json::object();
  if (apply)
    j["checks"]["image_orientable"] = is_orientable(r.map);
  else
    j["checks"]["image_top_degree_pair"] = is_top_degree_pair(r.map, h);
  j["checks"]["same_graph"] = graph_class(r.map) == graph_class(m);
  j["checks"]["round_trip"] = back.map == m;
  emit(render_json(j, c.format), c.out);
  return 0;
}

int run_chtop(int n, const std::string& p, const std::string& q, const std::string& a, const Common& c) {
  warn_force(c.force);
  const MultiRect mr{parse_rationals(p), parse_rationals(q), Rational::parse(a)};
  const YoungDiagram lambda = multirectangular(mr);
  const Rational chtop = chtop_map_sum(n, mr, c.force);
  const Rational displayed = ogs_top_map_sum(n, mr, c.force);
  json j;
  j["n"] = n;
  j["point"] = mr.str();
  j["gamma"] = mr.gamma().str();
  j["lambda"] = lambda.shape().parts();
  j["chtop_map_sum"] = chtop.str();
  j["ogs_top_map_sum_displayed"] = displayed.str();
  j["ogs_top_map_sum_reconciled"] = (-displayed).str();
  if (n <= 3) j["printed_ch_top"] = printed_stanley_ch(n, mr.point(), true).str();
  if (n <= 3) j["printed_ch_full"] = printed_stanley_ch(n, mr.point(), false).str();
  if (lambda.boxes() <= JackTable::kMaxDegree)
    j["jack_ch"] = ch(Partition{n}, lambda.shape(), mr.a * mr.a, mr.a).str();
  j["equal"] = chtop == -displayed;
  emit(render_json(j, c.format), c.out);
  return 0;
}

int run_jack(const std::string& lambda_text, const std::string& alpha_text, const Common& c) {
  const Partition lambda = Partition::parse(lambda_text);
  const Rational alpha = Rational::parse(alpha_text);
  const SymFunc f = jack_table(lambda.size(), alpha, c.force)->jack_in_p(lambda);
  if (c.format == "csv") {
    std::string out = "pi,theta_num,theta_den\n";
    for (const auto& [pi, v] : f.coeffs)
      out += "\"" + pi.str() + "\"," + v.numerator().get_str() + "," + v.denominator().get_str() + "\n";
    emit(out, c.out);
    return 0;
  }
  json j;
  j["lambda"] = lambda.parts();
  j["alpha"] = alpha.str();
  json theta = json::object();
  for (const auto& [pi, v] : f.coeffs) theta[pi.str()] = v.str();
  j["theta"] = theta;
  emit(render_json(j, c.format), c.out);
  return 0;
}

int run_ch(const std::string& pi_text, const std::string& lambda_text, const std::string& a_text,
           const std::string& alpha_text, bool negative, const Common& c) {
  const Partition pi = Partition::parse(pi_text);
  const Partition lambda = Partition::parse(lambda_text);
  QSqrt2 a;
  Rational alpha;
  if (!a_text.empty()) {
    a = QSqrt2(Rational::parse(a_text));
    alpha = Rational::parse(a_text) * Rational::parse(a_text);
  } else {
    alpha = Rational::parse(alpha_text.empty() ? "1" : alpha_text);
    a = root_of(alpha, negative);
  }
  const QSqrt2 value = ch(pi, lambda, alpha, a, c.force);
  json j;
  j["pi"] = pi.parts();
  j["lambda"] = lambda.parts();
  j["alpha"] = alpha.str();
  j["A"] = a.str();
  j["ch"] = value.str();
  emit(render_json(j, c.format), c.out);
  return 0;
}

int run_verify(const std::string& suite, verify::Options o, const Common& c) {
  warn_force(c.force);
  o.force = c.force;
  const std::vector<std::string> names = suite == "all" ? verify::suite_names() : std::vector<std::string>{suite};
  bool ok = true;
  std::string out;
  json all = json::array();
  for (const auto& name : names) {
    const verify::Report r = verify::run_suite(name, o);
    ok = ok && r.passed();
    if (names.size() > 1 && c.format == "json")
      all.push_back(verify::to_json(r));
    else
      out += verify::render(r, c.format);
  }
  if (names.size() > 1 && c.format == "json") out = all.dump(2) + "\n";
  emit(out, c.out);
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bicolored maps, measure of non-orientability and Jack characters, in exact arithmetic"};
  app.require_subcommand(1);
  Common common;
  auto add_common = [&](CLI::App* sub, const std::vector<std::string>& formats) {
    sub->add_option("--format", common.format, "Output format")->check(CLI::IsMember(formats));
    sub->add_option("--out", common.out, "Write output to this file");
    sub->add_flag("--force", common.force, "Lift enumeration guards");
  };

  int n = 0;
  std::string family = "one-face-conservative", pi, lambda, p, q, a, alpha, map_path, fixture, history, suite, mode;
  bool negative = false;
  verify::Options options;

  auto* en = app.add_subcommand("enumerate", "Stream a family of maps as JSON lines");
  en->add_option("--n", n, "Number of edges");
  en->add_option("--family", family, "involutions|one-face-conservative|one-face-liberal|all|oriented-pairs");
  en->add_option("--pi", pi, "Face-type for the conservative family, e.g. 2,1");
  add_common(en, {"json", "text"});

  auto* st = app.add_subcommand("structure", "Vertices, faces, genus, edge kinds of a map");
  st->add_option("--map", map_path, "Map JSON file (non-oriented or oriented)");
  st->add_option("--fixture", fixture, "klein|pp|single-edge|torus");
  add_common(st, {"json", "text"});

  auto* mo = app.add_subcommand("mon", "Measure of non-orientability and mon_top");
  mo->add_option("--map", map_path, "Map JSON file");
  mo->add_option("--fixture", fixture, "klein|pp|single-edge|torus");
  mo->add_option("--history", history, "History as JSON, e.g. [[1,5],[2,4],[3,6]]");
  add_common(mo, {"json", "text"});

  auto* bi = app.add_subcommand("bijection", "Apply or invert the twisting bijection");
  bi->add_option("mode", mode, "apply|invert")->required()->check(CLI::IsMember({"apply", "invert"}));
  bi->add_option("--map", map_path, "Map JSON file");
  bi->add_option("--fixture", fixture, "klein|pp|single-edge|torus");
  bi->add_option("--history", history, "History as JSON (default: edges in increasing order)");
  add_common(bi, {"json", "text"});

  auto* ct = app.add_subcommand("chtop", "Both top-degree map sums at a multirectangular point");
  ct->add_option("--n", n, "Number of edges")->required();
  ct->add_option("--P", p, "P, comma separated rationals")->required();
  ct->add_option("--Q", q, "Q, comma separated rationals")->required();
  ct->add_option("--A", a, "A (nonzero rational)")->required();
  add_common(ct, {"json", "text"});

  auto* ja = app.add_subcommand("jack", "Power-sum coefficients theta_pi(lambda) of J_lambda");
  ja->add_option("--lambda", lambda, "Partition, e.g. 3,1")->required();
  ja->add_option("--alpha", alpha, "Positive rational alpha")->required();
  add_common(ja, {"json", "text", "csv"});

  auto* ch_cmd = app.add_subcommand("ch", "Normalized Jack character Ch_pi(lambda)");
  ch_cmd->add_option("--pi", pi, "Partition pi")->required();
  ch_cmd->add_option("--lambda", lambda, "Partition lambda")->required();
  auto* a_opt = ch_cmd->add_option("--A", a, "Rational A (alpha = A^2)");
  ch_cmd->add_option("--alpha", alpha, "alpha; A = sqrt(alpha) may be irrational of the form r*sqrt 2")->excludes(a_opt);
  ch_cmd->add_flag("--negative", negative, "Use A = -sqrt(alpha)");
  add_common(ch_cmd, {"json", "text"});

  auto* ve = app.add_subcommand("verify", "Run a verification suite (or 'all')");
  ve->add_option("suite", suite, "Suite name or 'all'")->required();
  ve->add_option("--n", options.n, "Restrict to one size");
  ve->add_option("--seed", options.seed, "Seed for sampled suites");
  ve->add_option("--samples", options.samples, "Sampled maps per size");
  ve->add_option("--jobs", options.jobs, "Worker threads (0: all cores)");
  ve->add_flag("--timing", options.timing, "Include runtime in the report");
  add_common(ve, {"json", "csv", "text"});

  CLI11_PARSE(app, argc, argv);
  try {
    if (*en) return run_enumerate(n, family, pi, common);
    if (*st) return run_structure(map_path, fixture, common);
    if (*mo) return run_mon(map_path, fixture, history, common);
    if (*bi) return run_bijection(mode, map_path, fixture, history, common);
    if (*ct) return run_chtop(n, p, q, a, common);
    if (*ja) return run_jack(lambda, alpha, common);
    if (*ch_cmd) return run_ch(pi, lambda, a, alpha, negative, common);
    if (*ve) return run_verify(suite, options, common);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
