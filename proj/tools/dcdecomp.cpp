// dcdecomp: file-based front end. Reports go to stdout as JSON; exit status
// is 0 for a true verdict, 1 for a false one, 2 for errors.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "dcdecomp/dcdecomp.hpp"

namespace {

using namespace dcdecomp;
using nlohmann::json;
namespace jio = dcdecomp::json_io;

constexpr int kTrue = 0;
constexpr int kFalse = 1;
constexpr int kError = 2;

int emit(const json& report, bool verdict) {
  std::cout << report.dump(2) << "\n";
  return verdict ? kTrue : kFalse;
}

std::optional<Window> load_window(const std::string& file) {
  if (file.empty()) return std::nullopt;
  return jio::read_window(jio::read_file(file));
}

HPolyhedron load_polyhedron(const json& j) {
  if (j.is_object() && j.contains("vertices")) return to_hrep(jio::read_vpoly(j));
  return jio::read_hpoly(j);
}

// A point list, or the integer points of a polyhedron (inside the window,
// when one is given).
LatticeSet load_set(const json& j, const std::optional<Window>& w, const Limits& lim) {
  if (j.is_object() && j.contains("points")) {
    LatticeSet S = jio::read_lattice(j);
    return w ? restrict_to(S, *w) : S;
  }
  return integer_points(load_polyhedron(j), w, lim);
}

json class_report(const ClassRep& rep) { return jio::write(rep); }

int cmd_check(const std::string& input, const std::string& kind, const std::string& window_file, const Limits& lim) {
  const json j = jio::read_file(input);
  const auto w = load_window(window_file);
  json r{{"kind", kind}};

  if (kind == "ic") {
    LatticeSet S = load_set(j, w, lim);
    auto v = is_integrally_convex(S, lim);
    r["verdict"] = v.holds;
    if (v.witness) {
      r["witness"] = jio::write(*v.witness);
      r["neighborhood"] = jio::write_points(integral_neighborhood(v.witness->point));
      r["local"] = jio::write_points(set_intersection(S, integral_neighborhood(v.witness->point)));
      json c = json::array();
      for (const auto& x : v.candidates) c.push_back(jio::write(x));
      r["candidates"] = c;
    }
    return emit(r, v.holds);
  }
  if (kind == "holefree") {
    LatticeSet S = load_set(j, w, lim);
    bool ok = is_hole_free(S, lim);
    r["verdict"] = ok;
    if (!ok) r["holes"] = jio::write_points(set_difference(integer_points(hull_hrep(S, lim), std::nullopt, lim), S));
    return emit(r, ok);
  }
  if (kind == "boxint") {
    HPolyhedron P = load_polyhedron(j);
    Window win = w ? *w : bounding_box(to_vrep(P, lim));
    if (!w && !to_vrep(P, lim).is_bounded())
      throw Error(ErrorCode::UnboundedWithoutWindow, "boxint on an unbounded polyhedron needs --window");
    auto v = is_box_integer_within(P, win, lim);
    r["verdict"] = v.holds;
    r["window"] = jio::write(win);
    if (v.witness) r["witness"] = jio::write(*v.witness);
    return emit(r, v.holds);
  }
  if (kind == "lnat-set" || kind == "mnat-set") {
    LatticeSet S = load_set(j, w, lim);
    bool ok = kind == "lnat-set" ? is_lnat_set(S) : is_mnat_set(S);
    r["verdict"] = ok;
    return emit(r, ok);
  }
  if (kind == "paramodular") {
    bool ok = is_paramodular(jio::read_mnat(j), lim);
    r["verdict"] = ok;
    return emit(r, ok);
  }
  if (kind == "conic") {
    bool ok = j.is_object() && j.contains("generators") ? is_conic(jio::read_generated(j), lim) : is_conic(load_set(j, w, lim));
    r["verdict"] = ok;
    return emit(r, ok);
  }
  throw Error(ErrorCode::InvalidInput, "unknown --kind " + kind);
}

int cmd_decompose(const std::string& input, const std::string& tag_name, const std::string& window_file, const Limits& lim) {
  const json j = jio::read_file(input);
  const auto w = load_window(window_file);
  json r;
  if (tag_name.empty()) {
    HPolyhedron P = load_polyhedron(j);
    auto pd = decompose_polyhedron(P, lim);
    auto sd = decompose_set(P, w, lim);
    r["polyhedron"] = {{"Q", jio::write(pd.Q)},
                       {"Q_vertices", jio::write(to_vrep(pd.Q, lim))["vertices"]},
                       {"C", jio::write(pd.C)},
                       {"C_rays", jio::write(to_vrep(pd.C, lim))["rays"]},
                       {"box", jio::write(pd.box)},
                       {"recomposed", true}};
    r["set"] = {{"T", jio::write_points(sd.tg.base)},
                {"generators", jio::write(sd.tg)["generators"]},
                {"box", jio::write(sd.box)},
                {"window", jio::write(sd.window)},
                {"verified", sd.verified}};
    return emit(r, sd.verified);
  }
  const ClassTag tag = parse_class_tag(tag_name);
  if (tag == ClassTag::L) throw Error(ErrorCode::UnsupportedTag, "L-convex polyhedra have no bounded part to split off");
  const ClassRep rep = jio::read_class_rep(j, tag);
  auto pd = decompose_class_polyhedron(rep, tag, lim);
  auto sd = decompose_class_set(rep, tag, w, lim);
  r["tag"] = to_string(tag);
  r["polyhedron"] = {{"Q", jio::write(pd.Q)}, {"C", jio::write(pd.C)}, {"C_class", class_report(pd.c_rep)}};
  if (pd.q_rep) r["polyhedron"]["Q_class"] = class_report(*pd.q_rep);
  r["set"] = {{"T", jio::write_points(sd.tg.base)},
              {"generators", jio::write(sd.tg)["generators"]},
              {"window", jio::write(sd.window)},
              {"verified", sd.verified}};
  return emit(r, sd.verified);
}

int cmd_minkowski(const std::string& a, const std::string& b, const Limits& lim) {
  LatticeSet S1 = jio::read_lattice(jio::read_file(a));
  LatticeSet S2 = jio::read_lattice(jio::read_file(b));
  LatticeSet sum = minkowski_sum_sets(S1, S2);
  LatticeSet holes = find_minkowski_holes(S1, S2, lim);
  json r{{"sum", jio::write_points(sum)},
         {"hull_points", jio::write_points(integer_points(hull_hrep(sum, lim), std::nullopt, lim))},
         {"holes", jio::write_points(holes)}};
  return emit(r, holes.empty());
}

int cmd_charcone(const std::string& input, const std::string& tag_name, const Limits& lim) {
  const json j = jio::read_file(input);
  json r;
  HPolyhedron C;
  if (!tag_name.empty()) {
    const ClassTag tag = parse_class_tag(tag_name);
    const ClassRep rep = jio::read_class_rep(j, tag);
    r["C_class"] = class_report(char_cone_class(rep));
    C = char_cone(class_to_hrep(rep, lim));
  } else {
    C = char_cone(load_polyhedron(j));
  }
  r["C"] = jio::write(C);
  r["rays"] = jio::write(to_vrep(C, lim))["rays"];
  try {
    r["generators"] = jio::write(GeneratedSet{LatticeSet(C.dim()), cone_unit_generators(C, lim)})["generators"];
    return emit(r, true);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotUnitGenerated) throw;
    r["generators"] = nullptr;
    return emit(r, false);
  }
}

int cmd_lemma(const std::string& input, const Limits& lim) {
  const json j = jio::read_file(input);
  const Point d = jio::read_point(jio::field(j, "d", "$"), "$.d");
  std::vector<IntVec> R;
  if (const auto* rs = jio::optional_field(j, "R", "$")) {
    jio::array_at(*rs, "$.R");
    for (std::size_t i = 0; i < rs->size(); ++i) R.push_back(jio::read_intvec((*rs)[i], jio::item("$.R", i), d.size()));
  }
  auto s = separate_cube_subset(R, d, lim);
  bool ok = verify_cube_separation(R, d, s.order, lim);
  json B = json::array();
  for (const auto& b : s.order) B.push_back(jio::write(b));
  json r{{"B", B}, {"normal", jio::write(s.normal)}, {"offset", jio::write(s.offset)}, {"verified", ok}};
  return emit(r, ok);
}

int cmd_examples(bool list, const std::string& id) {
  auto all = showcase::catalogue();
  if (!id.empty()) {
    std::erase_if(all, [&](const showcase::Example& e) { return e.id != id; });
    if (all.empty()) throw Error(ErrorCode::InvalidInput, "no example with id " + id);
  }
  json rows = json::array();
  if (list) {
    for (const auto& e : all) rows.push_back({{"id", e.id}, {"anchor", e.anchor}});
    std::cout << json{{"examples", rows}}.dump(2) << "\n";
    return kTrue;
  }
  std::size_t passed = 0;
  for (const auto& e : all) {
    auto o = showcase::replay(e);
    passed += o.pass ? 1 : 0;
    rows.push_back({{"id", o.id}, {"anchor", o.anchor}, {"expected", o.expected}, {"computed", o.computed}, {"pass", o.pass}});
  }
  json r{{"examples", rows}, {"passed", passed}, {"total", all.size()}};
  return emit(r, passed == all.size());
}

int cmd_oracle(const std::string& input, const std::string& window_file, std::int64_t max_den, const Limits& lim) {
  LatticeSet S = load_set(jio::read_file(input), load_window(window_file), lim);
  auto cell = is_integrally_convex(S, lim);
  auto sampled = sample_integral_convexity(S, max_den, lim);
  json r{{"cells", cell.holds}, {"sampling", sampled.holds}, {"samples", sampled.samples}, {"agree", cell.holds == sampled.holds}};
  if (sampled.counterexample) r["counterexample"] = jio::write(*sampled.counterexample);
  return emit(r, cell.holds == sampled.holds);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact tests and decompositions for integrally convex sets and box-integer polyhedra"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Help for every subcommand");

  std::optional<std::size_t> dim_cap;
  app.add_option("--dim-cap", dim_cap, "Dimension cap (default: DCDECOMP_DIM_CAP or 8)")->check(CLI::PositiveNumber);

  std::string input, input2, kind, tag, window, id;
  bool list = false;
  std::int64_t max_den = 4;

  auto* check = app.add_subcommand("check", "Test a property of a set or polyhedron");
  check->add_option("input", input, "JSON input file, - for stdin")->required();
  check->add_option("--kind", kind, "Property to test")
      ->required()
      ->check(CLI::IsMember({"ic", "holefree", "boxint", "lnat-set", "mnat-set", "paramodular", "conic"}));
  check->add_option("--window", window, "Window JSON file {l, u}");

  auto* decompose = app.add_subcommand("decompose", "Split P into Q + C and S into T + G");
  decompose->add_option("input", input, "JSON input file, - for stdin")->required();
  decompose->add_option("--tag", tag, "Class of the input: lnat, l, lnat2, mnat, m, mnat2");
  decompose->add_option("--window", window, "Verification window JSON file");

  auto* minkowski = app.add_subcommand("minkowski", "Minkowski sum of two point sets and its holes");
  minkowski->add_option("first", input, "First set")->required();
  minkowski->add_option("second", input2, "Second set")->required();

  auto* charcone = app.add_subcommand("charcone", "Characteristic cone and its {-1,0,+1} generators");
  charcone->add_option("input", input, "JSON input file, - for stdin")->required();
  charcone->add_option("--tag", tag, "Class of the input");

  auto* lemma = app.add_subcommand("lemma-separate", "Separate a cube point from conv(R) by ordered vertices");
  lemma->add_option("input", input, "JSON {R, d}")->required();

  auto* examples = app.add_subcommand("paper-examples", "Replay the catalogue of worked examples");
  examples->add_flag("--list", list, "List example ids");
  examples->add_option("--id", id, "Replay a single example");

  auto* oracle = app.add_subcommand("oracle-ic", "Compare the cell test with sampled integral convexity");
  oracle->add_option("input", input, "JSON input file, - for stdin")->required();
  oracle->add_option("--window", window, "Window JSON file");
  oracle->add_option("--max-den", max_den, "Largest sample denominator")->check(CLI::Range(1, 12));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kError;
  }

  Limits lim = limits_from_env();
  if (dim_cap) lim.dim_cap = *dim_cap;

  try {
    if (*check) return cmd_check(input, kind, window, lim);
    if (*decompose) return cmd_decompose(input, tag, window, lim);
    if (*minkowski) return cmd_minkowski(input, input2, lim);
    if (*charcone) return cmd_charcone(input, tag, lim);
    if (*lemma) return cmd_lemma(input, lim);
    if (*examples) return cmd_examples(list, id);
    if (*oracle) return cmd_oracle(input, window, max_den, lim);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  }
  return kError;
}
