// lenskit command-line front end
#include "lenskit/lenskit.hpp"
#include "lenskit/sweeps.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

using namespace lenskit;

namespace {

struct Globals {
  unsigned depth_cap = 16;
  bool pretty = false;
};

void emit(const Globals& g, const Json& j) { std::cout << (g.pretty ? j.dump(2) : j.dump()) << '\n'; }

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::Parse, "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::Parse, path + ": " + e.what());
  }
}

void check_depth(const Globals& g, unsigned depth) {
  if (depth > g.depth_cap)
    fail(ErrorKind::Precondition,
         "depth " + std::to_string(depth) + " exceeds the cap of " + std::to_string(g.depth_cap));
}

MarkovTriple triple_from(const std::vector<std::string>& v) {
  return MarkovTriple(parse_int(v.at(0)), parse_int(v.at(1)), parse_int(v.at(2)));
}

Json atf_output(const AtfDiagram& d) {
  Json j = to_json(d);
  Json readouts = Json::array();
  bool consistent = check_consistency(d).ok();
  for (std::size_t i = 0; i < d.nodes.size(); ++i) {
    if (consistent)
      readouts.push_back(to_json(node_boundary_lens(d, i)));
    else
      readouts.push_back(nullptr);
  }
  j["readouts"] = readouts;
  j["consistent"] = consistent;
  return j;
}

void write_file(const std::string& path, const std::string& body) {
  std::ofstream out(path);
  if (!out) fail(ErrorKind::Precondition, "cannot write " + path);
  out << body;
}

std::string text_diagram(const HorizontalDiagram& d) {
  std::ostringstream os;
  for (std::size_t i = 0; i < d.curves.size(); ++i) {
    const auto& c = d.curves[i];
    os << "gamma" << i + 1 << " = " << c.mu << " mu + " << c.lambda << " lambda  (framing " << c.framing << ")\n";
  }
  os << "handles: h0=" << d.handles.h0 << " h1=" << d.handles.h1 << " h2=" << d.curves.size()
     << " h3=" << d.handles.h3 << " h4=" << d.handles.h4 << '\n';
  os << "boundary: " << boundary_of_diagram(d).str() << '\n';
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  Globals g;
  int status = 0;
  CLI::App app{"Exact Markov-triple, Farey-path, lens-space, handle and almost-toric computations"};
  app.require_subcommand(1);
  app.add_option("--depth-cap", g.depth_cap, "Hard cap on tree depth")->capture_default_str();
  app.add_flag("--pretty", g.pretty, "Indent JSON output");

  // markov
  auto* markov = app.add_subcommand("markov", "Markov triples");
  markov->require_subcommand(1);
  unsigned tree_depth = 4;
  auto* tree = markov->add_subcommand("tree", "Enumerate the Markov tree");
  tree->add_option("--depth", tree_depth)->capture_default_str();
  tree->callback([&] {
    check_depth(g, tree_depth);
    Json out = Json::array();
    for (const auto& e : enumerate_tree(tree_depth))
      out.push_back(Json{{"depth", e.depth}, {"triple", to_json(e.triple)}, {"word", e.word}});
    emit(g, out);
  });

  std::vector<std::string> dq_args;
  auto* dq = markov->add_subcommand("derive-q", "Companion q-triple of a Markov triple");
  dq->add_option("P", dq_args)->expected(3)->required();
  dq->callback([&] {
    MarkovTriple t = triple_from(dq_args);
    QTriple q = derive_q(t);
    Json out = to_json(q);
    out["triple"] = to_json(t);
    out["verify"] = to_json(verify_q(t, q));
    out["word"] = mutation_path(t);
    emit(g, out);
  });

  unsigned verify_depth = 8;
  auto* mverify = markov->add_subcommand("verify", "Check the q-triple conditions over the tree");
  mverify->add_option("--depth", verify_depth)->capture_default_str();
  mverify->callback([&] {
    check_depth(g, verify_depth);
    Json failures = Json::array();
    std::size_t n = 0, agree = 0;
    for (const auto& e : enumerate_tree(verify_depth)) {
      ++n;
      QReport r = verify_q(e.triple, derive_q(e.triple));
      if (r.c3_some == r.c3_all) ++agree;
      if (!r.all()) failures.push_back(Json{{"triple", to_json(e.triple)}, {"report", to_json(r)}});
    }
    emit(g, Json{{"depth", verify_depth},
                 {"triples", n},
                 {"failures", failures},
                 {"c3_readings_agree", agree == n},
                 {"pass", failures.empty()}});
    if (!failures.empty()) status = 3;
  });

  // farey
  auto* farey = app.add_subcommand("farey", "Farey graph and decorated paths");
  farey->require_subcommand(1);
  std::string from, to;
  auto* fpath = farey->add_subcommand("path", "Minimal clockwise path");
  fpath->add_option("FROM", from)->required();
  fpath->add_option("TO", to)->required();
  fpath->callback([&] {
    Json out = Json::array();
    for (const auto& s : minimal_path(Slope::parse(from), Slope::parse(to))) out.push_back(to_json(s));
    emit(g, out);
  });

  std::string path_file;
  auto* fclass = farey->add_subcommand("classify", "Classify a decorated lens-space path");
  fclass->add_option("PATH", path_file)->required();
  fclass->callback([&] {
    DecoratedPath p = path_from_json(read_json_file(path_file));
    Tightness t = classify(p);
    ShortenResult s = shorten(p);
    Json at = Json::array();
    for (const auto& x : s.opposite_at) at.push_back(to_json(x));
    emit(g, Json{{"class", std::string(tightness_name(t))},
                 {"minimal", is_minimal(p.slopes)},
                 {"shortened", to_json(s.path)},
                 {"opposite_at", at}});
  });

  // lens
  auto* lens = app.add_subcommand("lens", "Lens spaces and torus knots");
  lens->require_subcommand(1);
  std::vector<std::string> knot, ambient;
  auto* surgery = lens->add_subcommand("surgery", "Torus-framing surgery on a negative torus knot");
  surgery->add_option("--knot", knot, "P Q")->expected(2)->required()->allow_extra_args(false);
  surgery->add_option("--ambient", ambient, "R S")->expected(2)->required()->allow_extra_args(false);
  surgery->callback([&] {
    TorusKnot k{parse_int(knot[0]), parse_int(knot[1]), parse_int(ambient[0]), parse_int(ambient[1])};
    KnotClass c = classify_torus_knot(k);
    if (c.readings_disagree())
      std::cerr << R"({"warning":"triviality readings disagree for this knot"})" << '\n';
    emit(g, to_json(nonloose_surgery_result(k)));
  });

  // handle
  auto* handle = app.add_subcommand("handle", "Horizontal handle diagrams");
  handle->require_subcommand(1);
  std::vector<std::string> bx_args;
  bool bx_json = false;
  auto* bx = handle->add_subcommand("build-x", "Three-curve diagram of a Markov triple");
  bx->add_option("P", bx_args)->expected(3)->required();
  bx->add_flag("--json", bx_json);
  bx->callback([&] {
    MarkovTriple t = triple_from(bx_args);
    HorizontalDiagram d = build_X(t, derive_q(t));
    if (bx_json)
      emit(g, to_json(d));
    else
      std::cout << text_diagram(d);
  });

  std::string diag_file;
  auto* rec = handle->add_subcommand("recognize", "CP^2 recognition");
  rec->add_option("DIAGRAM", diag_file)->required();
  rec->callback([&] { emit(g, to_json(recognize_cp2(diagram_from_json(read_json_file(diag_file))))); });

  std::string mut_file, slot_name = "first";
  auto* mut = handle->add_subcommand("mutate", "Mutation handle slide");
  mut->add_option("DIAGRAM", mut_file)->required();
  mut->add_option("--slot", slot_name)->check(CLI::IsMember({"first", "second"}))->capture_default_str();
  mut->callback([&] {
    HorizontalDiagram d = diagram_from_json(read_json_file(mut_file));
    emit(g, to_json(slide_mutation(d, slot_name == "first" ? Slot::First : Slot::Second)));
  });

  // atf
  auto* atf = app.add_subcommand("atf", "Almost-toric base diagrams");
  atf->require_subcommand(1);
  std::vector<std::string> ab_args;
  std::string svg_out;
  auto* ab = atf->add_subcommand("build", "Almost-toric picture for a Markov triple");
  ab->add_option("P", ab_args)->expected(3)->required();
  ab->add_option("--svg", svg_out, "Also write an SVG rendering");
  ab->callback([&] {
    AtfDiagram d = atf_for_markov(triple_from(ab_args));
    if (!svg_out.empty()) write_file(svg_out, to_svg(d));
    emit(g, atf_output(d));
  });

  std::string move_file, slide_t;
  std::vector<std::string> slide_args;
  long transfer_node = -1;
  auto* mv = atf->add_subcommand("move", "Apply a transfer or slide");
  mv->add_option("DIAGRAM", move_file)->required();
  auto* opt_t = mv->add_option("--transfer", transfer_node, "Node index");
  auto* opt_s = mv->add_option("--slide", slide_args, "Node index and scale t: position -> cut + t (position - cut)")
                    ->expected(2);
  opt_t->excludes(opt_s);
  mv->callback([&] {
    AtfDiagram d = atf_from_json(read_json_file(move_file));
    if (*opt_t) {
      if (transfer_node < 0) fail(ErrorKind::Precondition, "node index must be non-negative");
      d = transfer_cut(d, static_cast<std::size_t>(transfer_node));
    } else if (*opt_s) {
      long idx = static_cast<long>(to_int64(parse_int(slide_args[0])));
      if (idx < 0) fail(ErrorKind::Precondition, "node index must be non-negative");
      d = nodal_slide_scaled(d, static_cast<std::size_t>(idx), parse_rat(slide_args[1]));
    } else {
      fail(ErrorKind::Precondition, "atf move needs --transfer or --slide");
    }
    emit(g, atf_output(d));
  });

  // verify
  auto* verify = app.add_subcommand("verify", "Acceptance sweeps");
  verify->require_subcommand(1);
  unsigned all_depth = 8;
  auto* vall = verify->add_subcommand("all", "Run every acceptance criterion");
  vall->add_option("--depth", all_depth)->capture_default_str();
  vall->callback([&] {
    check_depth(g, all_depth);
    SweepOptions o;
    o.depth = all_depth;
    bool pass = true;
    for (const auto& c : acceptance_criteria()) {
      CriterionResult r = c(o);
      pass = pass && r.pass;
      std::cout << summary_line(r) << std::endl;
    }
    std::cout << (pass ? "ALL PASS" : "SOME CRITERIA FAILED") << '\n';
    if (!pass) status = 3;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << Json{{"error", "usage"}, {"message", e.what()}}.dump() << '\n';
    return 1;
  } catch (const Error& e) {
    std::cerr << Json{{"error", std::string(error_kind_name(e.kind()))}, {"message", e.what()}}.dump() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << Json{{"error", "internal"}, {"message", e.what()}}.dump() << '\n';
    return 2;
  }
  return status;
}
