// Batch front end: standard sets of unions of affine planes, d-plane
// inventories, theorem checks, staircase rendering, random instances.

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "escalier/io.hpp"
#include "escalier/render.hpp"
#include "escalier/verify.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitSemantic = 3;

escalier::Json read_document(const std::string& path) {
  std::string text;
  if (path.empty() || path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    text = buf.str();
  } else {
    std::ifstream in(path);
    if (!in) throw escalier::ParseError("cannot open input: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  escalier::Json j = escalier::Json::parse(text, nullptr, false);
  if (j.is_discarded()) throw escalier::ParseError("input is not valid JSON");
  return j;
}

int cmd_standard_set(const std::string& input, const std::string& order_flag) {
  escalier::Json j = read_document(input);
  escalier::VarietyDocument doc = escalier::parse_variety(j);
  if (!order_flag.empty()) doc.order = order_flag;
  escalier::TermOrder order = escalier::order_from_name(doc.order);
  escalier::GroebnerBasis G = escalier::ideal_of_variety(doc.variety, order);
  escalier::StandardSet D =
      escalier::StandardSet::from_corners(doc.n, escalier::corner_set(G));
  escalier::Json out = escalier::staircase_to_json(D);
  out["order"] = doc.order;
  out["groebner_basis"] = escalier::Json::array();
  for (const auto& g : G.generators) out["groebner_basis"].push_back(g.str());
  std::cout << out.dump(2) << "\n";
  return kExitPass;
}

int cmd_d_planes(const std::string& input, const std::string& order_flag) {
  escalier::Json j = read_document(input);
  escalier::StandardSet D = escalier::StandardSet::full(0);
  if (j.contains("components")) {
    escalier::VarietyDocument doc = escalier::parse_variety(j);
    if (!order_flag.empty()) doc.order = order_flag;
    D = escalier::standard_set_of_variety(doc.variety,
                                          escalier::order_from_name(doc.order));
  } else {
    D = escalier::parse_staircase(j);
  }
  escalier::Json out = escalier::staircase_to_json(D);
  auto inv = D.top_planes();
  out["top_dimension"] = inv.top_dimension;
  escalier::Json planes = escalier::Json::array();
  for (const auto& pl : inv.planes) {
    escalier::Json e;
    e["J"] = escalier::Json::array();
    for (std::size_t i : pl.J) e["J"].push_back(i + 1);
    e["base"] = escalier::Json::array();
    for (std::size_t i = 0; i < pl.base.size(); ++i) e["base"].push_back(pl.base[i]);
    planes.push_back(e);
  }
  out["planes"] = planes;
  // Per-direction counts at the top dimension.
  escalier::Json counts = escalier::Json::array();
  escalier::detail::for_each_subset(
      D.arity(), inv.top_dimension, [&](const std::vector<std::size_t>& J) {
        auto fam = D.d_planes(J);
        if (fam.infinite || !fam.bases.empty()) {
          escalier::Json e;
          e["J"] = escalier::Json::array();
          for (std::size_t i : J) e["J"].push_back(i + 1);
          if (fam.infinite)
            e["count"] = "infinite";
          else
            e["count"] = fam.bases.size();
          counts.push_back(e);
        }
      });
  out["counts"] = counts;
  // Lower-dimensional artifacts: members of D off every top plane, listed
  // within the corner box.
  escalier::Json artifacts = escalier::Json::array();
  std::vector<unsigned> M = D.corner_box();
  escalier::Exponent a(D.arity());
  std::function<void(std::size_t)> walk = [&](std::size_t k) {
    if (k == D.arity()) {
      if (!D.contains(a)) return;
      if (!escalier::detail::in_plane_union(inv.planes, a)) {
        escalier::Json row = escalier::Json::array();
        for (std::size_t i = 0; i < a.size(); ++i) row.push_back(a[i]);
        artifacts.push_back(row);
      }
      return;
    }
    for (unsigned v = 0; v <= M[k]; ++v) {
      a[k] = v;
      walk(k + 1);
    }
    a[k] = 0;
  };
  walk(0);
  out["artifacts"] = artifacts;
  std::cout << out.dump(2) << "\n";
  return kExitPass;
}

int run_reports(const std::vector<escalier::CheckReport>& reports) {
  bool all = true;
  for (const auto& r : reports) {
    escalier::Json line;
    line["check"] = r.check;
    line["instance"] = r.instance;
    line["pass"] = r.pass;
    if (!r.witness.empty()) line["witness"] = r.witness;
    std::cout << line.dump() << "\n";
    if (!r.pass) {
      all = false;
      break;  // first witness is enough
    }
  }
  return all ? kExitPass : kExitCheckFailure;
}

int cmd_verify(const std::string& check, const std::string& input,
               std::uint64_t seed, std::size_t count, unsigned b,
               const std::string& order_flag) {
  static const std::vector<std::string> known = {
      "finiteness", "number", "decompose", "stack",  "recursive", "corlex",
      "hyperplane", "inherit", "general",   "strong", "iff"};
  if (std::find(known.begin(), known.end(), check) == known.end()) {
    std::cerr << "unknown check: " << check << "\n";
    return kExitUsage;
  }
  if (!input.empty()) {
    escalier::Json j = read_document(input);
    escalier::VarietyDocument doc = escalier::parse_variety(j);
    if (!order_flag.empty()) doc.order = order_flag;
    escalier::TermOrder order = escalier::order_from_name(doc.order);
    const escalier::Variety& V = doc.variety;
    escalier::CheckReport rep;
    if (check == "number") rep = escalier::check_theorem_number(V, order);
    else if (check == "decompose") rep = escalier::check_lemma_decompose(V, order);
    else if (check == "stack") rep = escalier::check_theorem_stack(V, order);
    else if (check == "recursive") rep = escalier::check_corollary_recursive(V, order, b);
    else if (check == "corlex") rep = escalier::check_corlex_formulas(V, order, b);
    else if (check == "hyperplane") rep = escalier::check_hyperplane_formula(V, order);
    else if (check == "inherit") rep = escalier::check_theorem_inherit(V, order);
    else if (check == "general") rep = escalier::check_corollary_general(V, order);
    else if (check == "strong") rep = escalier::check_inequality_strong(V, order);
    else if (check == "iff") rep = escalier::check_prop_iff_reduction(V, order);
    else {
      std::cerr << "check \"finiteness\" takes no variety input; use --count\n";
      return kExitUsage;
    }
    return run_reports({rep});
  }
  escalier::InstanceGenerator gen(seed);
  return run_reports(escalier::fuzz(gen, {check}, count));
}

int cmd_render(const std::string& input, unsigned bounds) {
  escalier::Json j = read_document(input);
  escalier::StandardSet s = escalier::parse_staircase(j);
  if (s.arity() > 3) {
    std::cerr << "render supports at most 3 coordinates\n";
    return kExitUsage;
  }
  std::cout << escalier::render_staircase(s, bounds);
  return kExitPass;
}

int cmd_random(std::size_t n, std::size_t d, std::size_t m, std::uint64_t seed) {
  if (d >= n || m < 1) {
    std::cerr << "need d < n and m >= 1\n";
    return kExitUsage;
  }
  escalier::InstanceGenerator gen(seed);
  escalier::VarietyDocument doc;
  doc.n = n;
  doc.order = "lex";
  doc.variety = gen.variety(n, d, m);
  std::cout << escalier::variety_to_json(doc).dump(2) << "\n";
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Standard sets of finite unions of affine planes"};
  app.require_subcommand(1);

  std::string input, order_flag, check_name;
  std::uint64_t seed = 0;
  std::size_t count = 10;
  unsigned b = 1, bounds = 4;
  std::size_t rn = 3, rd = 1, rm = 2;

  auto* sset = app.add_subcommand("standard-set", "Corners and Groebner basis of a variety");
  sset->add_option("input", input, "variety document (JSON file, or - for stdin)");
  sset->add_option("--order", order_flag, "term order: lex or grlex");

  auto* dpl = app.add_subcommand("d-planes", "Plane inventory of a staircase or variety");
  dpl->add_option("input", input, "variety or staircase document");
  dpl->add_option("--order", order_flag, "term order: lex or grlex");

  auto* ver = app.add_subcommand("verify", "Run a theorem check on a fixture or fuzzed instances");
  ver->add_option("check", check_name, "check name")->required();
  ver->add_option("input", input, "optional variety document");
  ver->add_option("--order", order_flag, "term order: lex or grlex");
  ver->add_option("--seed", seed, "instance generator seed");
  ver->add_option("--count", count, "number of fuzzed instances");
  ver->add_option("--b", b, "recursion depth for recursive/corlex checks");

  auto* ren = app.add_subcommand("render", "ASCII rendering of a staircase (n <= 3)");
  ren->add_option("input", input, "staircase document");
  ren->add_option("--bounds", bounds, "box size per coordinate");

  auto* rnd = app.add_subcommand("random", "Emit a random variety document");
  rnd->add_option("n", rn, "ambient dimension")->required();
  rnd->add_option("d", rd, "component dimension")->required();
  rnd->add_option("m", rm, "component count")->required();
  rnd->add_option("--seed", seed, "generator seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (sset->parsed()) return cmd_standard_set(input, order_flag);
    if (dpl->parsed()) return cmd_d_planes(input, order_flag);
    if (ver->parsed()) return cmd_verify(check_name, input, seed, count, b, order_flag);
    if (ren->parsed()) return cmd_render(input, bounds);
    if (rnd->parsed()) return cmd_random(rn, rd, rm, seed);
  } catch (const escalier::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const escalier::SemanticError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitSemantic;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSemantic;
  }
  return kExitUsage;
}
