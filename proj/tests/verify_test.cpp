#include "doctest.h"

#include "escalier/verify.hpp"
#include "fixtures.hpp"

using namespace escalier;

namespace {

const TermOrder kLex = TermOrder::lex();
const TermOrder kGrlex = TermOrder::grlex();

}  // namespace

TEST_CASE("finiteness check") {
  std::vector<std::vector<Rational>> pts{{1, 2}, {3, 4}, {1, 4}};
  CheckReport rep = check_finiteness(pts);
  CHECK(rep.pass);
  CHECK(rep.check == "finiteness");
  CHECK(!rep.instance.empty());

  CHECK(!check_finiteness({}).pass);
}

TEST_CASE("plane counting check on fixtures") {
  CHECK(check_theorem_number(fixtures::crossed_lines(), kGrlex).pass);
  CHECK(check_theorem_number(fixtures::stacked_lines(), kLex).pass);
  CHECK(check_theorem_number(fixtures::sloped_lines(), kLex).pass);
  CHECK(check_theorem_number(fixtures::mixed_lines(), kLex).pass);
}

TEST_CASE("decomposition check on fixtures") {
  CHECK(check_lemma_decompose(fixtures::crossed_lines(), kGrlex).pass);
  CHECK(check_lemma_decompose(fixtures::mixed_lines(), kLex).pass);
}

TEST_CASE("stacking check") {
  CHECK(check_theorem_stack(fixtures::stacked_lines(), kLex).pass);

  // Non-product order is a reported precondition failure, not a crash.
  CheckReport rep = check_theorem_stack(fixtures::stacked_lines(), kGrlex);
  CHECK(!rep.pass);
  CHECK(rep.witness.find("precondition") != std::string::npos);
}

TEST_CASE("recursive and closed-form stacking checks") {
  CHECK(check_corollary_recursive(fixtures::stacked_lines(), kLex, 1).pass);
  CHECK(check_corlex_formulas(fixtures::stacked_lines(), kLex, 1).pass);

  // A component with X_1 free violates the recursion precondition.
  CheckReport rep = check_corollary_recursive(fixtures::sloped_lines(), kLex, 1);
  CHECK(!rep.pass);
  CHECK(rep.witness.find("precondition") != std::string::npos);
}

TEST_CASE("hyperplane formula check") {
  // Three parallel lines and one transversal line in the plane.
  Variety V;
  V.n = 2;
  for (int k = 1; k <= 3; ++k) {
    AffinePlane P;
    P.n = 2;
    P.J = {1};
    P.c[0] = Rational(-k);
    V.components.push_back(P);
  }
  AffinePlane Q;
  Q.n = 2;
  Q.J = {0};
  Q.c[1] = Rational(-7);
  V.components.push_back(Q);
  CHECK(check_hyperplane_formula(V, kLex).pass);

  CheckReport rep = check_hyperplane_formula(fixtures::stacked_lines(), kLex);
  CHECK(!rep.pass);
  CHECK(rep.witness.find("precondition") != std::string::npos);
}

TEST_CASE("generic fiber inheritance check") {
  CHECK(check_theorem_inherit(fixtures::sloped_lines(), kLex).pass);

  // Pinned components violate the hypothesis.
  CheckReport rep = check_theorem_inherit(fixtures::stacked_lines(), kLex);
  CHECK(!rep.pass);
  CHECK(rep.witness.find("precondition") != std::string::npos);
}

TEST_CASE("general lower-bound check records strictness") {
  CheckReport rep = check_corollary_general(fixtures::mixed_lines(), kLex);
  CHECK(rep.pass);
  CHECK((rep.witness == "containment is an equality" ||
         rep.witness == "containment is strict"));

  CHECK(check_corollary_general(fixtures::sloped_lines(), kLex).pass);
}

TEST_CASE("corner inequality check") {
  CHECK(check_inequality_strong(fixtures::mixed_lines(), kLex).pass);
  CHECK(check_inequality_strong(fixtures::sloped_lines(), kLex).pass);
}

TEST_CASE("homogenisation reduction check") {
  CHECK(check_prop_iff_reduction(fixtures::sloped_lines(), kLex).pass);

  // Mixed direction sets violate the common-J hypothesis.
  CheckReport rep = check_prop_iff_reduction(fixtures::mixed_lines(), kLex);
  CHECK(!rep.pass);
  CHECK(rep.witness.find("precondition") != std::string::npos);
}

TEST_CASE("fuzzing is deterministic in the seed") {
  const std::vector<std::string> which{"number", "stack", "inherit"};
  InstanceGenerator g1(2024), g2(2024), g3(2025);
  auto r1 = fuzz(g1, which, 3);
  auto r2 = fuzz(g2, which, 3);
  auto r3 = fuzz(g3, which, 3);
  REQUIRE(r1.size() == 9);
  REQUIRE(r2.size() == 9);
  bool same = true, diff = false;
  for (std::size_t i = 0; i < r1.size(); ++i) {
    same = same && r1[i].instance == r2[i].instance && r1[i].check == r2[i].check;
    diff = diff || r1[i].instance != r3[i].instance;
  }
  CHECK(same);
  CHECK(diff);
  for (const auto& rep : r1) CHECK(rep.pass);
}

TEST_CASE("fuzzing edge cases") {
  InstanceGenerator gen(1);
  CHECK(fuzz(gen, {"number"}, 0).empty());
  auto bad = fuzz(gen, {"nonsense"}, 1);
  REQUIRE(bad.size() == 1);
  CHECK(!bad[0].pass);
  CHECK(bad[0].witness == "unknown check");
}

TEST_CASE("every named check passes a short fuzz run") {
  const std::vector<std::string> all{"finiteness", "number", "decompose",
                                     "stack",      "recursive", "corlex",
                                     "hyperplane", "inherit",   "general",
                                     "strong",     "iff"};
  InstanceGenerator gen(7);
  for (const auto& rep : fuzz(gen, all, 4)) {
    INFO(rep.check, ": ", rep.instance, " -- ", rep.witness);
    CHECK(rep.pass);
  }
}
