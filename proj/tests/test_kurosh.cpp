#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "magma/error.hpp"
#include "magma/kurosh.hpp"
#include "magma/oracle.hpp"
#include "magma/substitute.hpp"
#include "magma/textio.hpp"
#include "testutil.hpp"

using namespace magma;

namespace {

std::vector<std::size_t> slice_dims(const GradedSubalgebra& s) {
  std::vector<std::size_t> dims;
  for (int d = 1; d <= s.bound; ++d) dims.push_back(s.rank(d));
  return dims;
}

}  // namespace

TEST_CASE("graded slices of a single degree-1 generator follow the shape counts") {
  AlphabetRef z = Alphabet::make({"z1"});
  GradedSubalgebra s = graded_slices({parse_poly("z1", z)}, 6);
  CHECK(slice_dims(s) == std::vector<std::size_t>{1, 1, 2, 5, 14, 42});
  for (int d = 1; d <= 6; ++d)
    CHECK(s.rank(d) == static_cast<std::size_t>(testutil::shape_count(d)));
  CHECK_THROWS_AS(s.slice(7), HypothesisError);
  CHECK_THROWS_AS(s.slice(0), HypothesisError);
}

TEST_CASE("graded slices of one degree-2 generator live in even degrees") {
  AlphabetRef z = Alphabet::make({"z1"});
  GradedSubalgebra s = graded_slices({parse_poly("(z1,z1)", z)}, 6);
  CHECK(slice_dims(s) == std::vector<std::size_t>{0, 1, 0, 1, 0, 2});
}

TEST_CASE("two degree-1 generators regenerate the whole algebra") {
  AlphabetRef z = Alphabet::make({"z1", "z2"});
  GradedSubalgebra s = graded_slices({parse_poly("z1", z), parse_poly("z2", z)}, 3);
  CHECK(slice_dims(s) == std::vector<std::size_t>{2, 4, 16});
}

TEST_CASE("graded slices validate input") {
  AlphabetRef z = Alphabet::make({"z1", "z2"});
  CHECK_THROWS_AS(graded_slices({parse_poly("z1 + (z1,z1)", z)}, 4), HypothesisError);
  CHECK_THROWS_AS(graded_slices({Polynomial::zero(z)}, 4), HypothesisError);
  CHECK_THROWS_AS(graded_slices({parse_poly("(z1,(z1,z1))", z)}, 2), HypothesisError);
  CHECK_THROWS_AS(graded_slices({parse_poly("z1", z)}, 0), HypothesisError);
  KuroshOptions tiny{10};
  CHECK_THROWS_AS(graded_slices({parse_poly("z1", z), parse_poly("z2", z)}, 6, tiny),
                  BudgetError);
}

TEST_CASE("membership slices answer containment questions") {
  AlphabetRef z = Alphabet::make({"z1", "z2"});
  std::vector<Polynomial> gens = {parse_poly("z1", z)};
  EchelonBasis m3 = subalgebra_membership_slice(gens, 3);
  CHECK(m3.contains(parse_poly("(z1,(z1,z1)) - 2*((z1,z1),z1)", z)));
  CHECK(!m3.contains(parse_poly("(z1,(z1,z2))", z)));
  // Generators above the probe degree are ignored.
  EchelonBasis m1 = subalgebra_membership_slice({parse_poly("(z2,z2)", z)}, 1);
  CHECK(m1.rank() == 0);
}

TEST_CASE("extraction keeps what products cannot reach") {
  AlphabetRef z = Alphabet::make({"z1"});
  std::vector<Polynomial> gens = {parse_poly("(z1,z1)", z), parse_poly("((z1,z1),z1)", z),
                                  parse_poly("(z1,(z1,z1))", z)};
  FreeGeneratorReport r = extract_free_generators(gens, 6);
  REQUIRE(r.generators.size() == 3);
  CHECK(r.degrees == std::vector<int>{2, 3, 3});
  CHECK(to_text(r.generators[0]) == "(z1,z1)");
  CHECK(to_text(r.generators[1]) == "(z1,(z1,z1))");
  CHECK(to_text(r.generators[2]) == "((z1,z1),z1)");
  CHECK(r.seed_indices.empty());
  CHECK(r.bound == 6);
  CHECK(r.slices_match);
  CHECK(r.independence.status == IndependenceStatus::independent_up_to);
  CHECK(r.independence.bound == 6);

  // The emitted family regenerates the subalgebra degree by degree.
  GradedSubalgebra original = graded_slices(gens, 6);
  GradedSubalgebra regenerated = graded_slices(r.generators, 6);
  for (int d = 1; d <= 6; ++d) CHECK(original.slice(d) == regenerated.slice(d));
}

TEST_CASE("redundant generators are absorbed") {
  AlphabetRef z = Alphabet::make({"z1"});
  FreeGeneratorReport r =
      extract_free_generators({parse_poly("z1", z), parse_poly("(z1,z1)", z)}, 4);
  REQUIRE(r.generators.size() == 1);
  CHECK(to_text(r.generators[0]) == "z1");
  CHECK(r.degrees == std::vector<int>{1});
  CHECK(r.slices_match);
}

TEST_CASE("same-degree families come back echelonized") {
  AlphabetRef z = Alphabet::make({"z1", "z2"});
  std::vector<Polynomial> gens = {parse_poly("(z1,z2) + (z2,z1)", z), parse_poly("(z1,z1)", z)};
  FreeGeneratorReport r = extract_free_generators(gens, 4);
  REQUIRE(r.generators.size() == 2);
  CHECK(to_text(r.generators[0]) == "(z1,z1)");
  CHECK(to_text(r.generators[1]) == "(z1,z2) + (z2,z1)");
  CHECK(r.degrees == std::vector<int>{2, 2});
}

TEST_CASE("extraction is stable under raising the bound") {
  AlphabetRef z = Alphabet::make({"z1"});
  std::vector<Polynomial> gens = {parse_poly("(z1,z1)", z), parse_poly("((z1,z1),z1)", z)};
  FreeGeneratorReport low = extract_free_generators(gens, 4);
  FreeGeneratorReport high = extract_free_generators(gens, 6);
  REQUIRE(low.generators.size() <= high.generators.size());
  for (std::size_t i = 0; i < low.generators.size(); ++i)
    CHECK(low.generators[i] == high.generators[i]);
}

TEST_CASE("seeds are honored verbatim") {
  AlphabetRef z = Alphabet::make({"z1"});
  std::vector<Polynomial> gens = {parse_poly("(z1,z1)", z), parse_poly("((z1,z1),z1)", z),
                                  parse_poly("(z1,(z1,z1))", z)};
  Polynomial seed = parse_poly("2*(z1,z1)", z);
  FreeGeneratorReport r = extract_free_generators(gens, 6, {seed});
  REQUIRE(!r.generators.empty());
  CHECK(r.generators[0] == seed);  // not rescaled
  CHECK(r.seed_indices == std::vector<std::size_t>{0});
  CHECK(r.generators.size() == 3);
  CHECK(r.slices_match);
}

TEST_CASE("seed hypotheses are verified, not assumed") {
  AlphabetRef z = Alphabet::make({"z1"});
  std::vector<Polynomial> gens = {parse_poly("(z1,z1)", z), parse_poly("((z1,z1),z1)", z),
                                  parse_poly("(z1,(z1,z1))", z)};
  // Not in the subalgebra.
  CHECK_THROWS_AS(extract_free_generators(gens, 4, {parse_poly("z1", z)}), HypothesisError);
  // Not independent.
  CHECK_THROWS_AS(extract_free_generators(
                      gens, 4, {parse_poly("(z1,z1)", z), parse_poly("3*(z1,z1)", z)}),
                  HypothesisError);
  // Independent and contained, but misses a lower-degree element: the
  // degree-2 slice is not generated by a degree-3 seed.
  try {
    extract_free_generators(gens, 6, {parse_poly("(z1,(z1,z1))", z)});
    FAIL("expected a hypothesis error");
  } catch (const HypothesisError& e) {
    CHECK(std::string(e.what()).find("(z1,z1)") != std::string::npos);
  }
}

TEST_CASE("random expressions stay inside the graded slices") {
  AlphabetRef z = Alphabet::make({"z1", "z2"});
  std::vector<Polynomial> gens = {parse_poly("(z1,z2)", z), parse_poly("(z2,z2)", z)};
  GradedSubalgebra s = graded_slices(gens, 6);
  AlphabetRef x = Alphabet::indeterminates(gens.size());
  Rng rng(7);
  SubstitutionMap at{gens};
  for (int trial = 0; trial < 20; ++trial) {
    Polynomial expr = random_homogeneous(rng, x, static_cast<int>(rng.range(1, 3)), 3);
    Polynomial value = substitute(expr, at);
    if (value.is_zero()) continue;
    for (const auto& [d, part] : homogeneous_components(value)) {
      REQUIRE(d <= 6);
      CHECK(s.slice(d).contains(part));
    }
  }
}

TEST_CASE("leading-form lift on a single mixed generator returns it unchanged") {
  AlphabetRef z = Alphabet::make({"z1"});
  Polynomial g = parse_poly("z1 + (z1,z1)", z);
  FreeGeneratorReport r = lift_leading_forms({g}, 6);
  REQUIRE(r.generators.size() == 1);
  CHECK(r.generators[0] == g);
  CHECK(r.degrees == std::vector<int>{2});  // degree of the leading form
  CHECK(r.slices_match);
  CHECK(r.independence.status == IndependenceStatus::reduced_certified);
}

TEST_CASE("leading-form lift agrees with extraction on homogeneous input") {
  AlphabetRef z = Alphabet::make({"z1", "z2"});
  std::vector<Polynomial> gens = {parse_poly("(z1,z1)", z), parse_poly("((z1,z1),(z1,z1))", z)};
  FreeGeneratorReport direct = extract_free_generators(gens, 6);
  FreeGeneratorReport lifted = lift_leading_forms(gens, 6);
  REQUIRE(direct.generators.size() == lifted.generators.size());
  for (std::size_t i = 0; i < direct.generators.size(); ++i)
    CHECK(direct.generators[i] == lifted.generators[i]);
  CHECK(direct.degrees == lifted.degrees);
}

TEST_CASE("leading-form lift exposes generators hidden by top cancellation") {
  AlphabetRef z = Alphabet::make({"z1", "z2"});
  // (g1,g1) - g2 kills both degree-4 top forms and leaves a degree-3 element.
  std::vector<Polynomial> gens = {parse_poly("z2 + (z1,z1)", z),
                                  parse_poly("((z1,z1),(z1,z1))", z)};
  FreeGeneratorReport r = lift_leading_forms(gens, 4);
  REQUIRE(r.generators.size() == 2);
  CHECK(to_text(r.generators[0]) == "z2 + (z1,z1)");
  CHECK(to_text(r.generators[1]) == "(z2,z2) + (z2,(z1,z1)) + ((z1,z1),z2)");
  CHECK(r.degrees == std::vector<int>{2, 3});
  CHECK(r.slices_match);
  CHECK(r.independence.status == IndependenceStatus::reduced_certified);

  // The lifted generators really generate both inputs.
  AlphabetRef x = Alphabet::indeterminates(2);
  SubstitutionMap at{r.generators};
  CHECK(substitute(parse_poly("X1", x), at) == gens[0]);
  CHECK(substitute(parse_poly("(X1,X1) - X2", x), at) == gens[1]);
}

TEST_CASE("two-generator lift example stays reduced to degree 5") {
  AlphabetRef z = Alphabet::make({"z1", "z2"});
  std::vector<Polynomial> gens = {parse_poly("z1 + z2", z), parse_poly("z2 + (z1,z1)", z)};
  FreeGeneratorReport r = lift_leading_forms(gens, 5);
  REQUIRE(r.generators.size() == 2);
  CHECK(to_text(r.generators[0]) == "z1 + z2");
  CHECK(to_text(r.generators[1]) == "-z2 + (z1,z2) + (z2,z1) + (z2,z2)");
  CHECK(r.degrees == std::vector<int>{1, 2});
  CHECK(r.independence.status == IndependenceStatus::reduced_certified);
  CHECK(relation_search(r.generators, 5).status == IndependenceStatus::independent_up_to);
}

TEST_CASE("leading-form slices match the lift's graded data") {
  AlphabetRef z = Alphabet::make({"z1", "z2"});
  std::vector<Polynomial> gens = {parse_poly("z2 + (z1,z1)", z),
                                  parse_poly("((z1,z1),(z1,z1))", z)};
  auto from_inputs = leading_form_slices(gens, 4);
  FreeGeneratorReport r = lift_leading_forms(gens, 4);
  auto from_lift = leading_form_slices(r.generators, 4);
  for (int d = 1; d <= 4; ++d) {
    REQUIRE(from_inputs.count(d) == 1);
    REQUIRE(from_lift.count(d) == 1);
    CHECK(from_inputs.at(d) == from_lift.at(d));
  }
}

TEST_CASE("lift seeds must be reduced") {
  AlphabetRef z = Alphabet::make({"z1", "z2"});
  std::vector<Polynomial> gens = {parse_poly("z1 + z2", z), parse_poly("z2 + (z1,z1)", z)};
  // Both inside the subalgebra, but proportional: not a reduced family.
  std::vector<Polynomial> seed = {gens[1], scale(Rational(2), gens[1])};
  CHECK_THROWS_AS(lift_leading_forms(gens, 4, seed), HypothesisError);
  // Outside the subalgebra: rejected by the membership check.
  CHECK_THROWS_AS(lift_leading_forms(gens, 4, {parse_poly("z1", z)}), HypothesisError);

  // A legitimate seed is retained verbatim.
  FreeGeneratorReport r = lift_leading_forms(gens, 4, {parse_poly("z1 + z2", z)});
  CHECK(r.seed_indices == std::vector<std::size_t>{0});
  CHECK(to_text(r.generators[0]) == "z1 + z2");
}
