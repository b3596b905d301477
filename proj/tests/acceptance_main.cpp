// Acceptance battery: one pass/fail line per criterion, exit code = number
// of failures. Library criteria run in-process; the determinism criterion
// drives the CLI binary passed via --cli.

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "magma/error.hpp"
#include "magma/independence.hpp"
#include "magma/kurosh.hpp"
#include "magma/oracle.hpp"
#include "magma/substitute.hpp"
#include "magma/textio.hpp"
#include "testutil.hpp"

using namespace magma;

namespace {

std::string g_cli;
std::uint64_t g_seed = 20260815;

AlphabetRef z2() { return Alphabet::make({"z1", "z2"}); }

std::string ok() { return {}; }

template <typename T>
std::string str(const T& v) {
  std::ostringstream out;
  out << v;
  return out.str();
}

// ---- criteria 1 and 2 share one enumeration sweep ----

struct EnumerationSweep {
  std::string injectivity_failure;
  std::string degree_triple_failure;
};

EnumerationSweep run_enumeration_sweep() {
  EnumerationSweep sweep;
  AlphabetRef z = z2();
  for (int d = 1; d <= 6; ++d) {
    auto strings = testutil::all_term_strings(z->symbols(), d);
    auto expected = static_cast<std::size_t>(testutil::shape_count(d)) << d;
    if (strings.size() != expected) {
      sweep.injectivity_failure = "term oracle produced " + str(strings.size()) +
                                  " strings at degree " + str(d) + ", expected " + str(expected);
      return sweep;
    }
    std::set<MonomialCode> codes;
    for (const std::string& s : strings) {
      Term t = parse_term(s, z);
      MonomialCode code = embed(t);
      codes.insert(code);
      if (!(unembed(z, code) == t) && sweep.injectivity_failure.empty())
        sweep.injectivity_failure = "unembed(embed(t)) != t for " + s;
      if ((t.degree() != d || code.shape.degree() != d || code.word.degree() != d) &&
          sweep.degree_triple_failure.empty())
        sweep.degree_triple_failure = "degree triple broken for " + s;
    }
    if (codes.size() != strings.size() && sweep.injectivity_failure.empty())
      sweep.injectivity_failure = "embed collided at degree " + str(d) + ": " + str(codes.size()) +
                                  " codes from " + str(strings.size()) + " terms";
    auto enumerated = monomials_of_degree(*z, d);
    if (std::set<MonomialCode>(enumerated.begin(), enumerated.end()) != codes &&
        sweep.injectivity_failure.empty())
      sweep.injectivity_failure = "library enumeration disagrees with the string oracle at degree " +
                                  str(d);
    if (d == 6 && codes.size() != 2688 && sweep.injectivity_failure.empty())
      sweep.injectivity_failure = "expected 2688 codes at degree 6, got " + str(codes.size());
  }
  return sweep;
}

const EnumerationSweep& enumeration_sweep() {
  static EnumerationSweep sweep = run_enumeration_sweep();
  return sweep;
}

std::string criterion_injective_inverse() { return enumeration_sweep().injectivity_failure; }

std::string criterion_degree_triple() { return enumeration_sweep().degree_triple_failure; }

std::string criterion_catalan_counts() {
  const std::vector<std::size_t> expected = {1, 1, 2, 5, 14, 42, 132};
  for (int n = 1; n <= 7; ++n) {
    auto shapes = shapes_of_degree(n);
    if (shapes.size() != expected[static_cast<std::size_t>(n - 1)])
      return "shapes_of_degree(" + str(n) + ") has " + str(shapes.size()) + " entries";
    if (shapes.size() != static_cast<std::size_t>(testutil::shape_count(n)))
      return "recurrence oracle disagrees at degree " + str(n);
  }
  return ok();
}

std::string criterion_substitution_degree() {
  AlphabetRef z = z2();
  Rng rng(g_seed + 4);
  for (int trial = 0; trial < 500; ++trial) {
    int k = static_cast<int>(rng.range(1, 3));
    int deg_m = static_cast<int>(rng.range(1, 5));
    int image_degree = static_cast<int>(rng.range(1, 3));
    AlphabetRef x = Alphabet::indeterminates(static_cast<std::size_t>(k));
    MonomialCode m = random_code(rng, *x, deg_m);
    SubstitutionMap map;
    for (int i = 0; i < k; ++i) map.images.push_back(random_homogeneous(rng, z, image_degree, 3));
    Polynomial value = substitute(Polynomial::monomial(x, m), map);
    if (!value.is_homogeneous() || value.degree() != image_degree * deg_m)
      return "trial " + str(trial) + ": substitution of a degree-" + str(deg_m) +
             " monomial at degree-" + str(image_degree) + " images is not homogeneous of degree " +
             str(image_degree * deg_m);
  }
  return ok();
}

std::string criterion_pattern_rank() {
  // Fixed instance: the four pairwise products of two independent elements.
  AlphabetRef z3 = Alphabet::make({"z1", "z2", "z3"});
  Polynomial p1 = parse_poly("(z1,z2)", z3);
  Polynomial p2 = parse_poly("((z3,z3),z2)", z3);
  std::vector<Polynomial> products;
  for (const Polynomial& a : {p1, p2})
    for (const Polynomial& b : {p1, p2}) products.push_back(mul(a, b));
  if (testutil::dense_rank(products) != 4) return "fixed four-product instance misses rank 4";
  // The products span degrees 4 through 6, so the cross-check needs the
  // mixed-degree eliminator rather than a single-slice basis.
  if (reduced_span(z3, products).size() != 4)
    return "echelon rank disagrees with the dense oracle on the fixed instance";

  // Randomized analogues: every shape-pattern filling of an independent
  // family stays independent.
  AlphabetRef z = z2();
  Rng rng(g_seed + 5);
  for (int trial = 0; trial < 40; ++trial) {
    int n = static_cast<int>(rng.range(1, 3));
    int j = static_cast<int>(rng.range(1, 3));
    int image_degree = n == 3 ? 2 : static_cast<int>(rng.range(1, 2));
    auto family = random_independent_family(rng, z, image_degree,
                                            static_cast<std::size_t>(n), 3);
    AlphabetRef x = Alphabet::indeterminates(static_cast<std::size_t>(n));
    auto shapes = shapes_of_degree(j);
    Shape shape = shapes[rng.below(shapes.size())];
    SubstitutionMap map{family};

    std::size_t fillings = 1;
    for (int i = 0; i < j; ++i) fillings *= static_cast<std::size_t>(n);
    std::vector<Polynomial> values;
    for (std::size_t w = 0; w < fillings; ++w) {
      Word word;
      std::size_t rest = w;
      for (int i = 0; i < j; ++i) {
        word.letters.push_back(static_cast<SymbolIndex>(rest % static_cast<std::size_t>(n)));
        rest /= static_cast<std::size_t>(n);
      }
      values.push_back(substitute(Polynomial::monomial(x, make_code(shape, word)), map));
    }
    if (testutil::dense_rank(values) != fillings)
      return "trial " + str(trial) + ": n=" + str(n) + " j=" + str(j) + " pattern rank below " +
             str(fillings);
    if (echelonize(z, values).rank() != fillings)
      return "trial " + str(trial) + ": echelon rank disagrees with the dense oracle";
  }
  return ok();
}

std::string criterion_same_degree_kernels() {
  // (degree, size) strata. Degree-1 families are capped at size 1: with
  // several degree-1 generators the degree-9 search space has hundreds of
  // thousands of exact-rational columns, which is out of desk reach.
  const std::vector<std::pair<int, std::size_t>> strata = {
      {1, 1}, {2, 1}, {2, 2}, {3, 1}, {3, 2}, {2, 3}, {3, 3}};
  AlphabetRef z = z2();
  Rng rng(g_seed + 6);
  for (int trial = 0; trial < 100; ++trial) {
    auto [degree, size] = strata[static_cast<std::size_t>(trial) % strata.size()];
    auto family = random_independent_family(rng, z, degree, size, 4);
    IndependenceVerdict verdict = relation_search(family, 9);
    if (verdict.status != IndependenceStatus::independent_up_to || verdict.bound != 9)
      return "trial " + str(trial) + " (degree " + str(degree) + ", size " + str(size) +
             "): " + to_string(verdict.status) +
             (verdict.witness ? ", witness " + to_text(*verdict.witness) : "");
  }
  return ok();
}

std::string criterion_reduced_sets() {
  AlphabetRef z = z2();
  Rng rng(g_seed + 7);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t size = static_cast<std::size_t>(rng.range(1, 3));
    std::vector<Polynomial> family;
    bool certified = false;
    for (int attempt = 0; attempt < 50 && !certified; ++attempt) {
      std::vector<int> degrees = {2, 3, 4};
      for (std::size_t i = 2; i > 0; --i)
        std::swap(degrees[i], degrees[rng.below(i + 1)]);
      degrees.resize(size);
      family.clear();
      for (int d : degrees) family.push_back(random_inhomogeneous(rng, z, d, 4));
      certified = is_reduced(family, 6).status == IndependenceStatus::reduced_certified;
    }
    if (!certified) return "trial " + str(trial) + ": could not construct a certified reduced set";
    IndependenceVerdict verdict = relation_search(family, 6);
    if (verdict.status != IndependenceStatus::independent_up_to)
      return "trial " + str(trial) + ": exhaustive search contradicts the certificate: " +
             std::string(to_string(verdict.status)) +
             (verdict.witness ? ", witness " + to_text(*verdict.witness) : "");
  }
  return ok();
}

std::string criterion_dimension_laws() {
  AlphabetRef z1 = Alphabet::make({"z1"});
  AlphabetRef z = z2();
  GradedSubalgebra one = graded_slices({parse_poly("z1", z1)}, 6);
  GradedSubalgebra two = graded_slices({parse_poly("z1", z), parse_poly("z2", z)}, 6);
  for (int d = 1; d <= 6; ++d) {
    auto catalan = static_cast<std::size_t>(testutil::shape_count(d));
    if (one.rank(d) != catalan)
      return "rank over one degree-1 generator at degree " + str(d) + " is " + str(one.rank(d));
    if (two.rank(d) != (catalan << d))
      return "rank over two degree-1 generators at degree " + str(d) + " is " + str(two.rank(d));
  }
  for (int k : {2, 3}) {
    Polynomial gen = k == 2 ? parse_poly("(z1,z2)", z) : parse_poly("((z1,z2),z1)", z);
    GradedSubalgebra sub = graded_slices({gen}, 6);
    for (int d = 1; d <= 6; ++d) {
      std::size_t expected =
          d % k == 0 ? static_cast<std::size_t>(testutil::shape_count(d / k)) : 0;
      if (sub.rank(d) != expected)
        return "rank over one degree-" + str(k) + " generator at degree " + str(d) + " is " +
               str(sub.rank(d)) + ", expected " + str(expected);
    }
  }
  return ok();
}

std::string criterion_extraction() {
  AlphabetRef z = z2();
  Rng rng(g_seed + 9);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t size = static_cast<std::size_t>(rng.range(1, 3));
    // At most one degree-1 generator per family; a second one pushes the
    // bound-6 relation search into six-figure column counts.
    std::vector<int> degrees(size);
    do {
      for (int& d : degrees) d = static_cast<int>(rng.range(1, 3));
    } while (std::count(degrees.begin(), degrees.end(), 1) > 1);
    std::vector<Polynomial> generators;
    for (int d : degrees) generators.push_back(random_homogeneous(rng, z, d, 3));

    FreeGeneratorReport report = extract_free_generators(generators, 6);
    if (!report.slices_match) return "trial " + str(trial) + ": report says slices differ";
    GradedSubalgebra original = graded_slices(generators, 6);
    GradedSubalgebra regenerated = graded_slices(report.generators, 6);
    for (int d = 1; d <= 6; ++d)
      if (!(original.slice(d) == regenerated.slice(d)))
        return "trial " + str(trial) + ": regenerated slice at degree " + str(d) + " differs";
    IndependenceVerdict verdict = relation_search(report.generators, 6);
    if (verdict.status != IndependenceStatus::independent_up_to)
      return "trial " + str(trial) + ": extracted generators admit a relation" +
             (verdict.witness ? ": " + to_text(*verdict.witness) : "");
  }
  return ok();
}

std::string criterion_lift() {
  AlphabetRef z = z2();
  Rng rng(g_seed + 10);
  for (int trial = 0; trial < 20; ++trial) {
    std::size_t size = static_cast<std::size_t>(rng.range(1, 3));
    std::vector<Polynomial> generators;
    for (std::size_t i = 0; i < size; ++i) {
      Polynomial g = random_inhomogeneous(rng, z, static_cast<int>(rng.range(2, 3)), 3);
      while (g.is_homogeneous())
        g = random_inhomogeneous(rng, z, static_cast<int>(rng.range(2, 3)), 3);
      generators.push_back(g);
    }
    FreeGeneratorReport report = lift_leading_forms(generators, 5);
    if (!report.slices_match) return "trial " + str(trial) + ": report says slices differ";
    IndependenceVerdict verdict = is_reduced(report.generators, 5);
    if (verdict.status != IndependenceStatus::reduced_certified)
      return "trial " + str(trial) + ": lifted family is not certified reduced (" +
             std::string(to_string(verdict.status)) + ")";
    if (!(leading_form_slices(generators, 5) == leading_form_slices(report.generators, 5)))
      return "trial " + str(trial) + ": lifted family spans different leading-form slices";
  }
  return ok();
}

// ---- criterion 11 drives the CLI binary ----

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string criterion_determinism() {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / ("magma-acceptance-" + str(::getpid()));
  fs::create_directories(dir);

  std::ofstream(dir / "homog.txt") << "alphabet: z1 z2\n(z1,z1)\n(z1,z2) + (z2,z1)\n";
  std::ofstream(dir / "inhomog.txt") << "alphabet: z1 z2\nz2 + (z1,z1)\n(z1,z2) - 2*z1\n";
  std::string homog = (dir / "homog.txt").string();
  std::string inhomog = (dir / "inhomog.txt").string();

  const std::vector<std::pair<std::string, std::string>> commands = {
      {"embed", "embed --term '((z1,z2),(z2,z1))'"},
      {"enumerate", "enumerate --degree 4 --alphabet z1,z2"},
      {"eval", "eval --input '" + homog + "' --expr '(X1,X2) - 3*X2'"},
      {"project", "project --input '" + inhomog + "' --degree 2 --split"},
      {"indep", "indep --input '" + homog + "' --dmax 6"},
      {"kurosh", "kurosh --input '" + homog + "' --bound 6"},
      {"kurosh --inhomogeneous", "kurosh --input '" + inhomog + "' --bound 5 --inhomogeneous"},
      {"oracle",
       "oracle --alphabet z1,z2 --bound 4 --trials 2 --rng-seed " + str(g_seed)},
  };

  std::string failure;
  for (const auto& [name, args] : commands) {
    std::vector<std::string> outputs;
    for (int threads : {1, 4}) {
      for (int rep = 0; rep < 2; ++rep) {
        fs::path out = dir / ("out-" + str(outputs.size()) + ".json");
        std::string cmd = "'" + g_cli + "' " + args + " --format json --threads " + str(threads) +
                          " --output '" + out.string() + "' 2>'" + (dir / "stderr.txt").string() +
                          "'";
        int rc = std::system(cmd.c_str());
        if (rc != 0) {
          failure = name + " exited with status " + str(rc);
          break;
        }
        outputs.push_back(read_file(out));
      }
      if (!failure.empty()) break;
    }
    if (!failure.empty()) break;
    if (outputs[0].empty()) {
      failure = name + " produced no output";
      break;
    }
    for (std::size_t i = 1; i < outputs.size(); ++i) {
      if (outputs[i] != outputs[0]) {
        failure = name + " output differs between runs (run 0 vs run " + str(i) + ")";
        break;
      }
    }
    if (!failure.empty()) break;
  }

  std::error_code ec;
  fs::remove_all(dir, ec);
  return failure;
}

struct Criterion {
  int id;
  double cap_seconds;  // 0 = no cap
  std::string label;
  std::function<std::string()> run;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance battery"};
  std::vector<int> only;
  app.add_option("--cli", g_cli, "path to the command-line binary")->required();
  app.add_option("--seed", g_seed, "base seed for the randomized criteria");
  app.add_option("--only", only, "run only these criterion numbers");
  CLI11_PARSE(app, argc, argv);

  const std::vector<Criterion> criteria = {
      {1, 10.0,
       "embedding is injective with exact inverse through degree 6, |A| = 2 (2688 codes at "
       "degree 6)",
       criterion_injective_inverse},
      {2, 0.0, "term degree, shape leaf count, and word length agree on the full enumeration",
       criterion_degree_triple},
      {3, 0.0, "shape counts per degree match the convolution recurrence (1,1,2,5,14,42,132)",
       criterion_catalan_counts},
      {4, 30.0,
       "500 random monomial substitutions at equal-degree images are homogeneous of degree "
       "k*deg(M)",
       criterion_substitution_degree},
      {5, 0.0, "shape-pattern fillings of independent families always reach full rank n^j",
       criterion_pattern_rank},
      {6, 300.0,
       "100 independent same-degree families have trivial relation kernels up to degree 9 "
       "(degree-1 strata capped at size 1)",
       criterion_same_degree_kernels},
      {7, 0.0, "100 constructed reduced sets pass the exhaustive relation search at degree 6",
       criterion_reduced_sets},
      {8, 0.0,
       "graded ranks follow n^d*C(d-1) on degree-1 generators and C(j-1) on one degree-k "
       "generator",
       criterion_dimension_laws},
      {9, 600.0,
       "30 random homogeneous subalgebras: extracted generators regenerate every slice and "
       "admit no relations at bound 6",
       criterion_extraction},
      {10, 0.0,
       "20 inhomogeneous sets: lifted generators are certified reduced and regenerate the "
       "leading-form slices at bound 5",
       criterion_lift},
      {11, 0.0, "every CLI command yields byte-identical JSON across repeat runs and thread counts",
       criterion_determinism},
  };

  int failures = 0;
  int executed = 0;
  for (const Criterion& criterion : criteria) {
    if (!only.empty() && std::find(only.begin(), only.end(), criterion.id) == only.end()) continue;
    ++executed;
    auto start = std::chrono::steady_clock::now();
    std::string detail;
    try {
      detail = criterion.run();
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (detail.empty() && criterion.cap_seconds > 0 && seconds > criterion.cap_seconds)
      detail = "exceeded the " + str(criterion.cap_seconds) + "s budget";
    bool passed = detail.empty();
    failures += passed ? 0 : 1;
    std::printf("[%2d] %s (%6.1fs) %s%s%s\n", criterion.id, passed ? "PASS" : "FAIL", seconds,
                criterion.label.c_str(), passed ? "" : ": ", detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%d criteria passed\n", executed - failures, executed);
  return failures;
}
