#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "magma/error.hpp"
#include "magma/jsonio.hpp"
#include "magma/kernels.hpp"
#include "magma/kurosh.hpp"
#include "magma/oracle.hpp"
#include "magma/substitute.hpp"

namespace {

using magma::Json;

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw magma::ParseError("cannot open input file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw magma::ParseError("cannot open output file '" + path + "'");
  out << content;
}

magma::AlphabetRef alphabet_from_flag(const std::string& flag) {
  std::vector<std::string> names;
  std::string cur;
  for (char c : flag + ",") {
    if (c == ',' || c == ' ') {
      if (!cur.empty()) names.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  return magma::Alphabet::make(std::move(names));
}

std::size_t resolve_budget(std::uint64_t flag_value, bool flag_given) {
  if (flag_given) return static_cast<std::size_t>(flag_value);
  if (const char* env = std::getenv("MAGMA_FORGE_BUDGET")) {
    std::string text(env);
    std::size_t pos = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(text, &pos);
    } catch (const std::exception&) {
      throw magma::ParseError("MAGMA_FORGE_BUDGET is not a number: '" + text + "'");
    }
    if (pos != text.size() || text.empty() || text[0] == '-')
      throw magma::ParseError("MAGMA_FORGE_BUDGET is not a number: '" + text + "'");
    return static_cast<std::size_t>(v);
  }
  return 1'000'000;
}

struct CommonFlags {
  std::string format;  // "text" or "json"; subcommands pick their default
  std::string output;
  int threads = 0;
  std::uint64_t budget = 0;
  bool budget_given = false;
};

bool want_json(const CommonFlags& c, bool json_default) {
  if (c.format == "json") return true;
  if (c.format == "text") return false;
  return json_default;
}

std::string render_verdict_text(const magma::IndependenceVerdict& v) {
  std::ostringstream out;
  out << "status: " << magma::to_string(v.status) << "\n";
  out << "bound: " << (v.bound ? std::to_string(*v.bound) : "unbounded") << "\n";
  if (v.witness) out << "witness: " << magma::to_text(*v.witness) << "\n";
  return out.str();
}

std::string render_report_text(const magma::FreeGeneratorReport& r) {
  std::ostringstream out;
  out << "free generators (" << r.generators.size() << "):\n";
  for (std::size_t i = 0; i < r.generators.size(); ++i) {
    bool seeded = std::find(r.seed_indices.begin(), r.seed_indices.end(), i) !=
                  r.seed_indices.end();
    out << "  [deg " << r.degrees[i] << (seeded ? ", seed" : "") << "] "
        << magma::to_text(r.generators[i]) << "\n";
  }
  out << "bound: " << r.bound << "\n";
  out << "slices regenerated: " << (r.slices_match ? "yes" : "no") << "\n";
  out << "independence: " << magma::to_string(r.independence.status);
  if (r.independence.bound) out << " (bound " << *r.independence.bound << ")";
  out << "\n";
  return out.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact engine for free magmas and free non-associative algebras"};
  app.name("magma-forge");
  app.require_subcommand(1);
  app.fallthrough();

  CommonFlags common;
  app.add_option("--format", common.format, "output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--output", common.output, "write output to this file instead of stdout");
  app.add_option("--threads", common.threads,
                 "worker threads for the parallel kernels (0 = hardware default)");
  auto* budget_opt =
      app.add_option("--budget", common.budget,
                     "monomial budget per slice/class (overrides MAGMA_FORGE_BUDGET)");

  // ---- embed ----
  auto* embed_cmd = app.add_subcommand(
      "embed", "map a term to its (shape, word) code, or back with --shape/--word");
  std::string embed_term, embed_alphabet = "z1,z2,z3,z4", embed_shape, embed_word;
  embed_cmd->add_option("--term", embed_term, "term to encode, e.g. '(z2,(z3,(z1,z4)))'");
  embed_cmd->add_option("--alphabet", embed_alphabet, "comma-separated symbols");
  embed_cmd->add_option("--shape", embed_shape, "preorder bitstring for the inverse direction");
  embed_cmd->add_option("--word", embed_word, "dot-separated leaf word for the inverse direction");

  // ---- enumerate ----
  auto* enum_cmd = app.add_subcommand("enumerate", "list shapes or monomials of one degree");
  int enum_degree = 0;
  std::string enum_alphabet = "z1,z2";
  bool enum_shapes = false, enum_count = false;
  enum_cmd->add_option("--degree", enum_degree, "degree to enumerate")->required();
  enum_cmd->add_option("--alphabet", enum_alphabet, "comma-separated symbols");
  enum_cmd->add_flag("--shapes", enum_shapes, "list shapes only");
  enum_cmd->add_flag("--count", enum_count, "print the count without materializing");

  // ---- eval ----
  auto* eval_cmd = app.add_subcommand(
      "eval", "evaluate an expression over X1..Xn at the polynomials from the input file");
  std::string eval_input, eval_expr;
  eval_cmd->add_option("--input", eval_input, "polynomial file (or - for stdin)")->required();
  eval_cmd->add_option("--expr", eval_expr, "expression over X1..Xn, e.g. '(X1,X2) - 2*X1'")
      ->required();

  // ---- project ----
  auto* project_cmd =
      app.add_subcommand("project", "homogeneous components of the input polynomials");
  std::string project_input;
  int project_degree = 0;
  bool project_split = false, project_leading = false;
  project_cmd->add_option("--input", project_input, "polynomial file (or - for stdin)")
      ->required();
  auto* project_degree_opt =
      project_cmd->add_option("--degree", project_degree, "project onto this degree");
  project_cmd->add_flag("--split", project_split,
                        "split the projected component by product type");
  project_cmd->add_flag("--leading", project_leading, "print leading forms instead");

  // ---- indep ----
  auto* indep_cmd =
      app.add_subcommand("indep", "algebraic-independence verdict for the input family");
  std::string indep_input, indep_mode = "auto";
  int indep_dmax = 0;
  indep_cmd->add_option("--input", indep_input, "polynomial file (or - for stdin)")->required();
  indep_cmd->add_option("--dmax", indep_dmax, "search degree bound")->required();
  indep_cmd->add_option("--mode", indep_mode, "auto, exhaustive, or reduced")
      ->check(CLI::IsMember({"auto", "exhaustive", "reduced"}));

  // ---- kurosh ----
  auto* kurosh_cmd = app.add_subcommand(
      "kurosh", "free generators of the subalgebra generated by the input family");
  std::string kurosh_input, kurosh_seed_input;
  int kurosh_bound = 0;
  bool kurosh_inhomogeneous = false;
  kurosh_cmd->add_option("--input", kurosh_input, "generator file (or - for stdin)")->required();
  kurosh_cmd->add_option("--bound", kurosh_bound, "degree bound")->required();
  kurosh_cmd->add_option("--seed", kurosh_seed_input,
                         "file with seed elements that must appear among the generators");
  kurosh_cmd->add_flag("--inhomogeneous", kurosh_inhomogeneous,
                       "force the leading-form lift even for homogeneous input");

  // ---- oracle ----
  auto* oracle_cmd = app.add_subcommand("oracle", "run the self-check battery");
  std::string oracle_alphabet = "z1,z2";
  int oracle_bound = 6, oracle_trials = 8;
  std::uint64_t oracle_seed = 0;
  oracle_cmd->add_option("--alphabet", oracle_alphabet, "comma-separated symbols");
  oracle_cmd->add_option("--bound", oracle_bound, "degree reach of the exhaustive checks");
  oracle_cmd->add_option("--rng-seed", oracle_seed, "seed for the randomized checks");
  oracle_cmd->add_option("--trials", oracle_trials, "trials per randomized check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return magma::exit_parse;
  }

  try {
    if (common.threads < 0) throw magma::ParseError("--threads cannot be negative");
    magma::set_thread_count(common.threads);
    common.budget_given = budget_opt->count() > 0;
    const std::size_t budget = resolve_budget(common.budget, common.budget_given);

    std::string rendered;
    int exit_code = magma::exit_ok;

    if (app.got_subcommand(embed_cmd)) {
      magma::AlphabetRef a = alphabet_from_flag(embed_alphabet);
      magma::Term term = [&] {
        if (!embed_term.empty()) {
          if (!embed_shape.empty() || !embed_word.empty())
            throw magma::ParseError("give either --term or --shape/--word, not both");
          return magma::parse_term(embed_term, a);
        }
        if (embed_shape.empty() || embed_word.empty())
          throw magma::ParseError("embed needs --term, or --shape together with --word");
        return magma::unembed(
            a, magma::make_code(magma::Shape::from_bits(embed_shape),
                                magma::parse_word(embed_word, a)));
      }();
      magma::MonomialCode code = magma::embed(term);
      if (want_json(common, false)) {
        Json words = Json::array();
        for (magma::SymbolIndex s : code.word.letters) words.push_back(a->name(s));
        rendered = magma::dump_json(Json{{"term", magma::to_text(term)},
                                         {"shape", code.shape.bits()},
                                         {"word", std::move(words)},
                                         {"degree", code.degree()}});
      } else {
        std::ostringstream out;
        out << "term: " << magma::to_text(term) << "\n"
            << "shape: " << code.shape.bits() << "\n"
            << "word: " << magma::word_text(code.word, *a) << "\n"
            << "degree: " << code.degree() << "\n";
        rendered = out.str();
      }
    } else if (app.got_subcommand(enum_cmd)) {
      magma::AlphabetRef a = alphabet_from_flag(enum_alphabet);
      if (enum_degree < 1) throw magma::HypothesisError("degree must be positive");
      // Count first: Catalan(degree-1) shapes, times |A|^degree words.
      std::vector<mpz_class> cat(static_cast<std::size_t>(enum_degree) + 1, 0);
      cat[1] = 1;
      for (int d = 2; d <= enum_degree; ++d)
        for (int l = 1; l < d; ++l) cat[d] += cat[l] * cat[d - l];
      mpz_class total = cat[enum_degree];
      if (!enum_shapes) {
        mpz_class words;
        mpz_ui_pow_ui(words.get_mpz_t(), static_cast<unsigned long>(a->size()),
                      static_cast<unsigned long>(enum_degree));
        total *= words;
      }
      if (enum_count) {
        if (want_json(common, false)) {
          rendered = magma::dump_json(Json{{"degree", enum_degree}, {"count", total.get_str()}});
        } else {
          rendered = total.get_str() + "\n";
        }
      } else {
        if (total > static_cast<unsigned long>(budget))
          throw magma::BudgetError("enumeration at degree " + std::to_string(enum_degree) +
                                       " exceeds the monomial budget of " +
                                       std::to_string(budget),
                                   total.get_str());
        if (enum_shapes) {
          std::vector<magma::Shape> shapes = magma::shapes_of_degree(enum_degree);
          if (want_json(common, false)) {
            Json arr = Json::array();
            for (const magma::Shape& s : shapes) arr.push_back(s.bits());
            rendered = magma::dump_json(
                Json{{"degree", enum_degree}, {"count", shapes.size()}, {"shapes", arr}});
          } else {
            std::ostringstream out;
            for (const magma::Shape& s : shapes) out << s.bits() << "\n";
            rendered = out.str();
          }
        } else {
          std::vector<magma::MonomialCode> codes = magma::monomials_of_degree(*a, enum_degree);
          if (want_json(common, false)) {
            Json arr = Json::array();
            for (const magma::MonomialCode& c : codes) {
              Json words = Json::array();
              for (magma::SymbolIndex s : c.word.letters) words.push_back(a->name(s));
              arr.push_back(Json{{"shape", c.shape.bits()}, {"word", std::move(words)}});
            }
            rendered = magma::dump_json(
                Json{{"degree", enum_degree}, {"count", codes.size()}, {"monomials", arr}});
          } else {
            std::ostringstream out;
            for (const magma::MonomialCode& c : codes) out << magma::term_text(c, *a) << "\n";
            rendered = out.str();
          }
        }
      }
    } else if (app.got_subcommand(eval_cmd)) {
      magma::PolySet set = magma::load_poly_set(read_input(eval_input));
      if (set.polys.empty()) throw magma::ParseError("input file holds no polynomials");
      magma::AlphabetRef x = magma::Alphabet::indeterminates(set.polys.size());
      magma::Polynomial expr = magma::parse_poly(eval_expr, x);
      magma::Polynomial value = magma::substitute(expr, magma::SubstitutionMap{set.polys});
      rendered = want_json(common, false) ? magma::dump_json(magma::to_json(value))
                                          : magma::to_text(value) + "\n";
    } else if (app.got_subcommand(project_cmd)) {
      magma::PolySet set = magma::load_poly_set(read_input(project_input));
      if (set.polys.empty()) throw magma::ParseError("input file holds no polynomials");
      if (project_leading == (project_degree_opt->count() > 0))
        throw magma::ParseError("project needs exactly one of --degree or --leading");
      if (want_json(common, false)) {
        Json arr = Json::array();
        for (const magma::Polynomial& p : set.polys) {
          if (project_leading) {
            arr.push_back(magma::to_json(magma::leading_form(p)));
          } else if (project_split) {
            Json parts = Json::array();
            for (const auto& [shape, part] : magma::product_type_split(p, project_degree))
              parts.push_back(Json{{"shape", shape.bits()}, {"component", magma::to_json(part)}});
            arr.push_back(std::move(parts));
          } else {
            arr.push_back(magma::to_json(magma::pi_n(p, project_degree)));
          }
        }
        rendered = magma::dump_json(arr);
      } else {
        std::ostringstream out;
        for (const magma::Polynomial& p : set.polys) {
          if (project_leading) {
            out << magma::to_text(magma::leading_form(p)) << "\n";
          } else if (project_split) {
            auto parts = magma::product_type_split(p, project_degree);
            if (parts.empty()) out << "(no degree-" << project_degree << " component)\n";
            for (const auto& [shape, part] : parts)
              out << shape.bits() << ": " << magma::to_text(part) << "\n";
          } else {
            out << magma::to_text(magma::pi_n(p, project_degree)) << "\n";
          }
        }
        rendered = out.str();
      }
    } else if (app.got_subcommand(indep_cmd)) {
      magma::PolySet set = magma::load_poly_set(read_input(indep_input));
      if (set.polys.empty()) throw magma::ParseError("input file holds no polynomials");
      magma::SearchOptions opts{budget};
      magma::IndependenceVerdict verdict = [&] {
        if (indep_mode == "exhaustive") return magma::relation_search(set.polys, indep_dmax, opts);
        if (indep_mode == "reduced") return magma::is_reduced(set.polys, indep_dmax, opts);
        bool same_degree = true;
        for (const magma::Polynomial& p : set.polys) {
          if (p.is_zero() || !p.is_homogeneous() ||
              *p.degree() != *set.polys.front().degree()) {
            same_degree = false;
            break;
          }
        }
        return same_degree ? magma::same_degree_fast_path(set.polys)
                           : magma::is_reduced(set.polys, indep_dmax, opts);
      }();
      rendered = want_json(common, true) ? magma::dump_json(magma::to_json(verdict))
                                         : render_verdict_text(verdict);
    } else if (app.got_subcommand(kurosh_cmd)) {
      magma::PolySet set = magma::load_poly_set(read_input(kurosh_input));
      if (set.polys.empty()) throw magma::ParseError("input file holds no polynomials");
      std::vector<magma::Polynomial> seed;
      if (!kurosh_seed_input.empty()) {
        magma::PolySet seed_set = magma::load_poly_set(read_input(kurosh_seed_input));
        if (!magma::same_alphabet(seed_set.alphabet, set.alphabet))
          throw magma::ParseError("seed file uses a different alphabet than the generators");
        seed = std::move(seed_set.polys);
      }
      magma::KuroshOptions opts{budget};
      bool homogeneous = std::all_of(set.polys.begin(), set.polys.end(),
                                     [](const magma::Polynomial& p) {
                                       return !p.is_zero() && p.is_homogeneous();
                                     });
      magma::FreeGeneratorReport report =
          (!kurosh_inhomogeneous && homogeneous)
              ? magma::extract_free_generators(set.polys, kurosh_bound, seed, opts)
              : magma::lift_leading_forms(set.polys, kurosh_bound, seed, opts);
      rendered = want_json(common, true) ? magma::dump_json(magma::to_json(report))
                                         : render_report_text(report);
    } else if (app.got_subcommand(oracle_cmd)) {
      magma::SessionConfig cfg;
      cfg.alphabet = alphabet_from_flag(oracle_alphabet);
      cfg.bound = oracle_bound;
      cfg.monomial_budget = budget;
      cfg.seed = oracle_seed;
      cfg.trials = oracle_trials;
      magma::OracleReport report = magma::oracle_suite(cfg);
      if (want_json(common, true)) {
        rendered = magma::dump_json(magma::to_json(report));
      } else {
        std::ostringstream out;
        for (const magma::OracleCheck& c : report.checks)
          out << (c.passed ? "PASS" : "FAIL") << " " << c.name << " — " << c.detail << "\n";
        out << (report.all_passed ? "all checks passed" : "SOME CHECKS FAILED") << "\n";
        rendered = out.str();
      }
      if (!report.all_passed) exit_code = magma::exit_internal;
    }

    write_output(common.output, rendered);
    return exit_code;
  } catch (const magma::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.exit_code();
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return magma::exit_internal;
  }
}
