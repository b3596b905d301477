// Compares the serial reference kernels against the OpenMP ones on the same
// inputs, checking equality of the results while timing both.
#include <CLI11.hpp>

#include <chrono>
#include <iostream>
#include <vector>

#include "magma/kernels.hpp"
#include "magma/oracle.hpp"

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"serial-vs-parallel kernel benchmark"};
  app.name("magma-bench");

  int degree = 4, count = 64, terms = 6, threads = 0, reps = 3;
  std::uint64_t seed = 1;
  app.add_option("--degree", degree, "degree of the random operands");
  app.add_option("--count", count, "operands per side of the product table");
  app.add_option("--terms", terms, "maximum monomials per operand");
  app.add_option("--threads", threads, "threads for the parallel runs (0 = hardware default)");
  app.add_option("--reps", reps, "repetitions per measurement");
  app.add_option("--seed", seed, "RNG seed");
  CLI11_PARSE(app, argc, argv);

  magma::AlphabetRef a = magma::Alphabet::make({"z1", "z2"});
  magma::Rng rng(seed);

  std::vector<magma::Polynomial> left, right;
  for (int i = 0; i < count; ++i) {
    left.push_back(magma::random_homogeneous(rng, a, degree, terms));
    right.push_back(magma::random_homogeneous(rng, a, degree, terms));
  }

  std::vector<magma::Polynomial> exprs;
  magma::AlphabetRef x = magma::Alphabet::indeterminates(2);
  for (int i = 0; i < count; ++i) exprs.push_back(magma::random_homogeneous(rng, x, 3, terms));
  magma::SubstitutionMap map{{magma::random_homogeneous(rng, a, 2, terms),
                              magma::random_homogeneous(rng, a, 2, terms)}};

  magma::set_thread_count(threads);
  int effective = magma::thread_count();
  std::cout << "operands: " << count << " x " << count << " of degree " << degree << ", up to "
            << terms << " terms each; threads: " << effective << "\n";

  for (int rep = 0; rep < reps; ++rep) {
    auto t0 = std::chrono::steady_clock::now();
    auto serial = magma::product_table_serial(left, right);
    double ts = seconds_since(t0);

    t0 = std::chrono::steady_clock::now();
    auto parallel = magma::product_table_omp(left, right, effective);
    double tp = seconds_since(t0);

    bool same = serial == parallel;
    std::cout << "product_table     serial " << ts << "s  omp " << tp << "s  "
              << (same ? "identical" : "MISMATCH") << "\n";
    if (!same) return 1;
  }

  for (int rep = 0; rep < reps; ++rep) {
    auto t0 = std::chrono::steady_clock::now();
    auto serial = magma::substitute_batch_serial(exprs, map);
    double ts = seconds_since(t0);

    t0 = std::chrono::steady_clock::now();
    auto parallel = magma::substitute_batch_omp(exprs, map, effective);
    double tp = seconds_since(t0);

    bool same = serial == parallel;
    std::cout << "substitute_batch  serial " << ts << "s  omp " << tp << "s  "
              << (same ? "identical" : "MISMATCH") << "\n";
    if (!same) return 1;
  }
  return 0;
}
