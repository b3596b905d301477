#pragma once

#include <vector>

#include "magma/polynomial.hpp"
#include "magma/substitute.hpp"

namespace magma {

// Thread count used by the parallel kernels. 1 selects the serial reference
// path; 0 resets to the OpenMP runtime's maximum. Exact arithmetic plus
// one-writer-per-slot scheduling makes every result identical for every
// thread count.
void set_thread_count(int threads);
int thread_count();

// out[i * right.size() + j] = left[i] * right[j].
std::vector<Polynomial> product_table_serial(const std::vector<Polynomial>& left,
                                             const std::vector<Polynomial>& right);
std::vector<Polynomial> product_table_omp(const std::vector<Polynomial>& left,
                                          const std::vector<Polynomial>& right, int threads);
// Dispatches on thread_count().
std::vector<Polynomial> product_table(const std::vector<Polynomial>& left,
                                      const std::vector<Polynomial>& right);

// Evaluates each polynomial over the indeterminates at the given images.
std::vector<Polynomial> substitute_batch_serial(const std::vector<Polynomial>& ps,
                                                const SubstitutionMap& map);
std::vector<Polynomial> substitute_batch_omp(const std::vector<Polynomial>& ps,
                                             const SubstitutionMap& map, int threads);
std::vector<Polynomial> substitute_batch(const std::vector<Polynomial>& ps,
                                         const SubstitutionMap& map);

}  // namespace magma
