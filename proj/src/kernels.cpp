#include "magma/kernels.hpp"

#include <omp.h>

#include <atomic>

#include "magma/error.hpp"

namespace magma {

namespace {
std::atomic<int> configured_threads{0};

int effective_threads(int requested) {
  if (requested <= 0) return omp_get_max_threads();
  return requested;
}
}  // namespace

void set_thread_count(int threads) {
  if (threads < 0) throw HypothesisError("thread count cannot be negative");
  configured_threads.store(threads);
}

int thread_count() { return effective_threads(configured_threads.load()); }

std::vector<Polynomial> product_table_serial(const std::vector<Polynomial>& left,
                                             const std::vector<Polynomial>& right) {
  std::vector<Polynomial> out;
  out.reserve(left.size() * right.size());
  for (const Polynomial& a : left)
    for (const Polynomial& b : right) out.push_back(mul(a, b));
  return out;
}

std::vector<Polynomial> product_table_omp(const std::vector<Polynomial>& left,
                                          const std::vector<Polynomial>& right, int threads) {
  const std::size_t n = left.size(), m = right.size();
  if (n == 0 || m == 0) return {};
  std::vector<Polynomial> out(n * m, Polynomial::zero(left.front().alphabet()));
  const long long total = static_cast<long long>(n * m);
#pragma omp parallel for schedule(dynamic, 16) num_threads(effective_threads(threads))
  for (long long k = 0; k < total; ++k) {
    const std::size_t i = static_cast<std::size_t>(k) / m;
    const std::size_t j = static_cast<std::size_t>(k) % m;
    out[static_cast<std::size_t>(k)] = mul(left[i], right[j]);
  }
  return out;
}

std::vector<Polynomial> product_table(const std::vector<Polynomial>& left,
                                      const std::vector<Polynomial>& right) {
  const int t = thread_count();
  if (t == 1) return product_table_serial(left, right);
  return product_table_omp(left, right, t);
}

std::vector<Polynomial> substitute_batch_serial(const std::vector<Polynomial>& ps,
                                                const SubstitutionMap& map) {
  Substituter s(map);
  std::vector<Polynomial> out;
  out.reserve(ps.size());
  for (const Polynomial& p : ps) out.push_back(s(p));
  return out;
}

std::vector<Polynomial> substitute_batch_omp(const std::vector<Polynomial>& ps,
                                             const SubstitutionMap& map, int threads) {
  if (ps.empty()) return {};
  map.validate();
  std::vector<Polynomial> out(ps.size(), Polynomial::zero(map.target()));
  const long long total = static_cast<long long>(ps.size());
#pragma omp parallel num_threads(effective_threads(threads))
  {
    Substituter s(map);  // private memo per thread
#pragma omp for schedule(dynamic, 4)
    for (long long i = 0; i < total; ++i) out[static_cast<std::size_t>(i)] = s(ps[static_cast<std::size_t>(i)]);
  }
  return out;
}

std::vector<Polynomial> substitute_batch(const std::vector<Polynomial>& ps,
                                         const SubstitutionMap& map) {
  const int t = thread_count();
  if (t == 1) return substitute_batch_serial(ps, map);
  return substitute_batch_omp(ps, map, t);
}

}  // namespace magma
