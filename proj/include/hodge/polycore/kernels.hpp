#pragma once

// Sparse-term product kernels. The serial version is the reference; the
// OpenMP version splits the left operand's terms across threads, accumulates
// into thread-local maps and merges them in thread order so the result is
// identical regardless of the thread count.

#include <cstddef>
#include <iterator>
#include <map>
#include <vector>

#include <omp.h>

namespace hodge::kernels {

/// Products with fewer term pairs than this stay serial.
inline constexpr std::size_t kParallelThreshold = 4096;

template <class Key, class Coef, class KeyAdd>
std::map<Key, Coef> sparse_product_serial(const std::map<Key, Coef>& a, const std::map<Key, Coef>& b,
                                          KeyAdd key_add) {
  std::map<Key, Coef> out;
  for (const auto& [ka, ca] : a) {
    for (const auto& [kb, cb] : b) {
      out[key_add(ka, kb)] += ca * cb;
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

template <class Key, class Coef, class KeyAdd>
std::map<Key, Coef> sparse_product_parallel(const std::map<Key, Coef>& a, const std::map<Key, Coef>& b,
                                            KeyAdd key_add) {
  std::vector<typename std::map<Key, Coef>::const_iterator> left;
  left.reserve(a.size());
  for (auto it = a.begin(); it != a.end(); ++it) left.push_back(it);

  const int threads = omp_get_max_threads();
  std::vector<std::map<Key, Coef>> partial(static_cast<std::size_t>(threads));
  const long n = static_cast<long>(left.size());

#pragma omp parallel num_threads(threads)
  {
    auto& local = partial[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(static)
    for (long i = 0; i < n; ++i) {
      const auto& [ka, ca] = *left[static_cast<std::size_t>(i)];
      for (const auto& [kb, cb] : b) {
        local[key_add(ka, kb)] += ca * cb;
      }
    }
  }

  std::map<Key, Coef> out;
  for (auto& part : partial) {
    for (auto& [k, c] : part) out[k] += c;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

template <class Key, class Coef, class KeyAdd>
std::map<Key, Coef> sparse_product(const std::map<Key, Coef>& a, const std::map<Key, Coef>& b, KeyAdd key_add) {
  if (a.size() * b.size() < kParallelThreshold) return sparse_product_serial(a, b, key_add);
  return sparse_product_parallel(a, b, key_add);
}

}  // namespace hodge::kernels
