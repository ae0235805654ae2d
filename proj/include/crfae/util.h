#ifndef CRFAE_UTIL_H
#define CRFAE_UTIL_H

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

namespace crfae {

constexpr double kLogZero = -1e30;

inline double log_add(double a, double b) {
  if (a < b) std::swap(a, b);
  if (b <= kLogZero) return a;
  return a + std::log1p(std::exp(b - a));
}

inline double log_sum(const double* v, int n) {
  double m = kLogZero;
  for (int i = 0; i < n; ++i) m = std::max(m, v[i]);
  if (m <= kLogZero) return kLogZero;
  double s = 0.0;
  for (int i = 0; i < n; ++i) s += std::exp(v[i] - m);
  return m + std::log(s);
}

inline std::vector<std::string> split_ws(std::string_view line) {
  std::vector<std::string> out;
  size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) out.emplace_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

inline std::vector<std::string> split_on(std::string_view line, char sep) {
  std::vector<std::string> out;
  size_t start = 0;
  for (size_t i = 0; i <= line.size(); ++i) {
    if (i == line.size() || line[i] == sep) {
      out.emplace_back(line.substr(start, i - start));
      start = i + 1;
    }
  }
  return out;
}

// FNV-1a, used for input digests in run manifests.
inline uint64_t fnv1a64(std::string_view data, uint64_t h = 1469598103934665603ull) {
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

// Deterministic parallel reduction: work is split into fixed-size chunks,
// chunk results are merged in index order, so the result does not depend on
// the thread count.
template <typename Acc>
void parallel_chunked(int n, int num_threads, int chunk_size,
                      const std::function<void(int lo, int hi, Acc&)>& body,
                      const std::function<void(Acc&)>& merge) {
  if (n <= 0) return;
  int num_chunks = (n + chunk_size - 1) / chunk_size;
  std::vector<Acc> partial(num_chunks);
  if (num_threads <= 1 || num_chunks == 1) {
    for (int c = 0; c < num_chunks; ++c) {
      int lo = c * chunk_size;
      body(lo, std::min(n, lo + chunk_size), partial[c]);
    }
  } else {
    std::vector<std::thread> workers;
    std::atomic<int> next{0};
    int t = std::min(num_threads, num_chunks);
    for (int w = 0; w < t; ++w) {
      workers.emplace_back([&]() {
        for (;;) {
          int c = next.fetch_add(1);
          if (c >= num_chunks) break;
          int lo = c * chunk_size;
          body(lo, std::min(n, lo + chunk_size), partial[c]);
        }
      });
    }
    for (auto& th : workers) th.join();
  }
  for (int c = 0; c < num_chunks; ++c) merge(partial[c]);
}

}  // namespace crfae

#endif  // CRFAE_UTIL_H
