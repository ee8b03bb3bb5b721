#include "pqs/polylinalg.hpp"

#include <algorithm>

namespace pqs {

std::vector<std::vector<std::size_t>> k_subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    out.push_back(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

std::vector<IndexPair> enum_uw(std::size_t rows, std::size_t cols, std::size_t r) {
  std::vector<IndexPair> out;
  std::size_t top = std::min(rows, cols);
  for (std::size_t s = r; s <= top; ++s) {
    auto us = k_subsets(rows, s);
    auto ws = k_subsets(cols, s);
    for (const auto& u : us)
      for (const auto& w : ws) out.push_back(IndexPair{u, w});
  }
  return out;
}

}  // namespace pqs
