#include "pqs/mpoly.hpp"

namespace pqs {

namespace {

QPoly cached_pow(std::vector<QPoly>& cache, const QPoly& base, std::size_t e) {
  if (cache.empty()) cache.emplace_back(Rat(1));
  while (cache.size() <= e) cache.push_back(cache.back() * base);
  return cache[e];
}

}  // namespace

QPoly compose_rational(const QMPoly& p, const std::vector<QPoly>& nums, const QPoly& den) {
  require(nums.size() == p.nvars(), ErrorKind::Dimension, "compose_rational arity mismatch");
  require(!den.is_zero(), ErrorKind::Domain, "denominator is the zero polynomial");
  if (p.is_zero()) return {};
  int d = p.total_degree();
  std::vector<std::vector<QPoly>> npow(nums.size());
  std::vector<QPoly> dpow;
  QPoly acc;
  for (const auto& [m, c] : p.terms()) {
    QPoly t(c);
    for (std::size_t k = 0; k < nums.size(); ++k)
      if (m[k] > 0) t *= cached_pow(npow[k], nums[k], static_cast<std::size_t>(m[k]));
    t *= cached_pow(dpow, den, static_cast<std::size_t>(d - mono_degree(m)));
    acc += t;
  }
  return acc;
}

std::pair<QPoly, int> compose_weighted(const QMPoly& p, const std::vector<QPoly>& nums,
                                       const std::vector<int>& weights, const QPoly& g0) {
  require(nums.size() == p.nvars() && weights.size() == p.nvars(), ErrorKind::Dimension,
          "compose_weighted arity mismatch");
  require(!g0.is_zero(), ErrorKind::Domain, "denominator is the zero polynomial");
  int e_max = 0;
  for (const auto& [m, c] : p.terms()) {
    int w = 0;
    for (std::size_t k = 0; k < m.size(); ++k) w += m[k] * weights[k];
    e_max = std::max(e_max, w);
  }
  std::vector<std::vector<QPoly>> npow(nums.size());
  std::vector<QPoly> gpow;
  QPoly acc;
  for (const auto& [m, c] : p.terms()) {
    int w = 0;
    QPoly t(c);
    for (std::size_t k = 0; k < nums.size(); ++k) {
      w += m[k] * weights[k];
      if (m[k] > 0) t *= cached_pow(npow[k], nums[k], static_cast<std::size_t>(m[k]));
    }
    t *= cached_pow(gpow, g0, static_cast<std::size_t>(e_max - w));
    acc += t;
  }
  return {acc, e_max};
}

}  // namespace pqs
