#include <benchmark/benchmark.h>

#include <random>

#include "pqs/algebra0d.hpp"
#include "pqs/groebner.hpp"
#include "pqs/parse.hpp"
#include "pqs/pipeline.hpp"
#include "pqs/polylinalg.hpp"

namespace {

using namespace pqs;

Problem hypercube(std::size_t n) {
  std::string p;
  std::vector<std::string> xs = var_names("X", n);
  Problem pr;
  pr.Q.n = n;
  for (std::size_t i = 1; i <= n; ++i) {
    p += (i > 1 ? " + Y" : "Y") + std::to_string(i) + "^2";
    pr.Q.comps.push_back(quad_from_poly(parse_epoly("X" + std::to_string(i) + "^2 - 1", xs, nullptr)));
  }
  pr.p = parse_epoly(p, var_names("Y", n), nullptr);
  return pr;
}

void BM_HybridHypercube(benchmark::State& state) {
  Problem pr = hypercube(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(sample(pr, PipelineConfig{}));
}
BENCHMARK(BM_HybridHypercube)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_GroebnerCircleLine(benchmark::State& state) {
  auto xs = var_names("X", 3);
  std::vector<QMPoly> gens{parse_qpoly("X1^2 + X2^2 + X3^2 - 1", xs), parse_qpoly("X1 - X2 + X3", xs),
                           parse_qpoly("X1*X3 - 1/4", xs)};
  for (auto _ : state) benchmark::DoNotOptimize(groebner_basis(gens, MonoOrder::Grevlex));
}
BENCHMARK(BM_GroebnerCircleLine)->Unit(benchmark::kMicrosecond);

void BM_Charpoly(benchmark::State& state) {
  int d = static_cast<int>(state.range(0));
  std::vector<std::string> s1{"S1"};
  std::string gen = "S1^" + std::to_string(d) + " - 3*S1 + 1";
  SpecialAlgebra<EpsScalar> A(validate_special(std::vector<EMPoly>{parse_epoly(gen, s1, nullptr)}));
  auto a = A.normal_form(parse_epoly("S1^2 + 2*S1", s1, nullptr));
  for (auto _ : state) benchmark::DoNotOptimize(charpoly_pair(A, a, A.unit()));
}
BENCHMARK(BM_Charpoly)->Arg(4)->Arg(8)->Arg(16)->Unit(benchmark::kMicrosecond);

void BM_Determinant(benchmark::State& state) {
  std::size_t n = static_cast<std::size_t>(state.range(0));
  std::mt19937 rng(5);
  std::uniform_int_distribution<long> c(-5, 5);
  PolyMatrix<Rat> M(n, n, 2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      QMPoly e(2);
      e.add_term({1, 0}, Rat(c(rng)));
      e.add_term({0, 1}, Rat(c(rng)));
      e.add_term({0, 0}, Rat(c(rng)));
      M.at(i, j) = e;
    }
  for (auto _ : state) benchmark::DoNotOptimize(det(M));
}
BENCHMARK(BM_Determinant)->Arg(3)->Arg(5)->Arg(7)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
