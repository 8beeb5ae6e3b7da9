// Serial reference loops against their OpenMP counterparts on the largest
// acceptance-sized inputs.

#include <benchmark/benchmark.h>

#include "cga/grading.hpp"
#include "cga/kernels.hpp"
#include "cga/solver.hpp"

using namespace cga;

namespace {

struct Input {
  LieAlgebra alg;
  AnsatzBasis basis;
  Realization rho;
  std::vector<int> gens;

  static const Input& get() {
    static const Input in = [] {
      auto s = AlgebraSpec::make(2, "3");
      auto alg = make_cga(s);
      auto t = default_target_grades(s).back();
      auto basis = enumerate_ansatz(alg, t.grade, t.degree);
      return Input{alg, basis, Realization(alg), lemma_generators(alg)};
    }();
    return in;
  }
};

Exec exec_of(const benchmark::State& st) { return st.range(0) ? Exec::Parallel : Exec::Serial; }

void BM_commutator_images(benchmark::State& st) {
  const auto& in = Input::get();
  for (auto _ : st) benchmark::DoNotOptimize(kernels::commutator_images(in.alg, in.basis.monomials, in.gens, exec_of(st)));
}

void BM_omega_defects(benchmark::State& st) {
  const auto& in = Input::get();
  for (auto _ : st) benchmark::DoNotOptimize(kernels::omega_defects(in.alg, in.basis.monomials, exec_of(st)));
}

void BM_realization_images(benchmark::State& st) {
  const auto& in = Input::get();
  for (auto _ : st) benchmark::DoNotOptimize(kernels::realization_images(in.rho, in.basis.monomials, exec_of(st)));
}

void BM_realization_pairs(benchmark::State& st) {
  const auto& in = Input::get();
  for (auto _ : st) benchmark::DoNotOptimize(kernels::realization_bracket_failures(in.rho, exec_of(st)));
}

void BM_bb_count(benchmark::State& st) {
  const auto& in = Input::get();
  for (auto _ : st) benchmark::DoNotOptimize(bb_count(in.alg, 8, 0, exec_of(st)));
}

void BM_solve(benchmark::State& st) {
  const auto& in = Input::get();
  SolveOptions opts;
  opts.exec = exec_of(st);
  for (auto _ : st)
    benchmark::DoNotOptimize(solve_casimirs(in.alg, in.basis.grade, in.basis.max_degree, Method::Pipeline, opts));
}

}  // namespace

BENCHMARK(BM_commutator_images)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_omega_defects)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_realization_images)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_realization_pairs)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_bb_count)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_solve)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
