#include <benchmark/benchmark.h>

#include <random>

#include "qojump/branch.hpp"
#include "qojump/lattice.hpp"
#include "qojump/multiplier.hpp"
#include "qojump/tropfan.hpp"
#include "random_data.hpp"

using namespace qojump;

namespace {

QVector q(std::initializer_list<const char*> xs) {
  QVector v;
  for (const char* x : xs) v.push_back(Rational::parse(x));
  return v;
}

const CharacteristicData& example() {
  static const CharacteristicData cd = build(2, {q({"3/2", "1/2"}), q({"7/4", "1/2"})});
  return cd;
}

std::vector<CharacteristicData> random_cases(std::size_t count, long cap) {
  std::mt19937 rng(97);
  std::vector<CharacteristicData> out;
  for (std::size_t k = 0; k < count; ++k) out.push_back(testdata::random_chardata(rng, 3, 3, cap));
  return out;
}

void BM_BuildChardata(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(build(2, {q({"3/2", "1/2"}), q({"7/4", "1/2"})}));
}
BENCHMARK(BM_BuildChardata);

void BM_HermiteNormalForm(benchmark::State& state) {
  std::mt19937 rng(5);
  std::uniform_int_distribution<long> e(-40, 40);
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<IntVector> rows(n + 2, IntVector(n));
  for (auto& r : rows) {
    for (auto& x : r) x = e(rng);
  }
  for (auto _ : state) benchmark::DoNotOptimize(hermite_normal_form(rows));
}
BENCHMARK(BM_HermiteNormalForm)->Arg(3)->Arg(5)->Arg(8);

void BM_DivisorTable(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(divisor_table(example()));
}
BENCHMARK(BM_DivisorTable);

void BM_BuildFan(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(build_fan(example()));
}
BENCHMARK(BM_BuildFan);

void BM_Semiroots(benchmark::State& state) {
  BranchSeries zeta(2, 4);
  zeta.add_term(q({"3/2", "1/2"}), Rational(1));
  zeta.add_term(q({"7/4", "1/2"}), Rational(1));
  for (auto _ : state) benchmark::DoNotOptimize(semiroots(zeta));
}
BENCHMARK(BM_Semiroots)->Unit(benchmark::kMillisecond);

void BM_MultiplierIdeal(benchmark::State& state) {
  const auto table = divisor_table(example());
  const Rational xi(state.range(0), 52);
  for (auto _ : state) benchmark::DoNotOptimize(multiplier_ideal(example(), table, xi));
}
BENCHMARK(BM_MultiplierIdeal)->Arg(11)->Arg(26)->Arg(51);

void BM_JumpingNumbersExample(benchmark::State& state) {
  const auto table = divisor_table(example());
  for (auto _ : state) benchmark::DoNotOptimize(jumping_numbers(example(), table));
}
BENCHMARK(BM_JumpingNumbersExample)->Unit(benchmark::kMillisecond);

void BM_JumpingNumbersRandom(benchmark::State& state) {
  const auto cases = random_cases(20, state.range(0));
  std::vector<DivisorTable> tables;
  for (const auto& cd : cases) tables.push_back(divisor_table(cd));
  for (auto _ : state) {
    for (std::size_t k = 0; k < cases.size(); ++k) benchmark::DoNotOptimize(jumping_numbers(cases[k], tables[k]));
  }
}
BENCHMARK(BM_JumpingNumbersRandom)->Arg(60)->Arg(150)->Unit(benchmark::kMillisecond);

void BM_NewtonCheck(benchmark::State& state) {
  const IntVector m{1, 0, 1, 0, 0};
  for (auto _ : state) benchmark::DoNotOptimize(newton_membership_check(example(), m, Rational(1, 2)));
}
BENCHMARK(BM_NewtonCheck);

}  // namespace

BENCHMARK_MAIN();
