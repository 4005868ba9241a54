#include <benchmark/benchmark.h>

#include <random>

#include "ncball/fock/numeric.hpp"
#include "ncball/gluing/index.hpp"
#include "ncball/graphs/smith.hpp"
#include "ncball/ncalg/rewrite.hpp"
#include "ncball/reps/verify.hpp"

using namespace ncball;

namespace {

ncalg::Polynomial sample_word(const ncalg::Presentation& pres, std::mt19937_64& rng, int length) {
  const auto gens = pres.generators();
  ncalg::Word w;
  for (int k = 0; k < length; ++k) {
    auto g = gens[rng() % gens.size()];
    g.starred = rng() % 2 == 1;
    w.push_back(g);
  }
  return ncalg::Polynomial(w, Laurent(1L));
}

}  // namespace

// Reduction of random words of the given length in BallEven(3).
static void BM_NormalForm(benchmark::State& state) {
  const auto pres = ncalg::build_presentation(ncalg::Family::ball_even, 3);
  std::mt19937_64 rng(7);
  std::vector<ncalg::Polynomial> inputs;
  for (int i = 0; i < 64; ++i) inputs.push_back(sample_word(pres, rng, static_cast<int>(state.range(0))));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(ncalg::normal_form(inputs[i++ % inputs.size()], pres));
}
BENCHMARK(BM_NormalForm)->Arg(4)->Arg(6)->Arg(8);

static void BM_SphereNormalForm(benchmark::State& state) {
  const auto pres = ncalg::build_presentation(ncalg::Family::boundary_odd, 4);
  std::mt19937_64 rng(11);
  std::vector<ncalg::Polynomial> inputs;
  for (int i = 0; i < 64; ++i) inputs.push_back(sample_word(pres, rng, 6));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(ncalg::normal_form(inputs[i++ % inputs.size()], pres));
}
BENCHMARK(BM_SphereNormalForm);

// Full relation and positivity sweep over the catalog.
static void BM_VerifyCatalog(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto pres = ncalg::build_presentation(ncalg::Family::ball_even, n);
  const auto reps = reps::catalog(ncalg::Family::ball_even, n, 0.5, 8);
  for (auto _ : state)
    for (const auto& r : reps) benchmark::DoNotOptimize(reps::verify_rep(r, pres, 2));
}
BENCHMARK(BM_VerifyCatalog)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

// Norm of a self-adjoint tridiagonal operator past the dense limit.
static void BM_OperatorNormPower(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const fock::TruncatedSpace h(1, n);
  std::vector<fock::Complex> ramp;
  for (int k = 0; k < n; ++k) ramp.push_back(static_cast<double>(k) / n);
  const auto s = fock::weighted_shift(1, h, fock::QValue(0.5));
  const auto a = fock::OperatorMatrix::diagonal(h, ramp) + fock::Complex(0.3) * (s + s.adjoint());
  for (auto _ : state) benchmark::DoNotOptimize(fock::operator_norm(a));
}
BENCHMARK(BM_OperatorNormPower)->Arg(512)->Arg(2048)->Unit(benchmark::kMillisecond);

static void BM_SmithNormalForm(benchmark::State& state) {
  const auto dim = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(3);
  graphs::IntMatrix m(dim, dim);
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c) m(r, c) = static_cast<long>(rng() % 21) - 10;
  for (auto _ : state) benchmark::DoNotOptimize(graphs::smith_normal_form(m));
}
BENCHMARK(BM_SmithNormalForm)->Arg(8)->Arg(16)->Arg(32);

static void BM_IndexClass(benchmark::State& state) {
  const int len = static_cast<int>(state.range(0));
  const auto beta = gluing::BetaSpec::even(3, true);
  for (auto _ : state) benchmark::DoNotOptimize(gluing::index_class(3, beta, len));
}
BENCHMARK(BM_IndexClass)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
