#include "calbf/caloron.hpp"
#include "calbf/functionals.hpp"
#include "calbf/localization.hpp"
#include "calbf/loop.hpp"

#include <benchmark/benchmark.h>

#include <cmath>

using namespace calbf;

namespace {

LoopElement smooth_loop(const LieAlgebra &alg, int n)
{
	return make_loop(alg, n, [&](double t, double *c) {
		for (int a = 0; a < alg.dim(); ++a)
			c[a] = 0.3 * std::sin(2 * M_PI * t + a) + 0.1 * std::cos(4 * M_PI * t);
	});
}

Field bundle_connection(const LieAlgebra &alg, int n, int d)
{
	Rng rng(7);
	return random_field(Space::bundle(n, n, n, d), 1, alg.dim(), rng);
}

} // namespace

static void BM_bracket(benchmark::State &st)
{
	LieAlgebra alg(int(st.range(0)));
	Mat X = alg.generator(0) + 0.5 * alg.generator(1), Y = alg.generator(alg.dim() - 1);
	for (auto _ : st)
		benchmark::DoNotOptimize(bracket(X, Y));
}
BENCHMARK(BM_bracket)->Arg(2)->Arg(3);

static void BM_loop_exp(benchmark::State &st)
{
	LieAlgebra alg(2);
	LoopElement x = smooth_loop(alg, int(st.range(0)));
	for (auto _ : st)
		benchmark::DoNotOptimize(loop_exp(x));
}
BENCHMARK(BM_loop_exp)->Arg(64)->Arg(256);

static void BM_exterior_d(benchmark::State &st)
{
	LieAlgebra alg(2);
	Field A = bundle_connection(alg, int(st.range(0)), 0);
	for (auto _ : st)
		benchmark::DoNotOptimize(exterior_d(A));
}
BENCHMARK(BM_exterior_d)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

static void BM_curvature(benchmark::State &st)
{
	LieAlgebra alg(2);
	Field A = bundle_connection(alg, int(st.range(0)), 1);
	for (auto _ : st)
		benchmark::DoNotOptimize(curvature(alg, A));
}
BENCHMARK(BM_curvature)->Arg(32)->Unit(benchmark::kMillisecond);

static void BM_cal_forward(benchmark::State &st)
{
	LieAlgebra alg(2);
	Connection3d c = make_connection(bundle_connection(alg, int(st.range(0)), 1));
	for (auto _ : st)
		benchmark::DoNotOptimize(cal_forward(c));
}
BENCHMARK(BM_cal_forward)->Arg(32)->Unit(benchmark::kMillisecond);

static void BM_cs_action(benchmark::State &st)
{
	LieAlgebra alg(2);
	Field A = bundle_connection(alg, int(st.range(0)), 0);
	for (auto _ : st)
		benchmark::DoNotOptimize(cs_action(alg, A, 1));
}
BENCHMARK(BM_cs_action)->Arg(32)->Unit(benchmark::kMillisecond);

static void BM_dh_measure(benchmark::State &st)
{
	Orbit X{2.0, 64};
	for (auto _ : st)
		benchmark::DoNotOptimize(dh_measure(X, 7.5));
}
BENCHMARK(BM_dh_measure);

static void BM_z_pair(benchmark::State &st)
{
	Orbit X{1.0, 64}, Y{2.0, 64};
	for (auto _ : st)
		benchmark::DoNotOptimize(z_pair(X, Y, int(st.range(0))));
}
BENCHMARK(BM_z_pair)->Arg(1024)->Arg(4096)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
