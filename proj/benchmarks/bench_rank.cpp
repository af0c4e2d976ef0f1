// Hot-path timings: exact rank at growing sizes, Smith normal form on
// polynomial diagonals, and the canonical-form decision procedure.

#include "rankforge/exactmat.hpp"
#include "rankforge/fmonoid.hpp"
#include "rankforge/rng.hpp"

#include <benchmark/benchmark.h>

#include <cstddef>
#include <vector>

using namespace rankforge;

namespace {

ExactMatrix fixed_sample(std::size_t n, const FieldSpec& spec) {
    SplitMix64 rng(SplitMix64::derive_state(2024, n));
    return sample_general(n, n, spec, rng);
}

void bm_rank_rationals(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    ExactMatrix m = fixed_sample(n, FieldSpec::rationals());
    for (auto _ : state)
        benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(bm_rank_rationals)->Arg(8)->Arg(16)->Arg(32);

void bm_rank_f7(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    ExactMatrix m = fixed_sample(n, FieldSpec::prime_field(7));
    for (auto _ : state)
        benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(bm_rank_f7)->Arg(8)->Arg(16)->Arg(32);

void bm_snf_diagonal(benchmark::State& state) {
    const FieldSpec spec = state.range(0) == 0 ? FieldSpec::rationals()
                                               : FieldSpec::prime_field(7);
    SplitMix64 rng(SplitMix64::derive_state(77, state.range(0)));
    std::vector<Poly> entries;
    for (std::size_t k = 0; k < 4; ++k) {
        std::vector<FieldElem> coeffs(5, FieldElem::zero(spec));
        for (FieldElem& c : coeffs)
            c = sample_scalar(spec, rng);
        entries.push_back(Poly::from_coeffs(coeffs, spec));
    }
    PolyMatrix m = PolyMatrix::diagonal(entries, spec);
    for (auto _ : state)
        benchmark::DoNotOptimize(smith_normal_form(m).factors);
}
BENCHMARK(bm_snf_diagonal)->Arg(0)->Arg(1);

void bm_canonical_form(benchmark::State& state) {
    const FieldSpec spec = FieldSpec::rationals();
    const std::vector<Poly> tuple{
        Poly::parse("t^3-t", spec),
        Poly::parse("t^2-2t+1", spec),
        Poly::parse("t^4+t^2", spec),
        Poly::parse("t^2+t", spec),
        Poly::parse("t^5-t^3", spec),
        Poly::parse("t-1", spec),
    };
    for (auto _ : state)
        benchmark::DoNotOptimize(canonical_form(tuple, spec).chain().size());
}
BENCHMARK(bm_canonical_form);

} // namespace

int main(int argc, char** argv) {
    benchmark::Initialize(&argc, argv);
    if (benchmark::ReportUnrecognizedArguments(argc, argv))
        return 1;
    benchmark::RunSpecifiedBenchmarks();
    return 0;
}
