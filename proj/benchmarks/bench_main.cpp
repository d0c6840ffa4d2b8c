#include "affnc/coxeter.hpp"
#include "affnc/cycles_io.hpp"
#include "affnc/diagram.hpp"
#include "affnc/interval.hpp"
#include "affnc/typec.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace affnc;

namespace {

// a Coxeter element with alternating outer/inner points
CoxeterElement alternating(Int n) {
    std::vector<Int> outer;
    for (Int i = 1; i <= n; i += 2) outer.push_back(i);
    return CoxeterElement(n, outer);
}

std::vector<PeriodicPermutation> sample_members(const CoxeterElement& c, int count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<PeriodicPermutation> out;
    for (int t = 0; t < count; ++t) {
        auto w = to_permutation(c);
        int steps = std::uniform_int_distribution<int>(0, static_cast<int>(c.n()))(rng);
        for (int k = 0; k < steps; ++k) {
            auto cov = covers_down(w, c, 2 * c.n());
            if (cov.empty()) break;
            w = cov[rng() % cov.size()];
        }
        out.push_back(w);
    }
    return out;
}

void BM_Compose(benchmark::State& state) {
    const Int n = state.range(0);
    auto c = to_permutation(alternating(n));
    auto p = c * c;
    for (auto _ : state) {
        p = p * c;
        benchmark::DoNotOptimize(p);
    }
}
BENCHMARK(BM_Compose)->Arg(8)->Arg(64)->Arg(512);

void BM_Decompose(benchmark::State& state) {
    const Int n = state.range(0);
    auto c = alternating(n);
    auto members = sample_members(c, 16, 1);
    std::size_t i = 0;
    for (auto _ : state) benchmark::DoNotOptimize(decompose(members[i++ % members.size()]));
}
BENCHMARK(BM_Decompose)->Arg(8)->Arg(16)->Arg(24);

void BM_IsMember(benchmark::State& state) {
    const Int n = state.range(0);
    auto c = alternating(n);
    auto members = sample_members(c, 16, 2);
    std::size_t i = 0;
    for (auto _ : state) benchmark::DoNotOptimize(is_member(members[i++ % members.size()], c));
}
BENCHMARK(BM_IsMember)->Arg(8)->Arg(16)->Arg(24);

void BM_Meet(benchmark::State& state) {
    const Int n = state.range(0);
    auto c = alternating(n);
    auto members = sample_members(c, 16, 3);
    std::size_t i = 0;
    for (auto _ : state) {
        const auto& u = members[i % members.size()];
        const auto& w = members[(i * 7 + 3) % members.size()];
        ++i;
        benchmark::DoNotOptimize(meet(u, w, c));
    }
}
BENCHMARK(BM_Meet)->Arg(6)->Arg(12)->Arg(24);

void BM_Join(benchmark::State& state) {
    const Int n = state.range(0);
    auto c = alternating(n);
    auto members = sample_members(c, 16, 4);
    std::size_t i = 0;
    for (auto _ : state) {
        const auto& u = members[i % members.size()];
        const auto& w = members[(i * 7 + 3) % members.size()];
        ++i;
        benchmark::DoNotOptimize(join(u, w, c));
    }
}
BENCHMARK(BM_Join)->Arg(6)->Arg(12)->Arg(24);

void BM_Universe(benchmark::State& state) {
    const Int n = state.range(0);
    auto c = alternating(n);
    UniverseOptions opt;
    opt.winding_bound = 2;
    for (auto _ : state) {
        auto uni = enumerate_universe(c, opt);
        state.counters["elements"] = static_cast<double>(uni.size());
        benchmark::DoNotOptimize(uni);
    }
}
BENCHMARK(BM_Universe)->Arg(3)->Arg(4)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_RenderSvg(benchmark::State& state) {
    auto c = alternating(state.range(0));
    auto d = decode(to_permutation(c), c);
    for (auto _ : state) benchmark::DoNotOptimize(render_svg(d, c));
}
BENCHMARK(BM_RenderSvg)->Arg(7)->Arg(32);

void BM_FoldedMemberC(benchmark::State& state) {
    const Int n = state.range(0);
    std::vector<Int> word(n);
    for (Int i = 0; i < n; ++i) word[i] = (i * 3) % n;
    auto s = Signing::from_word(n, word);
    auto c = coxeter_from_signing(s);
    auto cov = covers_down_C(c, s, 3 * n);
    std::size_t i = 0;
    for (auto _ : state) benchmark::DoNotOptimize(is_member_C(cov[i++ % cov.size()], s));
}
BENCHMARK(BM_FoldedMemberC)->Arg(5)->Arg(7)->Arg(11);

void BM_DirectLengthC(benchmark::State& state) {
    const Int n = state.range(0);
    auto s = Signing::from_word(n, [&] {
        std::vector<Int> w(n);
        for (Int i = 0; i < n; ++i) w[i] = i;
        return w;
    }());
    auto c = coxeter_from_signing(s);
    auto w = covers_down_C(c, s, 3 * n).front();
    LengthSearch opt;
    for (auto _ : state) benchmark::DoNotOptimize(reflection_length_C(w, n, static_cast<int>(n) + 1, opt));
}
BENCHMARK(BM_DirectLengthC)->Arg(4)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
