#include <benchmark/benchmark.h>

#include <random>

#include "lhgf/elgf.hpp"

using namespace lhgf;

namespace {

SimplicialComplex theta() {
    return SimplicialComplex::make({"a", "b", "m1", "m2", "m3"},
                                   {{"a", "m1"}, {"m1", "b"}, {"a", "m2"}, {"m2", "b"},
                                    {"a", "m3"}, {"m3", "b"}});
}

EdgeWord long_word(const SimplicialComplex& c, int len, std::mt19937& rng) {
    auto edges = c.simplices_of_dim(1);
    EdgeWord w = empty_word(c, 0);
    int at = 0;
    for (int i = 0; i < len; ++i) {
        std::vector<Letter> opts;
        for (const auto& e : edges) {
            if (e[0] == at) opts.push_back({e[0], e[1], +1});
            if (e[1] == at) opts.push_back({e[0], e[1], -1});
        }
        auto l = opts[std::uniform_int_distribution<size_t>(0, opts.size() - 1)(rng)];
        w.letters.push_back(l);
        at = l.to();
    }
    w.tgt = at;
    return w;
}

void bm_reduce_word(benchmark::State& state) {
    auto c = theta();
    std::mt19937 rng(1);
    auto w = long_word(c, static_cast<int>(state.range(0)), rng);
    for (auto _ : state) benchmark::DoNotOptimize(reduce_word(w));
}

void bm_holonomy(benchmark::State& state) {
    auto c = theta();
    auto m = make_discrete_model(FiniteGroup::symmetric(4));
    std::mt19937 rng(2);
    GaugeField1 f;
    f.base = &c;
    f.model = m;
    auto elems = m->level0_elements();
    std::uniform_int_distribution<size_t> pick(0, elems.size() - 1);
    for (const auto& e : c.simplices_of_dim(1)) f.edges[{e[0], e[1]}] = elems[pick(rng)];
    auto w = long_word(c, static_cast<int>(state.range(0)), rng);
    for (auto _ : state) benchmark::DoNotOptimize(holonomy(f, w));
}

void bm_enumerate_fields(benchmark::State& state) {
    auto c = theta();
    auto m = make_discrete_model(FiniteGroup::cyclic(static_cast<int>(state.range(0))));
    for (auto _ : state) {
        Budget b{100'000'000};
        benchmark::DoNotOptimize(enumerate_fields1(c, m, &b));
    }
}

void bm_orbits(benchmark::State& state) {
    auto c = SimplicialComplex::make({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}});
    auto m = make_discrete_model(FiniteGroup::cyclic(static_cast<int>(state.range(0))));
    for (auto _ : state) {
        Budget b{100'000'000};
        benchmark::DoNotOptimize(orbits(c, m, b));
    }
}

void bm_extract_elgf(benchmark::State& state) {
    auto c = SimplicialComplex::make({"a", "b", "c", "d"}, {{"a", "b", "c", "d"}});
    auto m = make_discrete_model(FiniteGroup::cyclic(6));
    std::mt19937 rng(3);
    GaugeField1 f;
    f.base = &c;
    f.model = m;
    auto elems = m->level0_elements();
    std::uniform_int_distribution<size_t> pick(0, elems.size() - 1);
    for (const auto& e : c.simplices_of_dim(1)) f.edges[{e[0], e[1]}] = elems[pick(rng)];
    for (auto _ : state) benchmark::DoNotOptimize(check_elgf(extract_elgf(f)));
}

BENCHMARK(bm_reduce_word)->Arg(64)->Arg(512);
BENCHMARK(bm_holonomy)->Arg(64)->Arg(512);
BENCHMARK(bm_enumerate_fields)->Arg(2)->Arg(4);
BENCHMARK(bm_orbits)->Arg(2)->Arg(4);
BENCHMARK(bm_extract_elgf);

}  // namespace

BENCHMARK_MAIN();
