#include <inlim/codecomp.hh>
#include <inlim/generate.hh>
#include <inlim/homfront.hh>
#include <inlim/solver.hh>

#include <benchmark/benchmark.h>

using namespace inlim;

namespace
{
    auto planted(generate::ShapeKind kind, std::size_t n, std::size_t w) -> CoDecomposition
    {
        generate::InstanceSpec spec;
        spec.kind = kind;
        spec.n = n;
        spec.w = w;
        spec.exact_sizes = true;
        spec.planted = true;
        return generate::random_diagram(spec, 7);
    }

    auto image_path(benchmark::State & state) -> void
    {
        auto d = planted(generate::ShapeKind::path, static_cast<std::size_t>(state.range(0)), 5);
        auto full = SubMask::full(d);
        for (auto _ : state)
            benchmark::DoNotOptimize(image_tree(d, full));
        state.SetComplexityN(state.range(0));
    }

    auto solve_cycle(benchmark::State & state) -> void
    {
        auto d = planted(generate::ShapeKind::cycle, 1000, static_cast<std::size_t>(state.range(0)));
        SolveOptions options;
        options.early_exit = false;
        for (auto _ : state)
            benchmark::DoNotOptimize(inlim::inlim(d, options));
    }

    auto filter_edge(benchmark::State & state) -> void
    {
        auto d = planted(generate::ShapeKind::path, 2, static_cast<std::size_t>(state.range(0)));
        auto full = SubMask::full(d);
        ElementMask scratch;
        for (auto _ : state) {
            auto m = full;
            benchmark::DoNotOptimize(filter(d, m, 0, scratch));
        }
    }

    auto hom_grid(benchmark::State & state) -> void
    {
        auto side = static_cast<std::size_t>(state.range(0));
        std::vector<std::pair<VertexId, VertexId>> edges;
        for (std::size_t r = 0; r < side; ++r)
            for (std::size_t c = 0; c < side; ++c) {
                auto v = static_cast<VertexId>(r * side + c);
                if (c + 1 < side)
                    edges.emplace_back(v, v + 1);
                if (r + 1 < side)
                    edges.emplace_back(v, static_cast<VertexId>(v + side));
            }
        auto b = generate::elimination_decomposition(SimpleGraph(side * side, edges));
        auto k3 = complete_graph(3);
        for (auto _ : state)
            benchmark::DoNotOptimize(hom_exists(b, k3));
    }
}

BENCHMARK(image_path)->RangeMultiplier(10)->Range(100, 100'000)->Complexity(benchmark::oN);
BENCHMARK(solve_cycle)->DenseRange(2, 6, 2);
BENCHMARK(filter_edge)->RangeMultiplier(4)->Range(4, 1024);
BENCHMARK(hom_grid)->DenseRange(3, 6);
BENCHMARK_MAIN();
