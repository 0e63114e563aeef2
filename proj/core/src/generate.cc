#include <inlim/errors.hh>
#include <inlim/generate.hh>

#include <algorithm>
#include <set>

using std::size_t;
using std::string;
using std::vector;

namespace inlim::generate
{
    namespace
    {
        auto below(size_t bound, Rng & rng) -> size_t
        {
            return std::uniform_int_distribution<size_t>(0, bound - 1)(rng);
        }

        auto between(size_t low, size_t high, Rng & rng) -> size_t
        {
            return std::uniform_int_distribution<size_t>(low, high)(rng);
        }

        auto random_function(size_t source, size_t target, Rng & rng) -> FinFn
        {
            vector<Element> table(source);
            for (auto & t : table)
                t = static_cast<Element>(below(target, rng));
            return FinFn(target, std::move(table));
        }
    }

    auto parse_shape_kind(const string & name) -> ShapeKind
    {
        if (name == "tree")
            return ShapeKind::tree;
        if (name == "path")
            return ShapeKind::path;
        if (name == "cycle")
            return ShapeKind::cycle;
        if (name == "random")
            return ShapeKind::random;
        throw InvalidInput("unknown shape kind '" + name + "'");
    }

    auto shape_kind_name(ShapeKind kind) -> string
    {
        switch (kind) {
            case ShapeKind::tree: return "tree";
            case ShapeKind::path: return "path";
            case ShapeKind::cycle: return "cycle";
            case ShapeKind::random: return "random";
        }
        return "?";
    }

    auto random_tree(size_t n, Rng & rng) -> SimpleGraph
    {
        vector<std::pair<VertexId, VertexId>> edges;
        for (VertexId v = 1; v < n; ++v)
            edges.emplace_back(static_cast<VertexId>(below(v, rng)), v);
        return SimpleGraph(n, std::move(edges));
    }

    auto path_graph(size_t n) -> SimpleGraph
    {
        vector<std::pair<VertexId, VertexId>> edges;
        for (VertexId v = 1; v < n; ++v)
            edges.emplace_back(v - 1, v);
        return SimpleGraph(n, std::move(edges));
    }

    auto cycle_graph(size_t n) -> SimpleGraph
    {
        if (n < 3)
            throw InvalidInput("a cycle needs at least 3 vertices");
        auto edges = path_graph(n).edges();
        edges.emplace_back(static_cast<VertexId>(n - 1), 0);
        return SimpleGraph(n, std::move(edges));
    }

    auto random_graph(size_t n, double p, Rng & rng) -> SimpleGraph
    {
        std::bernoulli_distribution coin(p);
        vector<std::pair<VertexId, VertexId>> edges;
        for (VertexId u = 0; u < n; ++u)
            for (VertexId v = u + 1; v < n; ++v)
                if (coin(rng))
                    edges.emplace_back(u, v);
        return SimpleGraph(n, std::move(edges));
    }

    auto shape(const InstanceSpec & spec, Rng & rng) -> SimpleGraph
    {
        switch (spec.kind) {
            case ShapeKind::tree: return random_tree(spec.n, rng);
            case ShapeKind::path: return path_graph(spec.n);
            case ShapeKind::cycle: return cycle_graph(spec.n);
            case ShapeKind::random: return random_graph(spec.n, spec.edge_probability, rng);
        }
        return {};
    }

    auto random_diagram(const SimpleGraph & g, const InstanceSpec & spec, Rng & rng) -> CoDecomposition
    {
        if (spec.w == 0 && (spec.exact_sizes || spec.min_size > 0))
            throw InvalidInput("set size bound must be positive");
        if (spec.min_size > spec.w)
            throw InvalidInput("minimum set size exceeds the bound");
        auto draw_size = [&] { return spec.exact_sizes ? spec.w : between(spec.min_size, spec.w, rng); };

        CoDecomposition d;
        d.shape = g;
        for (size_t v = 0; v < g.vertex_count(); ++v)
            d.vertex_sets.emplace_back(draw_size());
        for (size_t e = 0; e < g.edge_count(); ++e) {
            auto size = draw_size();
            // an empty edge set only admits legs from empty vertex sets
            auto [x, y] = g.edge(static_cast<EdgeId>(e));
            if (size == 0 && (! d.vertex_sets[x].empty() || ! d.vertex_sets[y].empty()))
                size = 1;
            d.edge_sets.emplace_back(size);
        }

        vector<Element> hidden;
        bool plant = spec.planted && std::none_of(d.vertex_sets.begin(), d.vertex_sets.end(), [](auto & s) { return s.empty(); });
        if (plant)
            for (auto & s : d.vertex_sets)
                hidden.push_back(static_cast<Element>(below(s.size(), rng)));

        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            auto [x, y] = g.edge(e);
            auto target = d.edge_sets[e].size();
            auto to_x = random_function(d.vertex_sets[x].size(), target, rng);
            auto to_y = random_function(d.vertex_sets[y].size(), target, rng);
            if (plant) {
                vector<Element> table(to_y.table().begin(), to_y.table().end());
                table[hidden[y]] = to_x(hidden[x]);
                to_y = FinFn(target, std::move(table));
            }
            d.legs.push_back({std::move(to_x), std::move(to_y)});
        }
        return d;
    }

    auto random_diagram(const InstanceSpec & spec, std::uint64_t seed) -> CoDecomposition
    {
        Rng rng(seed);
        auto g = shape(spec, rng);
        return random_diagram(g, spec, rng);
    }

    auto elimination_decomposition(const SimpleGraph & x) -> BagDecomposition
    {
        auto n = x.vertex_count();
        vector<std::set<VertexId>> later(n);
        for (auto [u, v] : x.edges()) {
            later[std::min(u, v)].insert(std::max(u, v));
        }

        vector<vector<VertexId>> bags(n);
        vector<std::pair<VertexId, VertexId>> tree_edges;
        for (VertexId v = 0; v < n; ++v) {
            bags[v].push_back(v);
            bags[v].insert(bags[v].end(), later[v].begin(), later[v].end());
            if (later[v].empty())
                continue;
            // fill in: the later neighbours become a clique
            for (auto a : later[v])
                for (auto b : later[v])
                    if (a < b)
                        later[a].insert(b);
            tree_edges.emplace_back(v, *later[v].begin());
        }
        auto shape = SimpleGraph(n, std::move(tree_edges));
        return BagDecomposition::with_default_adhesions(x, std::move(shape), std::move(bags));
    }

    auto random_arrow_diagram(const SimpleGraph & g, size_t w, Rng & rng) -> CSetCoDecomposition
    {
        CSetCoDecomposition d;
        d.category = FinCat::walking_arrow();
        d.shape = g;

        // morphisms: 0 = id_0, 1 = id_1, 2 = the arrow 0 -> 1
        auto make_cset = [&](size_t size0, size_t size1, FinFn arrow) {
            CSet x;
            x.sets = {FinSetObj(size0), FinSetObj(size1)};
            x.actions = {FinFn::identity(size0), FinFn::identity(size1), std::move(arrow)};
            return x;
        };

        for (size_t v = 0; v < g.vertex_count(); ++v) {
            auto size0 = between(1, w, rng), size1 = between(1, w, rng);
            d.vertex_objects.push_back(make_cset(size0, size1, random_function(size0, size1, rng)));
        }

        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            // the arrow action on an edge object is onto, so every component
            // at 1 lifts to a natural component at 0
            auto size1 = between(1, w, rng);
            auto size0 = between(size1, std::max(size1, w), rng);
            vector<Element> arrow(size0);
            for (Element i = 0; i < size0; ++i)
                arrow[i] = i < size1 ? i : static_cast<Element>(below(size1, rng));
            d.edge_objects.push_back(make_cset(size0, size1, FinFn(size1, arrow)));

            auto [x, y] = g.edge(e);
            std::array<vector<FinFn>, 2> legs;
            for (auto [end, side] : {std::pair{x, 0}, std::pair{y, 1}}) {
                auto & from = d.vertex_objects[end];
                auto at1 = random_function(from.sets[1].size(), size1, rng);
                vector<Element> at0(from.sets[0].size());
                for (Element a = 0; a < at0.size(); ++a) {
                    auto wanted = at1(from.actions[2](a));
                    vector<Element> lifts;
                    for (Element i = 0; i < size0; ++i)
                        if (arrow[i] == wanted)
                            lifts.push_back(i);
                    at0[a] = lifts[below(lifts.size(), rng)];
                }
                legs[side] = {FinFn(size0, std::move(at0)), std::move(at1)};
            }
            d.legs.push_back(std::move(legs));
        }
        return d;
    }
}
