#include <inlim/errors.hh>
#include <inlim/homfront.hh>

#include <algorithm>
#include <stdexcept>

using std::size_t;
using std::string;
using std::to_string;
using std::vector;

namespace inlim
{
    namespace
    {
        auto normalised(vector<VertexId> s) -> vector<VertexId>
        {
            std::sort(s.begin(), s.end());
            s.erase(std::unique(s.begin(), s.end()), s.end());
            return s;
        }

        auto contains(const vector<VertexId> & sorted, VertexId v) -> bool
        {
            return std::binary_search(sorted.begin(), sorted.end(), v);
        }
    }

    auto BagDecomposition::with_default_adhesions(SimpleGraph target, SimpleGraph shape, vector<vector<VertexId>> bags) -> BagDecomposition
    {
        BagDecomposition b{std::move(target), std::move(shape), {}, {}};
        for (auto & bag : bags)
            b.bags.push_back(normalised(std::move(bag)));
        if (b.bags.size() == b.shape.vertex_count())
            for (auto [x, y] : b.shape.edges()) {
                vector<VertexId> common;
                std::set_intersection(b.bags[x].begin(), b.bags[x].end(), b.bags[y].begin(), b.bags[y].end(), std::back_inserter(common));
                b.adhesions.push_back(std::move(common));
            }
        return b;
    }

    auto validate_decomposition(const BagDecomposition & b) -> vector<string>
    {
        vector<string> violations;
        auto n = b.target.vertex_count();
        if (b.bags.size() != b.shape.vertex_count())
            violations.push_back("expected " + to_string(b.shape.vertex_count()) + " bags, got " + to_string(b.bags.size()));
        if (b.adhesions.size() != b.shape.edge_count())
            violations.push_back("expected " + to_string(b.shape.edge_count()) + " adhesions, got " + to_string(b.adhesions.size()));
        if (! violations.empty())
            return violations;

        auto check_members = [&](const vector<VertexId> & s, const string & what) {
            if (! std::is_sorted(s.begin(), s.end()) || std::adjacent_find(s.begin(), s.end()) != s.end())
                violations.push_back(what + " is not sorted and duplicate free");
            for (auto v : s)
                if (v >= n)
                    violations.push_back(what + " mentions vertex " + to_string(v) + ", outside X");
        };
        for (VertexId x = 0; x < b.bags.size(); ++x)
            check_members(b.bags[x], "bag " + to_string(x));
        for (EdgeId e = 0; e < b.adhesions.size(); ++e)
            check_members(b.adhesions[e], "adhesion " + to_string(e));
        if (! violations.empty())
            return violations;

        // which bags hold each X-vertex
        vector<vector<VertexId>> holders(n);
        for (VertexId x = 0; x < b.bags.size(); ++x)
            for (auto v : b.bags[x])
                holders[v].push_back(x);

        for (VertexId v = 0; v < n; ++v)
            if (holders[v].empty())
                violations.push_back("vertex " + to_string(v) + " of X lies in no bag");

        for (EdgeId f = 0; f < b.target.edge_count(); ++f) {
            auto [u, v] = b.target.edge(f);
            bool covered = std::any_of(holders[u].begin(), holders[u].end(), [&](VertexId x) { return contains(b.bags[x], v); });
            if (! covered)
                violations.push_back("edge {" + to_string(u) + "," + to_string(v) + "} of X lies in no bag");
        }

        for (EdgeId e = 0; e < b.shape.edge_count(); ++e) {
            auto [x, y] = b.shape.edge(e);
            for (auto v : b.adhesions[e])
                if (! contains(b.bags[x], v) || ! contains(b.bags[y], v))
                    violations.push_back("adhesion " + to_string(e) + " holds vertex " + to_string(v) + ", missing from an adjacent bag");
        }

        for (VertexId v = 0; v < n; ++v) {
            if (holders[v].empty())
                continue;
            // every shape edge between two holders must carry v; then the
            // holders must be connected through such edges
            vector<std::uint8_t> holds(b.shape.vertex_count(), 0), reached(b.shape.vertex_count(), 0);
            for (auto x : holders[v])
                holds[x] = 1;
            for (EdgeId e = 0; e < b.shape.edge_count(); ++e) {
                auto [x, y] = b.shape.edge(e);
                if (holds[x] && holds[y] && ! contains(b.adhesions[e], v))
                    violations.push_back("shape edge " + to_string(e) + " joins two bags holding vertex " + to_string(v) +
                        " but its adhesion omits it");
            }
            vector<VertexId> stack{holders[v].front()};
            reached[holders[v].front()] = 1;
            size_t count = 1;
            while (! stack.empty()) {
                auto x = stack.back();
                stack.pop_back();
                for (auto & [y, e] : b.shape.incident(x))
                    if (holds[y] && ! reached[y]) {
                        reached[y] = 1;
                        ++count;
                        stack.push_back(y);
                    }
            }
            if (count != holders[v].size())
                violations.push_back("bags holding vertex " + to_string(v) + " are not connected in the shape");
        }
        return violations;
    }

    auto hom_set(const SimpleGraph & x, const vector<VertexId> & domain, const SimpleGraph & h) -> HomSet
    {
        HomSet result{domain, {}};
        auto k = domain.size();
        // earlier domain vertices adjacent to each position
        vector<vector<size_t>> back(k);
        for (size_t i = 0; i < k; ++i)
            for (size_t j = 0; j < i; ++j)
                if (x.adjacent(domain[i], domain[j]))
                    back[i].push_back(j);

        vector<VertexId> current(k, 0);
        auto extend = [&](auto & self, size_t i) -> void {
            if (i == k) {
                result.maps.push_back(current);
                return;
            }
            for (VertexId c = 0; c < h.vertex_count(); ++c) {
                bool ok = std::all_of(back[i].begin(), back[i].end(), [&](size_t j) { return h.adjacent(current[j], c); });
                if (ok) {
                    current[i] = c;
                    self(self, i + 1);
                }
            }
        };
        extend(extend, 0);
        return result;
    }

    namespace
    {
        // Position of the restriction of `map` (over `from`) to `to` in the
        // lexicographically sorted hom set over `to`.
        auto restriction_index(const vector<VertexId> & from, const vector<VertexId> & map, const HomSet & to) -> Element
        {
            vector<VertexId> restricted;
            restricted.reserve(to.domain.size());
            for (auto v : to.domain) {
                auto pos = std::lower_bound(from.begin(), from.end(), v) - from.begin();
                restricted.push_back(map[pos]);
            }
            auto it = std::lower_bound(to.maps.begin(), to.maps.end(), restricted);
            if (it == to.maps.end() || *it != restricted)
                throw std::logic_error("restriction of a homomorphism is missing from the adhesion hom set");
            return static_cast<Element>(it - to.maps.begin());
        }
    }

    auto build_hom_codecomp(const BagDecomposition & b, const SimpleGraph & h) -> HomCoDecomposition
    {
        auto violations = validate_decomposition(b);
        if (! violations.empty())
            throw InvalidInput("invalid decomposition", std::move(violations));

        HomCoDecomposition result;
        auto & d = result.diagram;
        d.shape = b.shape;
        for (auto & bag : b.bags) {
            result.bag_homs.push_back(hom_set(b.target, bag, h));
            d.vertex_sets.emplace_back(result.bag_homs.back().maps.size());
        }
        for (auto & adhesion : b.adhesions) {
            result.adhesion_homs.push_back(hom_set(b.target, adhesion, h));
            d.edge_sets.emplace_back(result.adhesion_homs.back().maps.size());
        }
        for (EdgeId e = 0; e < b.shape.edge_count(); ++e) {
            auto [x, y] = b.shape.edge(e);
            std::array<FinFn, 2> legs;
            for (auto [end, side] : {std::pair{x, 0}, std::pair{y, 1}}) {
                auto & homs = result.bag_homs[end];
                vector<Element> table;
                table.reserve(homs.maps.size());
                for (auto & map : homs.maps)
                    table.push_back(restriction_index(homs.domain, map, result.adhesion_homs[e]));
                legs[side] = FinFn(result.adhesion_homs[e].maps.size(), std::move(table));
            }
            d.legs.push_back(std::move(legs));
        }
        return result;
    }

    auto is_homomorphism(const SimpleGraph & x, const SimpleGraph & h, const vector<VertexId> & map) -> bool
    {
        if (map.size() != x.vertex_count())
            return false;
        if (std::any_of(map.begin(), map.end(), [&](VertexId c) { return c >= h.vertex_count(); }))
            return false;
        return std::all_of(x.edges().begin(), x.edges().end(), [&](auto & uv) { return h.adjacent(map[uv.first], map[uv.second]); });
    }

    auto hom_exists(const BagDecomposition & b, const SimpleGraph & h, SolveOptions options) -> HomReport
    {
        auto built = build_hom_codecomp(b, h);
        HomReport report;
        for (auto & homs : built.bag_homs)
            report.largest_bag_hom_set = std::max(report.largest_bag_hom_set, homs.maps.size());
        report.solve = inlim(built.diagram, options);
        report.exists = ! report.solve.verdict.empty_limit;

        if (report.exists && report.solve.witness) {
            // overlapping bags agree through adhesions, so any holder will do
            vector<VertexId> map(b.target.vertex_count(), 0);
            for (VertexId x = 0; x < b.bags.size(); ++x) {
                auto & chosen = built.bag_homs[x].maps[report.solve.witness->vertex_elements[x]];
                for (size_t i = 0; i < b.bags[x].size(); ++i)
                    map[b.bags[x][i]] = chosen[i];
            }
            if (! is_homomorphism(b.target, h, map))
                throw std::logic_error("stitched map is not a homomorphism");
            report.map = std::move(map);
        }
        return report;
    }

    auto complete_graph(size_t n) -> SimpleGraph
    {
        vector<std::pair<VertexId, VertexId>> edges;
        for (VertexId u = 0; u < n; ++u)
            for (VertexId v = u + 1; v < n; ++v)
                edges.emplace_back(u, v);
        return SimpleGraph(n, std::move(edges));
    }
}
