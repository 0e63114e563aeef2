#include <inlim/errors.hh>
#include <inlim/graph.hh>

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>
#include <string>

using std::nullopt;
using std::optional;
using std::pair;
using std::size_t;
using std::string;
using std::to_string;
using std::vector;

namespace inlim
{
    InvalidInput::InvalidInput(const string & message) :
        std::runtime_error(message)
    {
    }

    InvalidInput::InvalidInput(const string & message, vector<string> violations) :
        std::runtime_error(message),
        _violations(std::move(violations))
    {
    }

    auto InvalidInput::violations() const -> const vector<string> &
    {
        return _violations;
    }

    SimpleGraph::SimpleGraph(size_t vertex_count, vector<pair<VertexId, VertexId>> edges) :
        _vertex_count(vertex_count),
        _edges(std::move(edges)),
        _adjacency(vertex_count)
    {
        vector<string> violations;
        std::set<pair<VertexId, VertexId>> seen;
        for (EdgeId e = 0; e < _edges.size(); ++e) {
            auto [u, v] = _edges[e];
            if (u >= vertex_count || v >= vertex_count) {
                violations.push_back("edge " + to_string(e) + " has an endpoint out of range");
                continue;
            }
            if (u == v) {
                violations.push_back("edge " + to_string(e) + " is a loop at vertex " + to_string(u));
                continue;
            }
            if (! seen.emplace(std::min(u, v), std::max(u, v)).second) {
                violations.push_back("edge " + to_string(e) + " duplicates {" + to_string(u) + "," + to_string(v) + "}");
                continue;
            }
            _adjacency[u].push_back(Incidence{v, e});
            _adjacency[v].push_back(Incidence{u, e});
        }
        if (! violations.empty())
            throw InvalidInput("graph is not simple", std::move(violations));
    }

    auto SimpleGraph::adjacent(VertexId u, VertexId v) const -> bool
    {
        const auto & smaller = _adjacency[u].size() <= _adjacency[v].size() ? _adjacency[u] : _adjacency[v];
        auto target = _adjacency[u].size() <= _adjacency[v].size() ? v : u;
        return std::any_of(smaller.begin(), smaller.end(), [&](const Incidence & i) { return i.neighbour == target; });
    }

    auto SimpleGraph::other_endpoint(EdgeId e, VertexId v) const -> VertexId
    {
        return _edges[e].first == v ? _edges[e].second : _edges[e].first;
    }

    VertexSet::VertexSet(size_t vertex_count, std::span<const VertexId> members) :
        _members(vertex_count, 0)
    {
        for (auto v : members) {
            if (v >= vertex_count)
                throw InvalidInput("vertex " + to_string(v) + " out of range for a set over " + to_string(vertex_count) + " vertices");
            _members[v] = 1;
        }
    }

    auto VertexSet::size() const -> size_t
    {
        return std::count(_members.begin(), _members.end(), std::uint8_t{1});
    }

    auto VertexSet::members() const -> vector<VertexId>
    {
        vector<VertexId> result;
        for (VertexId v = 0; v < _members.size(); ++v)
            if (_members[v])
                result.push_back(v);
        return result;
    }

    auto components(const SimpleGraph & g) -> Components
    {
        constexpr auto unassigned = std::numeric_limits<std::uint32_t>::max();
        Components result;
        result.label.assign(g.vertex_count(), unassigned);
        vector<VertexId> stack;
        for (VertexId root = 0; root < g.vertex_count(); ++root) {
            if (result.label[root] != unassigned)
                continue;
            auto c = static_cast<std::uint32_t>(result.count++);
            result.label[root] = c;
            stack.push_back(root);
            while (! stack.empty()) {
                auto v = stack.back();
                stack.pop_back();
                for (auto & [u, e] : g.incident(v))
                    if (result.label[u] == unassigned) {
                        result.label[u] = c;
                        stack.push_back(u);
                    }
            }
        }
        return result;
    }

    auto is_forest(const SimpleGraph & g) -> bool
    {
        // acyclic iff |E| = |V| - #components
        return g.edge_count() + components(g).count == g.vertex_count();
    }

    namespace
    {
        // Depth-first search restricted to vertices with alive[v] set.
        auto find_cycle_among(const SimpleGraph & g, const vector<std::uint8_t> & alive) -> optional<vector<VertexId>>
        {
            enum : std::uint8_t { unseen, active, finished };
            vector<std::uint8_t> state(g.vertex_count(), unseen);
            vector<VertexId> parent(g.vertex_count(), 0);

            struct Frame
            {
                VertexId vertex;
                size_t next;
            };
            vector<Frame> stack;

            for (VertexId root = 0; root < g.vertex_count(); ++root) {
                if (! alive[root] || state[root] != unseen)
                    continue;
                state[root] = active;
                parent[root] = root;
                stack.push_back(Frame{root, 0});
                while (! stack.empty()) {
                    auto & frame = stack.back();
                    auto incident = g.incident(frame.vertex);
                    if (frame.next == incident.size()) {
                        state[frame.vertex] = finished;
                        stack.pop_back();
                        continue;
                    }
                    auto u = incident[frame.next++].neighbour;
                    if (! alive[u] || (u == parent[frame.vertex] && frame.vertex != root))
                        continue;
                    if (state[u] == active) {
                        // back edge: the stack from u upwards is the cycle
                        vector<VertexId> cycle;
                        auto start = std::find_if(stack.begin(), stack.end(), [&](const Frame & f) { return f.vertex == u; });
                        for (auto it = start; it != stack.end(); ++it)
                            cycle.push_back(it->vertex);
                        return cycle;
                    }
                    if (state[u] == unseen) {
                        state[u] = active;
                        parent[u] = frame.vertex;
                        stack.push_back(Frame{u, 0});
                    }
                }
            }
            return nullopt;
        }

        // Repeatedly strips vertices of degree <= 1; what remains is the
        // 2-core, which is empty iff the alive subgraph is a forest.
        auto peel(const SimpleGraph & g, vector<std::uint8_t> & alive) -> size_t
        {
            vector<size_t> degree(g.vertex_count(), 0);
            vector<VertexId> queue;
            size_t remaining = 0;
            for (VertexId v = 0; v < g.vertex_count(); ++v) {
                if (! alive[v])
                    continue;
                ++remaining;
                for (auto & i : g.incident(v))
                    if (alive[i.neighbour])
                        ++degree[v];
                if (degree[v] <= 1)
                    queue.push_back(v);
            }
            while (! queue.empty()) {
                auto v = queue.back();
                queue.pop_back();
                if (! alive[v])
                    continue;
                alive[v] = 0;
                --remaining;
                for (auto & i : g.incident(v))
                    if (alive[i.neighbour] && --degree[i.neighbour] == 1)
                        queue.push_back(i.neighbour);
            }
            return remaining;
        }

        auto branch(const SimpleGraph & g, vector<std::uint8_t> alive, size_t budget, VertexSet & chosen) -> bool
        {
            if (peel(g, alive) == 0)
                return true;
            if (budget == 0)
                return false;

            auto cycle = find_cycle_among(g, alive);
            auto candidates = *cycle;
            std::sort(candidates.begin(), candidates.end());
            for (auto v : candidates) {
                auto next = alive;
                next[v] = 0;
                chosen.insert(v);
                if (branch(g, std::move(next), budget - 1, chosen))
                    return true;
                chosen.erase(v);
            }
            return false;
        }
    }

    auto find_cycle(const SimpleGraph & g) -> optional<vector<VertexId>>
    {
        return find_cycle_among(g, vector<std::uint8_t>(g.vertex_count(), 1));
    }

    auto fvs_exact(const SimpleGraph & g, size_t k_max) -> optional<VertexSet>
    {
        VertexSet chosen(g.vertex_count());
        if (is_forest(g))
            return chosen;
        if (branch(g, vector<std::uint8_t>(g.vertex_count(), 1), k_max, chosen))
            return chosen;
        return nullopt;
    }

    auto fvs_minimum(const SimpleGraph & g, size_t k_max) -> optional<VertexSet>
    {
        for (size_t k = 0; k <= k_max; ++k)
            if (auto s = fvs_exact(g, k))
                return s;
        return nullopt;
    }

    auto is_feedback_vertex_set(const SimpleGraph & g, const VertexSet & s) -> bool
    {
        if (s.universe_size() != g.vertex_count())
            return false;
        return is_forest(remove_vertices(g, s).graph);
    }

    auto induced_subgraph(const SimpleGraph & g, const VertexSet & keep) -> InducedSubgraph
    {
        if (keep.universe_size() != g.vertex_count())
            throw InvalidInput("vertex set size does not match graph");

        InducedSubgraph result;
        result.vertex_map.assign(g.vertex_count(), nullopt);
        result.edge_map.assign(g.edge_count(), nullopt);
        for (VertexId v = 0; v < g.vertex_count(); ++v)
            if (keep.contains(v)) {
                result.vertex_map[v] = static_cast<VertexId>(result.vertex_origin.size());
                result.vertex_origin.push_back(v);
            }

        vector<pair<VertexId, VertexId>> edges;
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            auto [u, v] = g.edge(e);
            if (result.vertex_map[u] && result.vertex_map[v]) {
                result.edge_map[e] = static_cast<EdgeId>(edges.size());
                result.edge_origin.push_back(e);
                edges.emplace_back(*result.vertex_map[u], *result.vertex_map[v]);
            }
        }
        result.graph = SimpleGraph(result.vertex_origin.size(), std::move(edges));
        return result;
    }

    auto remove_vertices(const SimpleGraph & g, const VertexSet & s) -> InducedSubgraph
    {
        if (s.universe_size() != g.vertex_count())
            throw InvalidInput("vertex set size does not match graph");
        VertexSet keep(g.vertex_count());
        for (VertexId v = 0; v < g.vertex_count(); ++v)
            if (! s.contains(v))
                keep.insert(v);
        return induced_subgraph(g, keep);
    }
}
