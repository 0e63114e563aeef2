#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace inlim
{
    using VertexId = std::uint32_t;
    using EdgeId = std::uint32_t;

    struct Incidence
    {
        VertexId neighbour;
        EdgeId edge;
    };

    /// An irreflexive symmetric finite graph. Edge identifiers are positions in
    /// the edge list; each edge is stored as given, so `edge(e).first` is the
    /// "first endpoint" that legs refer to.
    class SimpleGraph
    {
    private:
        std::size_t _vertex_count = 0;
        std::vector<std::pair<VertexId, VertexId>> _edges;
        std::vector<std::vector<Incidence>> _adjacency;

    public:
        SimpleGraph() = default;

        /// Throws InvalidInput on loops, duplicate unordered pairs, or out of
        /// range endpoints.
        SimpleGraph(std::size_t vertex_count, std::vector<std::pair<VertexId, VertexId>> edges);

        [[nodiscard]] auto vertex_count() const -> std::size_t { return _vertex_count; }
        [[nodiscard]] auto edge_count() const -> std::size_t { return _edges.size(); }
        [[nodiscard]] auto edges() const -> const std::vector<std::pair<VertexId, VertexId>> & { return _edges; }
        [[nodiscard]] auto edge(EdgeId e) const -> const std::pair<VertexId, VertexId> & { return _edges[e]; }

        /// Incident edges of v, in ascending edge id order.
        [[nodiscard]] auto incident(VertexId v) const -> std::span<const Incidence> { return _adjacency[v]; }
        [[nodiscard]] auto degree(VertexId v) const -> std::size_t { return _adjacency[v].size(); }
        [[nodiscard]] auto adjacent(VertexId u, VertexId v) const -> bool;

        /// The endpoint of e that is not v.
        [[nodiscard]] auto other_endpoint(EdgeId e, VertexId v) const -> VertexId;

        auto operator==(const SimpleGraph & other) const -> bool { return _vertex_count == other._vertex_count && _edges == other._edges; }
    };

    class VertexSet
    {
    private:
        std::vector<std::uint8_t> _members;

    public:
        VertexSet() = default;
        explicit VertexSet(std::size_t vertex_count) : _members(vertex_count, 0) {}
        VertexSet(std::size_t vertex_count, std::span<const VertexId> members);

        [[nodiscard]] auto universe_size() const -> std::size_t { return _members.size(); }
        [[nodiscard]] auto contains(VertexId v) const -> bool { return _members[v] != 0; }
        auto insert(VertexId v) -> void { _members[v] = 1; }
        auto erase(VertexId v) -> void { _members[v] = 0; }

        [[nodiscard]] auto size() const -> std::size_t;
        [[nodiscard]] auto empty() const -> bool { return size() == 0; }

        /// Members in ascending order.
        [[nodiscard]] auto members() const -> std::vector<VertexId>;

        auto operator==(const VertexSet &) const -> bool = default;
    };

    /// Component label per vertex, labels numbered 0.. in order of each
    /// component's lowest vertex.
    struct Components
    {
        std::vector<std::uint32_t> label;
        std::size_t count = 0;
    };

    [[nodiscard]] auto components(const SimpleGraph & g) -> Components;

    [[nodiscard]] auto is_forest(const SimpleGraph & g) -> bool;

    /// Some simple cycle, found by depth-first search from the lowest index
    /// vertex of each component in turn. Consecutive entries are adjacent and
    /// the last is adjacent to the first.
    [[nodiscard]] auto find_cycle(const SimpleGraph & g) -> std::optional<std::vector<VertexId>>;

    /// A feedback vertex set of size at most k_max, or nullopt if none exists.
    /// Deterministic: degree <= 1 peeling, then branching in ascending vertex
    /// order over one cycle, first solution wins.
    [[nodiscard]] auto fvs_exact(const SimpleGraph & g, std::size_t k_max) -> std::optional<VertexSet>;

    /// fvs_exact with budgets 0, 1, ..., k_max in turn: a smallest feedback
    /// vertex set, or none if every one is larger than k_max.
    [[nodiscard]] auto fvs_minimum(const SimpleGraph & g, std::size_t k_max) -> std::optional<VertexSet>;

    [[nodiscard]] auto is_feedback_vertex_set(const SimpleGraph & g, const VertexSet & s) -> bool;

    struct InducedSubgraph
    {
        SimpleGraph graph;
        /// old vertex -> new vertex, nullopt for removed vertices
        std::vector<std::optional<VertexId>> vertex_map;
        /// old edge -> new edge, nullopt for edges losing an endpoint
        std::vector<std::optional<EdgeId>> edge_map;
        /// new vertex -> old vertex
        std::vector<VertexId> vertex_origin;
        /// new edge -> old edge
        std::vector<EdgeId> edge_origin;
    };

    /// G - S. Surviving vertices and edges keep their relative order.
    [[nodiscard]] auto remove_vertices(const SimpleGraph & g, const VertexSet & s) -> InducedSubgraph;

    /// The subgraph induced on `keep`.
    [[nodiscard]] auto induced_subgraph(const SimpleGraph & g, const VertexSet & keep) -> InducedSubgraph;
}
