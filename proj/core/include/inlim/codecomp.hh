#pragma once

#include <inlim/finset.hh>
#include <inlim/graph.hh>

#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace inlim
{
    /// A structured co-decomposition: a diagram over the opposite barycentric
    /// subdivision of a simple graph. Every shape vertex carries a finite set
    /// (its bag), every shape edge carries a finite set (its adhesion), and
    /// every edge has two legs, one from each endpoint's set into the edge's
    /// set. legs[e][0] leaves shape.edge(e).first, legs[e][1] leaves
    /// shape.edge(e).second.
    struct CoDecomposition
    {
        SimpleGraph shape;
        std::vector<FinSetObj> vertex_sets;
        std::vector<FinSetObj> edge_sets;
        std::vector<std::array<FinFn, 2>> legs;

        /// The leg of e out of `endpoint`, which must be one of e's ends.
        [[nodiscard]] auto leg(EdgeId e, VertexId endpoint) const -> const FinFn &
        {
            return legs[e][shape.edge(e).first == endpoint ? 0 : 1];
        }

        /// Largest vertex set, 0 for an empty shape.
        [[nodiscard]] auto width() const -> std::size_t;

        auto operator==(const CoDecomposition &) const -> bool = default;
    };

    /// Every broken invariant, each as a readable sentence. Empty means valid.
    [[nodiscard]] auto validate(const CoDecomposition & d) -> std::vector<std::string>;

    /// Throws InvalidInput carrying the violation list.
    auto require_valid(const CoDecomposition & d) -> void;

    /// A subdiagram of a fixed base diagram, as one membership flag per element
    /// of every vertex and edge set. All masks share one flat buffer; copying a
    /// SubMask copies the buffer but shares the layout.
    class SubMask
    {
    public:
        struct Layout
        {
            std::vector<std::size_t> vertex_offset;
            std::vector<std::size_t> edge_offset;
        };

    private:
        std::shared_ptr<const Layout> _layout;
        std::vector<std::uint8_t> _bits;

        SubMask(std::shared_ptr<const Layout> layout, std::uint8_t fill);

    public:
        SubMask() = default;

        [[nodiscard]] static auto full(const CoDecomposition & d) -> SubMask;
        [[nodiscard]] static auto none(const CoDecomposition & d) -> SubMask;

        [[nodiscard]] auto vertex_count() const -> std::size_t { return _layout->vertex_offset.size() - 1; }
        [[nodiscard]] auto edge_count() const -> std::size_t { return _layout->edge_offset.size() - 1; }

        [[nodiscard]] auto vertex(VertexId v) -> std::span<std::uint8_t>
        {
            return {_bits.data() + _layout->vertex_offset[v], _bits.data() + _layout->vertex_offset[v + 1]};
        }

        [[nodiscard]] auto vertex(VertexId v) const -> std::span<const std::uint8_t>
        {
            return {_bits.data() + _layout->vertex_offset[v], _bits.data() + _layout->vertex_offset[v + 1]};
        }

        [[nodiscard]] auto edge(EdgeId e) -> std::span<std::uint8_t>
        {
            return {_bits.data() + _layout->edge_offset[e], _bits.data() + _layout->edge_offset[e + 1]};
        }

        [[nodiscard]] auto edge(EdgeId e) const -> std::span<const std::uint8_t>
        {
            return {_bits.data() + _layout->edge_offset[e], _bits.data() + _layout->edge_offset[e + 1]};
        }

        [[nodiscard]] auto vertex_empty(VertexId v) const -> bool;
        [[nodiscard]] auto vertex_population(VertexId v) const -> std::size_t;

        /// Every flag of this mask is also set in `other`.
        [[nodiscard]] auto subset_of(const SubMask & other) const -> bool;

        /// Sets every flag to false.
        auto clear() -> void;

        /// Copies flags from a mask over the same base without reallocating.
        auto assign(const SubMask & other) -> void;

        auto operator==(const SubMask & other) const -> bool { return _bits == other._bits; }
    };

    /// Every masked vertex element lands on a masked edge element, for every leg.
    [[nodiscard]] auto leg_closed(const CoDecomposition & d, const SubMask & m) -> bool;

    /// Narrows the masks at edge e = xy in place: x and y keep only elements
    /// with a partner across e, and the edge mask becomes their common image.
    /// Other masks are untouched. Returns false iff an endpoint mask is now
    /// empty. Throws InvalidInput for an unknown edge.
    auto filter(const CoDecomposition & d, SubMask & m, EdgeId e) -> bool;

    /// As above, reusing `scratch` as working space.
    auto filter(const CoDecomposition & d, SubMask & m, EdgeId e, ElementMask & scratch) -> bool;

    struct MaskedDiagram
    {
        CoDecomposition diagram;
        SubMask mask;
    };

    /// Joins two diagrams with one new edge between `left_boundary` and
    /// `right_boundary`, carrying `edge_set`, with `left_leg` and `right_leg`
    /// as its legs. The right diagram's vertices and edges are numbered after
    /// the left's; the new edge comes last with the left boundary as its
    /// first endpoint. The new edge's mask is full.
    [[nodiscard]] auto glue(const MaskedDiagram & left, VertexId left_boundary, const FinFn & left_leg,
        const MaskedDiagram & right, VertexId right_boundary, const FinFn & right_leg,
        const FinSetObj & edge_set) -> MaskedDiagram;

    struct Restriction
    {
        CoDecomposition diagram;
        SubMask mask;
        InducedSubgraph index;
    };

    /// The part of (d, m) over the subgraph induced on `keep`.
    [[nodiscard]] auto restrict_to_subgraph(const CoDecomposition & d, const SubMask & m, const VertexSet & keep) -> Restriction;

    struct Subdiagram
    {
        CoDecomposition diagram;
        /// new element -> element of the base set, per vertex and per edge
        std::vector<std::vector<Element>> vertex_inclusion;
        std::vector<std::vector<Element>> edge_inclusion;
    };

    /// Materialises the masked elements as a standalone diagram. Elements keep
    /// their names: labels carry over, and elements of unlabelled sets are
    /// labelled by their original index. Throws InvalidInput if m is not
    /// leg-closed.
    [[nodiscard]] auto as_subdiagram(const CoDecomposition & d, const SubMask & m) -> Subdiagram;
}
