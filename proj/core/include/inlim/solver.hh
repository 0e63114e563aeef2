#pragma once

#include <inlim/codecomp.hh>

#include <cstdint>
#include <optional>
#include <vector>

namespace inlim
{
    /// empty_limit = true is a yes-instance: the limit is the empty set.
    struct Verdict
    {
        bool empty_limit = false;

        auto operator==(const Verdict &) const -> bool = default;
    };

    /// One chosen element per pinned (feedback) vertex; `vertices` ascending.
    struct SectionAssignment
    {
        std::vector<VertexId> vertices;
        std::vector<Element> elements;

        auto operator==(const SectionAssignment &) const -> bool = default;
    };

    /// An element of the limit: one element per shape vertex, plus the element
    /// each edge receives from both of its endpoints.
    struct Witness
    {
        std::vector<Element> vertex_elements;
        std::vector<Element> edge_elements;

        auto operator==(const Witness &) const -> bool = default;
    };

    /// Both legs of every edge agree on the witness, and the edge entry is
    /// their common value.
    [[nodiscard]] auto satisfies(const CoDecomposition & d, const Witness & w) -> bool;

    /// Edgeless shapes only: the limit is the product of the vertex sets.
    /// Throws UnsupportedShape if the shape has edges.
    [[nodiscard]] auto discrete_inlim(const CoDecomposition & d) -> Verdict;

    /// The image diagram of the masked forest-shaped diagram: each vertex keeps
    /// exactly the elements that occur in some global matching family, each
    /// edge keeps the leg image of those. Computed by filtering every edge
    /// once leaves-to-root and once root-to-leaves, with each tree rooted at
    /// its lowest vertex. If any tree has no matching family, every mask of
    /// the result is empty. Throws UnsupportedShape if the shape has a cycle.
    [[nodiscard]] auto image_tree(const CoDecomposition & d, const SubMask & m) -> SubMask;

    /// Whether the masked forest-shaped diagram has an empty limit. Only the
    /// leaves-to-root half of the sweep is needed: afterwards the root of each
    /// tree holds exactly its image, and one empty root settles the answer.
    [[nodiscard]] auto forest_initial(const CoDecomposition & d, const SubMask & m) -> Verdict;

    enum class FilterOrder
    {
        ascending,
        descending
    };

    struct SectionTest
    {
        SectionAssignment assignment;
        /// The pinned and filtered mask over the whole diagram.
        SubMask filtered;
        /// Set when filtering already emptied a mask; `tau` is then absent.
        bool immediately_empty = false;
        /// The filtered diagram restricted to the forest G - S.
        std::optional<Restriction> tau;
    };

    /// Lazily enumerates the section test diagrams of d relative to a feedback
    /// vertex set, one per choice of element at every feedback vertex, in
    /// lexicographic order. For each choice the feedback vertex sets are
    /// pinned to the chosen element and every edge at a feedback vertex is
    /// filtered, vertices ascending and their edges by `order`.
    class SectionTests
    {
    private:
        const CoDecomposition * _diagram;
        VertexSet _fvs;
        std::vector<VertexId> _pinned;
        std::vector<EdgeId> _edges;
        std::vector<Element> _next;
        bool _exhausted = false;
        SubMask _full;
        ElementMask _scratch;

    public:
        /// Throws FeedbackVertexSetError if `fvs` leaves a cycle.
        SectionTests(const CoDecomposition & d, VertexSet fvs, FilterOrder order = FilterOrder::ascending);

        /// Product of the feedback vertex set sizes.
        [[nodiscard]] auto total() const -> std::uint64_t;

        [[nodiscard]] auto next() -> std::optional<SectionTest>;
    };

    struct SolveOptions
    {
        /// Used as given after checking it is a feedback vertex set; otherwise
        /// one of size at most k_max is searched for.
        std::optional<VertexSet> fvs;
        std::size_t k_max = 8;

        bool want_witness = false;

        /// Stop at the first section test with a nonempty limit.
        bool early_exit = true;

        FilterOrder filter_order = FilterOrder::ascending;

        /// Section tests run on this many threads. The verdict does not depend
        /// on it; the witness is reproducible only with jobs = 1.
        unsigned jobs = 1;
    };

    struct SolveReport
    {
        Verdict verdict;
        std::optional<Witness> witness;
        VertexSet fvs;
        /// The section test that produced the witness.
        std::optional<SectionAssignment> witness_assignment;
        /// Section tests enumerated, including ones settled by filtering alone.
        std::uint64_t section_tests = 0;
        /// Section tests settled by filtering alone.
        std::uint64_t pruned_tests = 0;
    };

    /// Decides whether the limit of d is empty. Validates d first (throws
    /// InvalidInput); throws FeedbackVertexSetError when no usable feedback
    /// vertex set is available.
    [[nodiscard]] auto inlim(const CoDecomposition & d, const SolveOptions & options = {}) -> SolveReport;

    /// Reads one matching family off an image mask. Vertices in `sigma` take
    /// their pinned elements; every other tree is rooted at its lowest vertex,
    /// whose lowest surviving element is chosen, and each child takes the
    /// lowest surviving element agreeing with its parent across their edge.
    /// The unpinned part of the shape must be a forest. Throws InvalidInput if
    /// a needed element is missing.
    [[nodiscard]] auto extract_witness(const CoDecomposition & d, const SubMask & image_mask,
        const SectionAssignment * sigma = nullptr) -> Witness;
}
