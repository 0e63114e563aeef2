#pragma once

#include <inlim/codecomp.hh>
#include <inlim/solver.hh>

#include <optional>
#include <string>
#include <vector>

namespace inlim
{
    /// A decomposition of a graph X over a shape graph: a bag of X-vertices per
    /// shape vertex and an adhesion per shape edge. Bags and adhesions are kept
    /// sorted and duplicate free.
    struct BagDecomposition
    {
        SimpleGraph target;
        SimpleGraph shape;
        std::vector<std::vector<VertexId>> bags;
        std::vector<std::vector<VertexId>> adhesions;

        /// Builds one with adhesion(xy) = bag(x) & bag(y) for every shape edge.
        [[nodiscard]] static auto with_default_adhesions(SimpleGraph target, SimpleGraph shape,
            std::vector<std::vector<VertexId>> bags) -> BagDecomposition;
    };

    /// Checks that the bags glue back to exactly X: every vertex and edge of X
    /// lies in some bag, adhesions sit inside both adjacent bags, and the bags
    /// holding any one vertex form a connected part of the shape whose every
    /// edge has that vertex in its adhesion.
    [[nodiscard]] auto validate_decomposition(const BagDecomposition & b) -> std::vector<std::string>;

    /// All homomorphisms from the subgraph of X induced on `domain` into h,
    /// each a vector of h-vertices aligned with `domain`, in lexicographic
    /// order.
    struct HomSet
    {
        std::vector<VertexId> domain;
        std::vector<std::vector<VertexId>> maps;
    };

    [[nodiscard]] auto hom_set(const SimpleGraph & x, const std::vector<VertexId> & domain, const SimpleGraph & h) -> HomSet;

    struct HomCoDecomposition
    {
        CoDecomposition diagram;
        std::vector<HomSet> bag_homs;
        std::vector<HomSet> adhesion_homs;
    };

    /// Homs out of every bag and adhesion into h, with restriction maps as
    /// legs. Throws InvalidInput if the decomposition does not validate.
    [[nodiscard]] auto build_hom_codecomp(const BagDecomposition & b, const SimpleGraph & h) -> HomCoDecomposition;

    struct HomReport
    {
        bool exists = false;
        /// A homomorphism X -> h, one h-vertex per X-vertex, when requested.
        std::optional<std::vector<VertexId>> map;
        SolveReport solve;
        std::size_t largest_bag_hom_set = 0;
    };

    /// A homomorphism X -> h exists iff the hom co-decomposition has a
    /// nonempty limit. With options.want_witness, the per-bag homs of the
    /// witness are stitched into one map and checked.
    [[nodiscard]] auto hom_exists(const BagDecomposition & b, const SimpleGraph & h, SolveOptions options = {}) -> HomReport;

    [[nodiscard]] auto is_homomorphism(const SimpleGraph & x, const SimpleGraph & h, const std::vector<VertexId> & map) -> bool;

    /// The complete graph on n vertices.
    [[nodiscard]] auto complete_graph(std::size_t n) -> SimpleGraph;
}
