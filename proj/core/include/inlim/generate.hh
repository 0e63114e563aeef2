#pragma once

#include <inlim/codecomp.hh>
#include <inlim/cset.hh>
#include <inlim/homfront.hh>

#include <cstdint>
#include <random>
#include <string>

namespace inlim::generate
{
    using Rng = std::mt19937_64;

    enum class ShapeKind
    {
        tree,
        path,
        cycle,
        random
    };

    [[nodiscard]] auto parse_shape_kind(const std::string & name) -> ShapeKind;
    [[nodiscard]] auto shape_kind_name(ShapeKind kind) -> std::string;

    struct InstanceSpec
    {
        ShapeKind kind = ShapeKind::tree;
        std::size_t n = 10;
        /// Upper bound on every set size.
        std::size_t w = 3;
        /// Edge probability for ShapeKind::random.
        double edge_probability = 0.3;
        /// Every vertex and edge set has exactly w elements.
        bool exact_sizes = false;
        /// Smallest set size drawn when sizes vary. 0 allows empty sets.
        std::size_t min_size = 1;
        /// Hide one matching family in the legs so the limit is nonempty.
        bool planted = false;
    };

    /// Random tree on n vertices: vertex v > 0 attaches to a uniform earlier vertex.
    [[nodiscard]] auto random_tree(std::size_t n, Rng & rng) -> SimpleGraph;
    [[nodiscard]] auto path_graph(std::size_t n) -> SimpleGraph;
    /// Cycle 0-1-...-(n-1)-0; n >= 3.
    [[nodiscard]] auto cycle_graph(std::size_t n) -> SimpleGraph;
    /// Erdos-Renyi G(n, p).
    [[nodiscard]] auto random_graph(std::size_t n, double p, Rng & rng) -> SimpleGraph;

    [[nodiscard]] auto shape(const InstanceSpec & spec, Rng & rng) -> SimpleGraph;

    /// Random sets and uniformly random leg tables over the given shape.
    [[nodiscard]] auto random_diagram(const SimpleGraph & shape, const InstanceSpec & spec, Rng & rng) -> CoDecomposition;

    [[nodiscard]] auto random_diagram(const InstanceSpec & spec, std::uint64_t seed) -> CoDecomposition;

    /// A tree decomposition of x from eliminating vertices in index order:
    /// each bag is a vertex plus its later neighbours in the fill-in graph,
    /// attached to the bag of its earliest later neighbour.
    [[nodiscard]] auto elimination_decomposition(const SimpleGraph & x) -> BagDecomposition;

    /// A diagram of C-sets over the walking arrow 0 -> 1 with natural legs.
    [[nodiscard]] auto random_arrow_diagram(const SimpleGraph & shape, std::size_t w, Rng & rng) -> CSetCoDecomposition;
}
