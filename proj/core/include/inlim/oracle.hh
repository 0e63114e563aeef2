#pragma once

#include <inlim/codecomp.hh>
#include <inlim/solver.hh>

#include <cstdint>
#include <vector>

namespace inlim
{
    /// Reference implementations by exhaustive search. They exist to certify
    /// the solver on small instances and deliberately share none of its code
    /// paths beyond the data model.
    namespace oracle
    {
        constexpr std::uint64_t default_cap = 10'000'000;

        /// Number of vertex tuples a full enumeration inspects (saturating).
        [[nodiscard]] auto search_space(const CoDecomposition & d) -> std::uint64_t;

        /// Every global matching family, in lexicographic order of vertex
        /// tuples, by checking every edge of every tuple of the product.
        /// Throws CapExceeded if the product is larger than `cap`.
        [[nodiscard]] auto enumerate_limit(const CoDecomposition & d, std::uint64_t cap = default_cap) -> std::vector<Witness>;

        /// Projection of all matching families onto every vertex and edge.
        [[nodiscard]] auto brute_image(const CoDecomposition & d, std::uint64_t cap = default_cap) -> SubMask;

        /// Size of the limit of a tree-shaped diagram, folding one pullback per
        /// edge in breadth-first order from vertex 0. Throws UnsupportedShape
        /// unless the shape is a tree, and CapExceeded if an intermediate
        /// pullback holds more than `cap` partial families.
        [[nodiscard]] auto pullback_limit(const CoDecomposition & d, std::uint64_t cap = default_cap) -> std::uint64_t;
    }
}
