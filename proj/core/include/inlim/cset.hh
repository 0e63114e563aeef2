#pragma once

#include <inlim/codecomp.hh>
#include <inlim/solver.hh>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace inlim
{
    using ObjectId = std::uint32_t;
    using MorphismId = std::uint32_t;

    /// A finite category given by all of its morphisms and a full composition
    /// table: compose[g][f] is g after f when tgt(f) = src(g), and unset
    /// otherwise.
    struct FinCat
    {
        struct Morphism
        {
            ObjectId source;
            ObjectId target;

            auto operator==(const Morphism &) const -> bool = default;
        };

        std::size_t object_count = 0;
        std::vector<Morphism> morphisms;
        std::vector<MorphismId> identities;
        std::vector<std::vector<std::optional<MorphismId>>> compose;

        /// One object, one morphism.
        [[nodiscard]] static auto terminal() -> FinCat;

        /// Two objects and one non-identity arrow 0 -> 1. Morphisms are
        /// id_0 = 0, id_1 = 1, the arrow = 2.
        [[nodiscard]] static auto walking_arrow() -> FinCat;

        /// Sum over all hom-sets, i.e. the number of morphisms.
        [[nodiscard]] auto size() const -> std::size_t { return morphisms.size(); }

        auto operator==(const FinCat &) const -> bool = default;
    };

    /// Identity laws, associativity on every composable triple, composites
    /// with the right endpoints, and a defined entry exactly where composable.
    [[nodiscard]] auto validate_fincat(const FinCat & c) -> std::vector<std::string>;

    /// A functor C -> FinSet: a set per object, a function per morphism.
    struct CSet
    {
        std::vector<FinSetObj> sets;
        std::vector<FinFn> actions;

        /// Sum of the set sizes over all objects.
        [[nodiscard]] auto total_size() const -> std::size_t;

        auto operator==(const CSet &) const -> bool = default;
    };

    [[nodiscard]] auto validate_cset(const FinCat & c, const CSet & x) -> std::vector<std::string>;

    /// A structured co-decomposition valued in C-sets. Each leg is a natural
    /// transformation, given by one component per object of C.
    struct CSetCoDecomposition
    {
        FinCat category;
        SimpleGraph shape;
        std::vector<CSet> vertex_objects;
        std::vector<CSet> edge_objects;
        /// legs[e][side][c]: component at object c of the leg out of
        /// shape.edge(e).first (side 0) or .second (side 1)
        std::vector<std::array<std::vector<FinFn>, 2>> legs;

        /// Largest total size of a vertex C-set.
        [[nodiscard]] auto width() const -> std::size_t;

        /// Largest vertex set over all slices.
        [[nodiscard]] auto slice_width() const -> std::size_t;
    };

    /// Category, functoriality of every C-set, sizes, and naturality of every
    /// leg. Violations name the offending edge, object, or morphism.
    [[nodiscard]] auto validate(const CSetCoDecomposition & d) -> std::vector<std::string>;

    auto require_valid(const CSetCoDecomposition & d) -> void;

    /// The ordinary co-decomposition obtained by evaluating everything at c.
    [[nodiscard]] auto pointwise_slice(const CSetCoDecomposition & d, ObjectId c) -> CoDecomposition;

    struct CSetSolveReport
    {
        Verdict verdict;
        std::vector<SolveReport> slices;
    };

    /// Limits in C-sets are computed objectwise and the initial C-set is empty
    /// everywhere, so the limit is initial iff every slice has an empty limit.
    /// Solves every slice with the given options. Throws InvalidInput on an
    /// invalid diagram.
    [[nodiscard]] auto cset_inlim(const CSetCoDecomposition & d, const SolveOptions & options = {}) -> CSetSolveReport;
}
