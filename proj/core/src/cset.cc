#include <inlim/cset.hh>
#include <inlim/errors.hh>

#include <algorithm>

using std::nullopt;
using std::size_t;
using std::string;
using std::to_string;
using std::vector;

namespace inlim
{
    auto FinCat::terminal() -> FinCat
    {
        FinCat c;
        c.object_count = 1;
        c.morphisms = {{0, 0}};
        c.identities = {0};
        c.compose = {{0}};
        return c;
    }

    auto FinCat::walking_arrow() -> FinCat
    {
        FinCat c;
        c.object_count = 2;
        c.morphisms = {{0, 0}, {1, 1}, {0, 1}};
        c.identities = {0, 1};
        c.compose.assign(3, vector<std::optional<MorphismId>>(3, nullopt));
        c.compose[0][0] = 0;
        c.compose[1][1] = 1;
        c.compose[2][0] = 2;
        c.compose[1][2] = 2;
        return c;
    }

    auto validate_fincat(const FinCat & c) -> vector<string>
    {
        vector<string> violations;
        auto m = c.morphisms.size();
        for (MorphismId f = 0; f < m; ++f)
            if (c.morphisms[f].source >= c.object_count || c.morphisms[f].target >= c.object_count)
                violations.push_back("morphism " + to_string(f) + " has an endpoint outside the objects");
        if (c.identities.size() != c.object_count)
            violations.push_back("expected " + to_string(c.object_count) + " identities, got " + to_string(c.identities.size()));
        if (c.compose.size() != m || std::any_of(c.compose.begin(), c.compose.end(), [&](auto & row) { return row.size() != m; }))
            violations.push_back("composition table must be " + to_string(m) + " x " + to_string(m));
        if (! violations.empty())
            return violations;

        for (ObjectId x = 0; x < c.object_count; ++x) {
            auto i = c.identities[x];
            if (i >= m || c.morphisms[i].source != x || c.morphisms[i].target != x)
                violations.push_back("identity of object " + to_string(x) + " is not an endomorphism of it");
        }
        if (! violations.empty())
            return violations;

        auto composite = [&](MorphismId g, MorphismId f) { return c.compose[g][f]; };
        for (MorphismId g = 0; g < m; ++g)
            for (MorphismId f = 0; f < m; ++f) {
                bool composable = c.morphisms[f].target == c.morphisms[g].source;
                auto gf = composite(g, f);
                if (composable != gf.has_value()) {
                    violations.push_back("composite of " + to_string(g) + " after " + to_string(f) +
                        (composable ? " is missing" : " is defined but they are not composable"));
                    continue;
                }
                if (gf && (*gf >= m || c.morphisms[*gf].source != c.morphisms[f].source || c.morphisms[*gf].target != c.morphisms[g].target))
                    violations.push_back("composite of " + to_string(g) + " after " + to_string(f) + " has the wrong endpoints");
            }
        if (! violations.empty())
            return violations;

        for (MorphismId f = 0; f < m; ++f) {
            auto [s, t] = c.morphisms[f];
            if (composite(c.identities[t], f) != f || composite(f, c.identities[s]) != f)
                violations.push_back("identity law fails for morphism " + to_string(f));
        }
        for (MorphismId h = 0; h < m; ++h)
            for (MorphismId g = 0; g < m; ++g) {
                if (c.morphisms[g].target != c.morphisms[h].source)
                    continue;
                for (MorphismId f = 0; f < m; ++f) {
                    if (c.morphisms[f].target != c.morphisms[g].source)
                        continue;
                    if (composite(*composite(h, g), f) != composite(h, *composite(g, f)))
                        violations.push_back("associativity fails on (" + to_string(h) + ", " + to_string(g) + ", " + to_string(f) + ")");
                }
            }
        return violations;
    }

    auto CSet::total_size() const -> size_t
    {
        size_t total = 0;
        for (auto & s : sets)
            total += s.size();
        return total;
    }

    auto validate_cset(const FinCat & c, const CSet & x) -> vector<string>
    {
        vector<string> violations;
        if (x.sets.size() != c.object_count || x.actions.size() != c.morphisms.size()) {
            violations.push_back("needs one set per object and one function per morphism");
            return violations;
        }
        for (MorphismId f = 0; f < c.morphisms.size(); ++f) {
            auto [s, t] = c.morphisms[f];
            if (x.actions[f].source_size() != x.sets[s].size() || x.actions[f].target_size() != x.sets[t].size())
                violations.push_back("action of morphism " + to_string(f) + " has the wrong source or target size");
        }
        if (! violations.empty())
            return violations;

        for (ObjectId o = 0; o < c.object_count; ++o)
            if (x.actions[c.identities[o]] != FinFn::identity(x.sets[o].size()))
                violations.push_back("identity of object " + to_string(o) + " does not act as the identity");
        for (MorphismId g = 0; g < c.morphisms.size(); ++g)
            for (MorphismId f = 0; f < c.morphisms.size(); ++f)
                if (auto gf = c.compose[g][f])
                    if (x.actions[*gf] != compose(x.actions[f], x.actions[g]))
                        violations.push_back("action of " + to_string(*gf) + " differs from " + to_string(g) + " after " + to_string(f));
        return violations;
    }

    auto CSetCoDecomposition::width() const -> size_t
    {
        size_t w = 0;
        for (auto & x : vertex_objects)
            w = std::max(w, x.total_size());
        return w;
    }

    auto CSetCoDecomposition::slice_width() const -> size_t
    {
        size_t w = 0;
        for (auto & x : vertex_objects)
            for (auto & s : x.sets)
                w = std::max(w, s.size());
        return w;
    }

    auto validate(const CSetCoDecomposition & d) -> vector<string>
    {
        auto violations = validate_fincat(d.category);
        if (! violations.empty())
            return violations;

        if (d.vertex_objects.size() != d.shape.vertex_count() || d.edge_objects.size() != d.shape.edge_count() ||
            d.legs.size() != d.shape.edge_count()) {
            violations.push_back("needs one C-set per shape vertex and edge, and legs for every edge");
            return violations;
        }

        auto & c = d.category;
        for (VertexId v = 0; v < d.shape.vertex_count(); ++v)
            for (auto & problem : validate_cset(c, d.vertex_objects[v]))
                violations.push_back("vertex " + to_string(v) + ": " + problem);
        for (EdgeId e = 0; e < d.shape.edge_count(); ++e)
            for (auto & problem : validate_cset(c, d.edge_objects[e]))
                violations.push_back("edge " + to_string(e) + ": " + problem);
        if (! violations.empty())
            return violations;

        for (EdgeId e = 0; e < d.shape.edge_count(); ++e) {
            auto [u, v] = d.shape.edge(e);
            for (auto [end, side] : {std::pair{u, 0}, std::pair{v, 1}}) {
                auto & components = d.legs[e][side];
                auto where = "leg (edge " + to_string(e) + ", endpoint " + to_string(end) + ")";
                auto & from = d.vertex_objects[end];
                auto & to = d.edge_objects[e];
                if (components.size() != c.object_count) {
                    violations.push_back(where + " needs one component per object");
                    continue;
                }
                bool sized = true;
                for (ObjectId o = 0; o < c.object_count; ++o)
                    if (components[o].source_size() != from.sets[o].size() || components[o].target_size() != to.sets[o].size()) {
                        violations.push_back(where + " component at object " + to_string(o) + " has the wrong sizes");
                        sized = false;
                    }
                if (! sized)
                    continue;
                for (MorphismId f = 0; f < c.morphisms.size(); ++f) {
                    auto [s, t] = c.morphisms[f];
                    if (compose(from.actions[f], components[t]) != compose(components[s], to.actions[f]))
                        violations.push_back(where + " is not natural at morphism " + to_string(f));
                }
            }
        }
        return violations;
    }

    auto require_valid(const CSetCoDecomposition & d) -> void
    {
        auto violations = validate(d);
        if (! violations.empty())
            throw InvalidInput("invalid C-set co-decomposition", std::move(violations));
    }

    auto pointwise_slice(const CSetCoDecomposition & d, ObjectId c) -> CoDecomposition
    {
        if (c >= d.category.object_count)
            throw InvalidInput("pointwise_slice: no object " + to_string(c));
        CoDecomposition slice;
        slice.shape = d.shape;
        for (auto & x : d.vertex_objects)
            slice.vertex_sets.push_back(x.sets[c]);
        for (auto & x : d.edge_objects)
            slice.edge_sets.push_back(x.sets[c]);
        for (auto & leg : d.legs)
            slice.legs.push_back({leg[0][c], leg[1][c]});
        return slice;
    }

    auto cset_inlim(const CSetCoDecomposition & d, const SolveOptions & options) -> CSetSolveReport
    {
        require_valid(d);
        auto slice_options = options;
        if (! slice_options.fvs) {
            auto found = fvs_minimum(d.shape, options.k_max);
            if (! found)
                throw FeedbackVertexSetError("no feedback vertex set of size at most " + to_string(options.k_max));
            slice_options.fvs = std::move(found);
        }

        CSetSolveReport report;
        report.verdict.empty_limit = true;
        for (ObjectId c = 0; c < d.category.object_count; ++c) {
            report.slices.push_back(inlim(pointwise_slice(d, c), slice_options));
            if (! report.slices.back().verdict.empty_limit)
                report.verdict.empty_limit = false;
        }
        return report;
    }
}
