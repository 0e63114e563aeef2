#include <inlim/codecomp.hh>
#include <inlim/errors.hh>

#include <algorithm>

using std::array;
using std::make_shared;
using std::size_t;
using std::string;
using std::to_string;
using std::vector;

namespace inlim
{
    auto CoDecomposition::width() const -> size_t
    {
        size_t w = 0;
        for (auto & s : vertex_sets)
            w = std::max(w, s.size());
        return w;
    }

    auto validate(const CoDecomposition & d) -> vector<string>
    {
        vector<string> violations;
        if (d.vertex_sets.size() != d.shape.vertex_count())
            violations.push_back("expected " + to_string(d.shape.vertex_count()) + " vertex sets, got " + to_string(d.vertex_sets.size()));
        if (d.edge_sets.size() != d.shape.edge_count())
            violations.push_back("expected " + to_string(d.shape.edge_count()) + " edge sets, got " + to_string(d.edge_sets.size()));
        if (d.legs.size() != d.shape.edge_count())
            violations.push_back("expected legs for " + to_string(d.shape.edge_count()) + " edges, got " + to_string(d.legs.size()));
        if (! violations.empty())
            return violations;

        for (EdgeId e = 0; e < d.shape.edge_count(); ++e) {
            auto [u, v] = d.shape.edge(e);
            array<VertexId, 2> ends{u, v};
            for (int side = 0; side < 2; ++side) {
                auto & leg = d.legs[e][side];
                auto where = "leg (edge " + to_string(e) + ", endpoint " + to_string(ends[side]) + ")";
                if (leg.source_size() != d.vertex_sets[ends[side]].size())
                    violations.push_back(where + " has source size " + to_string(leg.source_size()) + " but the vertex set has " +
                        to_string(d.vertex_sets[ends[side]].size()) + " elements");
                if (leg.target_size() != d.edge_sets[e].size())
                    violations.push_back(where + " has target size " + to_string(leg.target_size()) + " but the edge set has " +
                        to_string(d.edge_sets[e].size()) + " elements");
                for (size_t i = 0; i < leg.source_size(); ++i)
                    if (leg.table()[i] >= d.edge_sets[e].size()) {
                        violations.push_back(where + " sends element " + to_string(i) + " out of range");
                        break;
                    }
            }
        }
        return violations;
    }

    auto require_valid(const CoDecomposition & d) -> void
    {
        auto violations = validate(d);
        if (! violations.empty())
            throw InvalidInput("invalid co-decomposition", std::move(violations));
    }

    namespace
    {
        auto layout_of(const CoDecomposition & d) -> std::shared_ptr<const SubMask::Layout>
        {
            auto layout = make_shared<SubMask::Layout>();
            size_t offset = 0;
            layout->vertex_offset.reserve(d.vertex_sets.size() + 1);
            for (auto & s : d.vertex_sets) {
                layout->vertex_offset.push_back(offset);
                offset += s.size();
            }
            layout->vertex_offset.push_back(offset);
            layout->edge_offset.reserve(d.edge_sets.size() + 1);
            for (auto & s : d.edge_sets) {
                layout->edge_offset.push_back(offset);
                offset += s.size();
            }
            layout->edge_offset.push_back(offset);
            return layout;
        }
    }

    SubMask::SubMask(std::shared_ptr<const Layout> layout, std::uint8_t fill) :
        _layout(std::move(layout)),
        _bits(_layout->edge_offset.back(), fill)
    {
    }

    auto SubMask::full(const CoDecomposition & d) -> SubMask
    {
        return SubMask(layout_of(d), 1);
    }

    auto SubMask::none(const CoDecomposition & d) -> SubMask
    {
        return SubMask(layout_of(d), 0);
    }

    auto SubMask::vertex_empty(VertexId v) const -> bool
    {
        auto flags = vertex(v);
        return std::none_of(flags.begin(), flags.end(), [](auto f) { return f != 0; });
    }

    auto SubMask::vertex_population(VertexId v) const -> size_t
    {
        auto flags = vertex(v);
        return std::count_if(flags.begin(), flags.end(), [](auto f) { return f != 0; });
    }

    auto SubMask::subset_of(const SubMask & other) const -> bool
    {
        if (_bits.size() != other._bits.size())
            return false;
        for (size_t i = 0; i < _bits.size(); ++i)
            if (_bits[i] && ! other._bits[i])
                return false;
        return true;
    }

    auto SubMask::clear() -> void
    {
        std::fill(_bits.begin(), _bits.end(), 0);
    }

    auto SubMask::assign(const SubMask & other) -> void
    {
        _layout = other._layout;
        _bits.assign(other._bits.begin(), other._bits.end());
    }

    auto leg_closed(const CoDecomposition & d, const SubMask & m) -> bool
    {
        for (EdgeId e = 0; e < d.shape.edge_count(); ++e) {
            auto [u, v] = d.shape.edge(e);
            auto edge_mask = m.edge(e);
            for (auto [end, side] : {std::pair{u, 0}, std::pair{v, 1}}) {
                auto flags = m.vertex(end);
                auto table = d.legs[e][side].table();
                for (size_t a = 0; a < flags.size(); ++a)
                    if (flags[a] && ! edge_mask[table[a]])
                        return false;
            }
        }
        return true;
    }

    auto filter(const CoDecomposition & d, SubMask & m, EdgeId e, ElementMask & scratch) -> bool
    {
        if (e >= d.shape.edge_count())
            throw InvalidInput("filter: no edge " + to_string(e));

        auto [x, y] = d.shape.edge(e);
        auto x_leg = d.legs[e][0].table();
        auto y_leg = d.legs[e][1].table();
        auto x_mask = m.vertex(x);
        auto y_mask = m.vertex(y);
        auto e_mask = m.edge(e);

        // values reachable from the y side
        scratch.assign(e_mask.size(), 0);
        for (size_t b = 0; b < y_mask.size(); ++b)
            if (y_mask[b])
                scratch[y_leg[b]] = 1;

        // keep x elements with a partner; their image is the new edge mask
        std::fill(e_mask.begin(), e_mask.end(), 0);
        bool x_alive = false;
        for (size_t a = 0; a < x_mask.size(); ++a)
            if (x_mask[a]) {
                if (scratch[x_leg[a]]) {
                    e_mask[x_leg[a]] = 1;
                    x_alive = true;
                }
                else
                    x_mask[a] = 0;
            }

        bool y_alive = false;
        for (size_t b = 0; b < y_mask.size(); ++b)
            if (y_mask[b]) {
                if (e_mask[y_leg[b]])
                    y_alive = true;
                else
                    y_mask[b] = 0;
            }

        return x_alive && y_alive;
    }

    auto filter(const CoDecomposition & d, SubMask & m, EdgeId e) -> bool
    {
        ElementMask scratch;
        return filter(d, m, e, scratch);
    }

    auto glue(const MaskedDiagram & left, VertexId left_boundary, const FinFn & left_leg,
        const MaskedDiagram & right, VertexId right_boundary, const FinFn & right_leg,
        const FinSetObj & edge_set) -> MaskedDiagram
    {
        auto & l = left.diagram;
        auto & r = right.diagram;
        if (left_boundary >= l.shape.vertex_count() || right_boundary >= r.shape.vertex_count())
            throw InvalidInput("glue: boundary vertex out of range");
        if (left_leg.source_size() != l.vertex_sets[left_boundary].size() || left_leg.target_size() != edge_set.size())
            throw InvalidInput("glue: left leg does not run from the left boundary set to the edge set");
        if (right_leg.source_size() != r.vertex_sets[right_boundary].size() || right_leg.target_size() != edge_set.size())
            throw InvalidInput("glue: right leg does not run from the right boundary set to the edge set");

        auto shift = static_cast<VertexId>(l.shape.vertex_count());
        vector<std::pair<VertexId, VertexId>> edges = l.shape.edges();
        for (auto [u, v] : r.shape.edges())
            edges.emplace_back(u + shift, v + shift);
        edges.emplace_back(left_boundary, right_boundary + shift);

        MaskedDiagram result;
        auto & g = result.diagram;
        g.shape = SimpleGraph(l.shape.vertex_count() + r.shape.vertex_count(), std::move(edges));
        g.vertex_sets = l.vertex_sets;
        g.vertex_sets.insert(g.vertex_sets.end(), r.vertex_sets.begin(), r.vertex_sets.end());
        g.edge_sets = l.edge_sets;
        g.edge_sets.insert(g.edge_sets.end(), r.edge_sets.begin(), r.edge_sets.end());
        g.edge_sets.push_back(edge_set);
        g.legs = l.legs;
        g.legs.insert(g.legs.end(), r.legs.begin(), r.legs.end());
        g.legs.push_back({left_leg, right_leg});

        result.mask = SubMask::none(g);
        auto copy = [](auto from, auto to) { std::copy(from.begin(), from.end(), to.begin()); };
        for (VertexId v = 0; v < l.shape.vertex_count(); ++v)
            copy(left.mask.vertex(v), result.mask.vertex(v));
        for (VertexId v = 0; v < r.shape.vertex_count(); ++v)
            copy(right.mask.vertex(v), result.mask.vertex(v + shift));
        for (EdgeId e = 0; e < l.shape.edge_count(); ++e)
            copy(left.mask.edge(e), result.mask.edge(e));
        for (EdgeId e = 0; e < r.shape.edge_count(); ++e)
            copy(right.mask.edge(e), result.mask.edge(static_cast<EdgeId>(e + l.shape.edge_count())));
        auto fresh = result.mask.edge(static_cast<EdgeId>(g.shape.edge_count() - 1));
        std::fill(fresh.begin(), fresh.end(), 1);
        return result;
    }

    auto restrict_to_subgraph(const CoDecomposition & d, const SubMask & m, const VertexSet & keep) -> Restriction
    {
        Restriction result;
        result.index = induced_subgraph(d.shape, keep);
        auto & index = result.index;
        auto & r = result.diagram;
        r.shape = index.graph;
        for (auto v : index.vertex_origin)
            r.vertex_sets.push_back(d.vertex_sets[v]);
        for (auto e : index.edge_origin) {
            r.edge_sets.push_back(d.edge_sets[e]);
            r.legs.push_back(d.legs[e]);
        }

        result.mask = SubMask::none(r);
        for (VertexId v = 0; v < index.vertex_origin.size(); ++v) {
            auto from = m.vertex(index.vertex_origin[v]);
            std::copy(from.begin(), from.end(), result.mask.vertex(v).begin());
        }
        for (EdgeId e = 0; e < index.edge_origin.size(); ++e) {
            auto from = m.edge(index.edge_origin[e]);
            std::copy(from.begin(), from.end(), result.mask.edge(e).begin());
        }
        return result;
    }

    namespace
    {
        auto masked_set(const FinSetObj & base, std::span<const std::uint8_t> flags, vector<Element> & inclusion) -> FinSetObj
        {
            vector<string> labels;
            for (Element x = 0; x < flags.size(); ++x)
                if (flags[x]) {
                    inclusion.push_back(x);
                    labels.push_back(base.name(x));
                }
            return FinSetObj(std::move(labels));
        }
    }

    auto as_subdiagram(const CoDecomposition & d, const SubMask & m) -> Subdiagram
    {
        if (! leg_closed(d, m))
            throw InvalidInput("as_subdiagram: mask is not closed under the legs");

        Subdiagram result;
        auto & s = result.diagram;
        s.shape = d.shape;
        result.vertex_inclusion.resize(d.shape.vertex_count());
        result.edge_inclusion.resize(d.shape.edge_count());
        for (VertexId v = 0; v < d.shape.vertex_count(); ++v)
            s.vertex_sets.push_back(masked_set(d.vertex_sets[v], m.vertex(v), result.vertex_inclusion[v]));

        // base element -> new element, per edge set
        vector<vector<Element>> edge_position(d.shape.edge_count());
        for (EdgeId e = 0; e < d.shape.edge_count(); ++e) {
            s.edge_sets.push_back(masked_set(d.edge_sets[e], m.edge(e), result.edge_inclusion[e]));
            edge_position[e].assign(d.edge_sets[e].size(), 0);
            for (Element i = 0; i < result.edge_inclusion[e].size(); ++i)
                edge_position[e][result.edge_inclusion[e][i]] = i;
        }

        for (EdgeId e = 0; e < d.shape.edge_count(); ++e) {
            auto [u, v] = d.shape.edge(e);
            array<FinFn, 2> legs;
            for (auto [end, side] : {std::pair{u, 0}, std::pair{v, 1}}) {
                vector<Element> table;
                for (auto a : result.vertex_inclusion[end])
                    table.push_back(edge_position[e][d.legs[e][side](a)]);
                legs[side] = FinFn(s.edge_sets[e].size(), std::move(table));
            }
            s.legs.push_back(std::move(legs));
        }
        return result;
    }
}
