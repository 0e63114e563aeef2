#include <inlim/errors.hh>
#include <inlim/solver.hh>

#include <algorithm>
#include <atomic>
#include <limits>
#include <mutex>
#include <thread>

using std::nullopt;
using std::optional;
using std::size_t;
using std::to_string;
using std::uint64_t;
using std::vector;

namespace inlim
{
    namespace
    {
        constexpr EdgeId no_edge = std::numeric_limits<EdgeId>::max();

        // Breadth-first traversal of the alive part of a forest. Each tree is
        // a contiguous run of `order`, root first.
        struct ForestPlan
        {
            vector<VertexId> order;
            vector<EdgeId> parent_edge;
            vector<size_t> tree_start;
        };

        auto plan_forest(const SimpleGraph & g, const vector<std::uint8_t> & alive) -> ForestPlan
        {
            ForestPlan plan;
            plan.parent_edge.assign(g.vertex_count(), no_edge);
            vector<std::uint8_t> seen(g.vertex_count(), 0);
            for (VertexId root = 0; root < g.vertex_count(); ++root) {
                if (! alive[root] || seen[root])
                    continue;
                plan.tree_start.push_back(plan.order.size());
                seen[root] = 1;
                plan.order.push_back(root);
                for (size_t head = plan.tree_start.back(); head < plan.order.size(); ++head) {
                    auto v = plan.order[head];
                    for (auto & [u, e] : g.incident(v)) {
                        if (! alive[u] || e == plan.parent_edge[v])
                            continue;
                        if (seen[u])
                            throw UnsupportedShape("shape is not a forest: edge " + to_string(e) + " closes a cycle");
                        seen[u] = 1;
                        plan.parent_edge[u] = e;
                        plan.order.push_back(u);
                    }
                }
            }
            plan.tree_start.push_back(plan.order.size());
            return plan;
        }

        auto plan_whole(const SimpleGraph & g) -> ForestPlan
        {
            return plan_forest(g, vector<std::uint8_t>(g.vertex_count(), 1));
        }

        // Leaves to root over one tree. Afterwards the root mask is exactly
        // the set of root elements extending to the whole tree. Returns false
        // as soon as a mask empties.
        auto upward(const CoDecomposition & d, SubMask & m, const ForestPlan & plan, size_t tree, ElementMask & scratch) -> bool
        {
            auto begin = plan.tree_start[tree], end = plan.tree_start[tree + 1];
            if (end - begin == 1)
                return ! m.vertex_empty(plan.order[begin]);
            for (auto i = end; i-- > begin + 1;)
                if (! filter(d, m, plan.parent_edge[plan.order[i]], scratch))
                    return false;
            return true;
        }

        auto downward(const CoDecomposition & d, SubMask & m, const ForestPlan & plan, size_t tree, ElementMask & scratch) -> void
        {
            auto begin = plan.tree_start[tree], end = plan.tree_start[tree + 1];
            for (auto i = begin + 1; i < end; ++i)
                filter(d, m, plan.parent_edge[plan.order[i]], scratch);
        }

        auto tree_count(const ForestPlan & plan) -> size_t
        {
            return plan.tree_start.size() - 1;
        }

        // Full image over the alive forest; false (with masks left partially
        // narrowed) iff some tree has no matching family.
        auto image_over(const CoDecomposition & d, SubMask & m, const ForestPlan & plan, ElementMask & scratch) -> bool
        {
            for (size_t t = 0; t < tree_count(plan); ++t) {
                if (! upward(d, m, plan, t, scratch))
                    return false;
                downward(d, m, plan, t, scratch);
            }
            return true;
        }

        auto all_trees_nonempty(const CoDecomposition & d, SubMask & m, const ForestPlan & plan, ElementMask & scratch) -> bool
        {
            for (size_t t = 0; t < tree_count(plan); ++t)
                if (! upward(d, m, plan, t, scratch))
                    return false;
            return true;
        }

        auto lowest(std::span<const std::uint8_t> flags) -> optional<Element>
        {
            for (Element x = 0; x < flags.size(); ++x)
                if (flags[x])
                    return x;
            return nullopt;
        }

        // Pinning and filtering shared by SectionTests and inlim.
        struct Pinning
        {
            vector<VertexId> vertices;
            vector<EdgeId> edges;
        };

        auto make_pinning(const SimpleGraph & g, const VertexSet & fvs, FilterOrder order) -> Pinning
        {
            Pinning p;
            p.vertices = fvs.members();
            for (auto s : p.vertices) {
                vector<EdgeId> incident;
                for (auto & i : g.incident(s))
                    incident.push_back(i.edge);
                if (order == FilterOrder::descending)
                    std::reverse(incident.begin(), incident.end());
                p.edges.insert(p.edges.end(), incident.begin(), incident.end());
            }
            return p;
        }

        // Returns false if filtering already empties a mask.
        auto pin(const CoDecomposition & d, const Pinning & p, const vector<Element> & sigma, SubMask & m, ElementMask & scratch) -> bool
        {
            for (size_t i = 0; i < p.vertices.size(); ++i) {
                auto flags = m.vertex(p.vertices[i]);
                std::fill(flags.begin(), flags.end(), 0);
                flags[sigma[i]] = 1;
            }
            for (auto e : p.edges)
                if (! filter(d, m, e, scratch))
                    return false;
            return true;
        }

        // Lexicographic successor; false after the last tuple.
        auto advance(vector<Element> & sigma, const vector<size_t> & radix) -> bool
        {
            for (auto i = sigma.size(); i-- > 0;) {
                if (++sigma[i] < radix[i])
                    return true;
                sigma[i] = 0;
            }
            return false;
        }

        auto decode(uint64_t index, const vector<size_t> & radix) -> vector<Element>
        {
            vector<Element> sigma(radix.size(), 0);
            for (auto i = radix.size(); i-- > 0;) {
                sigma[i] = static_cast<Element>(index % radix[i]);
                index /= radix[i];
            }
            return sigma;
        }

        auto product(const vector<size_t> & radix) -> uint64_t
        {
            uint64_t total = 1;
            for (auto r : radix) {
                if (r != 0 && total > std::numeric_limits<uint64_t>::max() / r)
                    return std::numeric_limits<uint64_t>::max();
                total *= r;
            }
            return total;
        }

        auto complement(const VertexSet & s) -> vector<std::uint8_t>
        {
            vector<std::uint8_t> alive(s.universe_size(), 1);
            for (VertexId v = 0; v < s.universe_size(); ++v)
                if (s.contains(v))
                    alive[v] = 0;
            return alive;
        }

        auto witness_from(const CoDecomposition & d, const SubMask & m, const ForestPlan & plan,
            const SectionAssignment * sigma) -> Witness
        {
            Witness w;
            w.vertex_elements.assign(d.shape.vertex_count(), 0);
            if (sigma)
                for (size_t i = 0; i < sigma->vertices.size(); ++i)
                    w.vertex_elements[sigma->vertices[i]] = sigma->elements[i];

            for (size_t t = 0; t < tree_count(plan); ++t) {
                auto root = plan.order[plan.tree_start[t]];
                auto chosen = lowest(m.vertex(root));
                if (! chosen)
                    throw InvalidInput("extract_witness: vertex " + to_string(root) + " has no surviving element");
                w.vertex_elements[root] = *chosen;
                for (auto i = plan.tree_start[t] + 1; i < plan.tree_start[t + 1]; ++i) {
                    auto v = plan.order[i];
                    auto e = plan.parent_edge[v];
                    auto parent = d.shape.other_endpoint(e, v);
                    auto wanted = d.leg(e, parent)(w.vertex_elements[parent]);
                    auto & leg = d.leg(e, v);
                    auto flags = m.vertex(v);
                    optional<Element> pick;
                    for (Element b = 0; b < flags.size() && ! pick; ++b)
                        if (flags[b] && leg(b) == wanted)
                            pick = b;
                    if (! pick)
                        throw InvalidInput("extract_witness: vertex " + to_string(v) + " has no element agreeing with its parent");
                    w.vertex_elements[v] = *pick;
                }
            }

            for (EdgeId e = 0; e < d.shape.edge_count(); ++e)
                w.edge_elements.push_back(d.legs[e][0](w.vertex_elements[d.shape.edge(e).first]));
            return w;
        }
    }

    auto satisfies(const CoDecomposition & d, const Witness & w) -> bool
    {
        if (w.vertex_elements.size() != d.shape.vertex_count() || w.edge_elements.size() != d.shape.edge_count())
            return false;
        for (VertexId v = 0; v < d.shape.vertex_count(); ++v)
            if (w.vertex_elements[v] >= d.vertex_sets[v].size())
                return false;
        for (EdgeId e = 0; e < d.shape.edge_count(); ++e) {
            auto [x, y] = d.shape.edge(e);
            if (d.legs[e][0](w.vertex_elements[x]) != w.edge_elements[e] || d.legs[e][1](w.vertex_elements[y]) != w.edge_elements[e])
                return false;
        }
        return true;
    }

    auto discrete_inlim(const CoDecomposition & d) -> Verdict
    {
        if (d.shape.edge_count() != 0)
            throw UnsupportedShape("discrete_inlim: shape has edges");
        return Verdict{std::any_of(d.vertex_sets.begin(), d.vertex_sets.end(), [](auto & s) { return s.empty(); })};
    }

    auto image_tree(const CoDecomposition & d, const SubMask & m) -> SubMask
    {
        auto plan = plan_whole(d.shape);
        auto result = m;
        ElementMask scratch;
        if (! image_over(d, result, plan, scratch))
            result.clear();
        return result;
    }

    auto forest_initial(const CoDecomposition & d, const SubMask & m) -> Verdict
    {
        auto plan = plan_whole(d.shape);
        auto work = m;
        ElementMask scratch;
        return Verdict{! all_trees_nonempty(d, work, plan, scratch)};
    }

    SectionTests::SectionTests(const CoDecomposition & d, VertexSet fvs, FilterOrder order) :
        _diagram(&d),
        _fvs(std::move(fvs)),
        _full(SubMask::full(d))
    {
        if (! is_feedback_vertex_set(d.shape, _fvs))
            throw FeedbackVertexSetError("supplied vertex set is not a feedback vertex set");
        auto pinning = make_pinning(d.shape, _fvs, order);
        _pinned = std::move(pinning.vertices);
        _edges = std::move(pinning.edges);
        _next.assign(_pinned.size(), 0);
        for (auto s : _pinned)
            if (d.vertex_sets[s].empty())
                _exhausted = true;
    }

    auto SectionTests::total() const -> uint64_t
    {
        vector<size_t> radix;
        for (auto s : _pinned)
            radix.push_back(_diagram->vertex_sets[s].size());
        return product(radix);
    }

    auto SectionTests::next() -> optional<SectionTest>
    {
        if (_exhausted)
            return nullopt;

        SectionTest test;
        test.assignment = SectionAssignment{_pinned, _next};
        test.filtered = _full;
        test.immediately_empty = ! pin(*_diagram, Pinning{_pinned, _edges}, _next, test.filtered, _scratch);
        if (! test.immediately_empty) {
            VertexSet keep(_diagram->shape.vertex_count());
            for (VertexId v = 0; v < _diagram->shape.vertex_count(); ++v)
                if (! _fvs.contains(v))
                    keep.insert(v);
            test.tau = restrict_to_subgraph(*_diagram, test.filtered, keep);
        }

        vector<size_t> radix;
        for (auto s : _pinned)
            radix.push_back(_diagram->vertex_sets[s].size());
        _exhausted = ! advance(_next, radix);
        return test;
    }

    auto extract_witness(const CoDecomposition & d, const SubMask & image_mask, const SectionAssignment * sigma) -> Witness
    {
        VertexSet pinned(d.shape.vertex_count());
        if (sigma)
            for (auto s : sigma->vertices)
                pinned.insert(s);
        auto plan = plan_forest(d.shape, complement(pinned));
        return witness_from(d, image_mask, plan, sigma);
    }

    auto inlim(const CoDecomposition & d, const SolveOptions & options) -> SolveReport
    {
        require_valid(d);

        SolveReport report;
        if (options.fvs) {
            if (! is_feedback_vertex_set(d.shape, *options.fvs))
                throw FeedbackVertexSetError("supplied vertex set is not a feedback vertex set");
            report.fvs = *options.fvs;
        }
        else {
            auto found = fvs_minimum(d.shape, options.k_max);
            if (! found)
                throw FeedbackVertexSetError("no feedback vertex set of size at most " + to_string(options.k_max));
            report.fvs = std::move(*found);
        }

        if (d.shape.edge_count() == 0) {
            report.section_tests = 1;
            report.verdict = discrete_inlim(d);
            if (! report.verdict.empty_limit && options.want_witness)
                report.witness = Witness{vector<Element>(d.shape.vertex_count(), 0), {}};
            return report;
        }

        auto plan = plan_forest(d.shape, complement(report.fvs));
        auto pinning = make_pinning(d.shape, report.fvs, options.filter_order);
        vector<size_t> radix;
        for (auto s : pinning.vertices)
            radix.push_back(d.vertex_sets[s].size());
        auto total = product(radix);

        auto base = SubMask::full(d);

        // Smallest index of a section test with a nonempty limit.
        std::atomic<uint64_t> found{std::numeric_limits<uint64_t>::max()};
        std::atomic<uint64_t> tested{0}, pruned{0};

        auto run = [&](uint64_t index, const vector<Element> & sigma, SubMask & work, ElementMask & scratch) {
            work.assign(base);
            ++tested;
            if (! pin(d, pinning, sigma, work, scratch)) {
                ++pruned;
                return;
            }
            if (all_trees_nonempty(d, work, plan, scratch)) {
                auto current = found.load();
                while (index < current && ! found.compare_exchange_weak(current, index))
                    ;
            }
        };

        auto unset = std::numeric_limits<uint64_t>::max();
        if (options.jobs <= 1 || total <= 1) {
            SubMask work = base;
            ElementMask scratch;
            vector<Element> sigma(radix.size(), 0);
            if (total != 0)
                for (uint64_t index = 0;; ++index) {
                    run(index, sigma, work, scratch);
                    if (options.early_exit && found.load() != unset)
                        break;
                    if (! advance(sigma, radix))
                        break;
                }
        }
        else {
            std::atomic<uint64_t> next{0};
            vector<std::thread> workers;
            for (unsigned j = 0; j < options.jobs; ++j)
                workers.emplace_back([&] {
                    SubMask work = base;
                    ElementMask scratch;
                    while (true) {
                        if (options.early_exit && found.load() != unset)
                            return;
                        auto index = next++;
                        if (index >= total)
                            return;
                        run(index, decode(index, radix), work, scratch);
                    }
                });
            for (auto & w : workers)
                w.join();
        }

        report.section_tests = tested.load();
        report.pruned_tests = pruned.load();
        report.verdict = Verdict{found.load() == unset};

        if (! report.verdict.empty_limit && options.want_witness) {
            auto sigma = decode(found.load(), radix);
            auto work = base;
            ElementMask scratch;
            pin(d, pinning, sigma, work, scratch);
            image_over(d, work, plan, scratch);
            SectionAssignment assignment{pinning.vertices, sigma};
            report.witness = witness_from(d, work, plan, &assignment);
            report.witness_assignment = std::move(assignment);
        }
        return report;
    }
}
