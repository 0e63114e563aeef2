#include <inlim/errors.hh>
#include <inlim/oracle.hh>

#include <limits>

using std::size_t;
using std::to_string;
using std::uint64_t;
using std::vector;

namespace inlim::oracle
{
    auto search_space(const CoDecomposition & d) -> uint64_t
    {
        uint64_t total = 1;
        for (auto & s : d.vertex_sets) {
            if (s.empty())
                return 0;
            if (total > std::numeric_limits<uint64_t>::max() / s.size())
                return std::numeric_limits<uint64_t>::max();
            total *= s.size();
        }
        return total;
    }

    auto enumerate_limit(const CoDecomposition & d, uint64_t cap) -> vector<Witness>
    {
        require_valid(d);
        auto space = search_space(d);
        if (space > cap)
            throw CapExceeded("limit enumeration needs " + to_string(space) + " tuples, cap is " + to_string(cap));

        vector<Witness> families;
        auto n = d.shape.vertex_count();
        if (space == 0)
            return families;

        vector<Element> tuple(n, 0);
        while (true) {
            bool matching = true;
            for (EdgeId e = 0; e < d.shape.edge_count() && matching; ++e) {
                auto [x, y] = d.shape.edge(e);
                matching = d.legs[e][0](tuple[x]) == d.legs[e][1](tuple[y]);
            }
            if (matching) {
                Witness w{tuple, {}};
                for (EdgeId e = 0; e < d.shape.edge_count(); ++e)
                    w.edge_elements.push_back(d.legs[e][0](tuple[d.shape.edge(e).first]));
                families.push_back(std::move(w));
            }

            auto i = n;
            while (i > 0) {
                --i;
                if (++tuple[i] < d.vertex_sets[i].size())
                    break;
                tuple[i] = 0;
                if (i == 0)
                    return families;
            }
            if (n == 0)
                return families;
        }
    }

    auto brute_image(const CoDecomposition & d, uint64_t cap) -> SubMask
    {
        auto result = SubMask::none(d);
        for (auto & family : enumerate_limit(d, cap)) {
            for (VertexId v = 0; v < d.shape.vertex_count(); ++v)
                result.vertex(v)[family.vertex_elements[v]] = 1;
            for (EdgeId e = 0; e < d.shape.edge_count(); ++e)
                result.edge(e)[family.edge_elements[e]] = 1;
        }
        return result;
    }

    auto pullback_limit(const CoDecomposition & d, uint64_t cap) -> uint64_t
    {
        require_valid(d);
        auto n = d.shape.vertex_count();
        if (n == 0 || d.shape.edge_count() + 1 != n || ! is_forest(d.shape))
            throw UnsupportedShape("pullback_limit: shape is not a tree");

        // Partial families over the visited vertices, stored as full-length
        // tuples; unvisited entries are meaningless.
        vector<vector<Element>> partial;
        for (Element a = 0; a < d.vertex_sets[0].size(); ++a) {
            partial.emplace_back(n, 0);
            partial.back()[0] = a;
        }

        vector<std::uint8_t> visited(n, 0);
        visited[0] = 1;
        vector<VertexId> queue{0};
        for (size_t head = 0; head < queue.size(); ++head) {
            auto parent = queue[head];
            for (auto & [child, e] : d.shape.incident(parent)) {
                if (visited[child])
                    continue;
                visited[child] = 1;
                queue.push_back(child);

                // pullback of (partial -> d(e) <- d(child))
                vector<vector<Element>> next;
                auto & parent_leg = d.leg(e, parent);
                auto & child_leg = d.leg(e, child);
                for (auto & p : partial)
                    for (Element b = 0; b < d.vertex_sets[child].size(); ++b)
                        if (parent_leg(p[parent]) == child_leg(b)) {
                            if (next.size() == cap)
                                throw CapExceeded("pullback_limit: intermediate pullback exceeds cap " + to_string(cap));
                            next.push_back(p);
                            next.back()[child] = b;
                        }
                partial = std::move(next);
            }
        }
        return partial.size();
    }
}
