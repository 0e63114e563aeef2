#include "fixtures.hh"

#include <stdexcept>

using std::string;
using std::vector;

namespace inlim::test
{
    auto labelled(vector<string> labels) -> FinSetObj
    {
        return FinSetObj(std::move(labels));
    }

    auto by_label(const FinSetObj & source, const FinSetObj & target, const vector<std::pair<string, string>> & pairs) -> FinFn
    {
        vector<Element> table(source.size(), 0);
        for (auto & [from, to] : pairs)
            table.at(source.find(from).value()) = target.find(to).value();
        return FinFn(target.size(), std::move(table));
    }

    auto path_example() -> CoDecomposition
    {
        CoDecomposition d;
        d.shape = SimpleGraph(3, {{0, 1}, {1, 2}});
        d.vertex_sets = {labelled({"a", "b", "c"}), labelled({"α", "β"}), labelled({"r", "s"})};
        d.edge_sets = {labelled({"x", "y"}), labelled({"u", "v"})};
        auto & v = d.vertex_sets;
        auto & e = d.edge_sets;
        d.legs = {
            {by_label(v[0], e[0], {{"a", "x"}, {"b", "x"}, {"c", "y"}}), by_label(v[1], e[0], {{"α", "x"}, {"β", "y"}})},
            {by_label(v[1], e[1], {{"α", "u"}, {"β", "v"}}), by_label(v[2], e[1], {{"r", "v"}, {"s", "v"}})}};
        return d;
    }

    auto cycle_example(bool nonempty) -> CoDecomposition
    {
        CoDecomposition d;
        d.shape = SimpleGraph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
        d.vertex_sets = {labelled({"a", "b"}), labelled({"c", "d"}), labelled({"c", "d"}), labelled({"a", "b"})};
        d.edge_sets = {labelled({"3", "4"}), labelled({"c", "d"}), labelled({"1", "2"}), labelled({"a", "b"})};
        auto & v = d.vertex_sets;
        auto & e = d.edge_sets;
        auto twist = nonempty ? vector<std::pair<string, string>>{{"c", "3"}, {"d", "4"}} : vector<std::pair<string, string>>{{"c", "4"}, {"d", "3"}};
        d.legs = {
            {by_label(v[0], e[0], {{"a", "3"}, {"b", "4"}}), by_label(v[1], e[0], twist)},
            {FinFn::identity(2), FinFn::identity(2)},
            {by_label(v[2], e[2], {{"c", "1"}, {"d", "2"}}), by_label(v[3], e[2], {{"a", "1"}, {"b", "2"}})},
            {FinFn::identity(2), FinFn::identity(2)}};
        return d;
    }

    auto cospan_example() -> CoDecomposition
    {
        CoDecomposition d;
        d.shape = SimpleGraph(2, {{0, 1}});
        d.vertex_sets = {FinSetObj(1), FinSetObj(1)};
        d.edge_sets = {labelled({"a", "b"})};
        d.legs = {{FinFn(2, {0}), FinFn(2, {1})}};
        return d;
    }

    auto discrete(const vector<std::size_t> & sizes) -> CoDecomposition
    {
        CoDecomposition d;
        d.shape = SimpleGraph(sizes.size(), {});
        for (auto s : sizes)
            d.vertex_sets.emplace_back(s);
        return d;
    }

    auto data_file(const string & name) -> string
    {
        return string(INLIM_DATA_DIR) + "/" + name;
    }
}
