#include <inlim/errors.hh>
#include <inlim/io.hh>

#include <json.hpp>

#include <fstream>
#include <sstream>

using nlohmann::json;
using nlohmann::ordered_json;
using std::size_t;
using std::string;
using std::string_view;
using std::to_string;
using std::vector;

namespace inlim::io
{
    namespace
    {
        auto parse_text(string_view text) -> json
        {
            try {
                return json::parse(text);
            }
            catch (const json::parse_error & e) {
                throw InvalidInput(string("malformed JSON: ") + e.what());
            }
        }

        auto field(const json & j, const char * key, const string & where) -> const json &
        {
            if (! j.is_object() || ! j.contains(key))
                throw InvalidInput(where + ": missing \"" + key + "\"");
            return j.at(key);
        }

        auto natural(const json & j, const string & where) -> size_t
        {
            if (! j.is_number_integer() || j.get<long long>() < 0)
                throw InvalidInput(where + ": expected a non-negative integer");
            return j.get<size_t>();
        }

        auto array(const json & j, const string & where) -> const json &
        {
            if (! j.is_array())
                throw InvalidInput(where + ": expected an array");
            return j;
        }

        auto graph_from(const json & j, const string & where) -> SimpleGraph
        {
            auto n = natural(field(j, "n", where), where + ".n");
            vector<std::pair<VertexId, VertexId>> edges;
            auto & list = array(field(j, "edges", where), where + ".edges");
            for (size_t i = 0; i < list.size(); ++i) {
                auto & uv = list[i];
                auto at = where + ".edges[" + to_string(i) + "]";
                if (! uv.is_array() || uv.size() != 2)
                    throw InvalidInput(at + ": expected a pair [u, v]");
                edges.emplace_back(static_cast<VertexId>(natural(uv[0], at)), static_cast<VertexId>(natural(uv[1], at)));
            }
            try {
                return SimpleGraph(n, std::move(edges));
            }
            catch (const InvalidInput & e) {
                auto message = where + ": " + e.what();
                for (auto & v : e.violations())
                    message += "; " + v;
                throw InvalidInput(message, e.violations());
            }
        }

        auto graph_json(const SimpleGraph & g) -> ordered_json
        {
            ordered_json j;
            j["n"] = g.vertex_count();
            j["edges"] = ordered_json::array();
            for (auto [u, v] : g.edges())
                j["edges"].push_back({u, v});
            return j;
        }

        auto set_from(const json & j, const string & where) -> FinSetObj
        {
            if (j.is_object() && j.contains("elements")) {
                vector<string> labels;
                for (auto & l : array(j.at("elements"), where + ".elements")) {
                    if (! l.is_string())
                        throw InvalidInput(where + ": element labels must be strings");
                    labels.push_back(l.get<string>());
                }
                try {
                    return FinSetObj(std::move(labels));
                }
                catch (const InvalidInput & e) {
                    throw InvalidInput(where + ": " + e.what());
                }
            }
            return FinSetObj(natural(field(j, "size", where), where + ".size"));
        }

        auto set_json(const FinSetObj & s) -> ordered_json
        {
            ordered_json j;
            if (s.labelled())
                j["elements"] = *s.labels();
            else
                j["size"] = s.size();
            return j;
        }

        // `map` is either an index table or an object keyed by source labels.
        auto function_from(const json & map, const FinSetObj & source, const FinSetObj & target, const string & where) -> FinFn
        {
            vector<Element> table;
            if (map.is_array()) {
                for (size_t i = 0; i < map.size(); ++i)
                    table.push_back(static_cast<Element>(natural(map[i], where + "[" + to_string(i) + "]")));
                if (table.size() != source.size())
                    throw InvalidInput(where + ": has " + to_string(table.size()) + " entries, source has " + to_string(source.size()));
            }
            else if (map.is_object()) {
                if (! source.labelled() || ! target.labelled())
                    throw InvalidInput(where + ": label form needs labelled source and target sets");
                table.assign(source.size(), 0);
                vector<std::uint8_t> assigned(source.size(), 0);
                for (auto & [from, to] : map.items()) {
                    auto a = source.find(from);
                    if (! a)
                        throw InvalidInput(where + ": unknown source element '" + from + "'");
                    if (! to.is_string())
                        throw InvalidInput(where + ": target of '" + from + "' must be a label");
                    auto b = target.find(to.get<string>());
                    if (! b)
                        throw InvalidInput(where + ": unknown target element '" + to.get<string>() + "'");
                    table[*a] = *b;
                    assigned[*a] = 1;
                }
                for (size_t a = 0; a < source.size(); ++a)
                    if (! assigned[a])
                        throw InvalidInput(where + ": no image for '" + source.name(static_cast<Element>(a)) + "'");
            }
            else
                throw InvalidInput(where + ": expected an array or an object");

            try {
                return FinFn(target.size(), std::move(table));
            }
            catch (const InvalidInput & e) {
                throw InvalidInput(where + ": " + e.what());
            }
        }

        auto function_json(const FinFn & f, const FinSetObj & source, const FinSetObj & target) -> ordered_json
        {
            if (source.labelled() && target.labelled()) {
                ordered_json j = ordered_json::object();
                for (Element a = 0; a < f.source_size(); ++a)
                    j[source.name(a)] = target.name(f(a));
                return j;
            }
            return ordered_json(vector<Element>(f.table().begin(), f.table().end()));
        }

        // The diagram body (sets and legs) over an already known shape.
        auto diagram_body(const json & j, SimpleGraph shape, const string & where) -> CoDecomposition
        {
            CoDecomposition d;
            d.shape = std::move(shape);

            auto & vs = array(field(j, "vertex_sets", where), where + ".vertex_sets");
            if (vs.size() != d.shape.vertex_count())
                throw InvalidInput(where + ": expected " + to_string(d.shape.vertex_count()) + " vertex sets, got " + to_string(vs.size()));
            for (size_t i = 0; i < vs.size(); ++i)
                d.vertex_sets.push_back(set_from(vs[i], where + ".vertex_sets[" + to_string(i) + "]"));

            auto & es = array(field(j, "edge_sets", where), where + ".edge_sets");
            if (es.size() != d.shape.edge_count())
                throw InvalidInput(where + ": expected " + to_string(d.shape.edge_count()) + " edge sets, got " + to_string(es.size()));
            for (size_t i = 0; i < es.size(); ++i)
                d.edge_sets.push_back(set_from(es[i], where + ".edge_sets[" + to_string(i) + "]"));

            vector<std::array<std::optional<FinFn>, 2>> legs(d.shape.edge_count());
            auto & ls = array(field(j, "legs", where), where + ".legs");
            for (size_t i = 0; i < ls.size(); ++i) {
                auto at = where + ".legs[" + to_string(i) + "]";
                auto e = static_cast<EdgeId>(natural(field(ls[i], "edge", at), at + ".edge"));
                auto end = static_cast<VertexId>(natural(field(ls[i], "endpoint", at), at + ".endpoint"));
                if (e >= d.shape.edge_count())
                    throw InvalidInput(at + ": no edge " + to_string(e));
                auto [x, y] = d.shape.edge(e);
                if (end != x && end != y)
                    throw InvalidInput(at + ": vertex " + to_string(end) + " is not an endpoint of edge " + to_string(e));
                auto side = end == x ? 0 : 1;
                if (legs[e][side])
                    throw InvalidInput(at + ": duplicate leg for edge " + to_string(e) + " at endpoint " + to_string(end));
                legs[e][side] = function_from(field(ls[i], "map", at), d.vertex_sets[end], d.edge_sets[e], at + ".map");
            }
            for (EdgeId e = 0; e < d.shape.edge_count(); ++e) {
                if (! legs[e][0] || ! legs[e][1])
                    throw InvalidInput(where + ": edge " + to_string(e) + " needs exactly two legs");
                d.legs.push_back({std::move(*legs[e][0]), std::move(*legs[e][1])});
            }
            return d;
        }

        auto diagram_json(const CoDecomposition & d) -> ordered_json
        {
            ordered_json j;
            j["shape"] = graph_json(d.shape);
            j["vertex_sets"] = ordered_json::array();
            for (auto & s : d.vertex_sets)
                j["vertex_sets"].push_back(set_json(s));
            j["edge_sets"] = ordered_json::array();
            for (auto & s : d.edge_sets)
                j["edge_sets"].push_back(set_json(s));
            j["legs"] = ordered_json::array();
            for (EdgeId e = 0; e < d.shape.edge_count(); ++e) {
                auto [x, y] = d.shape.edge(e);
                for (auto [end, side] : {std::pair{x, 0}, std::pair{y, 1}}) {
                    ordered_json leg;
                    leg["edge"] = e;
                    leg["endpoint"] = end;
                    leg["map"] = function_json(d.legs[e][side], d.vertex_sets[end], d.edge_sets[e]);
                    j["legs"].push_back(std::move(leg));
                }
            }
            return j;
        }

        auto vertex_list(const json & j, const string & where) -> vector<VertexId>
        {
            vector<VertexId> result;
            auto & list = array(j, where);
            for (size_t i = 0; i < list.size(); ++i)
                result.push_back(static_cast<VertexId>(natural(list[i], where + "[" + to_string(i) + "]")));
            return result;
        }
    }

    auto parse_graph(string_view text) -> SimpleGraph
    {
        return graph_from(parse_text(text), "graph");
    }

    auto graph_to_json(const SimpleGraph & g) -> string
    {
        return graph_json(g).dump(2);
    }

    auto parse_diagram(string_view text) -> CoDecomposition
    {
        auto j = parse_text(text);
        return diagram_body(j, graph_from(field(j, "shape", "diagram"), "diagram.shape"), "diagram");
    }

    auto diagram_to_json(const CoDecomposition & d) -> string
    {
        return diagram_json(d).dump(2);
    }

    auto parse_category(string_view text) -> FinCat
    {
        auto j = parse_text(text);
        FinCat c;
        c.object_count = natural(field(j, "objects", "category"), "category.objects");
        auto & ms = array(field(j, "morphisms", "category"), "category.morphisms");
        c.morphisms.resize(ms.size());
        vector<std::uint8_t> seen(ms.size(), 0);
        for (size_t i = 0; i < ms.size(); ++i) {
            auto at = "category.morphisms[" + to_string(i) + "]";
            auto id = natural(field(ms[i], "id", at), at + ".id");
            if (id >= ms.size() || seen[id])
                throw InvalidInput(at + ": morphism ids must be a permutation of 0.." + to_string(ms.size() - 1));
            seen[id] = 1;
            c.morphisms[id] = FinCat::Morphism{static_cast<ObjectId>(natural(field(ms[i], "src", at), at + ".src")),
                static_cast<ObjectId>(natural(field(ms[i], "tgt", at), at + ".tgt"))};
        }
        for (auto i : vertex_list(field(j, "identities", "category"), "category.identities"))
            c.identities.push_back(i);
        auto & comp = array(field(j, "comp", "category"), "category.comp");
        for (size_t g = 0; g < comp.size(); ++g) {
            auto & row = array(comp[g], "category.comp[" + to_string(g) + "]");
            c.compose.emplace_back();
            for (size_t f = 0; f < row.size(); ++f) {
                auto at = "category.comp[" + to_string(g) + "][" + to_string(f) + "]";
                if (! row[f].is_number_integer())
                    throw InvalidInput(at + ": expected an integer");
                auto value = row[f].get<long long>();
                if (value < -1)
                    throw InvalidInput(at + ": expected a morphism id or -1");
                c.compose.back().push_back(value < 0 ? std::nullopt : std::optional<MorphismId>(static_cast<MorphismId>(value)));
            }
        }
        auto violations = validate_fincat(c);
        if (! violations.empty())
            throw InvalidInput("category is not a category", std::move(violations));
        return c;
    }

    auto category_to_json(const FinCat & c) -> string
    {
        ordered_json j;
        j["objects"] = c.object_count;
        j["morphisms"] = ordered_json::array();
        for (MorphismId f = 0; f < c.morphisms.size(); ++f)
            j["morphisms"].push_back({{"id", f}, {"src", c.morphisms[f].source}, {"tgt", c.morphisms[f].target}});
        j["identities"] = c.identities;
        j["comp"] = ordered_json::array();
        for (auto & row : c.compose) {
            ordered_json r = ordered_json::array();
            for (auto & entry : row)
                r.push_back(entry ? static_cast<long long>(*entry) : -1);
            j["comp"].push_back(std::move(r));
        }
        return j.dump(2);
    }

    auto parse_cset_diagram(string_view text, const FinCat & category) -> CSetCoDecomposition
    {
        auto j = parse_text(text);
        CSetCoDecomposition d;
        d.category = category;
        d.shape = graph_from(field(j, "shape", "cset diagram"), "cset diagram.shape");

        auto & slices_json = array(field(j, "slices", "cset diagram"), "cset diagram.slices");
        if (slices_json.size() != category.object_count)
            throw InvalidInput("cset diagram: expected one slice per object (" + to_string(category.object_count) + ")");
        vector<CoDecomposition> slices;
        for (size_t c = 0; c < slices_json.size(); ++c) {
            auto at = "cset diagram.slices[" + to_string(c) + "]";
            if (slices_json[c].contains("shape") && graph_from(slices_json[c]["shape"], at + ".shape") != d.shape)
                throw InvalidInput(at + ": shape differs from the top-level shape");
            slices.push_back(diagram_body(slices_json[c], d.shape, at));
        }

        // per C-object sets, then actions per morphism with identities implicit
        auto objects = [&](auto member, size_t index) {
            CSet x;
            for (auto & s : slices)
                x.sets.push_back((s.*member)[index]);
            for (auto & m : category.morphisms) {
                (void)m;
                x.actions.emplace_back();
            }
            for (ObjectId o = 0; o < category.object_count; ++o)
                x.actions[category.identities[o]] = FinFn::identity(x.sets[o].size());
            return x;
        };
        auto read_actions = [&](CSet & x, const json & list, const string & where) {
            vector<std::uint8_t> given(category.morphisms.size(), 0);
            for (ObjectId o = 0; o < category.object_count; ++o)
                given[category.identities[o]] = 1;
            for (size_t i = 0; i < array(list, where).size(); ++i) {
                auto at = where + "[" + to_string(i) + "]";
                auto f = natural(field(list[i], "morphism", at), at + ".morphism");
                if (f >= category.morphisms.size())
                    throw InvalidInput(at + ": no morphism " + to_string(f));
                auto [s, t] = category.morphisms[f];
                x.actions[f] = function_from(field(list[i], "map", at), x.sets[s], x.sets[t], at + ".map");
                given[f] = 1;
            }
            for (MorphismId f = 0; f < given.size(); ++f)
                if (! given[f])
                    throw InvalidInput(where + ": no action given for morphism " + to_string(f));
        };

        auto & va = array(field(j, "vertex_actions", "cset diagram"), "cset diagram.vertex_actions");
        auto & ea = array(field(j, "edge_actions", "cset diagram"), "cset diagram.edge_actions");
        if (va.size() != d.shape.vertex_count() || ea.size() != d.shape.edge_count())
            throw InvalidInput("cset diagram: needs one action list per shape vertex and per shape edge");
        for (VertexId v = 0; v < d.shape.vertex_count(); ++v) {
            d.vertex_objects.push_back(objects(&CoDecomposition::vertex_sets, v));
            read_actions(d.vertex_objects.back(), va[v], "cset diagram.vertex_actions[" + to_string(v) + "]");
        }
        for (EdgeId e = 0; e < d.shape.edge_count(); ++e) {
            d.edge_objects.push_back(objects(&CoDecomposition::edge_sets, e));
            read_actions(d.edge_objects.back(), ea[e], "cset diagram.edge_actions[" + to_string(e) + "]");
        }
        for (EdgeId e = 0; e < d.shape.edge_count(); ++e) {
            std::array<vector<FinFn>, 2> legs;
            for (auto & s : slices) {
                legs[0].push_back(s.legs[e][0]);
                legs[1].push_back(s.legs[e][1]);
            }
            d.legs.push_back(std::move(legs));
        }
        return d;
    }

    auto cset_diagram_to_json(const CSetCoDecomposition & d) -> string
    {
        ordered_json j;
        j["shape"] = graph_json(d.shape);
        j["slices"] = ordered_json::array();
        for (ObjectId c = 0; c < d.category.object_count; ++c) {
            auto slice = diagram_json(pointwise_slice(d, c));
            slice.erase("shape");
            j["slices"].push_back(std::move(slice));
        }
        auto actions = [&](const CSet & x) {
            ordered_json list = ordered_json::array();
            for (MorphismId f = 0; f < d.category.morphisms.size(); ++f) {
                if (std::find(d.category.identities.begin(), d.category.identities.end(), f) != d.category.identities.end())
                    continue;
                auto [s, t] = d.category.morphisms[f];
                list.push_back({{"morphism", f}, {"map", function_json(x.actions[f], x.sets[s], x.sets[t])}});
            }
            return list;
        };
        j["vertex_actions"] = ordered_json::array();
        for (auto & x : d.vertex_objects)
            j["vertex_actions"].push_back(actions(x));
        j["edge_actions"] = ordered_json::array();
        for (auto & x : d.edge_objects)
            j["edge_actions"].push_back(actions(x));
        return j.dump(2);
    }

    auto parse_decomposition(string_view text) -> BagDecomposition
    {
        auto j = parse_text(text);
        auto x = graph_from(field(j, "X", "decomposition"), "decomposition.X");
        auto shape = graph_from(field(j, "shape", "decomposition"), "decomposition.shape");
        vector<vector<VertexId>> bags;
        auto & bj = array(field(j, "bags", "decomposition"), "decomposition.bags");
        for (size_t i = 0; i < bj.size(); ++i)
            bags.push_back(vertex_list(bj[i], "decomposition.bags[" + to_string(i) + "]"));
        auto b = BagDecomposition::with_default_adhesions(std::move(x), std::move(shape), std::move(bags));
        if (j.contains("adhesions")) {
            b.adhesions.clear();
            auto & aj = array(j.at("adhesions"), "decomposition.adhesions");
            for (size_t i = 0; i < aj.size(); ++i) {
                auto a = vertex_list(aj[i], "decomposition.adhesions[" + to_string(i) + "]");
                std::sort(a.begin(), a.end());
                a.erase(std::unique(a.begin(), a.end()), a.end());
                b.adhesions.push_back(std::move(a));
            }
        }
        return b;
    }

    auto decomposition_to_json(const BagDecomposition & b) -> string
    {
        ordered_json j;
        j["X"] = graph_json(b.target);
        j["shape"] = graph_json(b.shape);
        j["bags"] = b.bags;
        j["adhesions"] = b.adhesions;
        return j.dump(2);
    }

    auto read_file(const string & path) -> string
    {
        std::ifstream in(path, std::ios::binary);
        if (! in)
            throw InvalidInput("cannot open '" + path + "'");
        std::ostringstream buffer;
        buffer << in.rdbuf();
        return buffer.str();
    }
}
