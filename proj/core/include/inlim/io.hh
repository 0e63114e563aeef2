#pragma once

#include <inlim/codecomp.hh>
#include <inlim/cset.hh>
#include <inlim/homfront.hh>

#include <string>
#include <string_view>

/// JSON instance formats. Every parser throws InvalidInput with a message
/// naming the offending field.
///
///   graph          {"n": 4, "edges": [[0,1], [1,2]]}
///   set            {"size": 3} or {"elements": ["a", "b", "c"]}
///   function       {"map": [0, 0, 1]} or {"map": {"a": "x", "b": "x"}}
///   diagram        {"shape": graph, "vertex_sets": [set...], "edge_sets": [set...],
///                   "legs": [{"edge": 0, "endpoint": 1, "map": ...}, ...]}
///   category       {"objects": 2, "morphisms": [{"id": 0, "src": 0, "tgt": 0}, ...],
///                   "identities": [0, 1], "comp": [[0, -1, ...], ...]}
///   C-set diagram  {"shape": graph, "slices": [diagram without shape, one per object],
///                   "vertex_actions": [[{"morphism": 2, "map": ...}, ...] per vertex],
///                   "edge_actions": [[...] per edge]}
///   decomposition  {"X": graph, "shape": graph, "bags": [[0, 1], ...], "adhesions": [[1], ...]}
namespace inlim::io
{
    [[nodiscard]] auto parse_graph(std::string_view text) -> SimpleGraph;
    [[nodiscard]] auto graph_to_json(const SimpleGraph & g) -> std::string;

    [[nodiscard]] auto parse_diagram(std::string_view text) -> CoDecomposition;
    [[nodiscard]] auto diagram_to_json(const CoDecomposition & d) -> std::string;

    [[nodiscard]] auto parse_category(std::string_view text) -> FinCat;
    [[nodiscard]] auto category_to_json(const FinCat & c) -> std::string;

    [[nodiscard]] auto parse_cset_diagram(std::string_view text, const FinCat & category) -> CSetCoDecomposition;
    [[nodiscard]] auto cset_diagram_to_json(const CSetCoDecomposition & d) -> std::string;

    /// Adhesions default to the intersection of the adjacent bags.
    [[nodiscard]] auto parse_decomposition(std::string_view text) -> BagDecomposition;
    [[nodiscard]] auto decomposition_to_json(const BagDecomposition & b) -> std::string;

    [[nodiscard]] auto read_file(const std::string & path) -> std::string;
}
