#pragma once

#include <inlim/codecomp.hh>

#include <string>
#include <vector>

namespace inlim::test
{
    auto labelled(std::vector<std::string> labels) -> FinSetObj;

    /// Total function between labelled sets given as (from, to) pairs.
    auto by_label(const FinSetObj & source, const FinSetObj & target,
        const std::vector<std::pair<std::string, std::string>> & pairs) -> FinFn;

    /// {a,b,c} -> {x,y} <- {α,β} -> {u,v} <- {r,s}
    auto path_example() -> CoDecomposition;

    /// The four-cycle example; vertex i here is vertex i + 1 in the usual
    /// drawing. With `nonempty`, vertex 1's leg into edge 0 becomes c->3, d->4.
    auto cycle_example(bool nonempty = false) -> CoDecomposition;

    /// 1 -> {a,b} <- 1 with the two points landing apart.
    auto cospan_example() -> CoDecomposition;

    /// A shape with one vertex per entry of `sizes` and no edges.
    auto discrete(const std::vector<std::size_t> & sizes) -> CoDecomposition;

    auto data_file(const std::string & name) -> std::string;
}
