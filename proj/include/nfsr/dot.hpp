#pragma once

#include <string>

#include "nfsr/state_space.hpp"

namespace nfsr {

struct NodeStyle {
    std::string shape;
    std::string fill;
};

// Per-class node styling: periodic states as red circles, transient states
// as blue diamonds, Garden-of-Eden states as yellow squares. Fill colors
// with black outlines; labels are the decimal state codes.
struct DiagramStyle {
    NodeStyle periodic{"circle", "#e05050"};
    NodeStyle transient{"diamond", "#5070e0"};
    NodeStyle garden_of_eden{"square", "#e0d050"};
};

// DOT digraph with 2^n nodes and the 2^n edges s -> step(f, s), nodes and
// edges in ascending code order. `analysis` must describe f exactly;
// anything stale throws std::invalid_argument.
std::string to_dot(const TruthTable& f, const StateAnalysis& analysis,
                   const DiagramStyle& style = {});

} // namespace nfsr
