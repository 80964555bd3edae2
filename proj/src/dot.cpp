#include "nfsr/dot.hpp"

namespace nfsr {

std::string to_dot(const TruthTable& f, const StateAnalysis& analysis,
                   const DiagramStyle& style) {
    const std::uint32_t size = f.size();
    if (analysis.n != f.n() || analysis.successor.size() != size ||
        analysis.classes.size() != size) {
        throw std::invalid_argument("analysis does not match the function's width");
    }
    for (std::uint32_t s = 0; s < size; ++s) {
        if (analysis.successor[s] != step(f, StateVector{f.n(), s}).code) {
            throw std::invalid_argument("analysis is stale: successor of state " +
                                        std::to_string(s) +
                                        " does not match the function");
        }
    }

    const auto node_style = [&](StateClass c) -> const NodeStyle& {
        switch (c) {
            case StateClass::Periodic: return style.periodic;
            case StateClass::GardenOfEden: return style.garden_of_eden;
            default: return style.transient;
        }
    };

    std::string out = "digraph state_space {\n";
    out += "  node [style=filled, color=black, fontcolor=black];\n";
    for (std::uint32_t s = 0; s < size; ++s) {
        const NodeStyle& ns = node_style(analysis.classes[s]);
        out += "  " + std::to_string(s) + " [shape=" + ns.shape +
               ", fillcolor=\"" + ns.fill + "\"];\n";
    }
    for (std::uint32_t s = 0; s < size; ++s) {
        out += "  " + std::to_string(s) + " -> " +
               std::to_string(analysis.successor[s]) + ";\n";
    }
    out += "}\n";
    return out;
}

} // namespace nfsr
