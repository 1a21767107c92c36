#pragma once

#include <string>
#include <vector>

#include "gentle/halfedge.hpp"
#include "gentle/presentation.hpp"

namespace gentle::testing {

// Half-edge system from 0-based cycle lists.
inline HalfEdgeSystem sys(int n, const std::vector<std::vector<int>>& sigma_cycles,
                          const std::vector<std::vector<int>>& theta_cycles) {
    return HalfEdgeSystem::make(Permutation::from_cycles(n, sigma_cycles),
                                Permutation::from_cycles(n, theta_cycles));
}

// Equioriented cycle with l vertices: sigma a single l-cycle, theta = id.
inline HalfEdgeSystem a_tilde(int l) {
    std::vector<int> cycle(l);
    for (int i = 0; i < l; ++i) cycle[i] = i;
    return sys(l, {cycle}, {});
}

// One crossing vertex, loops with cross relations b∘a, a∘b (sigma = id,
// theta the swap) — the "ordinary edge" order.
inline const char* kCrossLoops =
    "vertex 1\n"
    "arrow a 1 1\n"
    "arrow b 1 1\n"
    "rel b a\n"
    "rel a b\n";

// One crossing vertex, loops with self relations a∘a, b∘b (sigma the swap,
// theta the swap) — the "loop edge" order.
inline const char* kSelfLoops =
    "vertex 1\n"
    "arrow a 1 1\n"
    "arrow b 1 1\n"
    "rel a a\n"
    "rel b b\n";

inline std::string a_tilde_gq(int l) {
    std::string text;
    for (int i = 1; i <= l; ++i) text += "vertex " + std::to_string(i) + "\n";
    for (int i = 1; i <= l; ++i)
        text += "arrow a" + std::to_string(i) + " " + std::to_string(i) + " " +
                std::to_string(i % l + 1) + "\n";
    return text;
}

}  // namespace gentle::testing
