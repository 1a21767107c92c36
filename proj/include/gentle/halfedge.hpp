#pragma once

#include <cstdint>
#include <vector>

#include "gentle/permutation.hpp"

namespace gentle {

// A finite set of half-edges together with a permutation sigma and an
// involution theta. This is the combinatorial core: vertices of the truncated
// ribbon graph are sigma-orbits, edges are theta-orbits, faces are orbits of
// phi = theta∘sigma.
struct HalfEdgeSystem {
    int n = 0;
    Permutation sigma;
    Permutation theta;

    // Throws Error unless |sigma| = |theta| = n >= 1 and theta^2 = id.
    static HalfEdgeSystem make(Permutation sigma, Permutation theta);

    std::vector<int> theta_fixed_points() const;

    friend bool operator==(const HalfEdgeSystem&, const HalfEdgeSystem&) = default;
};

// phi := theta ∘ sigma.
Permutation phi(const HalfEdgeSystem& h);

// A permutation defined on a subset of {0..n-1}: the partial carrier for
// kappa (theta-fixed points) and rho (forbidden-cycle half-edges).
struct SubPermutation {
    std::vector<int> domain;  // sorted
    std::vector<int> image;   // image[i] = image of domain[i]

    bool empty() const { return domain.empty(); }
    int apply(int x) const;  // throws Error if x is outside the domain
    OrbitPartition orbits() const;
};

// kappa: permutation of the theta-fixed points. From a fixed point x, iterate
// phi; kappa(x) is the first theta-fixed point reached after >= 1 steps.
// Under the arrow <-> half-edge identification this is the successor map of
// forbidden threads on transition vertices.
SubPermutation kappa(const HalfEdgeSystem& h);

// rho: phi restricted to the phi-orbits containing no theta-fixed point
// (the forbidden-cycle half-edges).
SubPermutation rho(const HalfEdgeSystem& h);

// Half-edges lying on phi-orbits that contain a theta-fixed point
// (equivalently: arrows appearing in forbidden threads).
std::vector<int> thread_half_edges(const HalfEdgeSystem& h);

// Partition of the half-edges into <sigma, theta>-components. Component
// order: increasing minimal half-edge.
struct Components {
    int count = 0;
    std::vector<int> component_of;               // per half-edge
    std::vector<std::vector<int>> members;       // per component, sorted
};
Components components(const HalfEdgeSystem& h);
bool is_connected(const HalfEdgeSystem& h);

// Restriction of the system to one component (half-edges renumbered in
// increasing order).
HalfEdgeSystem restrict_to(const HalfEdgeSystem& h, const std::vector<int>& member_points);

// Canonical form of a system under relabeling of half-edges: two systems are
// isomorphic (equal up to a bijection g with g∘sigma = sigma'∘g and
// g∘theta = theta'∘g) iff their canonical forms are equal byte for byte.
std::vector<std::uint8_t> canonical_form(const HalfEdgeSystem& h);
bool isomorphic(const HalfEdgeSystem& a, const HalfEdgeSystem& b);

}  // namespace gentle
