#pragma once

#include <cstdint>
#include <random>

#include "gentle/halfedge.hpp"

namespace gentle {

// Deterministic random source. Bounded draws use rejection sampling on raw
// mt19937_64 output, so identical seeds give identical streams on every
// platform (std distributions vary between standard libraries).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}
    std::uint64_t next() { return engine_(); }
    std::uint64_t below(std::uint64_t bound);
    double unit();  // [0, 1)

private:
    std::mt19937_64 engine_;
};

struct GenConfig {
    int half_edges = 1;
    std::uint64_t seed = 0;
    bool require_connected = false;
    // Probability that a half-edge becomes a theta-fixed point (a transition
    // vertex of the induced quiver).
    double transition_fraction = 0.5;
};

// Random half-edge system: uniform sigma by Fisher-Yates, theta by sampling
// fixed points with the given probability and pairing the rest uniformly.
// With require_connected, rejection-samples until the induced quiver is
// connected; throws GenerationFailedError after a bounded number of tries.
HalfEdgeSystem generate(const GenConfig& cfg);
HalfEdgeSystem generate(const GenConfig& cfg, Rng& rng);

}  // namespace gentle
