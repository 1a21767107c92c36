#include "gentle/randgen.hpp"

#include <algorithm>
#include <numeric>

#include "gentle/errors.hpp"

namespace gentle {

std::uint64_t Rng::below(std::uint64_t bound) {
    if (bound == 0) throw Error("empty range");
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t value;
    do {
        value = next();
    } while (value >= limit);
    return value % bound;
}

double Rng::unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

namespace {

Permutation random_permutation(int n, Rng& rng) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    for (int i = n - 1; i > 0; --i)
        std::swap(img[i], img[rng.below(static_cast<std::uint64_t>(i) + 1)]);
    return Permutation::from_images(std::move(img));
}

Permutation random_involution(int n, double fixed_fraction, Rng& rng) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    std::vector<int> moved;
    for (int i = 0; i < n; ++i)
        if (rng.unit() >= fixed_fraction) moved.push_back(i);
    if (moved.size() % 2 == 1) {
        // One leftover point becomes fixed so the rest can pair up.
        size_t drop = rng.below(moved.size());
        moved.erase(moved.begin() + static_cast<long>(drop));
    }
    for (size_t i = moved.size(); i > 1; --i)
        std::swap(moved[i - 1], moved[rng.below(i)]);
    for (size_t i = 0; i + 1 < moved.size(); i += 2) {
        img[moved[i]] = moved[i + 1];
        img[moved[i + 1]] = moved[i];
    }
    return Permutation::from_images(std::move(img));
}

}  // namespace

HalfEdgeSystem generate(const GenConfig& cfg, Rng& rng) {
    if (cfg.half_edges < 1) throw Error("half-edge count must be at least 1");
    if (cfg.transition_fraction < 0.0 || cfg.transition_fraction > 1.0)
        throw Error("transition fraction must lie in [0, 1]");
    const int max_attempts = 10000;
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        HalfEdgeSystem h =
            HalfEdgeSystem::make(random_permutation(cfg.half_edges, rng),
                                 random_involution(cfg.half_edges, cfg.transition_fraction, rng));
        if (!cfg.require_connected || is_connected(h)) return h;
    }
    throw GenerationFailedError("no connected system found after " +
                                std::to_string(max_attempts) + " attempts");
}

HalfEdgeSystem generate(const GenConfig& cfg) {
    Rng rng(cfg.seed);
    return generate(cfg, rng);
}

}  // namespace gentle
