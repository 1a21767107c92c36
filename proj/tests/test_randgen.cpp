#include <doctest.h>

#include <algorithm>
#include <set>

#include "gentle/presentation.hpp"
#include "gentle/randgen.hpp"
#include "test_support.hpp"

using namespace gentle;
using namespace gentle::testing;

TEST_CASE("n = 1 is forced to the one-half-edge system") {
    GenConfig cfg;
    cfg.half_edges = 1;
    for (std::uint64_t seed : {0u, 1u, 42u}) {
        cfg.seed = seed;
        HalfEdgeSystem h = generate(cfg);
        CHECK(h.sigma.is_identity());
        CHECK(h.theta.is_identity());
    }
}

TEST_CASE("n = 2 with fraction 0 pairs the points") {
    GenConfig cfg;
    cfg.half_edges = 2;
    cfg.transition_fraction = 0.0;
    std::set<bool> sigma_seen;
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        cfg.seed = seed;
        HalfEdgeSystem h = generate(cfg);
        CHECK(h.theta == Permutation::from_cycles(2, {{0, 1}}));
        sigma_seen.insert(h.sigma.is_identity());
    }
    // Both classified 2-half-edge orders appear.
    CHECK(sigma_seen.size() == 2);
}

TEST_CASE("fixed seed reproduces byte-identical output") {
    GenConfig cfg;
    cfg.half_edges = 37;
    cfg.seed = 123456;
    cfg.transition_fraction = 0.3;
    HalfEdgeSystem a = generate(cfg);
    HalfEdgeSystem b = generate(cfg);
    CHECK(a == b);
    CHECK(write_hep(a) == write_hep(b));
    cfg.seed = 123457;
    CHECK(generate(cfg) != a);
}

TEST_CASE("connectivity flag is honored") {
    GenConfig cfg;
    cfg.require_connected = true;
    Rng rng(7);
    for (int i = 0; i < 100; ++i) {
        cfg.half_edges = 1 + static_cast<int>(rng.below(12));
        cfg.transition_fraction = rng.unit();
        HalfEdgeSystem h = generate(cfg, rng);
        CHECK(is_connected(h));
    }
}

TEST_CASE("every generated system is a valid gentle order") {
    Rng rng(11);
    GenConfig cfg;
    for (int i = 0; i < 200; ++i) {
        cfg.half_edges = 1 + static_cast<int>(rng.below(20));
        cfg.transition_fraction = rng.unit();
        HalfEdgeSystem h = generate(cfg, rng);
        CHECK_NOTHROW(validate_gentle_order(from_half_edges(h)));
    }
}

TEST_CASE("coverage: every isomorphism class on four points appears") {
    // Exhaustive class list over all sigma in S4 and involutions theta.
    std::set<std::vector<std::uint8_t>> classes;
    std::vector<int> img{0, 1, 2, 3};
    std::vector<Permutation> involutions;
    std::vector<int> inv_img{0, 1, 2, 3};
    do {
        Permutation p = Permutation::from_images(inv_img);
        if (p.is_involution()) involutions.push_back(p);
    } while (std::next_permutation(inv_img.begin(), inv_img.end()));
    REQUIRE(involutions.size() == 10);
    do {
        Permutation sigma = Permutation::from_images(img);
        for (const Permutation& theta : involutions)
            classes.insert(canonical_form(HalfEdgeSystem::make(sigma, theta)));
    } while (std::next_permutation(img.begin(), img.end()));

    std::set<std::vector<std::uint8_t>> sampled;
    Rng rng(2024);
    GenConfig cfg;
    cfg.half_edges = 4;
    for (int i = 0; i < 10000 && sampled.size() < classes.size(); ++i) {
        cfg.transition_fraction = rng.unit();
        sampled.insert(canonical_form(generate(cfg, rng)));
    }
    CHECK(sampled == classes);
}
