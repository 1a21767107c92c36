#include <doctest.h>

#include "gentle/errors.hpp"
#include "gentle/halfedge.hpp"
#include "test_support.hpp"

using namespace gentle;
using namespace gentle::testing;

TEST_CASE("make checks the involution") {
    CHECK_THROWS_AS(
        HalfEdgeSystem::make(Permutation(3), Permutation::from_cycles(3, {{0, 1, 2}})), Error);
    CHECK_THROWS_AS(HalfEdgeSystem::make(Permutation(0), Permutation(0)), Error);
}

TEST_CASE("phi = theta after sigma") {
    // sigma = (1 2), theta = (1 2): phi = id.
    CHECK(phi(sys(2, {{0, 1}}, {{0, 1}})).is_identity());
    // Identities compose to the identity.
    CHECK(phi(sys(3, {}, {})).is_identity());
    // sigma = 4-cycle (a b c d), theta = (a c)(b d): phi is the 4-cycle (a d c b).
    Permutation f = phi(sys(4, {{0, 1, 2, 3}}, {{0, 2}, {1, 3}}));
    CHECK(f == Permutation::from_cycles(4, {{0, 3, 2, 1}}));
}

TEST_CASE("kappa on the hereditary cycle is sigma") {
    HalfEdgeSystem h = a_tilde(3);
    SubPermutation k = kappa(h);
    REQUIRE(k.domain == std::vector<int>{0, 1, 2});
    for (size_t i = 0; i < k.domain.size(); ++i) CHECK(k.image[i] == h.sigma(k.domain[i]));
}

TEST_CASE("kappa is empty without theta-fixed points") {
    CHECK(kappa(sys(2, {{0, 1}}, {{0, 1}})).empty());
    CHECK(kappa(sys(2, {}, {{0, 1}})).empty());
}

TEST_CASE("kappa crosses a forbidden thread of length two") {
    // sigma = (1 2 3), theta = (2 3): single fixed point 1, phi-orbit {1,3}.
    HalfEdgeSystem h = sys(3, {{0, 1, 2}}, {{1, 2}});
    SubPermutation k = kappa(h);
    REQUIRE(k.domain == std::vector<int>{0});
    CHECK(k.image == std::vector<int>{0});
}

TEST_CASE("rho is phi on fixed-point-free orbits") {
    SUBCASE("two singleton forbidden cycles") {
        SubPermutation r = rho(sys(2, {{0, 1}}, {{0, 1}}));
        CHECK(r.domain == std::vector<int>{0, 1});
        CHECK(r.image == std::vector<int>{0, 1});
        CHECK(r.orbits().count() == 2);
    }
    SUBCASE("hereditary cycle has empty rho") {
        CHECK(rho(a_tilde(3)).empty());
        CHECK(thread_half_edges(a_tilde(3)).size() == 3);
    }
    SUBCASE("one forbidden cycle of length four") {
        HalfEdgeSystem h = sys(4, {{0, 1, 2, 3}}, {{0, 2}, {1, 3}});
        SubPermutation r = rho(h);
        CHECK(r.domain == std::vector<int>{0, 1, 2, 3});
        Permutation f = phi(h);
        for (size_t i = 0; i < r.domain.size(); ++i) CHECK(r.image[i] == f(r.domain[i]));
        CHECK(r.orbits().count() == 1);
        CHECK(thread_half_edges(h).empty());
    }
}

TEST_CASE("phi-orbit membership partitions the half-edges") {
    HalfEdgeSystem h = sys(3, {{0, 1, 2}}, {{1, 2}});
    auto threads = thread_half_edges(h);
    auto cycle_part = rho(h).domain;
    CHECK(threads.size() + cycle_part.size() == 3);
    CHECK(threads == std::vector<int>{0, 2});
    CHECK(cycle_part == std::vector<int>{1});
}

TEST_CASE("components and connectivity") {
    CHECK(is_connected(a_tilde(4)));
    // Two disjoint loops: sigma = id, theta = id on 2 points.
    HalfEdgeSystem h = sys(2, {}, {});
    Components c = components(h);
    CHECK(c.count == 2);
    CHECK(c.members[0] == std::vector<int>{0});
    HalfEdgeSystem part = restrict_to(h, c.members[0]);
    CHECK(part.n == 1);
}

TEST_CASE("isomorphism sees through relabeling") {
    HalfEdgeSystem h = sys(4, {{0, 1, 2, 3}}, {{0, 2}, {1, 3}});
    // Conjugate both permutations by the 4-cycle g = (0 1 2 3).
    Permutation g = Permutation::from_cycles(4, {{0, 1, 2, 3}});
    HalfEdgeSystem relabeled =
        HalfEdgeSystem::make(g * h.sigma * g.inverse(), g * h.theta * g.inverse());
    CHECK(isomorphic(h, relabeled));
    CHECK(canonical_form(h) == canonical_form(relabeled));
}

TEST_CASE("isomorphism distinguishes different systems") {
    CHECK_FALSE(isomorphic(sys(2, {{0, 1}}, {{0, 1}}), sys(2, {}, {{0, 1}})));
    CHECK_FALSE(isomorphic(a_tilde(3), a_tilde(2)));
    // Same cycle types of sigma and theta, different interaction.
    HalfEdgeSystem x = sys(4, {{0, 1}, {2, 3}}, {{0, 1}});
    HalfEdgeSystem y = sys(4, {{0, 1}, {2, 3}}, {{0, 2}});
    CHECK_FALSE(isomorphic(x, y));
}
