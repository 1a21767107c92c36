#include <doctest.h>

#include "gentle/errors.hpp"
#include "gentle/invariants.hpp"
#include "test_support.hpp"

using namespace gentle;
using namespace gentle::testing;

namespace {

struct Order {
    GentlePresentation p;
    VertexClassification c;
    HalfEdgeSystem h;
};

Order order_of(const HalfEdgeSystem& h) {
    Order o{from_half_edges(h), {}, h};
    o.c = validate_gentle_order(o.p);
    return o;
}

}  // namespace

TEST_CASE("permitted cycles") {
    for (int l = 1; l <= 5; ++l) {
        auto [pc, profile] = permitted_cycles(a_tilde(l));
        CHECK(pc == 1);
        CHECK(profile == std::vector<long>{l});
    }
    auto [pc2, profile2] = permitted_cycles(sys(2, {}, {{0, 1}}));
    CHECK(pc2 == 2);
    CHECK(profile2 == std::vector<long>{1, 1});
    auto [pc3, profile3] = permitted_cycles(sys(2, {{0, 1}}, {{0, 1}}));
    CHECK(pc3 == 1);
    CHECK(profile3 == std::vector<long>{2});
}

TEST_CASE("bicolorability") {
    SUBCASE("cross relations admit a coloring") {
        Bicoloring bc = bicolorability(parse_gq(kCrossLoops));
        CHECK(bc.bc == 1);
        REQUIRE(bc.coloring.size() == 2);
        CHECK(bc.coloring[0] != bc.coloring[1]);
    }
    SUBCASE("self relations contradict") {
        Bicoloring bc = bicolorability(parse_gq(kSelfLoops));
        CHECK(bc.bc == 0);
        CHECK_FALSE(bc.obstruction.empty());
    }
    SUBCASE("a truncated edge blocks bicolorability") {
        CHECK(bicolorability(parse_gq("vertex 1\narrow a 1 1\n")).bc == 0);
        CHECK(bicolorability(parse_gq(a_tilde_gq(4))).bc == 0);
    }
    SUBCASE("disconnected input is refused") {
        GentlePresentation p = from_half_edges(sys(2, {}, {}));
        CHECK_THROWS_AS(bicolorability(p), DisconnectedError);
    }
}

TEST_CASE("ag_first") {
    for (int l = 1; l <= 6; ++l) CHECK(ag_first(a_tilde(l)) == AGMultiset{{l, l}});
    CHECK(ag_first(sys(2, {{0, 1}}, {{0, 1}})).empty());
    CHECK(ag_first(sys(3, {{0, 1, 2}}, {{1, 2}})) == AGMultiset{{2, 1}});
}

TEST_CASE("ag_second") {
    CHECK(ag_second(sys(2, {{0, 1}}, {{0, 1}})) == AGMultiset{{1, 0}, {1, 0}});
    CHECK(ag_second(a_tilde(4)).empty());
    CHECK(ag_second(sys(4, {{0, 1, 2, 3}}, {{0, 2}, {1, 3}})) == AGMultiset{{4, 0}});
    // The ordinary-edge order has one forbidden cycle of length two.
    CHECK(ag_second(sys(2, {}, {{0, 1}})) == AGMultiset{{2, 0}});
}

TEST_CASE("forbidden threads by path walking") {
    SUBCASE("hereditary cycle: one single-arrow thread per vertex") {
        Order o = order_of(a_tilde(3));
        auto threads = forbidden_threads(o.p, o.c);
        REQUIRE(threads.size() == 3);
        for (const auto& t : threads) {
            CHECK(t.arrows.size() == 1);
            CHECK(t.end_vertex == o.p.arrows[t.arrows[0]].target);
        }
    }
    SUBCASE("ribbon order has none") {
        Order o = order_of(sys(2, {{0, 1}}, {{0, 1}}));
        CHECK(forbidden_threads(o.p, o.c).empty());
    }
    SUBCASE("mixed order: one thread of length two") {
        Order o = order_of(sys(3, {{0, 1, 2}}, {{1, 2}}));
        auto threads = forbidden_threads(o.p, o.c);
        REQUIRE(threads.size() == 1);
        CHECK(threads[0].arrows.size() == 2);
        CHECK(threads[0].start_vertex == threads[0].end_vertex);
    }
}

TEST_CASE("ag_first has an agreeing thread route") {
    for (const HalfEdgeSystem& h :
         {a_tilde(5), sys(3, {{0, 1, 2}}, {{1, 2}}), sys(2, {{0, 1}}, {{0, 1}}),
          sys(6, {{0, 1, 2}, {3, 4, 5}}, {{0, 3}, {1, 4}})}) {
        Order o = order_of(h);
        CHECK(ag_first(h) == ag_first_from_threads(o.p, o.c));
    }
}

TEST_CASE("forbidden cycles by path walking") {
    Order o = order_of(sys(4, {{0, 1, 2, 3}}, {{0, 2}, {1, 3}}));
    auto cycles = forbidden_cycles(o.p, o.c);
    REQUIRE(cycles.size() == 1);
    CHECK(cycles[0].size() == 4);
    CHECK(forbidden_cycles(order_of(a_tilde(3)).p, order_of(a_tilde(3)).c).empty());
}

TEST_CASE("classification") {
    CHECK(classify(a_tilde(2)).cls == OrderClass::Hereditary);
    CHECK(classify(sys(2, {{0, 1}}, {{0, 1}})).cls == OrderClass::Ribbon);
    CHECK(classify(sys(3, {{0, 1, 2}}, {{1, 2}})).cls == OrderClass::General);
    CHECK_THROWS_AS(classify(sys(2, {}, {})), DisconnectedError);
}

TEST_CASE("sign involution") {
    SUBCASE("transition-only order: all positive, xi trivial") {
        Order o = order_of(a_tilde(3));
        SignInvolution inv = sign_involution(o.p);
        CHECK(inv.sgn == std::vector<int>{1, 1, 1});
        CHECK(inv.xi_coeff == std::vector<int>{1, 1, 1});
    }
    SUBCASE("crossing vertex: declaration order fixes the signs") {
        GentlePresentation p = parse_gq(kCrossLoops);
        SignInvolution inv = sign_involution(p);
        CHECK(inv.sgn == std::vector<int>{1, -1});
        // sigma fixes both loops here, so xi(a) = sgn(a)^2 * a.
        CHECK(inv.xi_coeff == std::vector<int>{1, 1});
    }
    SUBCASE("self-relation loops have sign-crossing xi") {
        GentlePresentation p = parse_gq(kSelfLoops);
        SignInvolution inv = sign_involution(p);
        CHECK(inv.sgn == std::vector<int>{1, -1});
        // sigma swaps the loops: xi(a) = sgn(b)sgn(a) a = -a.
        CHECK(inv.xi_coeff == std::vector<int>{-1, -1});
    }
    SUBCASE("characteristic two flattens every sign") {
        SignInvolution inv = sign_involution(parse_gq(kSelfLoops), true);
        CHECK(inv.sgn == std::vector<int>{1, 1});
        CHECK(inv.xi_coeff == std::vector<int>{1, 1});
    }
    SUBCASE("xi squares to the identity with coefficient +1") {
        for (const HalfEdgeSystem& h :
             {a_tilde(4), sys(4, {{0, 1, 2, 3}}, {{0, 2}, {1, 3}}), sys(3, {{0, 1, 2}}, {{1, 2}})}) {
            Order o = order_of(h);
            for (bool char2 : {false, true}) {
                SignInvolution inv = sign_involution(o.p, char2);
                for (int a = 0; a < o.p.arrow_count(); ++a)
                    CHECK(inv.xi_coeff[a] * inv.xi_coeff[a] == 1);
                for (int v = 0; v < o.p.vertex_count(); ++v) {
                    const auto& out = o.p.out_arrows(v);
                    if (out.size() == 2 && !char2) CHECK(inv.sgn[out[0]] != inv.sgn[out[1]]);
                }
            }
        }
    }
}

TEST_CASE("nakayama data") {
    SUBCASE("ribbon order: identity tags") {
        Order o = order_of(sys(2, {{0, 1}}, {{0, 1}}));
        NakayamaData nak = nakayama_data(o.p, o.c);
        CHECK(nak.radical == std::vector<bool>{false});
    }
    SUBCASE("hereditary order: radical tags") {
        Order o = order_of(a_tilde(2));
        NakayamaData nak = nakayama_data(o.p, o.c);
        CHECK(nak.radical == std::vector<bool>{true, true});
    }
    SUBCASE("mixed order tags by vertex kind") {
        Order o = order_of(sys(3, {{0, 1, 2}}, {{1, 2}}));
        NakayamaData nak = nakayama_data(o.p, o.c);
        REQUIRE(nak.radical.size() == 2);
        for (int v = 0; v < o.p.vertex_count(); ++v)
            CHECK(nak.radical[v] == (o.c.kind[v] == VertexKind::Transition));
    }
}

TEST_CASE("simple resolutions") {
    SUBCASE("hereditary: two-term resolution with CY dimension (l, l)") {
        for (int l : {2, 5}) {
            Order o = order_of(a_tilde(l));
            for (int j : o.c.transition_vertices) {
                SimpleResolution res = simple_resolution(o.p, o.c, j);
                REQUIRE(res.vertices.size() == 2);
                CHECK(res.vertices[1] == j);
                CHECK(res.vertices[0] == o.p.arrows[o.p.out_arrows(j)[0]].target);
                CHECK(res.cy_dimension == AGEntry{l, l});
            }
        }
    }
    SUBCASE("mixed order: three-term resolution with CY dimension (2, 1)") {
        Order o = order_of(sys(3, {{0, 1, 2}}, {{1, 2}}));
        REQUIRE(o.c.transition_vertices.size() == 1);
        int j = o.c.transition_vertices[0];
        SimpleResolution res = simple_resolution(o.p, o.c, j);
        CHECK(res.vertices.size() == 3);
        CHECK(res.vertices.back() == j);
        CHECK(res.vertices.front() == j);  // kappa(j) = j here
        CHECK(res.cy_dimension == AGEntry{2, 1});
    }
    SUBCASE("ribbon order: no transition vertices") {
        Order o = order_of(sys(2, {{0, 1}}, {{0, 1}}));
        CHECK_THROWS_AS(simple_resolution(o.p, o.c, 0), NotTransitionVertexError);
    }
}

TEST_CASE("ideal generators") {
    SUBCASE("empty set gives the unit ideal") {
        Order o = order_of(a_tilde(3));
        IdealGenerators gens = ideal_generators(o.p, o.c, {});
        CHECK(gens.idempotent_vertices == std::vector<int>{0, 1, 2});
        CHECK(gens.arrow_generators.empty());
        CHECK(gens.kappa_orbit_count == 1);
    }
    SUBCASE("all transition vertices give the arrow ideal") {
        Order o = order_of(a_tilde(3));
        IdealGenerators gens = ideal_generators(o.p, o.c, {0, 1, 2});
        CHECK(gens.idempotent_vertices.empty());
        CHECK(gens.arrow_generators == std::vector<int>{0, 1, 2});
    }
    SUBCASE("a proper subset of a kappa-orbit is rejected with a witness") {
        Order o = order_of(a_tilde(2));
        try {
            ideal_generators(o.p, o.c, {0});
            FAIL("expected NotKappaStableError");
        } catch (const NotKappaStableError& e) {
            CHECK(e.witness_vertex == 0);
        }
    }
    SUBCASE("crossing vertices cannot enter the set") {
        Order o = order_of(sys(2, {{0, 1}}, {{0, 1}}));
        CHECK_THROWS_AS(ideal_generators(o.p, o.c, {0}), NotTransitionVertexError);
    }
}

TEST_CASE("bundle invariants on the worked examples") {
    Order o = order_of(sys(3, {{0, 1, 2}}, {{1, 2}}));
    InvariantBundle bundle = compute_bundle(o.p, o.c, o.h);
    CHECK(bundle.pc == 1);
    CHECK(bundle.profile == std::vector<long>{3});
    CHECK(bundle.ag1 == AGMultiset{{2, 1}});
    CHECK(bundle.ag2 == AGMultiset{{1, 0}});
    CHECK(bundle.counts.transition == 1);
    CHECK(bundle.counts.crossing == 1);
    CHECK(bundle.counts.thread_arrows == 2);
    CHECK(bundle.counts.cycle_arrows == 1);
    CHECK(bundle.cls == OrderClass::General);
    CHECK(bundle.bc == 0);
}
