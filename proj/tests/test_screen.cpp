#include <doctest.h>

#include <algorithm>

#include "gentle/errors.hpp"
#include "gentle/screen.hpp"
#include "test_support.hpp"

using namespace gentle;
using namespace gentle::testing;

namespace {

bool row_failed(const ScreeningReport& report, const std::string& name) {
    return std::find(report.failing.begin(), report.failing.end(), name) != report.failing.end();
}

}  // namespace

TEST_CASE("screening a file against itself is inconclusive") {
    GentlePresentation p = parse_gq(a_tilde_gq(3));
    ScreeningReport report = screen(p, p);
    CHECK_FALSE(report.distinguished);
    CHECK(std::string(report.verdict()) == "INCONCLUSIVE");
    for (const auto& row : report.rows) CHECK(row.equal);
}

TEST_CASE("hereditary cycles of different lengths are distinguished by AG1") {
    ScreeningReport report =
        screen(parse_gq(a_tilde_gq(2)), parse_gq(a_tilde_gq(3)));
    CHECK(report.distinguished);
    CHECK(row_failed(report, "ag1"));
    for (const auto& row : report.rows) {
        if (row.invariant == "ag1") {
            CHECK(row.value_a == "{(2,2)}");
            CHECK(row.value_b == "{(3,3)}");
        }
    }
}

TEST_CASE("the two 2-half-edge orders are distinguished by ag2 and bc") {
    GentlePresentation loop_order = from_half_edges(sys(2, {{0, 1}}, {{0, 1}}));
    GentlePresentation ordinary_order = from_half_edges(sys(2, {}, {{0, 1}}));
    ScreeningReport report = screen(loop_order, ordinary_order);
    CHECK(report.distinguished);
    CHECK(row_failed(report, "ag2"));
    CHECK(row_failed(report, "bc"));
    for (const auto& row : report.rows) {
        if (row.invariant == "ag2") {
            CHECK(row.value_a == "{(1,0), (1,0)}");
            CHECK(row.value_b == "{(2,0)}");
        }
        if (row.invariant == "bc") {
            CHECK(row.value_a == "0");
            CHECK(row.value_b == "1");
        }
    }
}

TEST_CASE("screening is symmetric") {
    GentlePresentation a = from_half_edges(sys(3, {{0, 1, 2}}, {{1, 2}}));
    GentlePresentation b = parse_gq(a_tilde_gq(3));
    ScreeningReport ab = screen(a, b);
    ScreeningReport ba = screen(b, a);
    CHECK(ab.distinguished == ba.distinguished);
    REQUIRE(ab.rows.size() == ba.rows.size());
    for (size_t i = 0; i < ab.rows.size(); ++i) {
        CHECK(ab.rows[i].value_a == ba.rows[i].value_b);
        CHECK(ab.rows[i].value_b == ba.rows[i].value_a);
        CHECK(ab.rows[i].equal == ba.rows[i].equal);
    }
}

TEST_CASE("self-screen under relabeling never distinguishes") {
    for (const HalfEdgeSystem& h :
         {a_tilde(6), sys(4, {{0, 1, 2, 3}}, {{0, 2}, {1, 3}}), sys(3, {{0, 1, 2}}, {{1, 2}}),
          sys(5, {{0, 3}, {1, 2, 4}}, {{0, 1}, {2, 3}})}) {
        GentlePresentation p = from_half_edges(h);
        for (std::uint64_t seed : {1u, 2u, 77u}) {
            ScreeningReport report = self_screen(p, seed);
            INFO("seed ", seed);
            CHECK_FALSE(report.distinguished);
        }
    }
}

TEST_CASE("relabel permutes declarations but preserves structure") {
    GentlePresentation p = parse_gq(kSelfLoops);
    GentlePresentation q = relabel(p, 5);
    CHECK(q.vertex_count() == p.vertex_count());
    CHECK(q.arrow_count() == p.arrow_count());
    CHECK(q.relations.size() == p.relations.size());
    CHECK_NOTHROW(validate_gentle_order(q));
}

TEST_CASE("screening refuses disconnected input") {
    GentlePresentation p = from_half_edges(sys(2, {}, {}));
    GentlePresentation q = parse_gq(a_tilde_gq(2));
    CHECK_THROWS_AS(screen(p, q), DisconnectedError);
}

TEST_CASE("screening refuses non-orders") {
    GentlePresentation bad = parse_gq("vertex 1\nvertex 2\narrow a 1 2\n");
    CHECK_THROWS_AS(screen(bad, bad), NotGentleOrderError);
}
