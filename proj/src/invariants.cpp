#include "gentle/invariants.hpp"

#include <algorithm>
#include <map>

#include "gentle/errors.hpp"

namespace gentle {

const char* to_string(OrderClass cls) {
    switch (cls) {
        case OrderClass::Hereditary: return "hereditary";
        case OrderClass::Ribbon: return "ribbon";
        case OrderClass::General: return "general";
    }
    return "?";
}

std::pair<long, std::vector<long>> permitted_cycles(const HalfEdgeSystem& h) {
    OrbitPartition orbits(h.sigma);
    return {orbits.count(), orbits.sizes_sorted()};
}

namespace {

// Union-find with parity relative to the root (0 = same color, 1 = opposite).
struct ParityDsu {
    std::vector<int> parent, parity;  // parity[x] is the offset from x to parent[x]
    explicit ParityDsu(int n) : parent(n), parity(n, 0) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    std::pair<int, int> find(int x) {
        if (parent[x] == x) return {x, 0};
        auto [root, above] = find(parent[x]);
        parent[x] = root;
        parity[x] ^= above;
        return {root, parity[x]};
    }
    // Returns false on contradiction.
    bool merge(int a, int b, int want_parity) {
        auto [ra, pa] = find(a);
        auto [rb, pb] = find(b);
        if (ra == rb) return (pa ^ pb) == want_parity;
        parent[ra] = rb;
        parity[ra] = pa ^ pb ^ want_parity;
        return true;
    }
};

}  // namespace

Bicoloring bicolorability(const GentlePresentation& p) {
    if (!p.connected()) throw DisconnectedError("bicolorability needs a connected quiver");
    VertexClassification classes = validate_gentle_order(p);

    Bicoloring result;
    // A vertex with a single out-arrow can never show both colors.
    if (!classes.transition_vertices.empty()) {
        result.bc = 0;
        result.obstruction = "vertex " + p.vertex_names[classes.transition_vertices.front()] +
                             " has a single out-arrow";
        return result;
    }
    ParityDsu dsu(p.arrow_count());
    for (int v = 0; v < p.vertex_count(); ++v) {
        for (int a : p.in_arrows(v)) {
            for (int b : p.out_arrows(v)) {
                int want = p.has_relation(b, a) ? 1 : 0;
                if (!dsu.merge(a, b, want)) {
                    result.bc = 0;
                    result.obstruction = "coloring contradiction between arrows " +
                                         p.arrows[a].name + " and " + p.arrows[b].name;
                    return result;
                }
            }
        }
    }
    result.bc = 1;
    result.coloring.assign(p.arrow_count(), 0);
    for (int a = 0; a < p.arrow_count(); ++a) {
        auto [root, parity] = dsu.find(a);
        (void)root;
        result.coloring[a] = 1 + parity;
    }
    // Both colors at every vertex: the crossing relations force this once the
    // constraints are consistent; keep the explicit check as a guard.
    for (int v = 0; v < p.vertex_count(); ++v) {
        const auto& out = p.out_arrows(v);
        if (out.size() == 2 && result.coloring[out[0]] == result.coloring[out[1]]) {
            result.bc = 0;
            result.coloring.clear();
            result.obstruction =
                "out-arrows at vertex " + p.vertex_names[v] + " received one color";
            return result;
        }
    }
    return result;
}

AGMultiset ag_first(const HalfEdgeSystem& h) {
    const Permutation f = phi(h);
    OrbitPartition faces(f);
    std::vector<long> fixed_in_orbit(faces.count(), 0);
    for (int x : h.theta_fixed_points()) ++fixed_in_orbit[faces.orbit_of(x)];
    AGMultiset result;
    for (int k = 0; k < faces.count(); ++k) {
        if (fixed_in_orbit[k] > 0)
            result.push_back({static_cast<long>(faces.orbit(k).size()), fixed_in_orbit[k]});
    }
    std::sort(result.begin(), result.end());
    return result;
}

AGMultiset ag_second(const HalfEdgeSystem& h) {
    OrbitPartition orbits = rho(h).orbits();
    AGMultiset result;
    for (const auto& orbit : orbits.orbits())
        result.push_back({static_cast<long>(orbit.size()), 0});
    std::sort(result.begin(), result.end());
    return result;
}

std::vector<ForbiddenThread> forbidden_threads(const GentlePresentation& p,
                                               const VertexClassification& c) {
    std::vector<ForbiddenThread> threads;
    for (int j : c.transition_vertices) {
        ForbiddenThread thread;
        thread.start_vertex = j;
        int arrow = p.out_arrows(j)[0];
        thread.arrows.push_back(arrow);
        for (;;) {
            int next = -1;
            for (int b : p.out_arrows(p.arrows[arrow].target)) {
                if (p.has_relation(b, arrow)) {
                    next = b;
                    break;
                }
            }
            if (next == -1) break;
            arrow = next;
            thread.arrows.push_back(arrow);
            if (static_cast<int>(thread.arrows.size()) > p.arrow_count())
                throw Error("forbidden thread walk failed to terminate");
        }
        thread.end_vertex = p.arrows[arrow].target;
        threads.push_back(std::move(thread));
    }
    return threads;
}

std::vector<std::vector<int>> kappa_orbits_on_vertices(const GentlePresentation& p,
                                                       const VertexClassification& c) {
    auto threads = forbidden_threads(p, c);
    std::map<int, int> kappa_map;  // start vertex -> end vertex
    for (const auto& t : threads) kappa_map[t.start_vertex] = t.end_vertex;
    std::vector<std::vector<int>> orbits;
    std::set<int> seen;
    for (int j : c.transition_vertices) {
        if (seen.count(j)) continue;
        std::vector<int> orbit;
        int x = j;
        do {
            orbit.push_back(x);
            seen.insert(x);
            x = kappa_map.at(x);
        } while (x != j);
        orbits.push_back(std::move(orbit));
    }
    return orbits;
}

AGMultiset ag_first_from_threads(const GentlePresentation& p, const VertexClassification& c) {
    auto threads = forbidden_threads(p, c);
    std::map<int, long> length_of;  // start vertex -> thread length
    for (const auto& t : threads) length_of[t.start_vertex] = static_cast<long>(t.arrows.size());
    AGMultiset result;
    for (const auto& orbit : kappa_orbits_on_vertices(p, c)) {
        long m = 0;
        for (int j : orbit) m += length_of.at(j);
        result.push_back({m, static_cast<long>(orbit.size())});
    }
    std::sort(result.begin(), result.end());
    return result;
}

std::vector<std::vector<int>> forbidden_cycles(const GentlePresentation& p,
                                               const VertexClassification& c) {
    std::vector<char> in_thread(p.arrow_count(), 0);
    for (const auto& t : forbidden_threads(p, c))
        for (int a : t.arrows) in_thread[a] = 1;
    std::vector<std::vector<int>> cycles;
    std::vector<char> seen(p.arrow_count(), 0);
    for (int start = 0; start < p.arrow_count(); ++start) {
        if (in_thread[start] || seen[start]) continue;
        std::vector<int> cycle;
        int arrow = start;
        do {
            cycle.push_back(arrow);
            seen[arrow] = 1;
            int next = -1;
            for (int b : p.out_arrows(p.arrows[arrow].target)) {
                if (p.has_relation(b, arrow)) {
                    next = b;
                    break;
                }
            }
            if (next == -1) throw Error("forbidden cycle walk left the cycle set");
            arrow = next;
        } while (arrow != start);
        cycles.push_back(std::move(cycle));
    }
    return cycles;
}

Classification classify(const HalfEdgeSystem& h) {
    if (!is_connected(h)) throw DisconnectedError("classification needs a connected system");
    const long fixed = static_cast<long>(h.theta_fixed_points().size());
    Classification result;
    if (fixed == h.n) {
        result.cls = OrderClass::Hereditary;
        AGMultiset ag1 = ag_first(h);
        result.witness = "theta = id; AG1 entry (" + std::to_string(ag1.front().m) + "," +
                         std::to_string(ag1.front().n) + ") has m = n";
    } else if (fixed == 0) {
        result.cls = OrderClass::Ribbon;
        result.witness = "theta has no fixed points";
    } else {
        result.cls = OrderClass::General;
        result.witness = "theta has " + std::to_string(fixed) + " fixed points among " +
                         std::to_string(h.n) + " half-edges";
    }
    return result;
}

namespace {

std::vector<int> sigma_on_arrows(const GentlePresentation& p) {
    std::vector<int> succ(p.arrow_count(), -1);
    for (int a = 0; a < p.arrow_count(); ++a) {
        for (int b : p.out_arrows(p.arrows[a].target)) {
            if (!p.has_relation(b, a)) {
                succ[a] = b;
                break;
            }
        }
        if (succ[a] == -1)
            throw Error("arrow " + p.arrows[a].name + " has no relation-free successor");
    }
    return succ;
}

}  // namespace

SignInvolution sign_involution(const GentlePresentation& p, bool char2) {
    SignInvolution inv;
    inv.sgn.assign(p.arrow_count(), 1);
    if (!char2) {
        for (int v = 0; v < p.vertex_count(); ++v) {
            const auto& out = p.out_arrows(v);
            if (out.size() == 2) inv.sgn[out[1]] = -1;
        }
    }
    const std::vector<int> succ = sigma_on_arrows(p);
    inv.xi_coeff.assign(p.arrow_count(), 1);
    for (int a = 0; a < p.arrow_count(); ++a) inv.xi_coeff[a] = inv.sgn[succ[a]] * inv.sgn[a];
    return inv;
}

NakayamaData nakayama_data(const GentlePresentation& p, const VertexClassification& c,
                           bool char2) {
    NakayamaData data;
    data.radical.assign(p.vertex_count(), false);
    for (int j : c.transition_vertices) data.radical[j] = true;
    data.arrow_sign = sign_involution(p, char2).xi_coeff;
    return data;
}

SimpleResolution simple_resolution(const GentlePresentation& p, const VertexClassification& c,
                                   int vertex) {
    if (vertex < 0 || vertex >= p.vertex_count() || c.kind[vertex] != VertexKind::Transition)
        throw NotTransitionVertexError(
            "simple resolutions of this shape exist only at transition vertices");
    auto threads = forbidden_threads(p, c);
    const ForbiddenThread* thread = nullptr;
    for (const auto& t : threads)
        if (t.start_vertex == vertex) thread = &t;
    if (!thread) throw Error("no forbidden thread found at the vertex");

    SimpleResolution res;
    for (auto it = thread->arrows.rbegin(); it != thread->arrows.rend(); ++it)
        res.vertices.push_back(p.arrows[*it].target);
    res.vertices.push_back(vertex);

    for (const auto& orbit : kappa_orbits_on_vertices(p, c)) {
        if (std::find(orbit.begin(), orbit.end(), vertex) == orbit.end()) continue;
        long m = 0;
        std::map<int, long> length_of;
        for (const auto& t : threads) length_of[t.start_vertex] = static_cast<long>(t.arrows.size());
        for (int j : orbit) m += length_of.at(j);
        res.cy_dimension = {m, static_cast<long>(orbit.size())};
    }
    return res;
}

IdealGenerators ideal_generators(const GentlePresentation& p, const VertexClassification& c,
                                 const std::set<int>& stable_set) {
    for (int x : stable_set) {
        if (x < 0 || x >= p.vertex_count() || c.kind[x] != VertexKind::Transition)
            throw NotTransitionVertexError("ideal generator sets live inside the transition vertices");
    }
    auto threads = forbidden_threads(p, c);
    std::map<int, int> kappa_map;
    for (const auto& t : threads) kappa_map[t.start_vertex] = t.end_vertex;
    for (int x : stable_set) {
        if (!stable_set.count(kappa_map.at(x)))
            throw NotKappaStableError("kappa(" + p.vertex_names[x] + ") = " +
                                          p.vertex_names[kappa_map.at(x)] + " is missing from the set",
                                      x);
    }
    IdealGenerators gens;
    for (int v = 0; v < p.vertex_count(); ++v)
        if (!stable_set.count(v)) gens.idempotent_vertices.push_back(v);
    for (int a = 0; a < p.arrow_count(); ++a)
        if (stable_set.count(p.arrows[a].source)) gens.arrow_generators.push_back(a);
    gens.kappa_orbit_count = static_cast<long>(kappa_orbits_on_vertices(p, c).size());
    return gens;
}

QuiverCounts quiver_counts(const GentlePresentation& p, const VertexClassification& c) {
    QuiverCounts counts;
    counts.vertices = p.vertex_count();
    counts.arrows = p.arrow_count();
    counts.transition = static_cast<long>(c.transition_vertices.size());
    counts.crossing = static_cast<long>(c.crossing_vertices.size());
    for (const auto& t : forbidden_threads(p, c))
        counts.thread_arrows += static_cast<long>(t.arrows.size());
    counts.cycle_arrows = counts.arrows - counts.thread_arrows;
    return counts;
}

InvariantBundle compute_bundle(const GentlePresentation& p, const VertexClassification& c,
                               const HalfEdgeSystem& h) {
    InvariantBundle bundle;
    auto [pc, profile] = permitted_cycles(h);
    bundle.pc = pc;
    bundle.profile = std::move(profile);
    bundle.bc = bicolorability(p).bc;
    bundle.ag1 = ag_first(h);
    bundle.ag2 = ag_second(h);
    if (bundle.ag1 != ag_first_from_threads(p, c))
        throw Error("AG1 derivations disagree (orbit route vs thread route)");
    bundle.counts = quiver_counts(p, c);
    bundle.cls = classify(h).cls;
    bundle.hereditary = bundle.cls == OrderClass::Hereditary;
    bundle.ribbon = bundle.cls == OrderClass::Ribbon;
    return bundle;
}

}  // namespace gentle
