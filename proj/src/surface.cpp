#include "gentle/surface.hpp"

#include <algorithm>

#include "gentle/errors.hpp"

namespace gentle {

RibbonData ribbon_data(const HalfEdgeSystem& h) {
    RibbonData r;
    r.half_edges = h.n;
    r.component_count = components(h).count;
    r.vertices = OrbitPartition(h.sigma);
    r.edges = OrbitPartition(h.theta);
    r.faces = OrbitPartition(phi(h));

    r.edge_class.resize(r.edges.count());
    for (int e = 0; e < r.edges.count(); ++e) {
        const auto& orbit = r.edges.orbit(e);
        if (orbit.size() == 1) {
            r.edge_class[e] = GraphEdgeKind::Truncated;
            ++r.truncated;
        } else if (r.vertices.orbit_of(orbit[0]) == r.vertices.orbit_of(orbit[1])) {
            r.edge_class[e] = GraphEdgeKind::Loop;
            ++r.loops;
        } else {
            r.edge_class[e] = GraphEdgeKind::Ordinary;
            ++r.ordinary;
        }
    }

    std::vector<char> has_fixed(r.faces.count(), 0);
    for (int x : h.theta_fixed_points()) has_fixed[r.faces.orbit_of(x)] = 1;
    r.face_class.resize(r.faces.count());
    for (int f = 0; f < r.faces.count(); ++f) {
        if (has_fixed[f]) {
            r.face_class[f] = FaceClass::Boundary;
            ++r.boundary_faces;
        } else {
            r.face_class[f] = FaceClass::Punctured;
            ++r.punctured_faces;
        }
    }
    return r;
}

SurfaceProfile surface_profile(const RibbonData& r) {
    if (r.component_count != 1)
        throw DisconnectedError("surface profiles are per component; input has " +
                                std::to_string(r.component_count) + " components");
    SurfaceProfile profile;
    profile.euler = (r.vertices.count() + r.truncated) - r.edges.count() + r.faces.count();
    if (profile.euler % 2 != 0 || profile.euler > 2)
        throw Error("Euler characteristic " + std::to_string(profile.euler) +
                    " is not that of a closed orientable surface");
    profile.genus = (2 - profile.euler) / 2;
    profile.boundary_faces = r.boundary_faces;
    profile.punctured_faces = r.punctured_faces;
    return profile;
}

std::vector<SurfaceProfile> surface_profiles_by_component(const HalfEdgeSystem& h) {
    std::vector<SurfaceProfile> profiles;
    for (const auto& members : components(h).members)
        profiles.push_back(surface_profile(ribbon_data(restrict_to(h, members))));
    return profiles;
}

namespace {

// Permitted-cycle count by walking relation-free successors on the quiver,
// independent of the sigma-orbit machinery.
long permitted_cycles_by_walk(const GentlePresentation& p) {
    std::vector<char> seen(p.arrow_count(), 0);
    long cycles = 0;
    for (int start = 0; start < p.arrow_count(); ++start) {
        if (seen[start]) continue;
        ++cycles;
        int arrow = start;
        do {
            seen[arrow] = 1;
            int next = -1;
            for (int b : p.out_arrows(p.arrows[arrow].target)) {
                if (!p.has_relation(b, arrow)) {
                    next = b;
                    break;
                }
            }
            if (next == -1) throw Error("arrow chain does not close into a permitted cycle");
            arrow = next;
        } while (arrow != start);
    }
    return cycles;
}

}  // namespace

std::vector<DictionaryRow> dictionary_rows(const GentlePresentation& p,
                                           const VertexClassification& c,
                                           const HalfEdgeSystem& h, const InvariantBundle& bundle,
                                           const IntMatrix& cartan, const RibbonData& r) {
    std::vector<DictionaryRow> rows;
    auto add = [&rows](std::string name, long quiver, long graph) {
        rows.push_back({std::move(name), quiver, graph, quiver == graph});
    };

    const auto threads = forbidden_threads(p, c);
    long thread_arrows = 0;
    for (const auto& t : threads) thread_arrows += static_cast<long>(t.arrows.size());
    const auto cycles = forbidden_cycles(p, c);
    long cycle_arrows = 0;
    for (const auto& fc : cycles) cycle_arrows += static_cast<long>(fc.size());

    long boundary_sum = 0, punctured_sum = 0;
    for (int f = 0; f < r.faces.count(); ++f) {
        (r.face_class[f] == FaceClass::Boundary ? boundary_sum : punctured_sum) +=
            static_cast<long>(r.faces.orbit(f).size());
    }

    add("|Q1| = |H|", p.arrow_count(), h.n);
    add("|Q0| = |E|", p.vertex_count(), r.edges.count());
    add("|Q0^t| = |E_t|", static_cast<long>(c.transition_vertices.size()), r.truncated);
    add("|Q0^c| = |E_g|", static_cast<long>(c.crossing_vertices.size()), r.ordinary + r.loops);
    add("|Q0^t/~kappa| = |F_b|", static_cast<long>(kappa_orbits_on_vertices(p, c).size()),
        r.boundary_faces);
    add("|Q1^fc/~rho| = |F_p|", static_cast<long>(cycles.size()), r.punctured_faces);
    add("|Q1^ft| = sum |f|, f in F_b", thread_arrows, boundary_sum);
    add("|Q1^fc| = sum |f|, f in F_p", cycle_arrows, punctured_sum);
    add("pc = |V|", permitted_cycles_by_walk(p), r.vertices.count());
    add("bc = pc - rk C", bundle.bc, r.vertices.count() - rank_oracle(cartan));
    return rows;
}

}  // namespace gentle
