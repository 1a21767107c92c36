#include "gentle/screen.hpp"

#include <sstream>

#include "gentle/cartan.hpp"
#include "gentle/errors.hpp"
#include "gentle/invariants.hpp"
#include "gentle/randgen.hpp"
#include "gentle/surface.hpp"

namespace gentle {

namespace {

std::string ag_to_string(const AGMultiset& ag) {
    std::ostringstream out;
    out << '{';
    for (size_t i = 0; i < ag.size(); ++i) {
        if (i) out << ", ";
        out << '(' << ag[i].m << ',' << ag[i].n << ')';
    }
    out << '}';
    return out.str();
}

struct Profile {
    InvariantBundle bundle;
    long rank = 0;
    Integer det_abs;
    SurfaceProfile surface;
};

Profile profile_of(const GentlePresentation& p) {
    if (!p.connected())
        throw DisconnectedError("screening compares ring-indecomposable orders; input has " +
                                std::to_string(p.component_count()) + " components");
    Profile prof;
    VertexClassification classes = validate_gentle_order(p);
    HalfEdgeSystem h = to_half_edges(p, classes);
    prof.bundle = compute_bundle(p, classes, h);
    TruncatedGraph graph = truncated_graph(p, h);
    IntMatrix cartan = cartan_matrix(graph);
    prof.rank = rank_oracle(cartan);
    prof.det_abs = abs(det_oracle(cartan));
    prof.surface = surface_profile(ribbon_data(h));
    return prof;
}

}  // namespace

ScreeningReport screen(const GentlePresentation& a, const GentlePresentation& b) {
    const Profile pa = profile_of(a);
    const Profile pb = profile_of(b);

    ScreeningReport report;
    auto add = [&report](const std::string& name, const std::string& va, const std::string& vb) {
        bool equal = va == vb;
        report.rows.push_back({name, va, vb, equal});
        if (!equal) {
            report.distinguished = true;
            report.failing.push_back(name);
        }
    };
    auto num = [](auto value) { return std::to_string(value); };

    add("ag1", ag_to_string(pa.bundle.ag1), ag_to_string(pb.bundle.ag1));
    add("ag2", ag_to_string(pa.bundle.ag2), ag_to_string(pb.bundle.ag2));
    add("pc", num(pa.bundle.pc), num(pb.bundle.pc));
    add("bc", num(pa.bundle.bc), num(pb.bundle.bc));
    add("transition_vertices", num(pa.bundle.counts.transition), num(pb.bundle.counts.transition));
    add("crossing_vertices", num(pa.bundle.counts.crossing), num(pb.bundle.counts.crossing));
    add("arrows", num(pa.bundle.counts.arrows), num(pb.bundle.counts.arrows));
    add("cartan_rank", num(pa.rank), num(pb.rank));
    add("cartan_det_abs", pa.det_abs.str(), pb.det_abs.str());
    auto genus_profile = [](const SurfaceProfile& s) {
        return "(" + std::to_string(s.genus) + ", " + std::to_string(s.boundary_faces) + ", " +
               std::to_string(s.punctured_faces) + ")";
    };
    add("genus_profile", genus_profile(pa.surface), genus_profile(pb.surface));
    add("hereditary", pa.bundle.hereditary ? "yes" : "no", pb.bundle.hereditary ? "yes" : "no");
    add("ribbon", pa.bundle.ribbon ? "yes" : "no", pb.bundle.ribbon ? "yes" : "no");
    return report;
}

GentlePresentation relabel(const GentlePresentation& p, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<int> vertex_order(p.vertex_count());
    std::vector<int> arrow_order(p.arrow_count());
    for (int i = 0; i < p.vertex_count(); ++i) vertex_order[i] = i;
    for (int i = 0; i < p.arrow_count(); ++i) arrow_order[i] = i;
    for (int i = p.vertex_count() - 1; i > 0; --i)
        std::swap(vertex_order[i], vertex_order[rng.below(static_cast<std::uint64_t>(i) + 1)]);
    for (int i = p.arrow_count() - 1; i > 0; --i)
        std::swap(arrow_order[i], arrow_order[rng.below(static_cast<std::uint64_t>(i) + 1)]);

    std::vector<int> new_vertex(p.vertex_count()), new_arrow(p.arrow_count());
    GentlePresentation q;
    for (int i = 0; i < p.vertex_count(); ++i) {
        new_vertex[vertex_order[i]] = i;
        q.vertex_names.push_back("w" + std::to_string(i + 1));
    }
    for (int i = 0; i < p.arrow_count(); ++i) {
        const Arrow& old = p.arrows[arrow_order[i]];
        new_arrow[arrow_order[i]] = i;
        q.arrows.push_back({"b" + std::to_string(i + 1), new_vertex[old.source],
                            new_vertex[old.target]});
    }
    for (const auto& [later, earlier] : p.relations)
        q.relations.emplace_back(new_arrow[later], new_arrow[earlier]);
    q.rebuild_index();
    return q;
}

ScreeningReport self_screen(const GentlePresentation& p, std::uint64_t seed) {
    return screen(p, relabel(p, seed));
}

}  // namespace gentle
