#pragma once

#include <string>
#include <vector>

#include "gentle/cartan.hpp"
#include "gentle/halfedge.hpp"
#include "gentle/invariants.hpp"
#include "gentle/matrix.hpp"
#include "gentle/presentation.hpp"

namespace gentle {

enum class FaceClass { Boundary, Punctured };

// Orbit data of the truncated ribbon graph of (sigma, theta): vertices are
// sigma-orbits, edges theta-orbits, faces phi-orbits. A face is a boundary
// face iff it contains a theta-fixed half-edge.
struct RibbonData {
    int half_edges = 0;
    int component_count = 0;
    OrbitPartition vertices;
    OrbitPartition edges;
    OrbitPartition faces;
    std::vector<GraphEdgeKind> edge_class;  // per edge orbit
    std::vector<FaceClass> face_class;      // per face orbit
    long ordinary = 0, loops = 0, truncated = 0;
    long boundary_faces = 0, punctured_faces = 0;
};

RibbonData ribbon_data(const HalfEdgeSystem& h);

struct SurfaceProfile {
    long genus = 0;
    long euler = 0;  // Euler characteristic of the closed surface (see below)
    long boundary_faces = 0;
    long punctured_faces = 0;
};

// Topological profile of the surface of a connected system. Truncated edges
// are deleted leaves of a ribbon graph; re-adding one leaf vertex per
// truncated edge changes no edge or face count and yields a closed orientable
// surface, so euler = (|V| + |E_t|) - |E| + |F| and genus = (2 - euler)/2.
// For ribbon graphs (no truncated edges) this is the Euler-Poincaré count
// |V| - |E| + |F| verbatim. Throws DisconnectedError on disconnected data.
SurfaceProfile surface_profile(const RibbonData& r);

// Per-component profiles, in component order.
std::vector<SurfaceProfile> surface_profiles_by_component(const HalfEdgeSystem& h);

struct DictionaryRow {
    std::string name;
    long quiver_value = 0;  // computed by path walks on the presentation
    long graph_value = 0;   // computed from ribbon-graph orbit data
    bool pass = false;
};

// The quiver-count = graph-count identities of the invariant dictionary,
// each row evaluated through two independent routes. All rows pass on every
// valid input; failures are reported, not thrown.
std::vector<DictionaryRow> dictionary_rows(const GentlePresentation& p,
                                           const VertexClassification& c,
                                           const HalfEdgeSystem& h, const InvariantBundle& bundle,
                                           const IntMatrix& cartan, const RibbonData& r);

}  // namespace gentle
