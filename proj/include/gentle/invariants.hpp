#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "gentle/halfedge.hpp"
#include "gentle/presentation.hpp"

namespace gentle {

// One AG-invariant: m = length of the cycle, n = number of transition
// vertices on it (n >= 1 for first type, n = 0 for second type).
struct AGEntry {
    long m = 0;
    long n = 0;
    friend auto operator<=>(const AGEntry&, const AGEntry&) = default;
};

// Kept sorted lexicographically (m, then n) so multisets compare by ==.
using AGMultiset = std::vector<AGEntry>;

struct QuiverCounts {
    long vertices = 0;       // |Q0|
    long arrows = 0;         // |Q1|
    long transition = 0;     // |Q0^t|
    long crossing = 0;       // |Q0^c|
    long thread_arrows = 0;  // |Q1^ft|
    long cycle_arrows = 0;   // |Q1^fc|
};

enum class OrderClass { Hereditary, Ribbon, General };
const char* to_string(OrderClass cls);

struct Bicoloring {
    int bc = 0;
    std::vector<int> coloring;  // per arrow, 1 or 2; empty when bc = 0
    std::string obstruction;    // set when bc = 0
};

struct ForbiddenThread {
    int start_vertex = -1;
    std::vector<int> arrows;
    int end_vertex = -1;  // = kappa(start_vertex)
};

struct Classification {
    OrderClass cls = OrderClass::General;
    std::string witness;
};

struct SignInvolution {
    std::vector<int> sgn;       // per arrow, +1 or -1; opposite signs at shared sources
    std::vector<int> xi_coeff;  // xi(a) = xi_coeff[a] * a with xi_coeff[a] = sgn(sigma a) * sgn(a)
};

struct NakayamaData {
    std::vector<bool> radical;    // per vertex: the Nakayama image of P_j is rad P_j
    std::vector<int> arrow_sign;  // per arrow, the +-1 twist
};

struct SimpleResolution {
    std::vector<int> vertices;  // kappa(j), ..., j — one vertex per projective term
    AGEntry cy_dimension;
};

struct IdealGenerators {
    std::vector<int> idempotent_vertices;  // Q0 \ X, sorted
    std::vector<int> arrow_generators;     // arrows with source in X, sorted
    long kappa_orbit_count = 0;            // b = number of twist factors
};

struct InvariantBundle {
    long pc = 0;
    int bc = 0;
    AGMultiset ag1, ag2;
    QuiverCounts counts;
    std::vector<long> profile;  // permitted-cycle lengths, sorted
    OrderClass cls = OrderClass::General;
    bool hereditary = false;
    bool ribbon = false;
};

// Number of permitted cycles up to rotation and their length multiset
// (= sigma-orbit count and sizes).
std::pair<long, std::vector<long>> permitted_cycles(const HalfEdgeSystem& h);

// Arrow two-coloring route: f(beta) != f(alpha) iff beta∘alpha is a relation,
// and both colors must occur among the arrows starting at every vertex.
// Throws DisconnectedError; requires a valid gentle order.
Bicoloring bicolorability(const GentlePresentation& p);

// First-type AG-invariants via phi-orbits: one entry per kappa-orbit with
// m = size of its phi-orbit, n = number of theta-fixed points on it.
AGMultiset ag_first(const HalfEdgeSystem& h);

// Second-type AG-invariants: one entry (orbit size, 0) per rho-orbit.
AGMultiset ag_second(const HalfEdgeSystem& h);

// Direct path walk: from each transition vertex follow the out-arrow and then
// relation successors until the next transition vertex.
std::vector<ForbiddenThread> forbidden_threads(const GentlePresentation& p,
                                               const VertexClassification& c);

// Independent re-derivation of AG_1 by thread concatenation around
// kappa-orbits; must agree with ag_first on every instance.
AGMultiset ag_first_from_threads(const GentlePresentation& p, const VertexClassification& c);

// kappa-orbits as sets of transition vertices (path-walk route).
std::vector<std::vector<int>> kappa_orbits_on_vertices(const GentlePresentation& p,
                                                       const VertexClassification& c);

// Forbidden cycles up to rotation, each as an arrow list (path-walk route).
std::vector<std::vector<int>> forbidden_cycles(const GentlePresentation& p,
                                               const VertexClassification& c);

// Hereditary iff theta = id (connected), ribbon iff theta is fixed-point-free.
// Throws DisconnectedError.
Classification classify(const HalfEdgeSystem& h);

// Choice of signs with sgn(alpha) != sgn(beta) whenever alpha != beta share a
// source: first out-arrow in declaration order gets +1. In characteristic two
// all signs are +1 and xi is the identity.
SignInvolution sign_involution(const GentlePresentation& p, bool char2 = false);

// Combinatorial Nakayama action: rad-tag at transition vertices, identity tag
// at crossing vertices, arrows twisted by xi.
NakayamaData nakayama_data(const GentlePresentation& p, const VertexClassification& c,
                           bool char2 = false);

// Projective resolution of the simple at a transition vertex: the vertices of
// the projectives along its forbidden thread, from kappa(j) down to j, plus
// the Calabi-Yau dimension (m(j), n(j)). Throws NotTransitionVertexError.
SimpleResolution simple_resolution(const GentlePresentation& p, const VertexClassification& c,
                                   int vertex);

// Generators of the two-sided ideal I(X) for a kappa-stable set X of
// transition vertices. Throws NotKappaStableError (with witness) when
// kappa(X) != X, NotTransitionVertexError when X contains a non-transition
// vertex.
IdealGenerators ideal_generators(const GentlePresentation& p, const VertexClassification& c,
                                 const std::set<int>& stable_set);

QuiverCounts quiver_counts(const GentlePresentation& p, const VertexClassification& c);

// Full bundle for a connected valid gentle order. Cross-checks the two AG_1
// derivations internally.
InvariantBundle compute_bundle(const GentlePresentation& p, const VertexClassification& c,
                               const HalfEdgeSystem& h);

}  // namespace gentle
