#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gentle/halfedge.hpp"

namespace gentle {

enum class VertexKind { Transition, Crossing };

struct Arrow {
    std::string name;
    int source = -1;
    int target = -1;
};

// A quiver with monomial length-two relations. Relation pairs are stored as
// (later, earlier) arrow indices meaning the composite later∘earlier lies in
// the relation ideal, i.e. the file line `rel b a` says "a then b" is zero.
struct GentlePresentation {
    std::vector<std::string> vertex_names;          // declaration order
    std::vector<Arrow> arrows;                      // declaration order
    std::vector<std::pair<int, int>> relations;     // sorted, unique

    int vertex_count() const { return static_cast<int>(vertex_names.size()); }
    int arrow_count() const { return static_cast<int>(arrows.size()); }

    bool has_relation(int later, int earlier) const;
    const std::vector<int>& out_arrows(int v) const { return out_[v]; }
    const std::vector<int>& in_arrows(int v) const { return in_[v]; }
    int find_vertex(const std::string& name) const;
    int find_arrow(const std::string& name) const;

    // Recomputes the out/in adjacency and sorts relations. Call after
    // building or editing the raw fields by hand.
    void rebuild_index();

    // Components of the underlying undirected graph (isolated vertices form
    // their own components).
    std::vector<int> vertex_component() const;
    int component_count() const;
    bool connected() const { return component_count() <= 1; }

private:
    std::vector<std::vector<int>> out_, in_;
};

struct VertexClassification {
    std::vector<VertexKind> kind;            // per vertex
    std::vector<int> transition_vertices;    // sorted
    std::vector<int> crossing_vertices;      // sorted
};

// A permitted thread: a maximal relation-free path that does not close into
// a cycle. Trivial threads (empty arrow list) sit at vertices that admit no
// relation-free pass-through, e.g. isolated vertices.
struct PermittedThread {
    std::vector<int> arrows;
    int vertex = -1;  // start vertex; for trivial threads the hosting vertex
};

// Joint report of the gentleness check and the three combinatorial
// gentle-order conditions, evaluated independently of each other.
struct OrderDiagnosis {
    bool gentle = false;
    std::string gentle_message;

    bool every_vertex_transition_or_crossing = false;  // condition (1)
    bool no_permitted_threads = false;                 // condition (2)
    bool every_arrow_on_permitted_cycle = false;       // condition (3)

    std::vector<int> unclassifiable_vertices;
    std::optional<PermittedThread> thread_witness;
    std::optional<VertexClassification> classes;

    bool valid() const { return gentle && every_vertex_transition_or_crossing; }
};

// Evaluates gentleness and, when gentle, the three gentle-order conditions.
OrderDiagnosis diagnose(const GentlePresentation& p);

// Throws NotGentleError or NotGentleOrderError; on success returns the
// per-vertex classification.
VertexClassification validate_gentle_order(const GentlePresentation& p);

// .gq text format. Structural validation only (references, composability,
// duplicates); gentleness is not enforced here.
GentlePresentation parse_gq(const std::string& text);
std::string write_gq(const GentlePresentation& p);

// .hep permutation format ("halfedges <n>", then "sigma"/"theta" lines in
// disjoint-cycle notation over 1..n).
HalfEdgeSystem parse_hep(const std::string& text);
std::string write_hep(const HalfEdgeSystem& h);

// Arrow i becomes half-edge i. sigma(a) is the unique arrow composing with a
// without relation; theta swaps the two out-arrows at a crossing vertex and
// fixes the out-arrow of a transition vertex.
HalfEdgeSystem to_half_edges(const GentlePresentation& p, const VertexClassification& c);

// Inverse construction: vertices are theta-orbits, arrows are half-edges,
// and later∘earlier is a relation iff they compose and later != sigma(earlier).
// The result is always a valid gentle order.
GentlePresentation from_half_edges(const HalfEdgeSystem& h);

// Copy of p without the given arrow (relations touching it are dropped).
GentlePresentation remove_arrow(const GentlePresentation& p, int arrow);

// Sub-presentations of the connected components, original names kept.
std::vector<GentlePresentation> split_components(const GentlePresentation& p);

}  // namespace gentle
