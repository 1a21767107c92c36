#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gentle/halfedge.hpp"

namespace gentle {

struct SelftestOptions {
    long cases = 1000;
    std::uint64_t seed = 1;
    int max_half_edges = 60;
};

struct SelftestReport {
    long cases_run = 0;
    long checks_run = 0;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

// Property suite over one instance: round trip, the counting identities,
// formula/oracle agreement for rank and determinant, dictionary rows,
// bc-route agreement, hereditary-route agreement, genus integrality, path
// oracle on small instances, and screening soundness under relabeling.
void check_instance(const HalfEdgeSystem& h, std::uint64_t relabel_seed, SelftestReport& report);

// Runs check_instance over `cases` random systems with half-edge counts in
// 1..max_half_edges.
SelftestReport run_selftest(const SelftestOptions& options);

}  // namespace gentle
