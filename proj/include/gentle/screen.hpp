#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gentle/presentation.hpp"

namespace gentle {

struct ScreeningRow {
    std::string invariant;
    std::string value_a;
    std::string value_b;
    bool equal = false;
};

// A DISTINGUISHED verdict certifies that the two orders are not derived
// equivalent; INCONCLUSIVE makes no claim either way.
struct ScreeningReport {
    std::vector<ScreeningRow> rows;
    bool distinguished = false;
    std::vector<std::string> failing;
    const char* verdict() const { return distinguished ? "DISTINGUISHED" : "INCONCLUSIVE"; }
};

// Compares AG multisets, pc, bc, vertex/arrow counts, Cartan rank and |det|,
// the genus profile (g, |F_b|, |F_p|) and the hereditary/ribbon flags of two
// connected valid gentle orders. Throws NotGentle*/DisconnectedError.
ScreeningReport screen(const GentlePresentation& a, const GentlePresentation& b);

// Copy of p with shuffled vertex/arrow declaration order and fresh names.
GentlePresentation relabel(const GentlePresentation& p, std::uint64_t seed);

// Screens p against a randomly relabeled copy of itself; every row must come
// out equal since all compared invariants are label-free.
ScreeningReport self_screen(const GentlePresentation& p, std::uint64_t seed);

}  // namespace gentle
