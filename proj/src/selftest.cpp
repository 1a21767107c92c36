#include "gentle/selftest.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "gentle/cartan.hpp"
#include "gentle/errors.hpp"
#include "gentle/invariants.hpp"
#include "gentle/matrix.hpp"
#include "gentle/presentation.hpp"
#include "gentle/randgen.hpp"
#include "gentle/screen.hpp"
#include "gentle/surface.hpp"

namespace gentle {

namespace {

struct Checker {
    SelftestReport& report;
    std::string context;

    void expect(bool condition, const std::string& what) {
        ++report.checks_run;
        if (!condition) report.failures.push_back(context + ": " + what);
    }

    template <typename T>
    void expect_eq(const T& lhs, const T& rhs, const std::string& what) {
        ++report.checks_run;
        if (!(lhs == rhs)) {
            std::ostringstream out;
            out << context << ": " << what;
            report.failures.push_back(out.str());
        }
    }
};

long sum_m(const AGMultiset& ag) {
    long total = 0;
    for (const auto& e : ag) total += e.m;
    return total;
}

long sum_n(const AGMultiset& ag) {
    long total = 0;
    for (const auto& e : ag) total += e.n;
    return total;
}

}  // namespace

void check_instance(const HalfEdgeSystem& h, std::uint64_t relabel_seed, SelftestReport& report) {
    Checker check{report, "n=" + std::to_string(h.n)};

    // Round trip and validity of the reconstructed presentation.
    GentlePresentation p = from_half_edges(h);
    OrderDiagnosis diagnosis = diagnose(p);
    check.expect(diagnosis.gentle, "reconstructed presentation is gentle");
    check.expect(diagnosis.every_vertex_transition_or_crossing, "condition (1)");
    check.expect(diagnosis.no_permitted_threads, "condition (2)");
    check.expect(diagnosis.every_arrow_on_permitted_cycle, "condition (3)");
    if (!diagnosis.valid()) return;
    const VertexClassification classes = *diagnosis.classes;
    HalfEdgeSystem back = to_half_edges(p, classes);
    check.expect(back == h, "round trip is the identity on labels");
    check.expect(isomorphic(back, h), "round trip up to relabeling");

    // Degree law.
    for (int v = 0; v < p.vertex_count(); ++v) {
        size_t out = p.out_arrows(v).size();
        check.expect(out == p.in_arrows(v).size() && (out == 1 || out == 2),
                     "degree law at vertex " + std::to_string(v));
    }

    // Theta-orbit census.
    const QuiverCounts counts = quiver_counts(p, classes);
    check.expect_eq(counts.arrows, 2 * counts.crossing + counts.transition,
                    "|Q1| = 2|Q0^c| + |Q0^t|");
    check.expect_eq(counts.transition, static_cast<long>(h.theta_fixed_points().size()),
                    "theta-fixed points are the transition vertices");
    check.expect_eq(counts.crossing,
                    (static_cast<long>(h.n) - static_cast<long>(h.theta_fixed_points().size())) / 2,
                    "theta 2-orbits are the crossing vertices");

    // Counting identities.
    const AGMultiset ag1 = ag_first(h);
    const AGMultiset ag2 = ag_second(h);
    auto [pc, profile] = permitted_cycles(h);
    check.expect_eq(sum_m(ag1), counts.thread_arrows, "sum of AG1 m = |Q1^ft|");
    check.expect_eq(sum_n(ag1), counts.transition, "sum of AG1 n = |Q0^t|");
    check.expect_eq(sum_m(ag2), counts.cycle_arrows, "sum of AG2 m = |Q1^fc|");
    check.expect_eq(std::accumulate(profile.begin(), profile.end(), 0L), counts.arrows,
                    "sum of profile = |Q1|");
    check.expect_eq(static_cast<long>(profile.size()), pc, "pc = |profile|");
    check.expect_eq(static_cast<long>(forbidden_threads(p, classes).size()), counts.transition,
                    "#threads = |Q0^t|");
    for (const auto& e : ag1) check.expect(e.m >= e.n && e.n >= 1, "AG1 entry has m >= n >= 1");
    for (const auto& e : ag2) check.expect(e.n == 0 && e.m >= 1, "AG2 entry has n = 0, m >= 1");

    // The two AG1 derivations agree; kappa is a bijection on theta-fixed points.
    check.expect(ag1 == ag_first_from_threads(p, classes), "AG1 orbit route = thread route");
    SubPermutation kp = kappa(h);
    {
        std::vector<int> image_sorted = kp.image;
        std::sort(image_sorted.begin(), image_sorted.end());
        check.expect(image_sorted == kp.domain, "kappa is a bijection on theta-fixed points");
        check.expect_eq(static_cast<long>(ag1.size()), static_cast<long>(kp.orbits().count()),
                        "|AG1| = #kappa-orbits");
    }

    // rho = phi restricted to the fixed-point-free phi-orbits.
    {
        const Permutation f = phi(h);
        SubPermutation r = rho(h);
        bool restriction = true;
        for (size_t i = 0; i < r.domain.size(); ++i)
            restriction = restriction && r.image[i] == f(r.domain[i]);
        check.expect(restriction, "rho = phi on its domain");
        check.expect_eq(counts.cycle_arrows, static_cast<long>(r.domain.size()),
                        "|Q1^fc| = |rho domain|");
    }

    // Cartan matrix structure and formula/oracle agreement.
    const TruncatedGraph graph = truncated_graph(p, h);
    const IntMatrix b = incidence_matrix(graph);
    const IntMatrix cartan = cartan_matrix(graph);
    check.expect(cartan.is_symmetric(), "C symmetric");
    check.expect(cartan == b * b.transpose(), "C = B*B^T");
    for (int i = 0; i < cartan.rows(); ++i) {
        const Integer& d = cartan.at(i, i);
        check.expect(d == 1 || d == 2 || d == 4, "diagonal of C in {1,2,4}");
    }
    for (int i = 0; i < b.rows(); ++i) {
        Integer row_sum = 0;
        for (int j = 0; j < b.cols(); ++j) row_sum += b.at(i, j);
        check.expect(row_sum == 1 || row_sum == 2, "row sums of B in {1,2}");
    }
    const long rank_c = rank_oracle(cartan);
    check.expect_eq(rank_c, rank_formula(graph), "rank oracle = rank formula");
    check.expect_eq(rank_oracle(b), static_cast<long>(graph.vertex_count) - graph_bc(graph),
                    "rank B = |V| - bc(Gr)");
    check.expect(det_oracle(cartan) == det_formula(graph), "det oracle = det formula");
    if (b.rows() == b.cols())
        check.expect(abs(det_oracle(b)) == det_b_formula(graph), "|det B| formula");

    // Path oracle on small instances.
    if (p.arrow_count() <= 16)
        check.expect(cartan_path_oracle(p) == cartan, "path oracle = B*B^T");

    // Ribbon data and the dictionary.
    const RibbonData ribbon = ribbon_data(h);
    check.expect_eq(static_cast<long>(ag1.size()), ribbon.boundary_faces, "|AG1| = |F_b|");
    check.expect_eq(static_cast<long>(ag2.size()), ribbon.punctured_faces, "|AG2| = |F_p|");
    for (const OrbitPartition* part : {&ribbon.vertices, &ribbon.edges, &ribbon.faces}) {
        long covered = 0;
        for (const auto& orbit : part->orbits()) covered += static_cast<long>(orbit.size());
        check.expect_eq(covered, static_cast<long>(h.n), "orbit partition covers H");
    }

    for (const SurfaceProfile& profile_comp : surface_profiles_by_component(h)) {
        check.expect(profile_comp.euler % 2 == 0, "even Euler characteristic");
        check.expect(profile_comp.genus >= 0, "nonnegative genus");
    }

    if (!is_connected(h)) return;

    // Connected-only checks: bc routes, rank identity, classification routes,
    // dictionary rows, screening soundness.
    const InvariantBundle bundle = compute_bundle(p, classes, h);
    check.expect_eq(static_cast<long>(bundle.bc), graph_bc(graph),
                    "arrow-coloring bc = graph-criterion bc");
    check.expect_eq(rank_c, bundle.pc - bundle.bc, "rank C = pc - bc");

    const bool theta_identity = h.theta.is_identity();
    const bool all_transition = counts.crossing == 0;
    bool ag1_has_diagonal = false;
    for (const auto& e : ag1) ag1_has_diagonal = ag1_has_diagonal || e.m == e.n;
    check.expect(theta_identity == all_transition, "hereditary route: theta = id");
    check.expect(theta_identity == ag1_has_diagonal, "hereditary route: some AG1 m = n");
    check.expect(bundle.hereditary == theta_identity, "hereditary flag");
    check.expect(bundle.ribbon == (counts.transition == 0), "ribbon flag");
    if (!bundle.hereditary)
        for (const auto& e : ag1) check.expect(e.m > e.n, "strict m > n off the hereditary class");
    if (bundle.hereditary) {
        check.expect(bundle.ag2.empty(), "hereditary => AG2 empty");
        check.expect_eq(bundle.pc, 1L, "hereditary => pc = 1");
    }
    if (bundle.ribbon) check.expect(bundle.ag1.empty(), "ribbon => AG1 empty");

    for (const DictionaryRow& row : dictionary_rows(p, classes, h, bundle, cartan, ribbon))
        check.expect(row.pass, "dictionary row " + row.name);

    ScreeningReport self = self_screen(p, relabel_seed);
    check.expect(!self.distinguished, "self-screen under relabeling is INCONCLUSIVE");
}

SelftestReport run_selftest(const SelftestOptions& options) {
    SelftestReport report;
    Rng rng(options.seed);
    for (long i = 0; i < options.cases; ++i) {
        GenConfig cfg;
        cfg.half_edges = 1 + static_cast<int>(rng.below(options.max_half_edges));
        cfg.transition_fraction = rng.unit();
        cfg.require_connected = false;
        HalfEdgeSystem h = generate(cfg, rng);
        try {
            check_instance(h, rng.next(), report);
        } catch (const std::exception& e) {
            report.failures.push_back("n=" + std::to_string(h.n) +
                                      ": unexpected exception: " + e.what());
        }
        ++report.cases_run;
    }
    return report;
}

}  // namespace gentle
