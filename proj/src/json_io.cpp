#include "gentle/json_io.hpp"

#include <cstdint>
#include <limits>

namespace gentle {

Json integer_json(const Integer& value) {
    if (value >= std::numeric_limits<std::int64_t>::min() &&
        value <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(value);
    return value.str();
}

Json matrix_json(const IntMatrix& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(integer_json(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

namespace {

Json ag_json(const AGMultiset& ag) {
    Json out = Json::array();
    for (const auto& entry : ag) out.push_back(Json::array({entry.m, entry.n}));
    return out;
}

}  // namespace

Json bundle_json(const InvariantBundle& bundle) {
    Json out;
    out["pc"] = bundle.pc;
    out["bc"] = bundle.bc;
    out["ag1"] = ag_json(bundle.ag1);
    out["ag2"] = ag_json(bundle.ag2);
    out["counts"] = Json{{"q0", bundle.counts.vertices},
                         {"q1", bundle.counts.arrows},
                         {"q0t", bundle.counts.transition},
                         {"q0c", bundle.counts.crossing},
                         {"q1ft", bundle.counts.thread_arrows},
                         {"q1fc", bundle.counts.cycle_arrows}};
    out["profile"] = bundle.profile;
    out["class"] = to_string(bundle.cls);
    return out;
}

Json surface_json(const SurfaceProfile& profile, const RibbonData& r) {
    Json out;
    out["genus"] = profile.genus;
    out["euler"] = profile.euler;
    out["boundary_faces"] = profile.boundary_faces;
    out["punctured_faces"] = profile.punctured_faces;
    out["edge_census"] =
        Json{{"ordinary", r.ordinary}, {"loop", r.loops}, {"truncated", r.truncated}};
    return out;
}

Json screen_json(const ScreeningReport& report) {
    Json out;
    out["verdict"] = report.verdict();
    Json rows = Json::array();
    for (const auto& row : report.rows) {
        rows.push_back(Json{{"invariant", row.invariant},
                            {"a", row.value_a},
                            {"b", row.value_b},
                            {"equal", row.equal}});
    }
    out["rows"] = std::move(rows);
    out["failing"] = report.failing;
    return out;
}

Json dictionary_json(const std::vector<DictionaryRow>& rows) {
    Json out = Json::array();
    for (const auto& row : rows) {
        out.push_back(Json{{"row", row.name},
                           {"quiver", row.quiver_value},
                           {"graph", row.graph_value},
                           {"pass", row.pass}});
    }
    return out;
}

}  // namespace gentle
