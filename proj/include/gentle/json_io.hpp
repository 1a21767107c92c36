#pragma once

#include <json.hpp>

#include "gentle/cartan.hpp"
#include "gentle/invariants.hpp"
#include "gentle/screen.hpp"
#include "gentle/surface.hpp"

namespace gentle {

using Json = nlohmann::ordered_json;

Json bundle_json(const InvariantBundle& bundle);
Json matrix_json(const IntMatrix& m);
Json integer_json(const Integer& value);  // number when it fits, decimal string otherwise
Json surface_json(const SurfaceProfile& profile, const RibbonData& r);
Json screen_json(const ScreeningReport& report);
Json dictionary_json(const std::vector<DictionaryRow>& rows);

}  // namespace gentle
