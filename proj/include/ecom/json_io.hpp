#pragma once

#include <string>

#include "json.hpp"

#include "ecom/analyze.hpp"
#include "ecom/catalog.hpp"
#include "ecom/simplicial.hpp"

namespace ecom {

using nlohmann::json;

// include_timings keeps the default JSON bit-identical across runs; timing
// data is opt-in.
json report_to_json(const HomotopyReport& r, bool include_timings = false);

json verify_to_json(const VerifyResult& r);

json poset_to_json(const CosetPoset& p);
CosetPoset poset_from_json(const json& j);

// Dimension-keyed simplex lists: {"0": [[v], ...], "1": [[a,b], ...], ...}.
json complex_to_json(const SimplicialComplex& k);
SimplicialComplex complex_from_json(const json& j);

// Sparse boundary matrices, one "d i j value" line per nonzero entry, with
// "# d <rows> <cols>" size headers.
std::string boundaries_text(const SimplicialComplex& k);

json catalog_to_json();

}  // namespace ecom
