#pragma once

#include <string>

#include "cli/document.hpp"
#include "jetspace/analysis.hpp"
#include "jetspace/catalog.hpp"
#include "jetspace/invariant_factors.hpp"
#include "jetspace/order.hpp"

namespace jetspace::cli {

/// {"kind": "Finite" | "AtLeast", "value": n}
Json to_json(OrderValue v);
Json to_json(const InvariantProfile& p);
Json to_json(const StabilizationReport& r);
Json to_json(const BtrReport& r);
Json to_json(const MatherReport& r);
Json to_json(const CatalogCheck& c);

/// Inverse of to_json(OrderValue); throws ParseError on malformed input.
OrderValue order_from_json(const Json& j);

/// Indented key/value text; arrays of flat objects become aligned tables.
std::string render_text(const Json& report);

}  // namespace jetspace::cli
