#pragma once

// JSON interchange: scalars {"re":"p/q","im":"r/s"}, tuple documents
// {"n":N,"matrices":[[[s,s],[s,s]],...]}, profiles, reduced sets and
// classification verdicts. Keys are emitted in a fixed order.

#include <string>
#include <string_view>

#include <json.hpp>

#include "matinv/geometry.hpp"
#include "matinv/separators.hpp"

namespace matinv::io {

using Json = nlohmann::ordered_json;

Json to_json(const GaussianRational& x);
Json to_json(const Mat2& m);
Json to_json(const MatTuple& a);
/// Array of {"label", "value"} in canonical order.
Json to_json(const InvariantProfile& profile);
Json to_json(const ReducedSet& set);
Json to_json(const Decision& decision);
Json to_json(const ClassificationReport& report);
/// [i,j,k] with 1-based slots.
Json to_json(const SlotTriple& t);

/// Throws ParseError (naming the offending field) or ZeroDenominator.
GaussianRational parse_scalar(const Json& j, const std::string& where = "scalar");

/// Parses a tuple document. Throws ParseError, ZeroDenominator or
/// LengthMismatch.
MatTuple parse_tuple(const Json& doc);
MatTuple parse_tuple_text(std::string_view text);

}  // namespace matinv::io
