#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "tubecat/int_matrix.hpp"
#include "tubecat/nc_partition.hpp"
#include "tubecat/tube.hpp"
#include "tubecat/wreath.hpp"

namespace tubecat::io {

using nlohmann::json;

// All parsers throw Error(ErrorKind::Parse) with the offending offset, or the
// kernel's own error when the text is well formed but the value is not.

/// `NC(m,n){1,5|2|3,4}`; the empty partition is `NC(0,0){}`.
std::string to_text(const NCPartition& p);
NCPartition parse_partition(std::string_view text);
json to_json(const NCPartition& p);
NCPartition partition_from_json(const json& j);

/// Integers are base-category objects; `(m;a1,...,am)` nests.
std::string to_text(const TubeObject& a);
TubeObject parse_object(std::string_view text);
/// An integer, or {"m": k, "children": [...]}.
json to_json(const TubeObject& a);
TubeObject object_from_json(const json& j);

/// `[NC(..){..}; inner1, ...] : dom -> cod`. Inner morphisms between base
/// objects print as bare partitions, others as bracketed terms. A bare
/// partition is accepted without annotation as a base morphism.
std::string to_text(const TubeMorphism& rho);
TubeMorphism parse_morphism(std::string_view text);
/// {"domain","codomain","outer","inner":[{"outer","inner"},...]}; "inner" is
/// omitted between base objects. A bare partition object is accepted too.
json to_json(const TubeMorphism& rho);
TubeMorphism morphism_from_json(const json& j);

json to_json(const IntMatrix& a);
json to_json(const CheckResult& r);

}  // namespace tubecat::io
