#pragma once

// JSON forms of the public data types. Parsing failures throw parse_error.
//
//   TorusTheory     {"rank": r, "linear_weights": [[..]], "multiplicative_weights": [[..]]}
//   BraneDiagram    {"branes": ["o","x",...], "dims": [0,...]}
//   GroupDescriptor {"kind": "gl", "n": 3} | {"kind": "torus", "rank": r}
//                   | {"kind": "trivial"} | {"kind": "product", "factors": [..]}
//   SpaceDescriptor {"kind": "...", "dim": d, "left_group": {..}, "right_group": {..}, ...}

#include <string_view>

#include "json.hpp"

#include "sdualkit/abelian_coulomb.hpp"
#include "sdualkit/brane.hpp"
#include "sdualkit/descriptors.hpp"

namespace sdualkit {

using Json = nlohmann::json;

Json to_json(const TorusTheory &t);
TorusTheory theory_from_json(const Json &j);

Json to_json(const BraneDiagram &d);
BraneDiagram diagram_from_json(const Json &j);
/// Accepts either the JSON form or the ASCII form.
BraneDiagram parse_diagram(std::string_view text);

Json to_json(const GroupDescriptor &g);
GroupDescriptor group_from_json(const Json &j);

/// Optional fields are omitted when empty. `dim` is written but recomputed
/// on input for kinds that have a factory; a mismatch is a parse error.
Json to_json(const SpaceDescriptor &m);
SpaceDescriptor space_from_json(const Json &j);

Json to_json(const RingPresentation &p);
Json to_json(const LinkingData &l);
Json to_json(const Partition &p);
Json to_json(const OrbitDescriptor &o);

/// Parses text as JSON, rethrowing syntax errors as parse_error.
Json parse_json(std::string_view text);

} // namespace sdualkit
