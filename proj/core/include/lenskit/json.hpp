#pragma once

#include "lenskit/atf.hpp"
#include "lenskit/farey.hpp"
#include "lenskit/handle.hpp"
#include "lenskit/lens.hpp"
#include "lenskit/markov.hpp"

#include <nlohmann/json.hpp>

namespace lenskit {

using Json = nlohmann::ordered_json;

// integers that fit in 53 bits go out as numbers, anything larger as a decimal string;
// readers accept either
Json int_json(const Int& v);
Int json_to_int(const Json& j);
Json int_string(const Int& v);

Json to_json(const Slope& s);
Slope slope_from_json(const Json& j);

Json to_json(const DecoratedPath& p);
DecoratedPath path_from_json(const Json& j);

Json to_json(const MarkovTriple& t);
Json to_json(const QTriple& q);
Json to_json(const QReport& r);

Json to_json(const LensSpace& l);
LensSpace lens_from_json(const Json& j);
Json to_json(const ThreeManifold& m);

Json to_json(const HorizontalDiagram& d);
HorizontalDiagram diagram_from_json(const Json& j);
Json to_json(const Cp2Recognition& r);

Json to_json(const AtfDiagram& d);
AtfDiagram atf_from_json(const Json& j);

}  // namespace lenskit
