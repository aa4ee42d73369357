#pragma once

#include <string>

#include <json.hpp>

#include "leecodes/codes.hpp"
#include "leecodes/lattice.hpp"
#include "leecodes/products.hpp"
#include "leecodes/tilings.hpp"
#include "leecodes/verify.hpp"

namespace leecodes {

using Json = nlohmann::ordered_json;

// {"kind":"modular_code","n":..,"m":..,"metric":"lee"|"hamming",
//  "codewords":[[..],..]} with codewords in lexicographic order.
Json code_to_json(const ModularCode& code);
ModularCode code_from_json(const Json& j);

// {"kind":"lattice","n":..,"rows":[[..],..]}
Json lattice_to_json(const Lattice& lattice);
Lattice lattice_from_json(const Json& j);

// {"size":eta,"map":[1,..]} (1-based, map[0] must be 1)
Json permutation_to_json(const PermutationPlan& pi);
PermutationPlan permutation_from_json(const Json& j);

Json certificate_to_json(const Certificate& cert);
Json window_report_to_json(const WindowReport& report);

std::string canonical_dump(const Json& j);

}  // namespace leecodes
