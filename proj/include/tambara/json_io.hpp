#pragma once

#include <json.hpp>

#include "tambara/burnside.hpp"
#include "tambara/gw.hpp"
#include "tambara/ideals.hpp"
#include "tambara/lattice.hpp"

namespace tambara {

/// Insertion-ordered JSON so that divisor-keyed maps serialize in ascending
/// numeric order (plain objects would sort "12" before "2").
using json = nlohmann::ordered_json;

json int_to_json(const Int& z);
Int int_from_json(const json& j);

json element_to_json(const BurnsideElement& x);
BurnsideElement element_from_json(const json& j);

json lattice_to_json(const IntLattice& L);
IntLattice lattice_from_json(const json& j);

json gw_to_json(const GwClass& x);
GwClass gw_from_json(const json& j);

json ideal_to_json(const TambaraIdeal& I);
TambaraIdeal ideal_from_json(const json& j);

json generators_to_json(const GeneratorSet& g);
GeneratorSet generators_from_json(const json& j);

json report_to_json(const VerifyReport& r);

}  // namespace tambara
