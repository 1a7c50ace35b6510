#pragma once

#include <string>

#include <json.hpp>

#include "fup/bounds.hpp"
#include "fup/cantor.hpp"
#include "fup/density.hpp"
#include "fup/operators.hpp"
#include "fup/porosity.hpp"

namespace fup {

using json = nlohmann::json;

// CantorSpec <-> {"M": int, "alphabet": [int], "n": int, "L": real}
json to_json(const CantorSpec& spec);
CantorSpec cantor_spec_from_json(const json& j);

// IntervalUnion <-> [[a, b], ...]
json to_json(const IntervalUnion& u);
IntervalUnion interval_union_from_json(const json& j);

json to_json(const PorosityWitness& w);
json to_json(const DensityResult& r);
json to_json(const Spectrum& s);
json to_json(const ThickeningSchedule& s);

// Deterministic float formatting used for CSV output ("%.17g").
std::string fmt_double(double v);

} // namespace fup
