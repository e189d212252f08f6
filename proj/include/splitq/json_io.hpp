#pragma once

#include <nlohmann/json.hpp>

#include "splitq/chords.hpp"
#include "splitq/oracle.hpp"
#include "splitq/polycore.hpp"
#include "splitq/typesys.hpp"

namespace splitq {

using json = nlohmann::ordered_json;

/// Arbitrary-precision integers serialize as JSON numbers when they fit in
/// 64 bits and as decimal strings otherwise.
json int_to_json(const Int& v);
Int int_from_json(const json& j);

json unipoly_to_json(const UniPoly& p);   // {"var":"q","coeffs":[c0,c1,...]}
UniPoly unipoly_from_json(const json& j);

/// {"vars":["q","t"],"terms":[[eq,et,c],...]} sorted by (et,eq).
json bivar_to_json(const BivarPoly& p);
BivarPoly bivar_from_json(const json& j);

json type_to_json(const SimilarityClassType& tau);  // {"pairs":[[d,[parts]],...]}
SimilarityClassType type_from_json(const json& j);

/// {"p":..,"e":..,"rows":..,"cols":..,"entries":[[..],..]} with entries as
/// residues (e = 1) or low-to-high coefficient arrays (e > 1).
json matrix_to_json(const FqMatrix& m);
FqMatrix matrix_from_json(const json& j);

json diagram_to_json(const ChordDiagram& d);  // the 1-based pairing array

} // namespace splitq
