#pragma once

#include <nlohmann/json.hpp>

#include "iterlab/djcomp.hpp"
#include "iterlab/finpar.hpp"
#include "iterlab/interference.hpp"
#include "iterlab/matext.hpp"

namespace iterlab {

using json = nlohmann::json;

// {"dom": n, "cod": m, "table": [null|int, ...]} with optional "dom_labels"/"cod_labels".
json map_to_json(const PartialMap& f);
PartialMap map_from_json(const json& j);

// {"dom": [n1, ...], "cod": [m1, ...], "entries": [[map, ...], ...]} row-major.
json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const json& j);

// {"dom": n, "cod": m, "gens": [map, ...]}.
json dj_to_json(const DjMap& s);
DjMap dj_from_json(const json& j, const InterferenceRel& rel = InterferenceRel::maximal());

// {"object_size": n, "pairs": [[maskA, maskB], ...]} or an array of such objects.
InterferenceRel relation_from_json(const json& j);
json relation_to_json(const InterferenceRel& rel);

// Malformed documents raise this, as opposed to well-formed documents that violate
// a precondition.
class FormatError : public Error {
 public:
  using Error::Error;
};

}  // namespace iterlab
