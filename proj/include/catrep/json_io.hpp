#ifndef CATREP_JSON_IO_HPP
#define CATREP_JSON_IO_HPP

#include "json.hpp"

#include "catrep/intertwiners.hpp"
#include "catrep/reps.hpp"
#include "catrep/twovect.hpp"
#include "catrep/xmod.hpp"

namespace catrep {

using nlohmann::json;

// CycNumber <-> {"conductor": n, "coeffs": [[num, den], ...]}
json to_json(const CycNumber& v);
CycNumber cyc_from_json(const json& j);

// CycMatrix <-> {"rows": r, "cols": c, "conductor": n, "entries": [[cyc ...] ...]}
json to_json(const CycMatrix& m);
CycMatrix cyc_matrix_from_json(const json& j);

// NatMatrix <-> {"rows": r, "cols": c, "entries": [[...] ...]}
json to_json(const NatMatrix& m);
NatMatrix nat_matrix_from_json(const json& j);

// TwoMorphism <-> {"source": natmatrix, "target": natmatrix, "blocks": [[cycmatrix ...] ...]}
json to_json(const TwoMorphism& t);
TwoMorphism two_morphism_from_json(const json& j);

// FiniteGroup <-> {"order": n, "table": [[...]], "name"?: "..."}
json to_json(const FiniteGroup& g);
GroupPtr group_from_json(const json& j);

// CrossedModule <-> {"E": group, "G": group, "boundary": [...], "action": [[...]]}
json to_json(const CrossedModule& m);
XModPtr xmod_from_json(const json& j);

// CatRep <-> {"dim": n, "base": [[perm per G element]], "chars": [[exponent per E element] ...]}
json to_json(const CatRep& r);
CatRep rep_from_json(const XModPtr& xmod, const json& j);

// OneIntertwiner <-> {"shape": natmatrix, "action": {"<X>": twomorphism, ...}}
json to_json(const OneIntertwiner& h);
OneIntertwiner intertwiner_from_json(const CatRep& r, const CatRep& t, const json& j);

} // namespace catrep

#endif
