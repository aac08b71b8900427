#pragma once
#include <string>

#include <json.hpp>

#include "mdt/planepart.hpp"
#include "mdt/qseries.hpp"
#include "mdt/quiver.hpp"
#include "mdt/ring.hpp"

namespace mdt {

using json = nlohmann::json;

// TPoly <-> {"exponent": "coefficient"} with decimal strings
json tpoly_to_json(const TPoly& p);
TPoly tpoly_from_json(const json& j);

// TRat <-> {"num": {...}, "den": {...}}
json trat_to_json(const TRat& r);
TRat trat_from_json(const json& j);

// QSeries <-> {"r": r, "trunc": N, "coeffs": [TRat...]}; r is carried as
// metadata and may be 0 when not applicable
json qseries_to_json(const QSeries& s, int r);
QSeries qseries_from_json(const json& j, int* r_out = nullptr);

// one row per (n, exponent): "n,t_exponent,coefficient"
std::string qseries_to_csv(const QSeries& s);

// TriPoly <-> {"x,y,z": "coefficient"}
json tripoly_to_json(const TriPoly& p);
TriPoly tripoly_from_json(const json& j);

json quiver_to_json(const Quiver& q);
Quiver quiver_from_json(const json& j);

// {"n": 2, "A1": [["p/q",...],...], "A2": ..., "A3": ..., "u": [["p/q",...],...]}
json framed_rep_to_json(const FramedRep& rep);
FramedRep framed_rep_from_json(const json& j);

json distribution_to_json(const Distribution& d, int r, long n);
// rows "r,n,s_value,count"
std::string distribution_to_csv(const Distribution& d, int r, long n);

} // namespace mdt
