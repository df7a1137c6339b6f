#pragma once

#include "json.hpp"

#include "ppgrowth/automorphism.hpp"
#include "ppgrowth/growthlab.hpp"
#include "ppgrowth/machines.hpp"
#include "ppgrowth/potpos.hpp"
#include "ppgrowth/spectral.hpp"

namespace ppgrowth {

using json = nlohmann::json;

// Moves: {"sub": "b->ba"}, {"inv": "a"}, {"swap": "ab"}.
json to_json(const ElementaryMove& move, int rank);
ElementaryMove move_from_json(const json& j, int rank);
json to_json(const Automorphism& phi);
Automorphism automorphism_from_json(const json& j, int rank);

// Integer entries as strings.
json to_json(const IntMatrix& m);
// Ascending coefficients as strings.
json to_json(const IntPolynomial& p);
json to_json(const RootApproximation& r);

json to_json(const Witness& w);
json to_json(const PropertyReport& r);
json to_json(const Decision& d);
json to_json(const SwitchResult& s);
json to_json(const GrowthSeries& g);
json to_json(const std::vector<DensityPoint>& points);
json to_json(const TableRow& row, int digits);
json to_json(const SampleReport& s);

}  // namespace ppgrowth
