#pragma once

#include <nlohmann/json_fwd.hpp>
#include <string>

#include "treehardy/hardy.hpp"
#include "treehardy/schur.hpp"

namespace treehardy {

// Document shapes:
//   KElement     {"prefix": [[re,im],...], "tail": [re,im]}
//   HardySeries  {"coeffs": [KElement,...]}
//   problem      {"points": [KElement,...], "tol": float, "inv_threshold": float}
//   solution     {"blaschke_product": HardySeries, "ks": [KElement,...],
//                 "residuals": [float,...]}
// All parsers throw ParseError on malformed documents. Square-summable
// positions must carry tail [0,0].

nlohmann::json to_json(const KElement& c);
nlohmann::json to_json(const HardySeries& s);
nlohmann::json to_json(const InterpolationSolution& solution);

KElement kelement_from_json(const nlohmann::json& doc);
KElement k2element_from_json(const nlohmann::json& doc);
HardySeries series_from_json(const nlohmann::json& doc);
InterpolationProblem problem_from_json(const nlohmann::json& doc);

nlohmann::json load_json_file(const std::string& path);

}  // namespace treehardy
