#pragma once

#include <json.hpp>
#include <string>

#include "fricke/dims.hpp"

namespace fricke {

using Json = nlohmann::ordered_json;

/// Stable schema:
/// {"group","level","weight","chi","signs",
///  "terms":{"index","e2","e3","d8","d12","cusp"},
///  "dims":{"cusp","eisenstein","modular"},"flags":[...]}
/// Terms are exact-rational strings "p/q"; undefined dims serialize as null.
Json report_to_json(const DimReport& rep);
DimReport report_from_json(const Json& j);

std::string render_text(const DimReport& rep);

/// Fixed column order: group,N,chi,sign,k,dim_cusp,dim_eis,dim_mod,parity_vanishing
std::string csv_header();
std::string csv_row(const DimReport& rep);

std::string render_power_relations(const PowerRelationReport& rep);

}  // namespace fricke
