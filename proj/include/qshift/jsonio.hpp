#pragma once

#include <json.hpp>

#include "qshift/identities.hpp"
#include "qshift/modrel.hpp"

namespace qshift {

using Json = nlohmann::json;

Json lweight_to_json(const LWeight& w);
LWeight lweight_from_json(const CartanData& cd, const Json& j);

Json qchar_to_json(const TruncatedQChar& c);
TruncatedQChar qchar_from_json(const CartanData& cd, const Json& j);

Json dynkin_to_json(const CartanData& cd);
Json relation_report_to_json(const RelationReport& rep);
Json identity_report_to_json(const IdentityReport& rep);
Json rmatrix_report_to_json(const RMatrixReport& rep);
Json inflation_data_to_json(const InflationData& data);

}  // namespace qshift
