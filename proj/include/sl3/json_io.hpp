#pragma once

#include "sl3/exchange.hpp"
#include "sl3/lattice.hpp"
#include "sl3/triangulation.hpp"

#include <json.hpp>

#include <string>

namespace sl3 {

using nlohmann::json;

json to_json(const ExchangeSeed& seed);
json to_json(const TropicalPoint& p);
json to_json(const MutationPath& path);
json to_json(const Coweight& c);
json to_json(const Weight& w);
json to_json(const Triangulation& tri);

ExchangeSeed seed_from_json(const json& j);
TropicalPoint point_from_json(const json& j);
MutationPath path_from_json(const json& j);
Coweight coweight_from_json(const json& j);
Triangulation triangulation_from_json(const json& j);

// Parses text, or the contents of a file when the text starts with '@'.
json parse_json_arg(const std::string& text);
json read_json_file(const std::string& path);
Triangulation load_triangulation(const std::string& path);

}  // namespace sl3
