#pragma once

// JSON serialization. Exact rationals are written as strings ("n" or "n/d").

#include <json.hpp>

#include "switchdim/graph.hpp"
#include "switchdim/represent.hpp"
#include "switchdim/spectral.hpp"
#include "switchdim/switchclass.hpp"

namespace switchdim::io {

using nlohmann::json;

json to_json(const Signature& s);
json to_json(const Graph& g);
/// Accepts {"n", "edges", "labels"?}. Throws std::invalid_argument.
Graph graph_from_json(const json& j);

json to_json(const SpectralReport& r);
json to_json(const SwitchReport& r, const Graph& g);
json to_json(const AdmissibleFamily& f, const Graph& g);
json to_json(const TableRow& row);

json to_json(const PointConfiguration& x, const DistanceSetReport* report = nullptr);
/// Reads {"p", "q", "points", "labels"?}.
PointConfiguration configuration_from_json(const json& j, double tol = 1e-8);
json to_json(const DistanceSetReport& r);

std::string vertex_list(const Graph& g, const VertexSet& u);

}  // namespace switchdim::io
