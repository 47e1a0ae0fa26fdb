#pragma once

#include "charstack/charstack_model.hpp"

#include <string>

// vendored single-header nlohmann/json
#include <json.hpp>

namespace charstack {

using json = nlohmann::json;

json ratfun_to_json(const RatFun& f);
RatFun ratfun_from_json(const json& j);

json partition_to_json(const Partition& p);
Partition partition_from_json(const json& j);

/// k-tuple form: [[2,1],[1,1],...]
json multipartition_to_json(const MultiPartition& mp);
MultiPartition multipartition_from_json(const json& j);

/// Vertex-keyed form for quiver-indexed data: {"0": 2, "1:1": 1, ...}
json dimvec_to_json(const StarQuiverData& data, const DimVec& v);

CharStackConfig config_from_json(const json& j);
json config_to_json(const CharStackConfig& config);

} // namespace charstack
