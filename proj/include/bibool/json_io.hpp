#pragma once

#include <json.hpp>

#include "bibool/ncseries.hpp"
#include "bibool/partition.hpp"
#include "bibool/positivity.hpp"
#include "bibool/table.hpp"

namespace bibool {

using Json = nlohmann::json;

Json measure_to_json(const AtomicMeasure2D& mu);
AtomicMeasure2D measure_from_json(const Json& j);

Json table_to_json(const ExponentTable& t);
ExponentTable table_from_json(const Json& j);

// Either {"type":"atomic",...} (converted at `degree`) or {"type":"table",...}
// (must already be a moment table).
ExponentTable moments_from_json(const Json& j, int degree);

Json ncseries_to_json(const NcSeries& s);
NcSeries ncseries_from_json(const Json& j);

Json matrix_to_json(const MomentMatrix& m);

// 1-based blocks, e.g. [[1,4],[2],[3,5]].
Json partition_to_json(const Partition& p);
Partition partition_from_json(const Json& j, int n);

ChiMap chi_from_string(const std::string& s);

}  // namespace bibool
