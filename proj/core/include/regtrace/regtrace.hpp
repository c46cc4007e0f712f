#pragma once

#include "regtrace/bigint.hpp"
#include "regtrace/census.hpp"
#include "regtrace/error.hpp"
#include "regtrace/graph.hpp"
#include "regtrace/series.hpp"
#include "regtrace/spectral.hpp"

namespace regtrace {

/// Library version string, e.g. "0.3.0".
const char* version();

}  // namespace regtrace
