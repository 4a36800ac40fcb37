/*
 * An ordered sequence of brick dimension vectors (nonzero, non-negative
 * integer vectors of a common rank).  Produced from green walks and
 * consumed by the crossing-inequality machinery.
 */

#pragma once

#include "greenwalk/rational.hpp"

namespace cluster {

struct BrickSeq {
    int n = 0;
    std::vector<ratlin::IntVec> dims;
    friend bool operator==(const BrickSeq&, const BrickSeq&) = default;
};

} // namespace cluster
