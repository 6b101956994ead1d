#pragma once

#include <string>

namespace mimlab
{
    /// Size bounds for the exponential solvers.
    struct Limits
    {
        int exact = 9;      ///< mim-width by enumeration
        int treewidth = 16; ///< treewidth subset DP
        int cycle = 16;     ///< cycle enumeration and orientation search
        int upper = 128;    ///< caterpillar local search
    };

    /// Applies overrides of the form `exact=10,tw=18,cycle=14,upper=200`. Unknown keys
    /// or malformed values throw InvalidParameter.
    auto apply_limit_overrides(Limits limits, const std::string & spec) -> Limits;
}
