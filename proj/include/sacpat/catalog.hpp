#pragma once

#include <string>
#include <vector>

#include "sacpat/pattern.hpp"

namespace sacpat
{
    // Whether singleton arc consistency is known to decide satisfiability
    // of the class of instances avoiding the pattern.
    enum class SacStatus
    {
        yes,
        no,
        open
    };

    struct CatalogEntry
    {
        std::string name;
        Pattern pattern;
        bool monotone;           // expected value; must agree with is_monotone
        SacStatus sac_solvable;
    };

    // The named patterns, in a fixed order.
    const std::vector<CatalogEntry>& catalog();

    // Lookup by name; throws ModelError for unknown names.
    const CatalogEntry& get_pattern(const std::string& name);

    std::vector<std::string> pattern_names();
}
