#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "defk/configuration.hpp"

namespace defk {

struct CatalogEntry {
    std::string name;
    Configuration config;
    std::string notes;
};

// The named reference configurations, in a fixed order.
const std::vector<CatalogEntry>& catalog_entries();

// Lookup by name; throws Error(Fault::unknown_name) for anything outside
// {fano, mobius-kantor, pappus, desargues, 9.1, 9.2}.
const CatalogEntry& catalog_get(std::string_view name);

}  // namespace defk
