#include "defk/catalog.hpp"

#include <sstream>

namespace defk {

namespace {

std::vector<CatalogEntry> build_entries() {
    std::vector<CatalogEntry> entries;

    entries.push_back({"fano",
                       build_cyclic({7, {0, 1, 3}}),
                       "projective plane of order 2; cyclic with base block {0,1,3} mod 7"});

    entries.push_back({"mobius-kantor",
                       build_cyclic({8, {0, 1, 3}}),
                       "the (8_3) configuration; cyclic with base block {0,1,3} mod 8"});

    entries.push_back({"pappus",
                       Configuration::validate(9,
                                               {{0, 3, 6},
                                                {1, 4, 7},
                                                {2, 5, 8},
                                                {0, 4, 8},
                                                {1, 5, 6},
                                                {2, 3, 7},
                                                {0, 5, 7},
                                                {1, 3, 8},
                                                {2, 4, 6}}),
                       "Pappus configuration: the affine plane of order 3 with one "
                       "direction of lines removed"});

    entries.push_back({"9.1",
                       Configuration::validate(9,
                                               {{0, 1, 2},
                                                {3, 4, 5},
                                                {6, 7, 8},
                                                {0, 3, 6},
                                                {0, 4, 7},
                                                {1, 3, 7},
                                                {1, 5, 8},
                                                {2, 4, 8},
                                                {2, 5, 6}}),
                       "the (9_3) whose parallels split into a 3-cycle and a 6-cycle"});

    entries.push_back({"9.2",
                       build_cyclic({9, {0, 1, 3}}),
                       "cyclic (9_3) with base block {0,1,3} mod 9; parallels form "
                       "a single 9-cycle"});

    entries.push_back({"desargues",
                       Configuration::validate(10,
                                               {{0, 1, 4},
                                                {0, 2, 5},
                                                {0, 3, 6},
                                                {1, 2, 7},
                                                {1, 3, 8},
                                                {2, 3, 9},
                                                {4, 5, 7},
                                                {4, 6, 8},
                                                {5, 6, 9},
                                                {7, 8, 9}}),
                       "Desargues configuration: points are the 2-subsets and lines "
                       "the 3-subsets of a 5-element set"});

    return entries;
}

}  // namespace

const std::vector<CatalogEntry>& catalog_entries() {
    static const std::vector<CatalogEntry> entries = build_entries();
    return entries;
}

const CatalogEntry& catalog_get(std::string_view name) {
    for (const CatalogEntry& entry : catalog_entries()) {
        if (entry.name == name) return entry;
    }
    std::ostringstream msg;
    msg << "no catalog entry named \"" << name << "\"; known names:";
    for (const CatalogEntry& entry : catalog_entries()) msg << ' ' << entry.name;
    throw Error(Fault::unknown_name, msg.str());
}

}  // namespace defk
