#pragma once

#include <optional>
#include <vector>

#include "defk/canonical.hpp"
#include "defk/configuration.hpp"

namespace defk {

// Desk-scale limits. Hard caps apply regardless of what is requested:
// r = 2 up to v = 20, r = 3 up to v = 10, r = 4 up to v = 13.
struct SearchBudget {
    int max_v = 0;  // 0 means the hard cap for the line size
    int max_r = 4;
    std::optional<long long> node_limit;
};

struct EnumerationOptions {
    // The per-extension lex-minimality test. Disabling it makes the search
    // walk every labeled object and deduplicate by canonical form, which is
    // only tolerable at tiny sizes; results must not change.
    bool orderly_pruning = true;
};

// One representative per isomorphism class of connected symmetric (v_r)
// configurations, sorted by fingerprint. Representatives are canonically
// labeled. Throws Error(Fault::budget_exceeded) outside the budget or when
// the node limit is hit.
std::vector<Configuration> enumerate_configurations(
    int v, int r, const SearchBudget& budget = {},
    const EnumerationOptions& options = {});

}  // namespace defk
