#pragma once

#include <string>
#include <vector>

#include "defk/configuration.hpp"

namespace defk {

// Lexicographically smallest line list over all point relabelings: a
// label-invariant identity, equal for two configurations iff they are
// isomorphic.
struct CanonicalForm {
    int points = 0;
    std::vector<std::vector<int>> lines;

    // Compact single-line encoding of the canonical line list.
    std::string fingerprint() const;

    bool operator==(const CanonicalForm&) const = default;
    auto operator<=>(const CanonicalForm&) const = default;
};

CanonicalForm canonical_form(const Configuration& config);

// True iff some point relabeling maps one line set onto the other. Uses
// canonical forms; small inputs are cross-checked against a direct
// permutation search.
bool are_isomorphic(const Configuration& a, const Configuration& b);

// Direct backtracking search for a relabeling of a onto b; exposed so the
// canonical machinery can be validated against it.
bool isomorphic_by_search(const Configuration& a, const Configuration& b);

}  // namespace defk
