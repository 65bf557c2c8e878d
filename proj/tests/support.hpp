#pragma once

// Test-only oracles: slow, independent implementations used to cross-check
// the library. Nothing here is linked into the shipped code.

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "defk/bigint.hpp"
#include "defk/canonical.hpp"
#include "defk/catalog.hpp"
#include "defk/configuration.hpp"
#include "defk/errors.hpp"
#include "defk/matrix.hpp"

namespace testsupport {

// Laplace expansion along the first row. Exponential; keep dimensions small.
inline defk::BigInt cofactor_det(const defk::IntMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("cofactor_det: not square");
    const int n = m.rows();
    if (n > 10) throw std::invalid_argument("cofactor_det: too large");
    if (n == 0) return 1;
    if (n == 1) return m.at(0, 0);
    defk::BigInt total = 0;
    for (int j = 0; j < n; ++j) {
        if (m.at(0, j) == 0) continue;
        defk::IntMatrix minor(n - 1, n - 1);
        for (int r = 1; r < n; ++r) {
            int cc = 0;
            for (int c = 0; c < n; ++c) {
                if (c == j) continue;
                minor.at(r - 1, cc++) = m.at(r, c);
            }
        }
        const defk::BigInt term = m.at(0, j) * cofactor_det(minor);
        total += (j % 2 == 0) ? term : -term;
    }
    return total;
}

// Direct axiom check, written without reference to Configuration internals.
// Returns an empty string when the line set is a valid configuration on v
// points, otherwise the name of the first problem found.
inline std::string brute_axiom_failure(int v, const std::vector<std::vector<int>>& lines) {
    if (v < 3) return "too_small";
    for (const auto& line : lines) {
        std::set<int> seen;
        for (int p : line) {
            if (p < 0 || p >= v) return "index_out_of_range";
            if (!seen.insert(p).second) return "repeated_point";
        }
    }
    for (size_t i = 1; i < lines.size(); ++i) {
        if (lines[i].size() != lines[0].size()) return "not_uniform";
    }
    std::vector<int> degree(v, 0);
    for (const auto& line : lines) {
        for (int p : line) ++degree[p];
    }
    for (int p = 1; p < v; ++p) {
        if (degree[p] != degree[0]) return "point_degree_nonuniform";
    }
    for (size_t i = 0; i < lines.size(); ++i) {
        for (size_t j = i + 1; j < lines.size(); ++j) {
            int common = 0;
            for (int p : lines[i]) {
                if (std::count(lines[j].begin(), lines[j].end(), p)) ++common;
            }
            if (common > 1) return "double_incidence";
        }
    }
    std::vector<int> stack{0};
    std::vector<bool> seen(v, false);
    seen[0] = true;
    int reached = 1;
    while (!stack.empty()) {
        const int p = stack.back();
        stack.pop_back();
        for (const auto& line : lines) {
            if (!std::count(line.begin(), line.end(), p)) continue;
            for (int q : line) {
                if (!seen[q]) {
                    seen[q] = true;
                    ++reached;
                    stack.push_back(q);
                }
            }
        }
    }
    if (reached != v) return "disconnected";
    return "";
}

inline std::string first_fault(int v, const std::vector<std::vector<int>>& lines) {
    try {
        defk::Configuration::validate(v, lines);
        return "";
    } catch (const defk::Error& e) {
        return std::string(defk::fault_name(e.fault()));
    }
}

// Applies a point permutation: point p becomes perm[p].
inline defk::Configuration relabel(const defk::Configuration& config,
                                   const std::vector<int>& perm) {
    std::vector<std::vector<int>> lines;
    for (int i = 0; i < config.line_count(); ++i) {
        std::vector<int> line;
        for (int p : config.line(i)) line.push_back(perm.at(p));
        lines.push_back(std::move(line));
    }
    return defk::Configuration::validate(config.points(), lines);
}

inline std::vector<int> random_perm(int n, std::mt19937& rng) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    return perm;
}

// A symmetric configuration is cyclic iff it is isomorphic to the translate
// development of some base block. Trying every block through 0 is exhaustive:
// any isomorphism can be composed with a translation fixing 0.
inline bool is_cyclic_brute(const defk::Configuration& config) {
    const int v = config.points();
    const int r = config.points_per_line();
    std::vector<int> pick(r);
    std::vector<std::vector<int>> blocks;
    // all r-subsets of {0..v-1} containing 0
    std::vector<int> rest;
    std::function<void(int, int)> grow = [&](int start, int depth) {
        if (depth == r) {
            blocks.push_back(pick);
            return;
        }
        for (int p = start; p < v; ++p) {
            pick[depth] = p;
            grow(p + 1, depth + 1);
        }
    };
    pick[0] = 0;
    grow(1, 1);
    for (const auto& block : blocks) {
        try {
            const defk::Configuration candidate =
                defk::build_cyclic({v, block});
            if (defk::are_isomorphic(config, candidate)) return true;
        } catch (const defk::Error&) {
            continue;
        }
    }
    return false;
}

// Partitions of total into nondecreasing parts >= 3, at most max_parts parts.
inline std::vector<std::vector<int>> partitions_min3(int total, int max_parts) {
    std::vector<std::vector<int>> out;
    std::vector<int> parts;
    std::function<void(int, int)> grow = [&](int remaining, int least) {
        if (remaining == 0) {
            out.push_back(parts);
            return;
        }
        if (static_cast<int>(parts.size()) == max_parts) return;
        for (int next = least; next <= remaining; ++next) {
            if (remaining - next != 0 && remaining - next < next) continue;
            parts.push_back(next);
            grow(remaining - next, next);
            parts.pop_back();
        }
    };
    grow(total, 3);
    return out;
}

}  // namespace testsupport
