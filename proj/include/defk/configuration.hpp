#pragma once

#include <vector>

#include "defk/errors.hpp"

namespace defk {

// A validated incidence structure: v points, b lines, every line carrying the
// same number r of points, every point on the same number bpp of lines, two
// distinct lines sharing at most one point, connected as a bipartite graph.
// Each line is stored as a sorted point set; the line list keeps its input
// order, and equality ignores that order.
class Configuration {
public:
    // The only way to obtain a Configuration. Throws Error with the first
    // violated axiom and a witness naming the offending lines/points.
    static Configuration validate(int points, std::vector<std::vector<int>> lines);

    int points() const { return points_; }
    int line_count() const { return static_cast<int>(lines_.size()); }
    int points_per_line() const { return points_per_line_; }
    int lines_per_point() const { return lines_per_point_; }
    bool symmetric() const { return points_ == line_count(); }

    const std::vector<std::vector<int>>& lines() const { return lines_; }
    const std::vector<int>& line(int i) const { return lines_.at(i); }
    const std::vector<int>& lines_through(int p) const { return through_.at(p); }
    bool incident(int point, int line) const;

    bool operator==(const Configuration& other) const;

private:
    Configuration() = default;

    int points_ = 0;
    int points_per_line_ = 0;
    int lines_per_point_ = 0;
    std::vector<std::vector<int>> lines_;
    std::vector<std::vector<int>> through_;
};

struct DerivedParams {
    int order;        // n = r - 1
    int deficiency;   // k = v - n^2 - n
    bool symmetric;
};

// Requires a symmetric configuration; the deficiency of a valid one is >= 1.
DerivedParams derived_params(const Configuration& config);

// Points and lines exchanged. Restricted to symmetric configurations.
Configuration dual(const Configuration& config);

struct CyclicSpec {
    int modulus;                  // v: points are residues mod v
    std::vector<int> base_block;  // distinct residues; line j is the block + j
};

// Builds the v translates of the base block and validates the result.
// Throws Error(Fault::validation_failed) when the translates do not form a
// configuration (e.g. a repeated difference makes two blocks share 2 points).
Configuration build_cyclic(const CyclicSpec& spec);

}  // namespace defk
