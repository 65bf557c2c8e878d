#pragma once

#include <vector>

#include "defk/configuration.hpp"

namespace defk {

// Disjointness relation between lines, optionally grouped into parallel
// classes or into the cycles of the deficiency-3 decomposition.
struct ParallelStructure {
    enum class Kind { raw, classes, cycles };

    Kind kind = Kind::raw;
    int line_count = 0;
    std::vector<std::vector<int>> adjacency;  // per line, sorted disjoint lines
    std::vector<std::vector<int>> groups;     // classes or cycles, per kind
};

// Whether lines i and j share no point. Requires i != j, both valid.
bool is_parallel(const Configuration& config, int i, int j);

// Adjacency of the parallelism relation. Requires a symmetric configuration;
// throws Error(Fault::degree_anomaly) if any line's parallel count deviates
// from deficiency - 1.
ParallelStructure parallel_graph(const Configuration& config);

// Transitivity of parallels: any two parallels of a common line are
// themselves parallel. Vacuously true when the deficiency is 1 or 2.
bool has_tops(const Configuration& config);

// Playfair reading: no point off a line sees two lines through it parallel
// to that line. Computed directly from incidences, independent of has_tops.
bool satisfies_playfair(const Configuration& config);

// Partition of the lines into mutually parallel classes of size k.
// Requires has_tops; throws Error(Fault::tops_violation) otherwise.
ParallelStructure parallel_classes(const Configuration& config);

// Whether every parallel class partitions the point set; equivalent to
// k = n + 1, and both readings are evaluated and compared.
// Requires has_tops; throws Error(Fault::tops_violation) otherwise.
bool is_k_net(const Configuration& config);

// For deficiency 3 the parallel graph is 2-regular; returns its unique
// partition into cycles, each rotated to start at its smallest line index
// and directed toward the smaller neighbor.
// Throws Error(Fault::not_deficiency_three) for other deficiencies.
ParallelStructure cycle_decomposition(const Configuration& config);

struct ParityVerdict {
    int cycle_count;      // m
    bool even;            // parity of m
    bool matches_nine_one;  // isomorphic to the catalog entry "9.1"
    bool holds;           // matches_nine_one or m is odd
    std::vector<int> lengths;
};

// Evaluates the parity statement for deficiency-3 configurations: each one
// either is the exceptional "9.1" or has an odd number of cycles.
ParityVerdict check_parity_theorem(const Configuration& config);

}  // namespace defk
