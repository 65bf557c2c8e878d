#include "defk/parallelism.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "defk/canonical.hpp"
#include "defk/catalog.hpp"

namespace defk {

namespace {

void require_symmetric(const Configuration& config, const char* what) {
    if (!config.symmetric()) {
        std::ostringstream msg;
        msg << what << " is defined for symmetric configurations, got v="
            << config.points() << " b=" << config.line_count();
        throw Error(Fault::not_symmetric, msg.str());
    }
}

}  // namespace

bool is_parallel(const Configuration& config, int i, int j) {
    const int b = config.line_count();
    if (i < 0 || j < 0 || i >= b || j >= b || i == j) {
        std::ostringstream msg;
        msg << "is_parallel needs two distinct line indices in [0, " << b
            << "), got " << i << " and " << j;
        throw std::invalid_argument(msg.str());
    }
    const auto& a = config.line(i);
    const auto& c = config.line(j);
    std::vector<int> common;
    std::set_intersection(a.begin(), a.end(), c.begin(), c.end(),
                          std::back_inserter(common));
    return common.empty();
}

ParallelStructure parallel_graph(const Configuration& config) {
    require_symmetric(config, "parallel_graph");
    const DerivedParams params = derived_params(config);
    const int b = config.line_count();

    ParallelStructure out;
    out.kind = ParallelStructure::Kind::raw;
    out.line_count = b;
    out.adjacency.assign(b, {});
    for (int i = 0; i < b; ++i) {
        for (int j = 0; j < b; ++j) {
            if (i != j && is_parallel(config, i, j)) out.adjacency[i].push_back(j);
        }
    }
    for (int i = 0; i < b; ++i) {
        if (static_cast<int>(out.adjacency[i].size()) != params.deficiency - 1) {
            std::ostringstream msg;
            msg << "line " << i << " has " << out.adjacency[i].size()
                << " parallels, expected " << params.deficiency - 1;
            throw Error(Fault::degree_anomaly, Witness{{i}, {}}, msg.str());
        }
    }
    return out;
}

bool has_tops(const Configuration& config) {
    require_symmetric(config, "has_tops");
    const ParallelStructure graph = parallel_graph(config);
    for (const auto& parallels : graph.adjacency) {
        for (size_t a = 0; a < parallels.size(); ++a) {
            for (size_t b = a + 1; b < parallels.size(); ++b) {
                if (!is_parallel(config, parallels[a], parallels[b])) return false;
            }
        }
    }
    return true;
}

bool satisfies_playfair(const Configuration& config) {
    require_symmetric(config, "satisfies_playfair");
    for (int l = 0; l < config.line_count(); ++l) {
        for (int p = 0; p < config.points(); ++p) {
            if (config.incident(p, l)) continue;
            int parallels_through_p = 0;
            for (int m : config.lines_through(p)) {
                if (is_parallel(config, l, m)) ++parallels_through_p;
            }
            if (parallels_through_p > 1) return false;
        }
    }
    return true;
}

ParallelStructure parallel_classes(const Configuration& config) {
    if (!has_tops(config)) {
        throw Error(Fault::tops_violation,
                    "parallel classes need the transitivity of parallels");
    }
    const ParallelStructure graph = parallel_graph(config);
    const DerivedParams params = derived_params(config);
    const int b = config.line_count();
    const int k = params.deficiency;

    ParallelStructure out;
    out.kind = ParallelStructure::Kind::classes;
    out.line_count = b;
    out.adjacency = graph.adjacency;

    std::vector<char> assigned(b, 0);
    for (int l = 0; l < b; ++l) {
        if (assigned[l]) continue;
        std::vector<int> cls = graph.adjacency[l];
        cls.push_back(l);
        std::sort(cls.begin(), cls.end());
        for (int m : cls) {
            std::vector<int> other = graph.adjacency[m];
            other.push_back(m);
            std::sort(other.begin(), other.end());
            if (other != cls) {
                throw std::logic_error("parallel classes do not close under TOPs");
            }
            assigned[m] = 1;
        }
        if (static_cast<int>(cls.size()) != k) {
            throw std::logic_error("parallel class size differs from the deficiency");
        }
        out.groups.push_back(std::move(cls));
    }
    const int n = params.order;
    if (static_cast<int>(out.groups.size()) != (n * n + n) / k + 1) {
        throw std::logic_error("unexpected parallel class count");
    }
    return out;
}

bool is_k_net(const Configuration& config) {
    const ParallelStructure classes = parallel_classes(config);
    const DerivedParams params = derived_params(config);

    bool every_class_partitions = true;
    for (const auto& cls : classes.groups) {
        std::vector<int> covered(config.points(), 0);
        for (int l : cls) {
            for (int p : config.line(l)) ++covered[p];
        }
        for (int count : covered) {
            if (count != 1) {
                every_class_partitions = false;
                break;
            }
        }
        if (!every_class_partitions) break;
    }

    const bool by_parameters = params.deficiency == params.order + 1;
    if (every_class_partitions != by_parameters) {
        throw std::logic_error("net recognition disagrees with k = n+1");
    }
    return by_parameters;
}

ParallelStructure cycle_decomposition(const Configuration& config) {
    require_symmetric(config, "cycle_decomposition");
    const DerivedParams params = derived_params(config);
    if (params.deficiency != 3) {
        std::ostringstream msg;
        msg << "cycle decomposition needs deficiency 3, got " << params.deficiency;
        throw Error(Fault::not_deficiency_three, msg.str());
    }
    const ParallelStructure graph = parallel_graph(config);
    const int b = config.line_count();

    ParallelStructure out;
    out.kind = ParallelStructure::Kind::cycles;
    out.line_count = b;
    out.adjacency = graph.adjacency;

    std::vector<char> visited(b, 0);
    int covered = 0;
    for (int start = 0; start < b; ++start) {
        if (visited[start]) continue;
        std::vector<int> cycle{start};
        visited[start] = 1;
        int prev = start;
        int cur = std::min(graph.adjacency[start][0], graph.adjacency[start][1]);
        while (cur != start) {
            cycle.push_back(cur);
            visited[cur] = 1;
            const auto& next_pair = graph.adjacency[cur];
            const int next = next_pair[0] == prev ? next_pair[1] : next_pair[0];
            prev = cur;
            cur = next;
        }
        if (cycle.size() < 3) {
            throw std::logic_error("parallel cycle shorter than 3 lines");
        }
        covered += static_cast<int>(cycle.size());
        out.groups.push_back(std::move(cycle));
    }
    if (covered != b) {
        throw std::logic_error("cycles do not cover every line");
    }
    return out;
}

ParityVerdict check_parity_theorem(const Configuration& config) {
    const ParallelStructure cycles = cycle_decomposition(config);

    ParityVerdict verdict;
    verdict.cycle_count = static_cast<int>(cycles.groups.size());
    verdict.even = verdict.cycle_count % 2 == 0;
    for (const auto& cycle : cycles.groups) {
        verdict.lengths.push_back(static_cast<int>(cycle.size()));
    }
    std::sort(verdict.lengths.begin(), verdict.lengths.end());

    const Configuration& nine_one = catalog_get("9.1").config;
    verdict.matches_nine_one =
        config.points() == nine_one.points() && are_isomorphic(config, nine_one);
    verdict.holds = verdict.matches_nine_one || !verdict.even;
    return verdict;
}

}  // namespace defk
