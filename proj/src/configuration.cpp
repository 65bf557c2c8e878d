#include "defk/configuration.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <sstream>

namespace defk {

namespace {

std::string join(const std::vector<int>& xs) {
    std::ostringstream out;
    for (size_t i = 0; i < xs.size(); ++i) {
        if (i) out << ' ';
        out << xs[i];
    }
    return out.str();
}

}  // namespace

Configuration Configuration::validate(int points, std::vector<std::vector<int>> lines) {
    if (points < 3) {
        std::ostringstream msg;
        msg << "configuration needs at least 3 points, got " << points;
        throw Error(Fault::too_small, msg.str());
    }

    const int b = static_cast<int>(lines.size());
    for (int i = 0; i < b; ++i) {
        for (int p : lines[i]) {
            if (p < 0 || p >= points) {
                std::ostringstream msg;
                msg << "line " << i << " references point " << p
                    << " outside [0, " << points << ")";
                throw Error(Fault::index_out_of_range, Witness{{i}, {p}}, msg.str());
            }
        }
        std::sort(lines[i].begin(), lines[i].end());
        auto dup = std::adjacent_find(lines[i].begin(), lines[i].end());
        if (dup != lines[i].end()) {
            std::ostringstream msg;
            msg << "line " << i << " repeats point " << *dup;
            throw Error(Fault::repeated_point, Witness{{i}, {*dup}}, msg.str());
        }
    }

    for (int i = 1; i < b; ++i) {
        if (lines[i].size() != lines[0].size()) {
            std::ostringstream msg;
            msg << "line 0 has " << lines[0].size() << " points but line " << i
                << " has " << lines[i].size();
            throw Error(Fault::not_uniform, Witness{{0, i}, {}}, msg.str());
        }
    }
    const int r = b == 0 ? 0 : static_cast<int>(lines[0].size());

    std::vector<std::vector<int>> through(points);
    for (int i = 0; i < b; ++i) {
        for (int p : lines[i]) through[p].push_back(i);
    }
    for (int p = 1; p < points; ++p) {
        if (through[p].size() != through[0].size()) {
            std::ostringstream msg;
            msg << "point 0 lies on " << through[0].size() << " lines but point "
                << p << " lies on " << through[p].size();
            throw Error(Fault::point_degree_nonuniform, Witness{{}, {0, p}}, msg.str());
        }
    }
    const int bpp = points == 0 ? 0 : static_cast<int>(through[0].size());

    // Two lines through a common point pair would show up as a repeated pair.
    for (int p = 0; p < points; ++p) {
        for (size_t a = 0; a < through[p].size(); ++a) {
            for (size_t c = a + 1; c < through[p].size(); ++c) {
                const int i = through[p][a];
                const int j = through[p][c];
                std::vector<int> common;
                std::set_intersection(lines[i].begin(), lines[i].end(),
                                      lines[j].begin(), lines[j].end(),
                                      std::back_inserter(common));
                if (common.size() > 1) {
                    std::ostringstream msg;
                    msg << "lines " << i << " and " << j << " share points "
                        << join(common);
                    throw Error(Fault::double_incidence, Witness{{i, j}, common},
                                msg.str());
                }
            }
        }
    }

    // Connectivity of the bipartite incidence graph, explored point-to-point.
    std::vector<char> seen_point(points, 0);
    std::queue<int> frontier;
    seen_point[0] = 1;
    frontier.push(0);
    int reached = 1;
    while (!frontier.empty()) {
        const int p = frontier.front();
        frontier.pop();
        for (int li : through[p]) {
            for (int q : lines[li]) {
                if (!seen_point[q]) {
                    seen_point[q] = 1;
                    ++reached;
                    frontier.push(q);
                }
            }
        }
    }
    if (reached != points) {
        Witness w;
        for (int p = 0; p < points; ++p) {
            if (seen_point[p]) w.points.push_back(p);
        }
        std::ostringstream msg;
        msg << "incidence graph is disconnected; one component holds points "
            << join(w.points);
        throw Error(Fault::disconnected, std::move(w), msg.str());
    }

    Configuration config;
    config.points_ = points;
    config.points_per_line_ = r;
    config.lines_per_point_ = bpp;
    config.lines_ = std::move(lines);
    config.through_.assign(points, {});
    for (int i = 0; i < b; ++i) {
        for (int p : config.lines_[i]) config.through_[p].push_back(i);
    }
    return config;
}

bool Configuration::incident(int point, int line) const {
    const auto& l = lines_.at(line);
    return std::binary_search(l.begin(), l.end(), point);
}

bool Configuration::operator==(const Configuration& other) const {
    if (points_ != other.points_) return false;
    auto mine = lines_;
    auto theirs = other.lines_;
    std::sort(mine.begin(), mine.end());
    std::sort(theirs.begin(), theirs.end());
    return mine == theirs;
}

DerivedParams derived_params(const Configuration& config) {
    if (!config.symmetric()) {
        std::ostringstream msg;
        msg << "derived parameters need v = b, got v=" << config.points()
            << " b=" << config.line_count();
        throw Error(Fault::not_symmetric, msg.str());
    }
    const int n = config.points_per_line() - 1;
    const int k = config.points() - n * n - n;
    if (k < 1) {
        std::ostringstream msg;
        msg << "order " << n << " forces at least " << n * n + n + 1
            << " points, got " << config.points();
        throw Error(Fault::negative_deficiency, msg.str());
    }
    return DerivedParams{n, k, true};
}

Configuration dual(const Configuration& config) {
    if (!config.symmetric()) {
        std::ostringstream msg;
        msg << "dual is restricted to symmetric configurations, got v="
            << config.points() << " b=" << config.line_count();
        throw Error(Fault::not_symmetric, msg.str());
    }
    std::vector<std::vector<int>> lines(config.points());
    for (int p = 0; p < config.points(); ++p) lines[p] = config.lines_through(p);
    return Configuration::validate(config.line_count(), std::move(lines));
}

Configuration build_cyclic(const CyclicSpec& spec) {
    const int v = spec.modulus;
    std::vector<std::vector<int>> lines;
    if (v > 0) {
        lines.reserve(v);
        for (int j = 0; j < v; ++j) {
            std::vector<int> block;
            block.reserve(spec.base_block.size());
            for (int p : spec.base_block) {
                block.push_back(((p + j) % v + v) % v);
            }
            lines.push_back(std::move(block));
        }
    }
    try {
        return Configuration::validate(v, std::move(lines));
    } catch (const Error& e) {
        std::ostringstream msg;
        msg << "translates of {" << join(spec.base_block) << "} mod " << v
            << " are not a configuration: " << e.what();
        throw Error(Fault::validation_failed, e.witness(), msg.str());
    }
}

}  // namespace defk
