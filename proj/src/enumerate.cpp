#include "defk/enumerate.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "defk/errors.hpp"

namespace defk {

namespace detail {
bool is_lex_min_line_list(int points, const std::vector<std::vector<int>>& lines);
}

namespace {

int hard_cap(int r) {
    switch (r) {
        case 2: return 20;
        case 3: return 10;
        case 4: return 13;
        default: return 0;
    }
}

class Generator {
public:
    Generator(int v, int r, std::optional<long long> node_limit, bool orderly)
        : v_(v), r_(r), node_limit_(node_limit), orderly_(orderly),
          degree_(v, 0), pair_used_(size_t(v) * v, 0) {}

    std::vector<Configuration> run() {
        extend();
        std::sort(found_.begin(), found_.end(),
                  [](const Configuration& a, const Configuration& b) {
                      return a.lines() < b.lines();
                  });
        return found_;
    }

private:
    bool pair_used(int p, int q) const { return pair_used_[size_t(p) * v_ + q]; }

    void mark_pairs(const std::vector<int>& line, char value) {
        for (size_t a = 0; a < line.size(); ++a) {
            for (size_t b = a + 1; b < line.size(); ++b) {
                pair_used_[size_t(line[a]) * v_ + line[b]] = value;
                pair_used_[size_t(line[b]) * v_ + line[a]] = value;
            }
        }
    }

    // A point still needing d more lines must find d compatible partners per
    // slot among unsaturated points it has not met, and enough line slots.
    bool feasible() const {
        const int slots = v_ - static_cast<int>(lines_.size());
        for (int p = 0; p < v_; ++p) {
            const int deficit = r_ - degree_[p];
            if (deficit == 0) continue;
            if (deficit > slots) return false;
            int partners = 0;
            for (int q = 0; q < v_; ++q) {
                if (q != p && degree_[q] < r_ && !pair_used(p, q)) ++partners;
            }
            if (partners < deficit * (r_ - 1)) return false;
        }
        return true;
    }

    void count_node() {
        ++nodes_;
        if (node_limit_ && nodes_ > *node_limit_) {
            std::ostringstream msg;
            msg << "search stopped after " << *node_limit_ << " nodes";
            throw Error(Fault::budget_exceeded, msg.str());
        }
    }

    void emit() {
        Configuration config = Configuration::validate(v_, lines_);
        if (orderly_) {
            // Surviving leaves are already lex-min labeled.
            CanonicalForm canon{v_, config.lines()};
            if (!seen_.insert(canon.fingerprint()).second) return;
        } else {
            CanonicalForm canon = canonical_form(config);
            if (!seen_.insert(canon.fingerprint()).second) return;
            config = Configuration::validate(canon.points, canon.lines);
        }
        found_.push_back(std::move(config));
    }

    void extend() {
        count_node();
        if (static_cast<int>(lines_.size()) == v_) {
            for (int p = 0; p < v_; ++p) {
                if (degree_[p] != r_) return;
            }
            if (connected()) emit();
            return;
        }
        if (!feasible()) return;

        int anchor = -1;
        for (int p = 0; p < v_; ++p) {
            if (degree_[p] < r_) {
                anchor = p;
                break;
            }
        }
        if (anchor < 0) return;  // saturated but too few lines

        std::vector<int> line{anchor};
        choose_rest(line, anchor + 1);
    }

    void choose_rest(std::vector<int>& line, int from) {
        if (static_cast<int>(line.size()) == r_) {
            if (!lines_.empty() && !(lines_.back() < line)) return;
            lines_.push_back(line);
            for (int p : line) ++degree_[p];
            mark_pairs(line, 1);
            if (!orderly_ || detail::is_lex_min_line_list(v_, lines_)) extend();
            mark_pairs(line, 0);
            for (int p : line) --degree_[p];
            lines_.pop_back();
            return;
        }
        for (int q = from; q < v_; ++q) {
            if (degree_[q] >= r_) continue;
            bool clash = false;
            for (int p : line) {
                if (pair_used(p, q)) {
                    clash = true;
                    break;
                }
            }
            if (clash) continue;
            line.push_back(q);
            choose_rest(line, q + 1);
            line.pop_back();
        }
    }

    bool connected() const {
        std::vector<char> seen(v_, 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        int reached = 1;
        while (!stack.empty()) {
            const int p = stack.back();
            stack.pop_back();
            for (const auto& line : lines_) {
                if (!std::binary_search(line.begin(), line.end(), p)) continue;
                for (int q : line) {
                    if (!seen[q]) {
                        seen[q] = 1;
                        ++reached;
                        stack.push_back(q);
                    }
                }
            }
        }
        return reached == v_;
    }

    int v_;
    int r_;
    std::optional<long long> node_limit_;
    bool orderly_;
    long long nodes_ = 0;
    std::vector<std::vector<int>> lines_;
    std::vector<int> degree_;
    std::vector<char> pair_used_;
    std::set<std::string> seen_;
    std::vector<Configuration> found_;
};

}  // namespace

std::vector<Configuration> enumerate_configurations(int v, int r,
                                                    const SearchBudget& budget,
                                                    const EnumerationOptions& options) {
    const int cap = hard_cap(r);
    if (cap == 0) {
        std::ostringstream msg;
        msg << "line size " << r << " is beyond the desk-scale budget";
        throw Error(Fault::budget_exceeded, msg.str());
    }
    if (budget.max_r != 0 && r > budget.max_r) {
        std::ostringstream msg;
        msg << "line size " << r << " exceeds the requested cap " << budget.max_r;
        throw Error(Fault::budget_exceeded, msg.str());
    }
    int max_v = cap;
    if (budget.max_v != 0) max_v = std::min(max_v, budget.max_v);
    if (v < 3 || v > max_v) {
        std::ostringstream msg;
        msg << "point count " << v << " outside [3, " << max_v << "] for line size "
            << r;
        throw Error(Fault::budget_exceeded, msg.str());
    }

    Generator generator(v, r, budget.node_limit, options.orderly_pruning);
    return generator.run();
}

}  // namespace defk
