#include "defk/canonical.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace defk {

namespace {

// Branch-and-bound search for the lexicographically smallest image of a line
// list under point relabelings. Labels are handed out in increasing order;
// at each node every line gets an optimistic image (unassigned points filled
// with the smallest unused labels), and the sorted optimistic list is a lower
// bound for every completion below the node.
class LabelSearch {
public:
    LabelSearch(int points, const std::vector<std::vector<int>>& lines)
        : v_(points), lines_(lines) {}

    // The lex-min image over all relabelings.
    std::vector<std::vector<int>> minimum() {
        best_.clear();
        stop_when_below_ = false;
        found_below_ = false;
        descend(std::vector<int>(v_, -1), 0);
        return best_;
    }

    // Whether some relabeling maps the list strictly below itself.
    bool improves_on_self() {
        best_ = lines_;
        std::sort(best_.begin(), best_.end());
        stop_when_below_ = true;
        found_below_ = false;
        descend(std::vector<int>(v_, -1), 0);
        return found_below_;
    }

private:
    std::vector<std::vector<int>> image_bound(const std::vector<int>& label,
                                              int assigned) const {
        std::vector<std::vector<int>> image(lines_.size());
        for (size_t i = 0; i < lines_.size(); ++i) {
            auto& img = image[i];
            img.reserve(lines_[i].size());
            int fill = assigned;
            int unassigned = 0;
            for (int p : lines_[i]) {
                if (label[p] >= 0) {
                    img.push_back(label[p]);
                } else {
                    ++unassigned;
                }
            }
            for (int u = 0; u < unassigned; ++u) img.push_back(fill++);
            std::sort(img.begin(), img.end());
        }
        std::sort(image.begin(), image.end());
        return image;
    }

    void descend(std::vector<int> label, int assigned) {
        if (found_below_) return;

        std::vector<std::vector<int>> bound = image_bound(label, assigned);
        if (!best_.empty() && bound > best_) return;

        bool exact = true;
        for (size_t i = 0; i < lines_.size() && exact; ++i) {
            for (int p : lines_[i]) {
                if (label[p] < 0) {
                    exact = false;
                    break;
                }
            }
        }
        if (exact) {
            // Labels of points outside every line cannot affect the image.
            if (best_.empty() || bound < best_) {
                if (stop_when_below_) {
                    found_below_ = true;
                    return;
                }
                best_ = bound;
            }
            return;
        }

        // Try each unassigned point as the next label, cheapest bound first.
        std::vector<std::pair<std::vector<std::vector<int>>, int>> order;
        for (int p = 0; p < v_; ++p) {
            if (label[p] >= 0) continue;
            label[p] = assigned;
            order.emplace_back(image_bound(label, assigned + 1), p);
            label[p] = -1;
        }
        std::sort(order.begin(), order.end());
        for (auto& [bnd, p] : order) {
            if (found_below_) return;
            if (!best_.empty() && bnd > best_) continue;
            label[p] = assigned;
            descend(label, assigned + 1);
            label[p] = -1;
        }
    }

    int v_;
    const std::vector<std::vector<int>>& lines_;
    std::vector<std::vector<int>> best_;
    bool stop_when_below_ = false;
    bool found_below_ = false;
};

}  // namespace

std::string CanonicalForm::fingerprint() const {
    std::ostringstream out;
    out << points << ':';
    for (size_t i = 0; i < lines.size(); ++i) {
        if (i) out << '|';
        for (size_t j = 0; j < lines[i].size(); ++j) {
            if (j) out << ',';
            out << lines[i][j];
        }
    }
    return out.str();
}

CanonicalForm canonical_form(const Configuration& config) {
    LabelSearch search(config.points(), config.lines());
    return CanonicalForm{config.points(), search.minimum()};
}

namespace detail {

// Shared with the enumerator: is the sorted line list already the lex-min
// image of itself? Lists with unused points are allowed.
bool is_lex_min_line_list(int points, const std::vector<std::vector<int>>& lines) {
    LabelSearch search(points, lines);
    return !search.improves_on_self();
}

}  // namespace detail

bool isomorphic_by_search(const Configuration& a, const Configuration& b) {
    if (a.points() != b.points() || a.line_count() != b.line_count() ||
        a.points_per_line() != b.points_per_line() ||
        a.lines_per_point() != b.lines_per_point()) {
        return false;
    }
    const int v = a.points();
    const int bl = b.line_count();
    if (bl > 32) throw std::invalid_argument("direct search handles at most 32 lines");

    // Mask of b-lines through each b-point; a partial image of an a-line must
    // stay inside at least one b-line.
    std::vector<uint32_t> through(v, 0);
    for (int i = 0; i < bl; ++i) {
        for (int p : b.line(i)) through[p] |= uint32_t(1) << i;
    }

    std::vector<int> image(v, -1);
    std::vector<char> used(v, 0);

    auto consistent = [&](int just_mapped) {
        for (int li : a.lines_through(just_mapped)) {
            uint32_t mask = ~uint32_t(0);
            for (int p : a.line(li)) {
                if (image[p] >= 0) mask &= through[image[p]];
            }
            if (mask == 0) return false;
        }
        return true;
    };

    auto dfs = [&](auto&& self, int p) -> bool {
        if (p == v) return true;
        for (int q = 0; q < v; ++q) {
            if (used[q]) continue;
            image[p] = q;
            used[q] = 1;
            if (consistent(p) && self(self, p + 1)) return true;
            image[p] = -1;
            used[q] = 0;
        }
        return false;
    };
    return dfs(dfs, 0);
}

bool are_isomorphic(const Configuration& a, const Configuration& b) {
    if (a.points() != b.points() || a.line_count() != b.line_count() ||
        a.points_per_line() != b.points_per_line() ||
        a.lines_per_point() != b.lines_per_point()) {
        return false;
    }
    const bool by_canon = canonical_form(a) == canonical_form(b);
    if (a.points() <= 10) {
        const bool by_search = isomorphic_by_search(a, b);
        if (by_canon != by_search) {
            throw std::logic_error(
                "canonical forms and direct search disagree on isomorphism");
        }
    }
    return by_canon;
}

}  // namespace defk
