#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "defk/catalog.hpp"
#include "defk/configuration.hpp"
#include "defk/errors.hpp"
#include "defk/parallelism.hpp"
#include "support.hpp"

using defk::Configuration;
using defk::Error;
using defk::Fault;

namespace {

Configuration cat(const char* name) { return defk::catalog_get(name).config; }

}  // namespace

TEST_CASE("is_parallel on 9.1") {
    const Configuration c = cat("9.1");
    // line 0 = {0,1,2}, line 1 = {3,4,5}, line 3 = {0,3,6}, line 4 = {0,4,7}
    CHECK(defk::is_parallel(c, 0, 1));
    CHECK(!defk::is_parallel(c, 3, 4));
    CHECK_THROWS_AS(defk::is_parallel(c, 2, 2), std::invalid_argument);
    CHECK_THROWS_AS(defk::is_parallel(c, 0, 9), std::invalid_argument);
}

TEST_CASE("parallel graph shapes across the catalog") {
    const auto fano = defk::parallel_graph(cat("fano"));
    for (const auto& row : fano.adjacency) CHECK(row.empty());

    const auto mk = defk::parallel_graph(cat("mobius-kantor"));
    std::set<int> seen;
    for (int i = 0; i < mk.line_count; ++i) {
        REQUIRE(mk.adjacency[i].size() == 1);
        const int j = mk.adjacency[i][0];
        CHECK(mk.adjacency[j] == std::vector<int>{i});
        seen.insert(i);
        seen.insert(j);
    }
    CHECK(seen.size() == 8);

    const auto nine = defk::parallel_graph(cat("9.1"));
    for (const auto& row : nine.adjacency) CHECK(row.size() == 2);
}

TEST_CASE("parallel graph adjacency is symmetric and irreflexive") {
    for (const auto& entry : defk::catalog_entries()) {
        const auto graph = defk::parallel_graph(entry.config);
        for (int i = 0; i < graph.line_count; ++i) {
            for (int j : graph.adjacency[i]) {
                CHECK(i != j);
                CHECK(std::count(graph.adjacency[j].begin(), graph.adjacency[j].end(), i) == 1);
            }
        }
    }
}

TEST_CASE("tops across the catalog") {
    CHECK(defk::has_tops(cat("pappus")));
    CHECK(!defk::has_tops(cat("9.2")));
    CHECK(!defk::has_tops(cat("9.1")));
    CHECK(defk::has_tops(cat("fano")));
    CHECK(defk::has_tops(cat("mobius-kantor")));
    CHECK(!defk::has_tops(cat("desargues")));
}

TEST_CASE("9.2 violates transitivity through its shared parallel") {
    const Configuration c = cat("9.2");
    // parallels of {0,1,3} are {4,5,7} and {5,6,8}, which share point 5
    const auto graph = defk::parallel_graph(c);
    CHECK(graph.adjacency[0] == std::vector<int>{4, 5});
    CHECK(c.line(4) == std::vector<int>{4, 5, 7});
    CHECK(c.line(5) == std::vector<int>{5, 6, 8});
    CHECK(!defk::is_parallel(c, 4, 5));
}

TEST_CASE("playfair equals tops on the catalog") {
    for (const auto& entry : defk::catalog_entries()) {
        CHECK(defk::satisfies_playfair(entry.config) == defk::has_tops(entry.config));
    }
}

TEST_CASE("parallel classes partition the lines") {
    struct Row {
        const char* name;
        size_t classes;
        size_t size;
    };
    for (const Row& row : {Row{"pappus", 3, 3}, Row{"mobius-kantor", 4, 2}, Row{"fano", 7, 1}}) {
        const auto structure = defk::parallel_classes(cat(row.name));
        REQUIRE(structure.groups.size() == row.classes);
        std::set<int> all;
        for (const auto& cls : structure.groups) {
            CHECK(cls.size() == row.size);
            for (size_t a = 0; a < cls.size(); ++a) {
                all.insert(cls[a]);
                for (size_t b = a + 1; b < cls.size(); ++b) {
                    CHECK(defk::is_parallel(cat(row.name), cls[a], cls[b]));
                }
            }
        }
        CHECK(all.size() == row.classes * row.size);
    }
}

TEST_CASE("parallel classes require tops") {
    try {
        (void)defk::parallel_classes(cat("9.2"));
        FAIL("expected Error");
    } catch (const Error& e) {
        CHECK(e.fault() == Fault::tops_violation);
    }
}

TEST_CASE("k-net recognition") {
    CHECK(defk::is_k_net(cat("pappus")));
    CHECK(!defk::is_k_net(cat("mobius-kantor")));
    CHECK(!defk::is_k_net(cat("fano")));
    CHECK_THROWS_AS((void)defk::is_k_net(cat("9.1")), Error);
}

TEST_CASE("cycle decompositions of the three 9-point configurations") {
    const auto nine_one = defk::cycle_decomposition(cat("9.1"));
    REQUIRE(nine_one.groups.size() == 2);
    CHECK(nine_one.groups[0].size() == 3);
    CHECK(nine_one.groups[1].size() == 6);

    const auto nine_two = defk::cycle_decomposition(cat("9.2"));
    REQUIRE(nine_two.groups.size() == 1);
    CHECK(nine_two.groups[0].size() == 9);

    const auto pappus = defk::cycle_decomposition(cat("pappus"));
    REQUIRE(pappus.groups.size() == 3);
    for (const auto& cycle : pappus.groups) CHECK(cycle.size() == 3);
}

TEST_CASE("cycles are canonically rotated and directed") {
    for (const char* name : {"9.1", "9.2", "pappus"}) {
        const Configuration c = cat(name);
        const auto structure = defk::cycle_decomposition(c);
        std::set<int> covered;
        int previous_start = -1;
        for (const auto& cycle : structure.groups) {
            REQUIRE(cycle.size() >= 3);
            // starts at its smallest member, heads toward the smaller neighbor
            CHECK(cycle[0] == *std::min_element(cycle.begin(), cycle.end()));
            CHECK(cycle[1] < cycle.back());
            CHECK(cycle[0] > previous_start);
            previous_start = cycle[0];
            // consecutive lines parallel, including the wrap-around
            for (size_t i = 0; i < cycle.size(); ++i) {
                CHECK(defk::is_parallel(c, cycle[i], cycle[(i + 1) % cycle.size()]));
                covered.insert(cycle[i]);
            }
        }
        CHECK(int(covered.size()) == c.line_count());
    }
}

TEST_CASE("cycle decomposition needs deficiency 3") {
    for (const char* name : {"fano", "mobius-kantor", "desargues"}) {
        try {
            (void)defk::cycle_decomposition(cat(name));
            FAIL("expected Error");
        } catch (const Error& e) {
            CHECK(e.fault() == Fault::not_deficiency_three);
        }
    }
}

TEST_CASE("tops at deficiency 3 means all cycles have length 3") {
    for (const char* name : {"pappus", "9.1", "9.2"}) {
        const Configuration c = cat(name);
        const auto structure = defk::cycle_decomposition(c);
        bool all_three = true;
        for (const auto& cycle : structure.groups) {
            if (cycle.size() != 3) all_three = false;
        }
        CHECK(defk::has_tops(c) == all_three);
    }
}

TEST_CASE("parity verdicts for the 9-point configurations") {
    const auto nine_one = defk::check_parity_theorem(cat("9.1"));
    CHECK(nine_one.cycle_count == 2);
    CHECK(nine_one.even);
    CHECK(nine_one.matches_nine_one);
    CHECK(nine_one.holds);
    CHECK(nine_one.lengths == std::vector<int>{3, 6});

    const auto pappus = defk::check_parity_theorem(cat("pappus"));
    CHECK(pappus.cycle_count == 3);
    CHECK(!pappus.even);
    CHECK(!pappus.matches_nine_one);
    CHECK(pappus.holds);

    const auto nine_two = defk::check_parity_theorem(cat("9.2"));
    CHECK(nine_two.cycle_count == 1);
    CHECK(!nine_two.even);
    CHECK(!nine_two.matches_nine_one);
    CHECK(nine_two.holds);
}

TEST_CASE("the dual of 9.1 also splits into two cycles") {
    const auto structure = defk::cycle_decomposition(defk::dual(cat("9.1")));
    REQUIRE(structure.groups.size() == 2);
    std::vector<size_t> lengths{structure.groups[0].size(), structure.groups[1].size()};
    std::sort(lengths.begin(), lengths.end());
    CHECK(lengths == std::vector<size_t>{3, 6});
}

TEST_CASE("dual closure of tops on the catalog") {
    for (const auto& entry : defk::catalog_entries()) {
        if (defk::has_tops(entry.config)) {
            CHECK(defk::has_tops(defk::dual(entry.config)));
        }
    }
}

TEST_CASE("parallelism facts survive relabeling") {
    std::mt19937 rng(5150);
    for (const char* name : {"pappus", "9.1", "9.2"}) {
        const Configuration c = cat(name);
        for (int trial = 0; trial < 10; ++trial) {
            const Configuration moved =
                testsupport::relabel(c, testsupport::random_perm(c.points(), rng));
            CHECK(defk::has_tops(moved) == defk::has_tops(c));
            CHECK(defk::check_parity_theorem(moved).cycle_count ==
                  defk::check_parity_theorem(c).cycle_count);
        }
    }
}
