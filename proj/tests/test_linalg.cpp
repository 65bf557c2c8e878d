#include <doctest.h>

#include <random>
#include <vector>

#include "defk/bigint.hpp"
#include "defk/catalog.hpp"
#include "defk/errors.hpp"
#include "defk/formulas.hpp"
#include "defk/matrix.hpp"
#include "defk/parallelism.hpp"
#include "support.hpp"

using defk::BigInt;
using defk::BigRat;
using defk::Error;
using defk::Fault;
using defk::IntMatrix;

TEST_CASE("identity, transpose and product") {
    const IntMatrix id = IntMatrix::identity(3);
    CHECK(defk::gram(id) == id);
    IntMatrix m(2, 3);
    m.at(0, 0) = 1;
    m.at(0, 2) = 4;
    m.at(1, 1) = -2;
    const IntMatrix t = m.transposed();
    CHECK(t.rows() == 3);
    CHECK(t.cols() == 2);
    CHECK(t.at(2, 0) == 4);
    const IntMatrix p = m * t;
    CHECK(p.at(0, 0) == 17);
    CHECK(p.at(0, 1) == 0);
    CHECK(p.at(1, 1) == 4);
}

TEST_CASE("determinant of a diagonal matrix") {
    IntMatrix m(2, 2);
    m.at(0, 0) = 3;
    m.at(1, 1) = 3;
    CHECK(defk::determinant(m) == 9);
}

TEST_CASE("determinant rejects rectangular input") {
    try {
        (void)defk::determinant(IntMatrix(2, 3));
        FAIL("expected Error");
    } catch (const Error& e) {
        CHECK(e.fault() == Fault::not_square_matrix);
    }
}

TEST_CASE("determinant needs row swaps when a pivot vanishes") {
    IntMatrix m(3, 3);
    // [[0,1,0],[1,0,0],[0,0,5]] has determinant -5
    m.at(0, 1) = 1;
    m.at(1, 0) = 1;
    m.at(2, 2) = 5;
    CHECK(defk::determinant(m) == -5);
}

TEST_CASE("fraction-free determinant agrees with cofactor expansion") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 1 + int(rng() % 6);
        IntMatrix m(n, n);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) m.at(i, j) = int(rng() % 19) - 9;
        }
        CHECK(defk::determinant(m) == testsupport::cofactor_det(m));
    }
}

TEST_CASE("gram of the Moebius-Kantor incidence") {
    const auto mk = defk::catalog_get("mobius-kantor").config;
    const IntMatrix b = defk::gram(defk::incidence_matrix(mk));
    REQUIRE(b.rows() == 8);
    for (int i = 0; i < 8; ++i) {
        CHECK(b.at(i, i) == 3);
        int zeros = 0;
        for (int j = 0; j < 8; ++j) {
            if (i != j && b.at(i, j) == 0) ++zeros;
        }
        CHECK(zeros == 1);
    }
    CHECK(defk::determinant(b) == 729);
    CHECK(defk::determinant(b) == testsupport::cofactor_det(b));
}

TEST_CASE("gram of 9.1 is singular") {
    const auto c = defk::catalog_get("9.1").config;
    CHECK(defk::determinant(defk::gram(defk::incidence_matrix(c))) == 0);
}

TEST_CASE("circulant layout") {
    const IntMatrix m = defk::circulant({3, {BigInt(5), BigInt(7), BigInt(11)}});
    CHECK(m.at(0, 0) == 5);
    CHECK(m.at(0, 1) == 7);
    CHECK(m.at(0, 2) == 11);
    CHECK(m.at(1, 0) == 11);
    CHECK(m.at(1, 1) == 5);
    CHECK(m.at(1, 2) == 7);
    CHECK(m.at(2, 0) == 7);
    CHECK(m.at(2, 1) == 11);
    CHECK(m.at(2, 2) == 5);
}

TEST_CASE("circulant rejects mismatched row length") {
    CHECK_THROWS_AS(defk::circulant({3, {BigInt(1)}}), std::invalid_argument);
}

TEST_CASE("rational solve against a known system") {
    IntMatrix a(2, 2);
    a.at(0, 0) = 2;
    a.at(0, 1) = 1;
    a.at(1, 0) = 1;
    a.at(1, 1) = 3;
    const auto x = defk::solve_rational(a, {BigInt(1), BigInt(1)});
    CHECK(x[0] == BigRat(2, 5));
    CHECK(x[1] == BigRat(1, 5));
}

TEST_CASE("rational solve reports singular systems") {
    IntMatrix a(2, 2);
    a.at(0, 0) = 1;
    a.at(0, 1) = 1;
    a.at(1, 0) = 2;
    a.at(1, 1) = 2;
    CHECK_THROWS_AS(defk::solve_rational(a, {BigInt(1), BigInt(0)}), Error);
}

TEST_CASE("cycle blocks coalesce at small lengths") {
    const IntMatrix one = defk::cycle_block(5, 1);
    REQUIRE(one.rows() == 1);
    CHECK(one.at(0, 0) == 3);

    const IntMatrix two = defk::cycle_block(5, 2);
    REQUIRE(two.rows() == 2);
    CHECK(two.at(0, 0) == 5);
    CHECK(two.at(0, 1) == -2);
    CHECK(two.at(1, 0) == -2);

    const IntMatrix five = defk::cycle_block(5, 5);
    CHECK(five.at(0, 0) == 5);
    CHECK(five.at(0, 1) == -1);
    CHECK(five.at(0, 2) == 0);
    CHECK(five.at(0, 3) == 0);
    CHECK(five.at(0, 4) == -1);
    for (int t = 1; t <= 6; ++t) {
        const IntMatrix block = defk::cycle_block(4, t);
        for (int i = 0; i < t; ++i) {
            BigInt row_sum = 0;
            for (int j = 0; j < t; ++j) row_sum += block.at(i, j);
            CHECK(row_sum == 2);
        }
    }
}

TEST_CASE("cycle_block_det examples") {
    CHECK(defk::cycle_block_det(3, 3) == 16);
    for (int t = 1; t <= 12; ++t) CHECK(defk::cycle_block_det(2, t) == 0);
    // factors as (n-2)(n+2) * square
    CHECK(defk::cycle_block_det(4, 4) == 192);
    CHECK(defk::is_perfect_square(BigInt(192) / (2 * 6)));
}

TEST_CASE("cycle_block_det equals the direct determinant") {
    for (int t = 1; t <= 12; ++t) {
        for (int n = 0; n <= 10; ++n) {
            CHECK(defk::cycle_block_det(n, t) == defk::determinant(defk::cycle_block(n, t)));
        }
    }
}

TEST_CASE("cycle_block_det precondition") {
    CHECK_THROWS_AS(defk::cycle_block_det(3, 0), std::invalid_argument);
    CHECK_THROWS_AS(defk::cycle_block_det(-1, 3), std::invalid_argument);
}

TEST_CASE("closed_form_det examples") {
    CHECK(defk::closed_form_det(2, 2) == 729);
    CHECK(defk::closed_form_det(3, 2) == 16777216);
    CHECK(defk::closed_form_det(3, 3) == defk::pow_int(BigInt(4), 12));
    const BigInt big = defk::closed_form_det(7, 4);
    CHECK(big == defk::pow_int(BigInt(2), 169));
    CHECK(!defk::is_perfect_square(big));
}

TEST_CASE("closed_form_det preconditions") {
    CHECK_THROWS_AS(defk::closed_form_det(3, 1), std::invalid_argument);
    CHECK_THROWS_AS(defk::closed_form_det(2, 4), std::invalid_argument);  // n < k-1
    try {
        (void)defk::closed_form_det(4, 3);  // 3 does not divide 20
        FAIL("expected Error");
    } catch (const Error& e) {
        CHECK(e.fault() == Fault::divisibility_violated);
    }
}

TEST_CASE("structural B matches its closed form") {
    CHECK(defk::determinant(defk::assemble_structural_B(2, 2)) == 729);
    const IntMatrix b32 = defk::assemble_structural_B(3, 2);
    REQUIRE(b32.rows() == 14);
    CHECK(defk::determinant(b32) == defk::pow_int(BigInt(2), 24));
    const IntMatrix b33 = defk::assemble_structural_B(3, 3);
    REQUIRE(b33.rows() == 15);
    CHECK(defk::determinant(b33) == defk::closed_form_det(3, 3));
}

TEST_CASE("structural B group count is checked") {
    CHECK(defk::assemble_structural_B(2, 2, 4).rows() == 8);
    CHECK_THROWS_AS(defk::assemble_structural_B(2, 2, 5), std::invalid_argument);
}

TEST_CASE("structural B matches the Moebius-Kantor gram up to permutation") {
    const auto mk = defk::catalog_get("mobius-kantor").config;
    const IntMatrix gram = defk::gram(defk::incidence_matrix(mk));
    // reorder lines so parallel pairs sit together
    const auto classes = defk::parallel_classes(mk).groups;
    std::vector<int> order;
    for (const auto& cls : classes) order.insert(order.end(), cls.begin(), cls.end());
    REQUIRE(order.size() == 8);
    IntMatrix permuted(8, 8);
    for (int i = 0; i < 8; ++i) {
        for (int j = 0; j < 8; ++j) permuted.at(i, j) = gram.at(order[i], order[j]);
    }
    CHECK(permuted == defk::assemble_structural_B(2, 2));
}

TEST_CASE("cycle-pattern B matches the 9.1 gram up to permutation") {
    const auto c = defk::catalog_get("9.1").config;
    const IntMatrix gram = defk::gram(defk::incidence_matrix(c));
    std::vector<int> order;
    for (const auto& cycle : defk::cycle_decomposition(c).groups) {
        order.insert(order.end(), cycle.begin(), cycle.end());
    }
    REQUIRE(order.size() == 9);
    IntMatrix permuted(9, 9);
    for (int i = 0; i < 9; ++i) {
        for (int j = 0; j < 9; ++j) permuted.at(i, j) = gram.at(order[i], order[j]);
    }
    CHECK(permuted == defk::assemble_cycle_B({2, {3, 6}}));
}

TEST_CASE("cycle-pattern determinants") {
    CHECK(defk::determinant(defk::assemble_cycle_B({2, {3, 6}})) == 0);
    CHECK(defk::determinant(defk::assemble_cycle_B({2, {9}})) == 729);
    const defk::CycleSpectrum spectrum{3, {3, 4, 8}};
    CHECK(defk::determinant(defk::assemble_cycle_B(spectrum)) == defk::eq2_det(spectrum));
}

TEST_CASE("cycle-pattern B preconditions") {
    try {
        (void)defk::assemble_cycle_B({2, {3, 3}});
        FAIL("expected Error");
    } catch (const Error& e) {
        CHECK(e.fault() == Fault::length_sum_mismatch);
    }
    CHECK_THROWS_AS(defk::assemble_cycle_B({2, {2, 7}}), std::invalid_argument);
}

TEST_CASE("eq2_det examples") {
    CHECK(defk::eq2_det({2, {3, 6}}) == 0);
    CHECK(defk::eq2_det({2, {9}}) == 729);
    CHECK(defk::eq2_det({3, {3, 3, 3, 3, 3}}) == defk::closed_form_det(3, 3));
}

TEST_CASE("eq2_det matches elimination on every admissible spectrum at n=3") {
    for (const auto& parts : testsupport::partitions_min3(15, 5)) {
        const defk::CycleSpectrum spectrum{3, parts};
        CHECK(defk::eq2_det(spectrum) ==
              defk::determinant(defk::assemble_cycle_B(spectrum)));
    }
}

TEST_CASE("determinant lemma decomposition in exact rationals") {
    for (int n : {3, 4, 5}) {
        const std::vector<std::vector<int>> spectra = {
            {n * n + n + 3}, {3, n * n + n}, {4, n * n + n - 1}};
        for (const auto& lengths : spectra) {
            const defk::CycleSpectrum spectrum{n, lengths};
            BigRat factor = 1;
            BigInt block_product = 1;
            for (int t : lengths) {
                factor += defk::grand_sum_inverse_quadform(t, n);
                block_product *= defk::cycle_block_det(n, t);
            }
            const BigRat expected = BigRat(block_product) * factor;
            CHECK(BigRat(defk::determinant(defk::assemble_cycle_B(spectrum))) == expected);
        }
    }
}

TEST_CASE("grand sum of the inverse cycle block") {
    CHECK(defk::grand_sum_inverse_quadform(3, 3) == BigRat(3));
    CHECK(defk::grand_sum_inverse_quadform(9, 4) == BigRat(9, 2));
    try {
        (void)defk::grand_sum_inverse_quadform(5, 2);
        FAIL("expected Error");
    } catch (const Error& e) {
        CHECK(e.fault() == Fault::singular_at_n_two);
    }
    CHECK_THROWS_AS(defk::grand_sum_inverse_quadform(2, 5), std::invalid_argument);
}

TEST_CASE("grand sum holds for negative and large n") {
    CHECK(defk::grand_sum_inverse_quadform(7, -3) == BigRat(-7) / 5);
    CHECK(defk::grand_sum_inverse_quadform(12, 100) == BigRat(6) / 49);
}

TEST_CASE("integer square helpers") {
    CHECK(defk::is_perfect_square(BigInt(0)));
    CHECK(defk::is_perfect_square(BigInt(729)));
    CHECK(!defk::is_perfect_square(BigInt(2)));
    CHECK(!defk::is_perfect_square(BigInt(-4)));
    CHECK(defk::isqrt_floor(BigInt(10)) == 3);
    CHECK_THROWS_AS(defk::isqrt_floor(BigInt(-1)), std::invalid_argument);

    CHECK(defk::is_sum_of_two_squares(BigInt(0)));
    CHECK(defk::is_sum_of_two_squares(BigInt(5)));
    CHECK(!defk::is_sum_of_two_squares(BigInt(6)));
    CHECK(defk::is_sum_of_two_squares(BigInt(10)));
}
