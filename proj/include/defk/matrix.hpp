#pragma once

#include <vector>

#include "defk/bigint.hpp"
#include "defk/configuration.hpp"

namespace defk {

// Dense rectangular matrix over arbitrary-precision integers.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(size_t(rows) * cols) {}

    static IntMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    BigInt& at(int i, int j) { return data_[size_t(i) * cols_ + j]; }
    const BigInt& at(int i, int j) const { return data_[size_t(i) * cols_ + j]; }

    IntMatrix transposed() const;
    IntMatrix operator*(const IntMatrix& other) const;
    bool operator==(const IntMatrix& other) const = default;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<BigInt> data_;
};

// Points-by-lines 0/1 matrix N: entry (i, j) is 1 iff point i lies on line j.
IntMatrix incidence_matrix(const Configuration& config);

// B = N^T N: entry (i, j) is |line_i ∩ line_j|.
IntMatrix gram(const IntMatrix& incidence);

struct CirculantSpec {
    int size;                    // t >= 1
    std::vector<BigInt> first_row;  // c_0, ..., c_{t-1}; row i is a right shift by i
};

IntMatrix circulant(const CirculantSpec& spec);

// Exact determinant via fraction-free elimination. Throws
// Error(Fault::not_square_matrix) on rectangular input.
BigInt determinant(const IntMatrix& m);

// Exact solve A x = rhs over rationals by Gaussian elimination.
// Throws Error(Fault::singular_at_n_two) if A is singular.
std::vector<BigRat> solve_rational(const IntMatrix& a, const std::vector<BigInt>& rhs);

}  // namespace defk
