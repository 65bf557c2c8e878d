#include "defk/matrix.hpp"

#include <sstream>
#include <utility>

namespace defk {

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    }
    return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
    if (cols_ != other.rows_) {
        std::ostringstream msg;
        msg << "cannot multiply " << rows_ << "x" << cols_ << " by "
            << other.rows_ << "x" << other.cols_;
        throw std::invalid_argument(msg.str());
    }
    IntMatrix out(rows_, other.cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) {
            const BigInt& x = at(i, j);
            if (x == 0) continue;
            for (int l = 0; l < other.cols_; ++l) out.at(i, l) += x * other.at(j, l);
        }
    }
    return out;
}

IntMatrix incidence_matrix(const Configuration& config) {
    IntMatrix n(config.points(), config.line_count());
    for (int j = 0; j < config.line_count(); ++j) {
        for (int p : config.line(j)) n.at(p, j) = 1;
    }
    return n;
}

IntMatrix gram(const IntMatrix& incidence) {
    return incidence.transposed() * incidence;
}

IntMatrix circulant(const CirculantSpec& spec) {
    const int t = spec.size;
    if (t < 1 || static_cast<int>(spec.first_row.size()) != t) {
        std::ostringstream msg;
        msg << "circulant needs size >= 1 and a first row of matching length, got size "
            << t << " and " << spec.first_row.size() << " entries";
        throw std::invalid_argument(msg.str());
    }
    IntMatrix m(t, t);
    for (int i = 0; i < t; ++i) {
        for (int j = 0; j < t; ++j) m.at(i, j) = spec.first_row[((j - i) % t + t) % t];
    }
    return m;
}

BigInt determinant(const IntMatrix& m) {
    if (m.rows() != m.cols()) {
        std::ostringstream msg;
        msg << "determinant needs a square matrix, got " << m.rows() << "x" << m.cols();
        throw Error(Fault::not_square_matrix, msg.str());
    }
    const int n = m.rows();
    if (n == 0) return 1;

    // Bareiss fraction-free elimination: every division below is exact.
    IntMatrix w = m;
    BigInt prev = 1;
    int sign = 1;
    for (int col = 0; col < n - 1; ++col) {
        int pivot = -1;
        for (int row = col; row < n; ++row) {
            if (w.at(row, col) != 0) {
                pivot = row;
                break;
            }
        }
        if (pivot < 0) return 0;
        if (pivot != col) {
            for (int j = col; j < n; ++j) std::swap(w.at(col, j), w.at(pivot, j));
            sign = -sign;
        }
        for (int row = col + 1; row < n; ++row) {
            for (int j = col + 1; j < n; ++j) {
                w.at(row, j) = (w.at(row, j) * w.at(col, col) -
                                w.at(row, col) * w.at(col, j)) /
                               prev;
            }
            w.at(row, col) = 0;
        }
        prev = w.at(col, col);
    }
    return sign * w.at(n - 1, n - 1);
}

std::vector<BigRat> solve_rational(const IntMatrix& a, const std::vector<BigInt>& rhs) {
    if (a.rows() != a.cols() || a.rows() != static_cast<int>(rhs.size())) {
        std::ostringstream msg;
        msg << "solve needs a square system, got " << a.rows() << "x" << a.cols()
            << " with " << rhs.size() << " right-hand entries";
        throw std::invalid_argument(msg.str());
    }
    const int n = a.rows();
    std::vector<std::vector<BigRat>> w(n, std::vector<BigRat>(n + 1));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) w[i][j] = BigRat(a.at(i, j));
        w[i][n] = BigRat(rhs[i]);
    }
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int row = col; row < n; ++row) {
            if (w[row][col] != 0) {
                pivot = row;
                break;
            }
        }
        if (pivot < 0) {
            throw Error(Fault::singular_at_n_two, "linear system is singular");
        }
        std::swap(w[col], w[pivot]);
        const BigRat lead = w[col][col];
        for (int j = col; j <= n; ++j) w[col][j] /= lead;
        for (int row = 0; row < n; ++row) {
            if (row == col || w[row][col] == 0) continue;
            const BigRat factor = w[row][col];
            for (int j = col; j <= n; ++j) w[row][j] -= factor * w[col][j];
        }
    }
    std::vector<BigRat> x(n);
    for (int i = 0; i < n; ++i) x[i] = w[i][n];
    return x;
}

}  // namespace defk
