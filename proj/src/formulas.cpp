#include "defk/formulas.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

#include "defk/errors.hpp"

namespace defk {

namespace {

// Integer-coefficient polynomials, ascending degree order.
using Poly = std::vector<BigInt>;

// D_t as a polynomial in x: D_0 = 2, D_1 = x, D_s = x*D_{s-1} - D_{s-2}.
Poly recurrence_poly(int t) {
    Poly prev{2};
    if (t == 0) return prev;
    Poly cur{0, 1};
    for (int s = 2; s <= t; ++s) {
        Poly next(cur.size() + 1);
        for (size_t i = 0; i < cur.size(); ++i) next[i + 1] = cur[i];
        for (size_t i = 0; i < prev.size(); ++i) next[i] -= prev[i];
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

// Exact division by (x - root); the remainder must vanish.
Poly divide_linear(const Poly& p, const BigInt& root) {
    Poly q(p.size() - 1);
    BigInt carry = 0;
    for (size_t i = p.size(); i-- > 1;) {
        carry = p[i] + root * carry;
        q[i - 1] = carry;
    }
    if (p[0] + root * carry != 0) {
        throw std::logic_error("polynomial division left a remainder");
    }
    return q;
}

BigInt eval_poly(const Poly& p, const BigInt& x) {
    BigInt acc = 0;
    for (size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
    return acc;
}

// The cycle-block characteristic value with the x = 2 root removed, and the
// x = -2 root too when t is even. What remains is the square of an
// integer-coefficient polynomial, so its value at any integer is a square.
BigInt reduced_square_factor(int n, int t) {
    Poly q = recurrence_poly(t);
    q[0] -= 2;
    q = divide_linear(q, 2);
    if (t % 2 == 0) q = divide_linear(q, -2);
    BigInt value = eval_poly(q, n);
    if (!is_perfect_square(value)) {
        std::ostringstream msg;
        msg << "reduced factor for t=" << t << ", n=" << n << " is " << value
            << ", not a perfect square";
        throw std::logic_error(msg.str());
    }
    return value;
}

void check_spectrum(const CycleSpectrum& spec) {
    const int n = spec.order;
    for (int t : spec.lengths) {
        if (t < 3) {
            std::ostringstream msg;
            msg << "cycle length " << t << " below the minimum of 3";
            throw std::invalid_argument(msg.str());
        }
    }
    const int want = n * n + n + 3;
    if (spec.length_sum() != want) {
        std::ostringstream msg;
        msg << "cycle lengths sum to " << spec.length_sum() << " but order " << n
            << " needs " << want;
        throw Error(Fault::length_sum_mismatch, msg.str());
    }
}

}  // namespace

int CycleSpectrum::even_count() const {
    int count = 0;
    for (int t : lengths) count += (t % 2 == 0);
    return count;
}

int CycleSpectrum::length_sum() const {
    return std::accumulate(lengths.begin(), lengths.end(), 0);
}

IntMatrix cycle_block(int n, int t) {
    if (t < 1) throw std::invalid_argument("cycle block needs t >= 1");
    std::vector<BigInt> row(t);
    row[0] = n;
    row[1 % t] -= 1;
    row[(t - 1) % t] -= 1;
    return circulant(CirculantSpec{t, std::move(row)});
}

BigInt cycle_block_det(int n, int t) {
    if (t < 1 || n < 0) {
        throw std::invalid_argument("cycle_block_det needs t >= 1 and n >= 0");
    }
    BigInt prev = 2;
    BigInt cur = n;
    for (int s = 2; s <= t; ++s) {
        BigInt next = n * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur - 2;
}

BigInt closed_form_det(int n, int k) {
    if (k < 2 || n < k - 1) {
        throw std::invalid_argument("closed_form_det needs k >= 2 and n >= k-1");
    }
    const int pairs = n * n + n;
    if (pairs % k != 0) {
        std::ostringstream msg;
        msg << "deficiency " << k << " does not divide n^2+n = " << pairs;
        throw Error(Fault::divisibility_violated, msg.str());
    }
    const unsigned q = unsigned(pairs / k);
    return pow_int(n + 1, unsigned(k) + 1 + unsigned(k - 1) * q) *
           pow_int(n - (k - 1), q);
}

IntMatrix assemble_structural_B(int n, int k, int groups) {
    if (k < 2 || n < k - 1) {
        throw std::invalid_argument("structural B needs k >= 2 and n >= k-1");
    }
    const int pairs = n * n + n;
    if (pairs % k != 0) {
        std::ostringstream msg;
        msg << "deficiency " << k << " does not divide n^2+n = " << pairs;
        throw Error(Fault::divisibility_violated, msg.str());
    }
    const int want = pairs / k + 1;
    if (groups == 0) groups = want;
    if (groups != want) {
        std::ostringstream msg;
        msg << "expected " << want << " parallel classes, got " << groups;
        throw std::invalid_argument(msg.str());
    }
    const int b = k * groups;
    IntMatrix m(b, b);
    for (int i = 0; i < b; ++i) {
        for (int j = 0; j < b; ++j) {
            if (i / k == j / k) {
                m.at(i, j) = (i == j) ? n + 1 : 0;
            } else {
                m.at(i, j) = 1;
            }
        }
    }
    return m;
}

IntMatrix assemble_cycle_B(const CycleSpectrum& spec) {
    check_spectrum(spec);
    const int v = spec.length_sum();
    IntMatrix m(v, v);
    for (int i = 0; i < v; ++i) {
        for (int j = 0; j < v; ++j) m.at(i, j) = 1;
    }
    int offset = 0;
    for (int t : spec.lengths) {
        IntMatrix block = cycle_block(spec.order, t);
        for (int i = 0; i < t; ++i) {
            for (int j = 0; j < t; ++j) {
                m.at(offset + i, offset + j) += block.at(i, j);
            }
        }
        offset += t;
    }
    return m;
}

BigInt eq2_det(const CycleSpectrum& spec) {
    check_spectrum(spec);
    const int n = spec.order;
    BigInt value = 1;
    if (spec.m() > 1) value = pow_int(n - 2, unsigned(spec.m() - 1));
    value *= BigInt(n + 1) * (n + 1);
    value *= pow_int(n + 2, unsigned(spec.even_count()));
    for (int t : spec.lengths) value *= reduced_square_factor(n, t);
    return value;
}

BigRat grand_sum_inverse_quadform(int t, int n) {
    if (t < 3) throw std::invalid_argument("grand sum needs t >= 3");
    if (n == 2) {
        throw Error(Fault::singular_at_n_two,
                    "cycle blocks at n = 2 have zero row sums");
    }
    IntMatrix a = cycle_block(n, t);

    BigInt grand = 0;
    for (int i = 0; i < t; ++i) {
        for (int j = 0; j < t; ++j) grand += a.at(i, j);
    }
    if (grand != BigInt(t) * (n - 2)) {
        throw std::logic_error("grand sum of cycle block is not t*(n-2)");
    }

    const BigRat expected = BigRat(t) / (n - 2);
    if (determinant(a) != 0) {
        std::vector<BigInt> ones(t, 1);
        std::vector<BigRat> y = solve_rational(a, ones);
        BigRat quadform = 0;
        for (const BigRat& yi : y) quadform += yi;
        if (quadform != expected) {
            throw std::logic_error("quadratic form disagrees with rational solve");
        }
    }
    return expected;
}

}  // namespace defk
