#include "defk/bigint.hpp"

#include <stdexcept>

namespace defk {

BigInt pow_int(const BigInt& base, unsigned exponent) {
    return boost::multiprecision::pow(base, exponent);
}

BigInt isqrt_floor(const BigInt& x) {
    if (x < 0) throw std::invalid_argument("isqrt_floor: negative argument");
    return boost::multiprecision::sqrt(x);
}

bool is_perfect_square(const BigInt& x) {
    if (x < 0) return false;
    BigInt root = boost::multiprecision::sqrt(x);
    return root * root == x;
}

bool is_sum_of_two_squares(const BigInt& x) {
    if (x < 0) throw std::invalid_argument("is_sum_of_two_squares: negative argument");
    for (BigInt a = 0; a * a <= x; ++a) {
        if (is_perfect_square(x - a * a)) return true;
    }
    return false;
}

}  // namespace defk
