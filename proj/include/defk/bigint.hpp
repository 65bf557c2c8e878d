#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace defk {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

BigInt pow_int(const BigInt& base, unsigned exponent);

// Floor of the square root; requires x >= 0.
BigInt isqrt_floor(const BigInt& x);

bool is_perfect_square(const BigInt& x);

// Whether x = a^2 + b^2 has a solution in nonnegative integers; requires x >= 0.
bool is_sum_of_two_squares(const BigInt& x);

}  // namespace defk
