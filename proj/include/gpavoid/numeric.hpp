#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace gpavoid {

// Every count in this library is exact; nothing here ever lives in a
// fixed-width integer.
using BigCount = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// C(n, k) from a Pascal triangle grown on demand. Returns 0 outside the
// triangle (k < 0 or k > n). Readers are safe once built; growth is
// single-writer guarded.
BigCount binomial(int n, int k);

BigCount factorial(int n);

// n!! with the usual empty-product conventions (-1)!! = 0!! = 1.
BigCount double_factorial(int n);

BigCount pow2(int n);

}  // namespace gpavoid
