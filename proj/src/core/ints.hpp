#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace ian {

// Exact integer arithmetic everywhere; there is no overflow regime.
using Int = boost::multiprecision::cpp_int;

using boost::multiprecision::abs;
using boost::multiprecision::gcd;

}  // namespace ian
