#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace homlab {

/// Exact non-negative morphism count. All arithmetic in the library is exact.
using Count = boost::multiprecision::cpp_int;

inline std::string to_decimal(const Count& c) { return c.str(); }

}  // namespace homlab
