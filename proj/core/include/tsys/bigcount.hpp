#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace tsys {

// Exact arbitrary-precision count. Every counting operation in this library
// returns BigCount; nothing is ever rounded or saturated.
using BigCount = boost::multiprecision::cpp_int;

}  // namespace tsys
