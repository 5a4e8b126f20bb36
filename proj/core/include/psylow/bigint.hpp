#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace psylow {

using BigInt = boost::multiprecision::cpp_int;

}  // namespace psylow
