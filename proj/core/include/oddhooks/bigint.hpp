#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace oddhooks {

using BigInt = boost::multiprecision::cpp_int;

}  // namespace oddhooks
