#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace lgrexc {

using BigInt = boost::multiprecision::cpp_int;

BigInt binomial(int n, int k);

}  // namespace lgrexc
