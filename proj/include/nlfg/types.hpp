#pragma once

#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>

namespace nlfg {

using u8 = std::uint8_t;
using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

}  // namespace nlfg
