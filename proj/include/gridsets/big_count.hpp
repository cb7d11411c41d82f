#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace gridsets {

/// Exact nonnegative counts. Connected-set counts outgrow 64 bits quickly.
using BigCount = boost::multiprecision::cpp_int;

inline std::string to_decimal(const BigCount& value) { return value.str(); }

inline BigCount from_decimal(const std::string& text) { return BigCount(text); }

}  // namespace gridsets
