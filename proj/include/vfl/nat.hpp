#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>

namespace vfl {

// Universe values and numeral payloads. Kept non-negative everywhere;
// ellipsis bounds are computed values and must not wrap.
using Nat = boost::multiprecision::cpp_int;

inline std::optional<std::uint64_t> to_u64(const Nat& n) {
    if (n < 0 || n > std::numeric_limits<std::uint64_t>::max()) return std::nullopt;
    return n.convert_to<std::uint64_t>();
}

inline std::string to_decimal(const Nat& n) { return n.str(); }

}  // namespace vfl
