#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <optional>
#include <string>

namespace lbeval {

/// Exact rational for scheme parameters; float drift would mis-validate the
/// integrality and inequality constraints these participate in.
using Rat = boost::rational<std::int64_t>;

inline bool is_integer(const Rat& r) { return r.denominator() == 1; }

/// Accepts "a/b" or a bare integer "a".
std::optional<Rat> parse_rational(const std::string& text);

std::string format_rational(const Rat& r);

/// Largest integer <= r (r may be negative).
std::int64_t floor_rat(const Rat& r);

/// Largest integer strictly less than r.
inline std::int64_t strict_floor_rat(const Rat& r) {
  return is_integer(r) ? r.numerator() - 1 : floor_rat(r);
}

}  // namespace lbeval
