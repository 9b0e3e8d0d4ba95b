#pragma once

#include <string_view>

#include "sth/time.hpp"

namespace sth {

/// Parses `<amount><unit>` where the amount is an integer, decimal or p/q
/// fraction and the unit is one of ns, us, ms, s, min, h, d. A bare integer
/// is nanoseconds. The result is truncated to whole nanoseconds.
///
///   parse_duration("5min"), parse_duration("14/3min"), parse_duration("100ms")
Duration parse_duration(std::string_view text);

}  // namespace sth
