#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sth/series.hpp"

namespace sth {

/// Event files are UTF-8 CSV with the header `series_id,timestamp,state`.
/// Each series lists its rows in time order: the first row gives the initial
/// state at the series start, and a final row with the state `$end` gives
/// the end time.
inline constexpr std::string_view kEndToken = "$end";

enum class TimeFormat { Nanoseconds, Rfc3339 };

TimeFormat parse_time_format(std::string_view name);

Timestamp parse_timestamp(std::string_view text, TimeFormat format);
std::string format_timestamp(Timestamp t, TimeFormat format);

struct SeriesCollection {
  AlphabetPtr alphabet;
  std::vector<std::pair<std::string, SteTs>> series;
};

/// Reads every series of an event file. The alphabet is the sorted set of
/// observed labels. Errors: ParseError (with line number), MissingEndRow,
/// InconsistentSpans, ValidationError (naming the series).
SeriesCollection ingest(std::istream& in, TimeFormat format, bool simplify);
SeriesCollection ingest_file(const std::string& path, TimeFormat format, bool simplify);

void write_event_file(std::ostream& out, const std::vector<std::pair<std::string, SteTs>>& series,
                      TimeFormat format = TimeFormat::Nanoseconds);

}  // namespace sth
