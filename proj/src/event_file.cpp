#include "sth/event_file.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <string>

#include "sth/error.hpp"

namespace sth {
namespace {

constexpr std::int64_t kNanosPerSecond = 1'000'000'000;

bool parse_int(std::string_view text, std::int64_t& out) {
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  return !text.empty() && ec == std::errc{} && ptr == text.data() + text.size();
}

[[noreturn]] void bad_timestamp(std::string_view text) {
  throw Error(ErrorCode::ParseError, "bad timestamp '" + std::string(text) + "'");
}

int fixed_digits(std::string_view text, std::size_t pos, std::size_t len) {
  if (pos + len > text.size()) bad_timestamp(text);
  int v = 0;
  for (std::size_t k = pos; k < pos + len; ++k) {
    if (text[k] < '0' || text[k] > '9') bad_timestamp(text);
    v = v * 10 + (text[k] - '0');
  }
  return v;
}

// YYYY-MM-DDTHH:MM:SS[.fffffffff](Z|+HH:MM|-HH:MM)
Timestamp parse_rfc3339(std::string_view s) {
  if (s.size() < 20 || s[4] != '-' || s[7] != '-' || (s[10] != 'T' && s[10] != 't' && s[10] != ' ') ||
      s[13] != ':' || s[16] != ':') {
    bad_timestamp(s);
  }
  using namespace std::chrono;
  const year_month_day ymd{year{fixed_digits(s, 0, 4)},
                           month{static_cast<unsigned>(fixed_digits(s, 5, 2))},
                           day{static_cast<unsigned>(fixed_digits(s, 8, 2))}};
  if (!ymd.ok()) bad_timestamp(s);
  const int hh = fixed_digits(s, 11, 2);
  const int mm = fixed_digits(s, 14, 2);
  const int ss = fixed_digits(s, 17, 2);
  if (hh > 23 || mm > 59 || ss > 60) bad_timestamp(s);

  std::size_t pos = 19;
  std::int64_t frac = 0;
  if (pos < s.size() && s[pos] == '.') {
    ++pos;
    std::size_t digits = 0;
    while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') {
      if (digits == 9) bad_timestamp(s);
      frac = frac * 10 + (s[pos] - '0');
      ++digits;
      ++pos;
    }
    if (digits == 0) bad_timestamp(s);
    for (; digits < 9; ++digits) frac *= 10;
  }

  std::int64_t offset_s = 0;
  if (pos < s.size() && (s[pos] == 'Z' || s[pos] == 'z') && pos + 1 == s.size()) {
    // UTC
  } else if (pos + 6 == s.size() && (s[pos] == '+' || s[pos] == '-') && s[pos + 3] == ':') {
    const int oh = fixed_digits(s, pos + 1, 2);
    const int om = fixed_digits(s, pos + 4, 2);
    offset_s = (oh * 3600 + om * 60) * (s[pos] == '+' ? 1 : -1);
  } else {
    bad_timestamp(s);
  }

  const std::int64_t days_since_epoch = sys_days(ymd).time_since_epoch().count();
  const std::int64_t seconds = days_since_epoch * 86400 + hh * 3600 + mm * 60 + ss - offset_s;
  return Timestamp{seconds * kNanosPerSecond + frac};
}

struct SeriesBuilder {
  std::size_t first_line = 0;
  std::vector<std::pair<Timestamp, std::string>> rows;
  std::optional<Timestamp> end;
};

std::vector<std::string_view> split3(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t from = 0;
  while (true) {
    const std::size_t comma = line.find(',', from);
    out.push_back(line.substr(from, comma == std::string_view::npos ? std::string_view::npos : comma - from));
    if (comma == std::string_view::npos) break;
    from = comma + 1;
  }
  return out;
}

}  // namespace

TimeFormat parse_time_format(std::string_view name) {
  if (name == "ns") return TimeFormat::Nanoseconds;
  if (name == "rfc3339") return TimeFormat::Rfc3339;
  throw Error(ErrorCode::ParseError, "unknown time format '" + std::string(name) + "'");
}

Timestamp parse_timestamp(std::string_view text, TimeFormat format) {
  if (format == TimeFormat::Rfc3339) return parse_rfc3339(text);
  std::int64_t v = 0;
  if (!parse_int(text, v)) bad_timestamp(text);
  return Timestamp{v};
}

std::string format_timestamp(Timestamp t, TimeFormat format) {
  if (format == TimeFormat::Nanoseconds) return std::to_string(t.ticks);
  using namespace std::chrono;
  std::int64_t secs = t.ticks / kNanosPerSecond;
  std::int64_t frac = t.ticks % kNanosPerSecond;
  if (frac < 0) {
    frac += kNanosPerSecond;
    --secs;
  }
  std::int64_t days = secs / 86400;
  std::int64_t rem = secs % 86400;
  if (rem < 0) {
    rem += 86400;
    --days;
  }
  const year_month_day ymd{sys_days{std::chrono::days{days}}};
  char buf[64];
  std::snprintf(buf, sizeof buf, "%04d-%02u-%02uT%02d:%02d:%02d.%09lldZ", static_cast<int>(ymd.year()),
                static_cast<unsigned>(ymd.month()), static_cast<unsigned>(ymd.day()),
                static_cast<int>(rem / 3600), static_cast<int>(rem / 60 % 60), static_cast<int>(rem % 60),
                static_cast<long long>(frac));
  return buf;
}

SeriesCollection ingest(std::istream& in, TimeFormat format, bool simplify) {
  std::string line;
  std::size_t line_no = 0;
  if (!std::getline(in, line)) throw Error(ErrorCode::ParseError, "line 1: empty event file");
  ++line_no;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "series_id,timestamp,state") {
    throw Error(ErrorCode::ParseError, "line 1: expected header 'series_id,timestamp,state'");
  }

  std::vector<std::string> order;
  std::map<std::string, SeriesBuilder> builders;
  std::set<std::string> labels;

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const std::string where = "line " + std::to_string(line_no);
    const auto fields = split3(line);
    if (fields.size() != 3) throw Error(ErrorCode::ParseError, where + ": expected 3 fields");
    if (fields[0].empty()) throw Error(ErrorCode::ParseError, where + ": empty series id");
    if (fields[2].empty()) throw Error(ErrorCode::ParseError, where + ": empty state");

    Timestamp t;
    try {
      t = parse_timestamp(fields[1], format);
    } catch (const Error& e) {
      throw Error(ErrorCode::ParseError, where + ": " + e.what());
    }

    const std::string id(fields[0]);
    auto [it, inserted] = builders.try_emplace(id);
    SeriesBuilder& b = it->second;
    if (inserted) {
      b.first_line = line_no;
      order.push_back(id);
    }
    if (b.end) {
      throw Error(ErrorCode::ParseError, where + ": series '" + id + "' has rows after " +
                                             std::string(kEndToken));
    }
    if (fields[2] == kEndToken) {
      if (b.rows.empty()) {
        throw Error(ErrorCode::ParseError, where + ": series '" + id + "' has no initial state");
      }
      b.end = t;
    } else {
      labels.emplace(fields[2]);
      b.rows.emplace_back(t, std::string(fields[2]));
    }
  }

  SeriesCollection out;
  out.alphabet = make_alphabet({labels.begin(), labels.end()});
  for (const auto& id : order) {
    const SeriesBuilder& b = builders.at(id);
    if (!b.end) throw Error(ErrorCode::MissingEndRow, "series '" + id + "'");
    std::vector<Point> points;
    points.reserve(b.rows.size());
    for (const auto& [t, label] : b.rows) points.push_back({t, out.alphabet->id_of(label)});
    try {
      out.series.emplace_back(id, make_series(out.alphabet, b.rows.front().first, *b.end, points, simplify));
    } catch (const Error& e) {
      throw Error(ErrorCode::ValidationError, "series '" + id + "' (line " +
                                                  std::to_string(b.first_line) + "): " + e.what(),
                  e.code());
    }
  }
  for (const auto& [id, s] : out.series) {
    const SteTs& first = out.series.front().second;
    if (s.start() != first.start() || s.end() != first.end()) {
      throw Error(ErrorCode::InconsistentSpans, "series '" + id + "' span differs from series '" +
                                                    out.series.front().first + "'");
    }
  }
  return out;
}

SeriesCollection ingest_file(const std::string& path, TimeFormat format, bool simplify) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
  return ingest(in, format, simplify);
}

void write_event_file(std::ostream& out, const std::vector<std::pair<std::string, SteTs>>& series,
                      TimeFormat format) {
  out << "series_id,timestamp,state\n";
  for (const auto& [id, s] : series) {
    for (std::size_t k = 0; k < s.times().size(); ++k) {
      out << id << ',' << format_timestamp(s.times()[k], format) << ','
          << s.alphabet().label(s.states()[k]) << '\n';
    }
    out << id << ',' << format_timestamp(s.end(), format) << ',' << kEndToken << '\n';
  }
}

}  // namespace sth
