#include "doctest.h"

#include <sstream>

#include "sth/error.hpp"
#include "sth/event_file.hpp"
#include "sth/units.hpp"
#include "support.hpp"

using namespace sth;

namespace {

ErrorCode ingest_code(const std::string& text, bool simplify = false, ErrorCode* cause = nullptr) {
  std::istringstream in(text);
  try {
    (void)ingest(in, TimeFormat::Nanoseconds, simplify);
  } catch (const Error& e) {
    if (cause) *cause = e.cause();
    return e.code();
  }
  return ErrorCode::EmptySeries;  // sentinel: no error
}

}  // namespace

TEST_CASE("two series with matching spans") {
  std::istringstream in(
      "series_id,timestamp,state\n"
      "a,0,Rain\n"
      "a,50,Snow\n"
      "a,100,$end\n"
      "b,0,Normal\n"
      "b,20,Rain\n"
      "b,100,$end\n");
  const SeriesCollection c = ingest(in, TimeFormat::Nanoseconds, false);
  REQUIRE(c.series.size() == 2);
  CHECK(c.alphabet->labels() == std::vector<std::string>{"Normal", "Rain", "Snow"});
  CHECK(c.series[0].first == "a");
  CHECK(c.series[0].second.states()[1] == c.alphabet->id_of("Snow"));
  CHECK(c.series[1].second.end() == Timestamp{100});
  CHECK(same_alphabet(c.series[0].second.alphabet_ptr(), c.series[1].second.alphabet_ptr()));
}

TEST_CASE("ingest errors") {
  const std::string header = "series_id,timestamp,state\n";
  CHECK(ingest_code(header + "a,0,X\na,5,Y\n") == ErrorCode::MissingEndRow);

  ErrorCode cause{};
  CHECK(ingest_code(header + "a,0,X\na,5,X\na,9,$end\n", false, &cause) == ErrorCode::ValidationError);
  CHECK(cause == ErrorCode::ConsecutiveEqualStates);
  CHECK(ingest_code(header + "a,0,X\na,5,X\na,9,$end\n", true) == ErrorCode::EmptySeries);

  CHECK(ingest_code(header + "a,0,X\na,9,$end\nb,0,X\nb,10,$end\n") == ErrorCode::InconsistentSpans);
  CHECK(ingest_code(header + "a,zero,X\n") == ErrorCode::ParseError);
  CHECK(ingest_code(header + "a,0,X,extra\n") == ErrorCode::ParseError);
  CHECK(ingest_code(header + "a,0,X\na,9,$end\na,10,Y\n") == ErrorCode::ParseError);
  CHECK(ingest_code(header + "a,9,$end\n") == ErrorCode::ParseError);
  CHECK(ingest_code("id,t,s\n") == ErrorCode::ParseError);
  CHECK(ingest_code(header + "a,5,X\na,5,Y\na,9,$end\n", false, &cause) == ErrorCode::ValidationError);
  CHECK(cause == ErrorCode::TimestampsNotStrictlyIncreasing);

  try {
    std::istringstream in(header + "a,0,X\nb,zz,Y\n");
    (void)ingest(in, TimeFormat::Nanoseconds, false);
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
}

TEST_CASE("rfc3339 timestamps") {
  CHECK(parse_timestamp("1970-01-01T00:00:00Z", TimeFormat::Rfc3339) == Timestamp{0});
  CHECK(parse_timestamp("1970-01-01T00:00:01.5Z", TimeFormat::Rfc3339) == Timestamp{1'500'000'000});
  CHECK(parse_timestamp("2019-01-01T00:00:00.000000001Z", TimeFormat::Rfc3339) ==
        Timestamp{1546300800LL * 1'000'000'000 + 1});
  CHECK(parse_timestamp("2019-01-01T01:00:00+01:00", TimeFormat::Rfc3339) ==
        Timestamp{1546300800LL * 1'000'000'000});
  CHECK(parse_timestamp("1969-12-31T23:59:59Z", TimeFormat::Rfc3339) == Timestamp{-1'000'000'000});
  CHECK_THROWS_AS(parse_timestamp("2019-02-30T00:00:00Z", TimeFormat::Rfc3339), Error);
  CHECK_THROWS_AS(parse_timestamp("2019-01-01 00:00:00", TimeFormat::Rfc3339), Error);
  CHECK_THROWS_AS(parse_timestamp("2019-01-01T00:00:00.1234567891Z", TimeFormat::Rfc3339), Error);

  for (std::int64_t t : {0LL, 1LL, -1LL, 1546300800123456789LL, -86400000000001LL}) {
    const std::string text = format_timestamp(Timestamp{t}, TimeFormat::Rfc3339);
    CHECK(parse_timestamp(text, TimeFormat::Rfc3339) == Timestamp{t});
  }
  CHECK(format_timestamp(Timestamp{1'500'000'000}, TimeFormat::Rfc3339) == "1970-01-01T00:00:01.500000000Z");
}

TEST_CASE("rfc3339 event files") {
  std::istringstream in(
      "series_id,timestamp,state\n"
      "a,2019-01-01T00:00:00Z,1\n"
      "a,2019-01-01T06:00:00Z,R\n"
      "a,2019-01-02T00:00:00Z,$end\n");
  const SeriesCollection c = ingest(in, TimeFormat::Rfc3339, false);
  CHECK(c.series[0].second.duration() == Duration::days(1));
}

TEST_CASE("duration strings") {
  CHECK(parse_duration("5min") == Duration::minutes(5));
  CHECK(parse_duration("14/3min") == Duration::seconds(280));
  CHECK(parse_duration("4.667min") == Duration::milliseconds(280020));
  CHECK(parse_duration("100ms") == Duration::milliseconds(100));
  CHECK(parse_duration("1s") == Duration::seconds(1));
  CHECK(parse_duration("2us") == Duration{2000});
  CHECK(parse_duration("7ns") == Duration{7});
  CHECK(parse_duration("42") == Duration{42});
  CHECK(parse_duration("1h") == Duration::hours(1));
  CHECK(parse_duration("30d") == Duration::days(30));
  CHECK_THROWS_AS(parse_duration("fast"), Error);
  CHECK_THROWS_AS(parse_duration("min"), Error);
}
