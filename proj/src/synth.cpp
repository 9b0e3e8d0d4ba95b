#include "sth/synth.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <string>
#include <unordered_set>
#include <vector>

#include "sth/error.hpp"

namespace sth {
namespace {

std::uint64_t parse_u64(std::string_view text, std::string_view whole) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
    throw Error(ErrorCode::InvalidGenSpec, "bad fraction '" + std::string(whole) + "'");
  }
  return v;
}

Fraction reduced(std::uint64_t num, std::uint64_t den) {
  const std::uint64_t g = std::gcd(num, den);
  return g == 0 ? Fraction{0, 1} : Fraction{num / g, den / g};
}

void check_span(Span span) {
  if (span.end <= span.start) throw Error(ErrorCode::InvalidGenSpec, "span must be positive");
}

}  // namespace

Duration Fraction::of(Duration d) const {
  __extension__ using u128 = unsigned __int128;
  const auto wide = static_cast<u128>(d.ticks) * num / den;
  return Duration{static_cast<std::uint64_t>(wide)};
}

Fraction parse_fraction(std::string_view text) {
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const std::uint64_t num = parse_u64(text.substr(0, slash), text);
    const std::uint64_t den = parse_u64(text.substr(slash + 1), text);
    if (den == 0) throw Error(ErrorCode::InvalidGenSpec, "zero denominator in '" + std::string(text) + "'");
    return reduced(num, den);
  }
  const auto dot = text.find('.');
  if (dot == std::string_view::npos) return {parse_u64(text, text), 1};
  const std::string_view int_part = text.substr(0, dot);
  const std::string_view frac_part = text.substr(dot + 1);
  if (frac_part.size() > 18 || (int_part.empty() && frac_part.empty())) {
    throw Error(ErrorCode::InvalidGenSpec, "bad fraction '" + std::string(text) + "'");
  }
  std::uint64_t den = 1;
  for (std::size_t k = 0; k < frac_part.size(); ++k) den *= 10;
  const std::uint64_t whole = int_part.empty() ? 0 : parse_u64(int_part, text);
  const std::uint64_t part = frac_part.empty() ? 0 : parse_u64(frac_part, text);
  return reduced(whole * den + part, den);
}

std::uint64_t Rng::below(std::uint64_t bound) {
  // Reject the low 2^64 mod bound draws so every residue is equally likely.
  const std::uint64_t threshold = (0 - bound) % bound;
  while (true) {
    const std::uint64_t x = engine_();
    if (x >= threshold) return x % bound;
  }
}

SteTs gen_random(std::size_t n, Span span, std::uint64_t seed) {
  check_span(span);
  const std::uint64_t interior = (span.end - span.start).ticks - 1;
  if (n > interior) {
    throw Error(ErrorCode::InvalidGenSpec,
                std::to_string(n) + " events do not fit in the span at nanosecond resolution");
  }
  Rng rng(seed);
  StateId state = static_cast<StateId>(rng.next() & 1U);

  std::vector<std::uint64_t> offsets;
  offsets.reserve(n);
  std::unordered_set<std::uint64_t> taken;
  taken.reserve(n * 2);
  while (offsets.size() < n) {
    const std::uint64_t off = rng.between(1, interior);
    if (taken.insert(off).second) offsets.push_back(off);
  }
  std::sort(offsets.begin(), offsets.end());

  std::vector<Point> points;
  points.reserve(n + 1);
  points.push_back({span.start, state});
  for (std::uint64_t off : offsets) {
    state ^= 1U;
    points.push_back({span.start + Duration{off}, state});
  }
  return make_series(binary_alphabet(), span.start, span.end, points);
}

SteTs gen_ticks(Span span, std::uint64_t seed, const TicksParams& params) {
  check_span(span);
  if (params.spacing.ticks == 0) throw Error(ErrorCode::InvalidGenSpec, "spacing must be positive");
  if (params.jitter_min.ticks == 0 || params.jitter_min > params.jitter_max) {
    throw Error(ErrorCode::InvalidGenSpec, "jitter range must satisfy 0 < min <= max");
  }
  if (params.jitter_max >= params.spacing) {
    throw Error(ErrorCode::JitterExceedsSpacing, "jitter max " + std::to_string(params.jitter_max.ticks) +
                                                     " ns >= spacing " +
                                                     std::to_string(params.spacing.ticks) + " ns");
  }
  const std::uint64_t count = (span.end - span.start).ticks / params.spacing.ticks;
  Rng rng(seed);
  StateId state = static_cast<StateId>(rng.next() & 1U);

  std::vector<Point> points;
  points.reserve(count + 1);
  points.push_back({span.start, state});
  for (std::uint64_t k = 0; k < count; ++k) {
    const Duration jitter{rng.between(params.jitter_min.ticks, params.jitter_max.ticks)};
    state ^= 1U;
    points.push_back({span.start + Duration{k * params.spacing.ticks} + jitter, state});
  }
  return make_series(binary_alphabet(), span.start, span.end, points);
}

SteTs gen_periodic(Duration period, Fraction duty, Duration lag, Span span) {
  check_span(span);
  if (period.ticks == 0) throw Error(ErrorCode::InvalidGenSpec, "period must be positive");
  if (duty.den == 0 || duty.num == 0 || duty.num > duty.den) {
    throw Error(ErrorCode::InvalidGenSpec, "duty must be in (0, 1]");
  }
  if (lag >= period) throw Error(ErrorCode::InvalidGenSpec, "lag must be in [0, period)");
  const Duration high = duty.of(period);
  if (high.ticks == 0) throw Error(ErrorCode::InvalidGenSpec, "duty rounds to zero high time");

  if (high == period) {
    const Point only{span.start, 1};
    return make_series(binary_alphabet(), span.start, span.end, std::span(&only, 1));
  }

  const auto p = static_cast<std::int64_t>(period.ticks);
  const auto h = static_cast<std::int64_t>(high.ticks);
  const auto l = static_cast<std::int64_t>(lag.ticks);
  const std::int64_t start = span.start.ticks;
  const std::int64_t end = span.end.ticks;

  // Phase of the start within the lagged wave.
  const std::int64_t phase0 = (p - l) % p;
  std::vector<Point> points;
  points.push_back({span.start, phase0 < h ? 1U : 0U});

  // Rising edges at start + lag + k*period, k >= -1 covers every edge after start.
  for (std::int64_t rise = start + l - p; rise < end; rise += p) {
    const std::int64_t fall = rise + h;
    if (rise > start) points.push_back({Timestamp{rise}, 1});
    if (fall > start && fall < end) points.push_back({Timestamp{fall}, 0});
  }
  return make_series(binary_alphabet(), span.start, span.end, points);
}

SteTs generate(const GenSpec& spec) {
  check_span(spec.span);
  if (const auto* r = std::get_if<RandomSpec>(&spec.kind)) {
    return gen_random(r->n, spec.span, spec.seed);
  }
  if (const auto* t = std::get_if<TicksSpec>(&spec.kind)) {
    return gen_ticks(spec.span, spec.seed, t->params);
  }
  const auto& ps = std::get<PeriodicSpec>(spec.kind);
  if (ps.lag_fraction.den == 0 || ps.lag_fraction.num >= ps.lag_fraction.den) {
    throw Error(ErrorCode::InvalidGenSpec, "lag fraction must be in [0, 1)");
  }
  return gen_periodic(ps.period, ps.duty, ps.lag_fraction.of(ps.period), spec.span);
}

}  // namespace sth
