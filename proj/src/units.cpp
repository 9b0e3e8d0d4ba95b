#include "sth/units.hpp"

#include <array>
#include <string>
#include <utility>

#include "sth/error.hpp"
#include "sth/synth.hpp"

namespace sth {

Duration parse_duration(std::string_view text) {
  static constexpr std::array<std::pair<std::string_view, std::uint64_t>, 7> kUnits{{
      {"min", 60'000'000'000ULL},
      {"ns", 1ULL},
      {"us", 1'000ULL},
      {"ms", 1'000'000ULL},
      {"s", 1'000'000'000ULL},
      {"h", 3'600'000'000'000ULL},
      {"d", 86'400'000'000'000ULL},
  }};
  std::uint64_t scale = 1;
  std::string_view amount = text;
  for (const auto& [suffix, ns] : kUnits) {
    if (text.size() > suffix.size() && text.ends_with(suffix)) {
      // Longer suffixes come first so "ms" is not read as "m" + "s".
      amount = text.substr(0, text.size() - suffix.size());
      scale = ns;
      break;
    }
  }
  try {
    const Fraction f = parse_fraction(amount);
    return Fraction{f.num, f.den}.of(Duration{scale});
  } catch (const Error&) {
    throw Error(ErrorCode::ParseError, "bad duration '" + std::string(text) + "'");
  }
}

}  // namespace sth
