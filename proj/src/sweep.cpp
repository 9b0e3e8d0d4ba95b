#include "sth/sweep.hpp"

#include <string>

#include "sth/error.hpp"

namespace sth {

void check_comparable(const SteTs& a, const SteTs& b) {
  if (a.start() != b.start() || a.end() != b.end()) {
    throw Error(ErrorCode::MismatchedSpan,
                "[" + std::to_string(a.start().ticks) + ", " + std::to_string(a.end().ticks) +
                    ") vs [" + std::to_string(b.start().ticks) + ", " +
                    std::to_string(b.end().ticks) + ")");
  }
  if (!same_alphabet(a.alphabet_ptr(), b.alphabet_ptr())) {
    throw Error(ErrorCode::MismatchedAlphabet, "series use different state alphabets");
  }
}

MergedIntervals::MergedIntervals(const SteTs& a, const SteTs& b) : a_(&a), b_(&b) {
  check_comparable(a, b);
}

void MergedIntervals::iterator::advance() {
  const Timestamp end = a_->end();
  if (cursor_ >= end) {
    done_ = true;
    return;
  }
  const auto ta = a_->times();
  const auto tb = b_->times();
  const Timestamp next_a = i_ + 1 < ta.size() ? ta[i_ + 1] : end;
  const Timestamp next_b = j_ + 1 < tb.size() ? tb[j_ + 1] : end;
  const Timestamp next = std::min(next_a, next_b);
  current_ = {next - cursor_, a_->states()[i_], b_->states()[j_]};
  if (next_a == next && i_ + 1 < ta.size()) ++i_;
  if (next_b == next && j_ + 1 < tb.size()) ++j_;
  cursor_ = next;
  done_ = false;
}

}  // namespace sth
