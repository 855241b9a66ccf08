#include "hbq/money.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "hbq/error.hpp"

namespace hbq {

namespace {

// Parses an optionally signed decimal into an integer scaled by 10^digits.
std::int64_t parse_fixed(std::string_view text, int digits, const char* what) {
  auto fail = [&] {
    return Error(ErrorCode::parse_error,
                 std::string("malformed ") + what + " '" + std::string(text) + "'");
  };
  std::size_t i = 0;
  while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  std::size_t end = text.size();
  while (end > i && (text[end - 1] == ' ' || text[end - 1] == '\t')) --end;
  if (i == end) throw fail();

  bool negative = false;
  if (text[i] == '-' || text[i] == '+') {
    negative = text[i] == '-';
    ++i;
  }
  std::int64_t whole = 0;
  int whole_digits = 0;
  while (i < end && text[i] >= '0' && text[i] <= '9') {
    whole = whole * 10 + (text[i] - '0');
    if (++whole_digits > 15) throw fail();
    ++i;
  }
  std::int64_t frac = 0;
  int frac_digits = 0;
  if (i < end && text[i] == '.') {
    ++i;
    while (i < end && text[i] >= '0' && text[i] <= '9') {
      if (++frac_digits > digits) throw fail();
      frac = frac * 10 + (text[i] - '0');
      ++i;
    }
  }
  if (i != end || (whole_digits == 0 && frac_digits == 0)) throw fail();

  std::int64_t scale = 1;
  for (int d = 0; d < digits; ++d) scale *= 10;
  for (int d = frac_digits; d < digits; ++d) frac *= 10;
  const std::int64_t value = whole * scale + frac;
  return negative ? -value : value;
}

std::string format_fixed(std::int64_t value, int digits, bool trim) {
  std::int64_t scale = 1;
  for (int d = 0; d < digits; ++d) scale *= 10;
  const bool negative = value < 0;
  const std::int64_t mag = negative ? -value : value;
  std::string out = std::to_string(mag / scale);
  std::string frac = std::to_string(mag % scale);
  frac.insert(0, static_cast<std::size_t>(digits) - frac.size(), '0');
  if (trim) {
    while (!frac.empty() && frac.back() == '0') frac.pop_back();
  }
  if (!frac.empty()) out += "." + frac;
  return negative ? "-" + out : out;
}

}  // namespace

std::int64_t div_round_half_up(std::int64_t num, std::int64_t den) {
  // floor((2 num + den) / (2 den))
  const std::int64_t n = 2 * num + den;
  const std::int64_t d = 2 * den;
  std::int64_t q = n / d;
  if ((n % d != 0) && (n < 0)) --q;
  return q;
}

std::int64_t ceil_count(double x) {
  const double tolerance = 1e-9 * std::max(1.0, std::fabs(x));
  return static_cast<std::int64_t>(std::ceil(x - tolerance));
}

Ratio Ratio::from_double(double value) { return Ratio{std::llround(value * kScale)}; }

Ratio Ratio::parse(std::string_view text) { return Ratio{parse_fixed(text, 6, "factor")}; }

std::string Ratio::to_string() const {
  std::string s = format_fixed(micro_, 6, true);
  return s;
}

Ratio operator*(Ratio a, Ratio b) {
  return Ratio::from_micro(div_round_half_up(a.micro() * b.micro(), Ratio::kScale));
}

Quantity Quantity::of(double value) { return Quantity{std::llround(value * kScale)}; }

std::string Quantity::to_string() const { return format_fixed(milli_, 3, true); }

Money Money::parse(std::string_view text) { return Money{parse_fixed(text, 2, "amount")}; }

Money Money::from_ghs_double(double ghs) { return Money{std::llround(ghs * 100.0)}; }

Money Money::rounded_to_ghs() const { return Money{div_round_half_up(pesewas_, 100) * 100}; }

std::string Money::to_string() const { return format_fixed(pesewas_, 2, false); }

std::string Money::to_display() const { return group_thousands(whole_ghs()); }

Money operator*(Money amount, Ratio factor) {
  return Money::from_pesewas(div_round_half_up(amount.pesewas() * factor.micro(), Ratio::kScale));
}

Money scale(Money amount, std::int64_t num, std::int64_t den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Money::from_pesewas(div_round_half_up(amount.pesewas() * num, den));
}

Money extend(Quantity quantity, Money unit_price) {
  return Money::from_pesewas(
      div_round_half_up(quantity.milli() * unit_price.pesewas(), Quantity::kScale));
}

std::string group_thousands(std::int64_t value) {
  const bool negative = value < 0;
  std::string digits = std::to_string(negative ? -value : value);
  std::string out;
  const std::size_t n = digits.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (i != 0 && (n - i) % 3 == 0) out += ',';
    out += digits[i];
  }
  return negative ? "-" + out : out;
}

}  // namespace hbq
