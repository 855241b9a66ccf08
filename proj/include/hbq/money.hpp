#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace hbq {

/// Integer division rounding half toward +infinity. `den` must be positive.
std::int64_t div_round_half_up(std::int64_t num, std::int64_t den);

/// Ceil that treats values within 1e-9 (relative) above an integer as that
/// integer, so 90.00000000000001 ceils to 90.
std::int64_t ceil_count(double x);

/// Dimensionless fixed-point factor with six decimal places.
class Ratio {
 public:
  static constexpr std::int64_t kScale = 1'000'000;

  constexpr Ratio() = default;
  static constexpr Ratio from_micro(std::int64_t micro) { return Ratio{micro}; }
  static constexpr Ratio one() { return Ratio{kScale}; }
  static Ratio from_double(double value);
  /// Parses "1.15", "0.9", "2". At most six fractional digits.
  static Ratio parse(std::string_view text);

  constexpr std::int64_t micro() const { return micro_; }
  double to_double() const { return static_cast<double>(micro_) / kScale; }
  std::string to_string() const;

  friend Ratio operator*(Ratio a, Ratio b);
  friend constexpr auto operator<=>(Ratio, Ratio) = default;

 private:
  constexpr explicit Ratio(std::int64_t micro) : micro_(micro) {}
  std::int64_t micro_ = 0;
};

/// Decimal quantity with three fractional digits (1.5 m3 -> 1500).
class Quantity {
 public:
  static constexpr std::int64_t kScale = 1000;

  constexpr Quantity() = default;
  static constexpr Quantity from_milli(std::int64_t milli) { return Quantity{milli}; }
  static constexpr Quantity count(std::int64_t n) { return Quantity{n * kScale}; }
  /// Rounds to the nearest thousandth.
  static Quantity of(double value);

  constexpr std::int64_t milli() const { return milli_; }
  double value() const { return static_cast<double>(milli_) / kScale; }
  /// Shortest decimal form: "1609", "13.5", "20.7".
  std::string to_string() const;

  friend constexpr auto operator<=>(Quantity, Quantity) = default;

 private:
  constexpr explicit Quantity(std::int64_t milli) : milli_(milli) {}
  std::int64_t milli_ = 0;
};

/// Amount in pesewas (1 GHS = 100 pesewas). All arithmetic is integral.
class Money {
 public:
  constexpr Money() = default;
  static constexpr Money from_pesewas(std::int64_t p) { return Money{p}; }
  static constexpr Money ghs(std::int64_t whole) { return Money{whole * 100}; }
  /// Parses "8.60", "101", "1350.5". At most two fractional digits.
  static Money parse(std::string_view text);
  /// Nearest pesewa of a GHS amount given as a floating value (JSON input).
  static Money from_ghs_double(double ghs);

  constexpr std::int64_t pesewas() const { return pesewas_; }
  /// Half-up rounding to a whole GHS amount.
  Money rounded_to_ghs() const;
  std::int64_t whole_ghs() const { return rounded_to_ghs().pesewas_ / 100; }
  double to_ghs_double() const { return static_cast<double>(pesewas_) / 100.0; }

  /// "8.60", "101.00", "-3.05"
  std::string to_string() const;
  /// Whole GHS with thousands separators: "13,837".
  std::string to_display() const;

  constexpr Money& operator+=(Money o) { pesewas_ += o.pesewas_; return *this; }
  constexpr Money& operator-=(Money o) { pesewas_ -= o.pesewas_; return *this; }
  friend constexpr Money operator+(Money a, Money b) { return Money{a.pesewas_ + b.pesewas_}; }
  friend constexpr Money operator-(Money a, Money b) { return Money{a.pesewas_ - b.pesewas_}; }
  friend constexpr Money operator*(Money a, std::int64_t k) { return Money{a.pesewas_ * k}; }
  friend constexpr auto operator<=>(Money, Money) = default;

 private:
  constexpr explicit Money(std::int64_t p) : pesewas_(p) {}
  std::int64_t pesewas_ = 0;
};

/// Money scaled by a factor, rounded half-up to the pesewa.
Money operator*(Money amount, Ratio factor);

/// amount * num / den rounded half-up to the pesewa.
Money scale(Money amount, std::int64_t num, std::int64_t den);

/// Exact extension of a unit price by a quantity, rounded half-up to the pesewa.
Money extend(Quantity quantity, Money unit_price);

/// Thousands-separated integer: 1293318 -> "1,293,318".
std::string group_thousands(std::int64_t value);

}  // namespace hbq
