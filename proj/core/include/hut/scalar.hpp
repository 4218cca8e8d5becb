#pragma once

#include <compare>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace hut {

// Exact rational number in canonical form, or one of the bound markers +inf / -inf.
//
// Values whose numerator and denominator fit in 64 bits stay on an inline
// fast path; anything larger is promoted to a shared GMP rational and demoted
// again as soon as it fits.
class Scalar {
 public:
  Scalar() = default;

  template <std::integral I>
  Scalar(I v) {  // NOLINT(google-explicit-constructor)
    if constexpr (std::is_unsigned_v<I> && sizeof(I) >= sizeof(std::int64_t)) {
      *this = from_i128(static_cast<__int128>(v), 1);
    } else {
      num_ = static_cast<std::int64_t>(v);
    }
  }
  Scalar(std::int64_t num, std::int64_t den);
  explicit Scalar(const mpq_class& q);

  static Scalar pos_inf();
  static Scalar neg_inf();
  // Accepts "[+-]digits[/digits]", "+inf", "inf", "-inf". Throws FormatError.
  static Scalar parse(std::string_view text);

  bool is_finite() const { return kind_ == Kind::Small || kind_ == Kind::Big; }
  bool is_pos_inf() const { return kind_ == Kind::PosInf; }
  bool is_neg_inf() const { return kind_ == Kind::NegInf; }
  bool is_integer() const;
  bool is_zero() const { return kind_ == Kind::Small && num_ == 0; }
  int sign() const;

  mpq_class to_mpq() const;
  mpz_class numerator() const;
  mpz_class denominator() const;
  double to_double() const;
  // Throws InvalidParameter unless the value is an integer that fits in int64.
  std::int64_t to_int64() const;
  std::string to_string() const;

  Scalar abs() const;
  Scalar floor() const;
  Scalar ceil() const;

  Scalar operator-() const;
  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b);

  std::size_t hash() const;

 private:
  enum class Kind : std::uint8_t { Small, Big, PosInf, NegInf };

  static Scalar from_i128(__int128 num, __int128 den);
  static Scalar from_mpq(mpq_class q);

  Kind kind_ = Kind::Small;
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::shared_ptr<const mpq_class> big_;
};

Scalar min(const Scalar& a, const Scalar& b);
Scalar max(const Scalar& a, const Scalar& b);

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace hut

template <>
struct std::hash<hut::Scalar> {
  std::size_t operator()(const hut::Scalar& s) const noexcept { return s.hash(); }
};
