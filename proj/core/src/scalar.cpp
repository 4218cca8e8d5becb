#include "hut/scalar.hpp"

#include <cctype>
#include <limits>
#include <numeric>
#include <ostream>

#include "hut/errors.hpp"

namespace hut {

namespace {

using u128 = unsigned __int128;

u128 gcd_u128(u128 a, u128 b) {
  while (b != 0) {
    if ((a >> 64) == 0 && (b >> 64) == 0) {
      return std::gcd(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b));
    }
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool fits_i64(__int128 v) {
  return v >= std::numeric_limits<std::int64_t>::min() &&
         v <= std::numeric_limits<std::int64_t>::max();
}

mpz_class mpz_from_i128(__int128 v) {
  bool neg = v < 0;
  u128 u = neg ? -static_cast<u128>(v) : static_cast<u128>(v);
  mpz_class r(static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64)));
  r <<= 64;
  r += static_cast<unsigned long>(static_cast<std::uint64_t>(u));
  if (neg) r = -r;
  return r;
}

int finite_rank(bool neg_inf, bool pos_inf) { return neg_inf ? 0 : (pos_inf ? 2 : 1); }

}  // namespace

Scalar::Scalar(std::int64_t num, std::int64_t den) {
  if (den == 0) throw InvalidParameter("Scalar: zero denominator");
  *this = from_i128(num, den);
}

Scalar::Scalar(const mpq_class& q) {
  mpq_class c(q);
  c.canonicalize();
  *this = from_mpq(std::move(c));
}

Scalar Scalar::pos_inf() {
  Scalar s;
  s.kind_ = Kind::PosInf;
  return s;
}

Scalar Scalar::neg_inf() {
  Scalar s;
  s.kind_ = Kind::NegInf;
  return s;
}

Scalar Scalar::from_i128(__int128 num, __int128 den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  u128 g = gcd_u128(num < 0 ? -static_cast<u128>(num) : static_cast<u128>(num),
                    static_cast<u128>(den));
  if (g > 1) {
    num /= static_cast<__int128>(g);
    den /= static_cast<__int128>(g);
  }
  Scalar s;
  if (fits_i64(num) && fits_i64(den)) {
    s.num_ = static_cast<std::int64_t>(num);
    s.den_ = static_cast<std::int64_t>(den);
    return s;
  }
  mpq_class q;
  q.get_num() = mpz_from_i128(num);
  q.get_den() = mpz_from_i128(den);
  s.kind_ = Kind::Big;
  s.big_ = std::make_shared<const mpq_class>(std::move(q));
  return s;
}

Scalar Scalar::from_mpq(mpq_class q) {
  Scalar s;
  if (mpz_fits_slong_p(q.get_num_mpz_t()) && mpz_fits_slong_p(q.get_den_mpz_t())) {
    s.num_ = mpz_get_si(q.get_num_mpz_t());
    s.den_ = mpz_get_si(q.get_den_mpz_t());
    return s;
  }
  s.kind_ = Kind::Big;
  s.big_ = std::make_shared<const mpq_class>(std::move(q));
  return s;
}

Scalar Scalar::parse(std::string_view text) {
  std::size_t b = 0, e = text.size();
  while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
  std::string_view t = text.substr(b, e - b);
  if (t == "+inf" || t == "inf") return pos_inf();
  if (t == "-inf") return neg_inf();

  std::size_t i = 0;
  bool neg = false;
  if (i < t.size() && (t[i] == '+' || t[i] == '-')) {
    neg = t[i] == '-';
    ++i;
  }
  auto digits = [&](std::size_t from) {
    std::size_t j = from;
    while (j < t.size() && std::isdigit(static_cast<unsigned char>(t[j]))) ++j;
    return j;
  };
  std::size_t numEnd = digits(i);
  if (numEnd == i) throw FormatError("Scalar: malformed '" + std::string(text) + "'");
  std::string num(t.substr(i, numEnd - i));
  std::string den = "1";
  if (numEnd < t.size()) {
    if (t[numEnd] != '/') throw FormatError("Scalar: malformed '" + std::string(text) + "'");
    std::size_t denEnd = digits(numEnd + 1);
    if (denEnd == numEnd + 1 || denEnd != t.size()) {
      throw FormatError("Scalar: malformed '" + std::string(text) + "'");
    }
    den = std::string(t.substr(numEnd + 1, denEnd - numEnd - 1));
  }
  mpq_class q;
  q.get_num() = mpz_class(num, 10);
  q.get_den() = mpz_class(den, 10);
  if (q.get_den() == 0) throw FormatError("Scalar: zero denominator in '" + std::string(text) + "'");
  if (neg) q.get_num() = -q.get_num();
  q.canonicalize();
  return from_mpq(std::move(q));
}

bool Scalar::is_integer() const {
  switch (kind_) {
    case Kind::Small: return den_ == 1;
    case Kind::Big: return big_->get_den() == 1;
    default: return false;
  }
}

int Scalar::sign() const {
  switch (kind_) {
    case Kind::Small: return (num_ > 0) - (num_ < 0);
    case Kind::Big: return sgn(*big_);
    case Kind::PosInf: return 1;
    case Kind::NegInf: return -1;
  }
  return 0;
}

mpq_class Scalar::to_mpq() const {
  if (kind_ == Kind::Big) return *big_;
  if (kind_ != Kind::Small) throw InvalidParameter("Scalar: infinite value has no rational form");
  mpq_class q;
  mpq_set_si(q.get_mpq_t(), num_, static_cast<unsigned long>(den_));
  return q;
}

mpz_class Scalar::numerator() const { return to_mpq().get_num(); }
mpz_class Scalar::denominator() const { return to_mpq().get_den(); }

double Scalar::to_double() const {
  switch (kind_) {
    case Kind::Small: return static_cast<double>(num_) / static_cast<double>(den_);
    case Kind::Big: return big_->get_d();
    case Kind::PosInf: return std::numeric_limits<double>::infinity();
    case Kind::NegInf: return -std::numeric_limits<double>::infinity();
  }
  return 0;
}

std::string Scalar::to_string() const {
  switch (kind_) {
    case Kind::Small:
      return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
    case Kind::Big: return big_->get_str(10);
    case Kind::PosInf: return "+inf";
    case Kind::NegInf: return "-inf";
  }
  return {};
}

Scalar Scalar::abs() const {
  if (kind_ == Kind::NegInf) return pos_inf();
  return sign() < 0 ? -*this : *this;
}

std::int64_t Scalar::to_int64() const {
  if (!is_integer()) throw InvalidParameter("Scalar::to_int64: not an integer");
  if (kind_ == Kind::Small) return num_;
  const mpz_class& z = big_->get_num();
  if (!z.fits_slong_p()) throw InvalidParameter("Scalar::to_int64: out of range");
  return z.get_si();
}

Scalar Scalar::floor() const {
  if (!is_finite()) return *this;
  if (kind_ == Kind::Small) {
    std::int64_t q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) --q;
    return Scalar(q);
  }
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), big_->get_num_mpz_t(), big_->get_den_mpz_t());
  return Scalar(mpq_class(r));
}

Scalar Scalar::ceil() const {
  if (!is_finite()) return *this;
  return -((-*this).floor());
}

Scalar Scalar::operator-() const {
  switch (kind_) {
    case Kind::Small:
      if (num_ == std::numeric_limits<std::int64_t>::min()) return from_i128(-static_cast<__int128>(num_), den_);
      {
        Scalar s = *this;
        s.num_ = -num_;
        return s;
      }
    case Kind::Big: return from_mpq(-*big_);
    case Kind::PosInf: return neg_inf();
    case Kind::NegInf: return pos_inf();
  }
  return {};
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  using K = Scalar::Kind;
  if (a.kind_ == K::Small && b.kind_ == K::Small) {
    if (a.den_ == 1 && b.den_ == 1) {
      std::int64_t r;
      if (!__builtin_add_overflow(a.num_, b.num_, &r)) return Scalar(r);
      return Scalar::from_i128(static_cast<__int128>(a.num_) + b.num_, 1);
    }
    std::int64_t g = std::gcd(a.den_, b.den_);
    __int128 n = static_cast<__int128>(a.num_) * (b.den_ / g) + static_cast<__int128>(b.num_) * (a.den_ / g);
    __int128 d = static_cast<__int128>(a.den_ / g) * b.den_;
    return Scalar::from_i128(n, d);
  }
  if (!a.is_finite() || !b.is_finite()) {
    if (a.is_finite()) return b;
    if (b.is_finite()) return a;
    if (a.kind_ == b.kind_) return a;
    throw InvalidParameter("Scalar: +inf + -inf is undefined");
  }
  return Scalar::from_mpq(a.to_mpq() + b.to_mpq());
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
  using K = Scalar::Kind;
  if (a.kind_ == K::Small && b.kind_ == K::Small) {
    if (a.den_ == 1 && b.den_ == 1) {
      std::int64_t r;
      if (!__builtin_mul_overflow(a.num_, b.num_, &r)) return Scalar(r);
    }
    return Scalar::from_i128(static_cast<__int128>(a.num_) * b.num_,
                             static_cast<__int128>(a.den_) * b.den_);
  }
  if (!a.is_finite() || !b.is_finite()) {
    int s = a.sign() * b.sign();
    if (s == 0) throw InvalidParameter("Scalar: 0 * inf is undefined");
    return s > 0 ? Scalar::pos_inf() : Scalar::neg_inf();
  }
  return Scalar::from_mpq(a.to_mpq() * b.to_mpq());
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  using K = Scalar::Kind;
  if (b.is_zero()) throw InvalidParameter("Scalar: division by zero");
  if (!b.is_finite()) throw InvalidParameter("Scalar: division by an infinite value");
  if (!a.is_finite()) return b.sign() > 0 ? a : -a;
  if (a.kind_ == K::Small && b.kind_ == K::Small) {
    return Scalar::from_i128(static_cast<__int128>(a.num_) * b.den_,
                             static_cast<__int128>(a.den_) * b.num_);
  }
  return Scalar::from_mpq(a.to_mpq() / b.to_mpq());
}

bool operator==(const Scalar& a, const Scalar& b) {
  using K = Scalar::Kind;
  if (a.kind_ != b.kind_) return false;
  switch (a.kind_) {
    case K::Small: return a.num_ == b.num_ && a.den_ == b.den_;
    case K::Big: return *a.big_ == *b.big_;
    default: return true;
  }
}

std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
  using K = Scalar::Kind;
  if (a.kind_ == K::Small && b.kind_ == K::Small) {
    if (a.den_ == b.den_) return a.num_ <=> b.num_;
    __int128 l = static_cast<__int128>(a.num_) * b.den_;
    __int128 r = static_cast<__int128>(b.num_) * a.den_;
    return l <=> r;
  }
  int ra = finite_rank(a.is_neg_inf(), a.is_pos_inf());
  int rb = finite_rank(b.is_neg_inf(), b.is_pos_inf());
  if (ra != 1 || rb != 1) return ra <=> rb;
  int c = cmp(a.to_mpq(), b.to_mpq());
  return c <=> 0;
}

std::size_t Scalar::hash() const {
  switch (kind_) {
    case Kind::Small: {
      std::size_t h = std::hash<std::int64_t>{}(num_);
      return h ^ (std::hash<std::int64_t>{}(den_) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
    }
    case Kind::Big: return std::hash<std::string>{}(big_->get_str(16));
    case Kind::PosInf: return 0x7f7f7f7fULL;
    case Kind::NegInf: return 0x3c3c3c3cULL;
  }
  return 0;
}

Scalar min(const Scalar& a, const Scalar& b) { return b < a ? b : a; }
Scalar max(const Scalar& a, const Scalar& b) { return a < b ? b : a; }

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace hut
