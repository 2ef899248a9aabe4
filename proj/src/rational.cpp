#include "nichols/rational.hpp"

#include <cctype>
#include <limits>

namespace nichols {

namespace {

__int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool fits(__int128 v) {
  return v >= std::numeric_limits<long long>::min() + 1 &&
         v <= std::numeric_limits<long long>::max();
}

}  // namespace

Rational Rational::make(__int128 n, __int128 d) {
  if (d == 0) throw std::domain_error("rational: zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  if (n == 0) return Rational();
  __int128 g = gcd128(n, d);
  n /= g;
  d /= g;
  if (!fits(n) || !fits(d)) throw std::overflow_error("rational: 64-bit overflow");
  Rational r;
  r.num_ = static_cast<long long>(n);
  r.den_ = static_cast<long long>(d);
  return r;
}

Rational::Rational(long long n, long long d) { *this = make(n, d); }

Rational Rational::operator-() const {
  Rational r = *this;
  r.num_ = -r.num_;
  return r;
}

Rational Rational::inv() const {
  if (num_ == 0) throw std::domain_error("rational: inverse of zero");
  return make(den_, num_);
}

Rational operator+(const Rational& a, const Rational& b) {
  if (a.den_ == 1 && b.den_ == 1) {
    __int128 s = static_cast<__int128>(a.num_) + b.num_;
    if (fits(s)) {
      Rational r;
      r.num_ = static_cast<long long>(s);
      return r;
    }
  }
  return Rational::make(static_cast<__int128>(a.num_) * b.den_ +
                            static_cast<__int128>(b.num_) * a.den_,
                        static_cast<__int128>(a.den_) * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  if (a.den_ == 1 && b.den_ == 1) {
    __int128 p = static_cast<__int128>(a.num_) * b.num_;
    if (fits(p)) {
      Rational r;
      r.num_ = static_cast<long long>(p);
      return r;
    }
  }
  return Rational::make(static_cast<__int128>(a.num_) * b.num_,
                        static_cast<__int128>(a.den_) * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) { return a * b.inv(); }

bool operator<(const Rational& a, const Rational& b) {
  return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
}

std::uint64_t Rational::mod(std::uint64_t p) const {
  auto red = [p](long long v) {
    long long m = v % static_cast<long long>(p);
    if (m < 0) m += static_cast<long long>(p);
    return static_cast<std::uint64_t>(m);
  };
  std::uint64_t n = red(num_), d = red(den_);
  if (d == 0) throw std::domain_error("rational: denominator vanishes mod p");
  // Fermat inverse.
  std::uint64_t e = p - 2, base = d, acc = 1;
  while (e) {
    if (e & 1) acc = static_cast<unsigned __int128>(acc) * base % p;
    base = static_cast<unsigned __int128>(base) * base % p;
    e >>= 1;
  }
  return static_cast<unsigned __int128>(n) * acc % p;
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(const std::string& s) {
  std::string t;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
  if (t.empty()) throw std::invalid_argument("rational: empty string");
  auto slash = t.find('/');
  try {
    std::size_t used = 0;
    if (slash == std::string::npos) {
      long long n = std::stoll(t, &used);
      if (used != t.size()) throw std::invalid_argument(t);
      return Rational(n);
    }
    std::string a = t.substr(0, slash), b = t.substr(slash + 1);
    long long n = std::stoll(a, &used);
    if (used != a.size()) throw std::invalid_argument(t);
    long long d = std::stoll(b, &used);
    if (used != b.size()) throw std::invalid_argument(t);
    return Rational(n, d);
  } catch (const std::logic_error&) {
    throw std::invalid_argument("rational: cannot parse '" + s + "'");
  }
}

}  // namespace nichols
