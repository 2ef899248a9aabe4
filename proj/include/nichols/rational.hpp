#pragma once
// Exact rationals on 64-bit numerator/denominator.  Every operation goes
// through 128-bit intermediates and throws std::overflow_error instead of
// wrapping, so a result is either exact or absent.

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>

namespace nichols {

class Rational {
 public:
  Rational() = default;
  Rational(long long n) : num_(n), den_(1) {}  // NOLINT: implicit by design
  Rational(long long n, long long d);

  long long num() const { return num_; }
  long long den() const { return den_; }
  bool is_zero() const { return num_ == 0; }
  bool is_one() const { return num_ == 1 && den_ == 1; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }

  Rational operator-() const;
  Rational inv() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational& operator+=(const Rational& b) { return *this = *this + b; }
  Rational& operator-=(const Rational& b) { return *this = *this - b; }
  Rational& operator*=(const Rational& b) { return *this = *this * b; }
  Rational& operator/=(const Rational& b) { return *this = *this / b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b);

  // Residue modulo a prime p; throws if p divides the denominator.
  std::uint64_t mod(std::uint64_t p) const;

  std::string str() const;
  // Accepts "7", "-3/4", " 2 / 6 ".
  static Rational parse(const std::string& s);

  std::size_t hash() const {
    return std::hash<long long>()(num_) * 1000003u ^ std::hash<long long>()(den_);
  }

 private:
  static Rational make(__int128 n, __int128 d);
  long long num_ = 0;
  long long den_ = 1;
};

}  // namespace nichols
