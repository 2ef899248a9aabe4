#pragma once
// Polynomials with rational coefficients in commuting named parameters
// (alpha, beta, xi, mu, ...).  Parameters are interned process-wide; at most
// kMaxParams distinct names, exponents below 256.

#include <array>
#include <map>
#include <string>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "nichols/rational.hpp"

namespace nichols {

constexpr int kMaxParams = 16;

using Mono = std::array<std::uint8_t, kMaxParams>;

int param_id(const std::string& name);  // interns on first use
const std::string& param_name(int id);

class ParamScalar {
 public:
  struct Term {
    Mono m{};
    Rational c;
  };

  ParamScalar() = default;
  ParamScalar(const Rational& r);  // NOLINT
  ParamScalar(long long v) : ParamScalar(Rational(v)) {}  // NOLINT
  static ParamScalar param(const std::string& name);

  bool is_zero() const { return t_.empty(); }
  bool is_constant() const { return t_.empty() || (t_.size() == 1 && is_unit_mono(t_[0].m)); }
  // Constant value; throws if parameters occur.
  Rational constant() const;
  bool is_nonzero_constant() const { return t_.size() == 1 && is_unit_mono(t_[0].m); }

  ParamScalar operator-() const;
  friend ParamScalar operator+(const ParamScalar& a, const ParamScalar& b);
  friend ParamScalar operator-(const ParamScalar& a, const ParamScalar& b);
  friend ParamScalar operator*(const ParamScalar& a, const ParamScalar& b);
  ParamScalar& operator+=(const ParamScalar& b);
  ParamScalar& operator-=(const ParamScalar& b) { return *this += -b; }
  ParamScalar& operator*=(const ParamScalar& b) { return *this = *this * b; }
  ParamScalar scaled(const Rational& r) const;

  friend bool operator==(const ParamScalar& a, const ParamScalar& b);
  friend bool operator!=(const ParamScalar& a, const ParamScalar& b) { return !(a == b); }

  // Substitutes values for the named parameters that appear in `vals`.
  ParamScalar substitute(const std::map<std::string, Rational>& vals) const;
  std::vector<std::string> parameters() const;

  const auto& terms() const { return t_; }
  std::string str() const;

  static bool is_unit_mono(const Mono& m) {
    for (auto e : m)
      if (e) return false;
    return true;
  }

 private:
  boost::container::small_vector<Term, 1> t_;  // sorted by monomial, no zero coefficients
};

using PS = ParamScalar;

}  // namespace nichols
