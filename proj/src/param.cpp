#include "nichols/param.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace nichols {

namespace {

struct Registry {
  std::mutex mu;
  std::vector<std::string> names;
};

Registry& registry() {
  static Registry r;
  return r;
}

bool mono_less(const Mono& a, const Mono& b) { return a < b; }

Mono mono_mul(const Mono& a, const Mono& b) {
  Mono r{};
  for (int i = 0; i < kMaxParams; ++i) {
    int e = a[i] + b[i];
    if (e > 255) throw std::overflow_error("parameter exponent overflow");
    r[i] = static_cast<std::uint8_t>(e);
  }
  return r;
}

}  // namespace

int param_id(const std::string& name) {
  auto& r = registry();
  std::lock_guard<std::mutex> lock(r.mu);
  for (std::size_t i = 0; i < r.names.size(); ++i)
    if (r.names[i] == name) return static_cast<int>(i);
  if (static_cast<int>(r.names.size()) >= kMaxParams)
    throw std::length_error("too many distinct parameters");
  r.names.push_back(name);
  return static_cast<int>(r.names.size() - 1);
}

const std::string& param_name(int id) {
  auto& r = registry();
  std::lock_guard<std::mutex> lock(r.mu);
  return r.names.at(id);
}

ParamScalar::ParamScalar(const Rational& r) {
  if (!r.is_zero()) t_.push_back(Term{Mono{}, r});
}

ParamScalar ParamScalar::param(const std::string& name) {
  ParamScalar p;
  Term t;
  t.m[param_id(name)] = 1;
  t.c = 1;
  p.t_.push_back(t);
  return p;
}

Rational ParamScalar::constant() const {
  if (t_.empty()) return Rational();
  if (!is_nonzero_constant()) throw std::domain_error("scalar depends on parameters: " + str());
  return t_[0].c;
}

ParamScalar ParamScalar::operator-() const {
  ParamScalar r = *this;
  for (auto& t : r.t_) t.c = -t.c;
  return r;
}

ParamScalar& ParamScalar::operator+=(const ParamScalar& b) {
  if (b.t_.empty()) return *this;
  if (t_.empty()) return *this = b;
  if (t_.size() == 1 && b.t_.size() == 1 && t_[0].m == b.t_[0].m) {
    t_[0].c += b.t_[0].c;
    if (t_[0].c.is_zero()) t_.clear();
    return *this;
  }
  *this = *this + b;
  return *this;
}

ParamScalar operator+(const ParamScalar& a, const ParamScalar& b) {
  ParamScalar r;
  std::size_t i = 0, j = 0;
  while (i < a.t_.size() || j < b.t_.size()) {
    if (j == b.t_.size() || (i < a.t_.size() && mono_less(a.t_[i].m, b.t_[j].m))) {
      r.t_.push_back(a.t_[i++]);
    } else if (i == a.t_.size() || mono_less(b.t_[j].m, a.t_[i].m)) {
      r.t_.push_back(b.t_[j++]);
    } else {
      Rational c = a.t_[i].c + b.t_[j].c;
      if (!c.is_zero()) r.t_.push_back({a.t_[i].m, c});
      ++i;
      ++j;
    }
  }
  return r;
}

ParamScalar operator-(const ParamScalar& a, const ParamScalar& b) { return a + (-b); }

ParamScalar operator*(const ParamScalar& a, const ParamScalar& b) {
  ParamScalar r;
  if (a.t_.empty() || b.t_.empty()) return r;
  if (a.t_.size() == 1 && b.t_.size() == 1) {
    r.t_.push_back({mono_mul(a.t_[0].m, b.t_[0].m), a.t_[0].c * b.t_[0].c});
    return r;
  }
  std::vector<ParamScalar::Term> acc;
  for (const auto& x : a.t_)
    for (const auto& y : b.t_) acc.push_back({mono_mul(x.m, y.m), x.c * y.c});
  std::sort(acc.begin(), acc.end(),
            [](const auto& p, const auto& q) { return mono_less(p.m, q.m); });
  for (const auto& t : acc) {
    if (!r.t_.empty() && r.t_.back().m == t.m) {
      r.t_.back().c += t.c;
      if (r.t_.back().c.is_zero()) r.t_.pop_back();
    } else {
      r.t_.push_back(t);
    }
  }
  return r;
}

ParamScalar ParamScalar::scaled(const Rational& r) const {
  if (r.is_zero()) return ParamScalar();
  ParamScalar out = *this;
  for (auto& t : out.t_) t.c *= r;
  return out;
}

bool operator==(const ParamScalar& a, const ParamScalar& b) {
  if (a.t_.size() != b.t_.size()) return false;
  for (std::size_t i = 0; i < a.t_.size(); ++i)
    if (a.t_[i].m != b.t_[i].m || a.t_[i].c != b.t_[i].c) return false;
  return true;
}

ParamScalar ParamScalar::substitute(const std::map<std::string, Rational>& vals) const {
  std::vector<std::pair<int, Rational>> ids;
  for (const auto& [k, v] : vals) ids.emplace_back(param_id(k), v);
  ParamScalar out;
  for (const auto& t : t_) {
    ParamScalar term;
    Term base{t.m, t.c};
    Rational factor = 1;
    for (const auto& [id, v] : ids) {
      for (int e = 0; e < base.m[id]; ++e) factor *= v;
      base.m[id] = 0;
    }
    base.c *= factor;
    if (!base.c.is_zero()) term.t_.push_back(base);
    out += term;
  }
  return out;
}

std::vector<std::string> ParamScalar::parameters() const {
  std::vector<std::string> out;
  for (int i = 0; i < kMaxParams; ++i)
    for (const auto& t : t_)
      if (t.m[i]) {
        out.push_back(param_name(i));
        break;
      }
  std::sort(out.begin(), out.end());
  return out;
}

std::string ParamScalar::str() const {
  if (t_.empty()) return "0";
  // Print terms ordered by their rendered monomial so output does not
  // depend on interning order.
  std::vector<std::pair<std::string, Rational>> parts;
  for (const auto& t : t_) {
    std::vector<std::pair<std::string, int>> factors;
    for (int i = 0; i < kMaxParams; ++i)
      if (t.m[i]) factors.emplace_back(param_name(i), t.m[i]);
    std::sort(factors.begin(), factors.end());
    std::string m;
    for (const auto& [n, e] : factors) {
      if (!m.empty()) m += "*";
      m += "$" + n;
      if (e > 1) m += "^" + std::to_string(e);
    }
    parts.emplace_back(m, t.c);
  }
  std::sort(parts.begin(), parts.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::string out;
  for (const auto& [m, c] : parts) {
    std::string cs;
    bool neg = c.sign() < 0;
    Rational a = neg ? -c : c;
    if (m.empty()) {
      cs = a.str();
    } else if (a.is_one()) {
      cs = m;
    } else {
      cs = a.str() + "*" + m;
    }
    if (out.empty())
      out = (neg ? "-" : "") + cs;
    else
      out += (neg ? " - " : " + ") + cs;
  }
  return out;
}

}  // namespace nichols
