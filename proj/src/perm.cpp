#include "nichols/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace nichols {

Perm Perm::identity(int n) {
  if (n < 1 || n > 8) throw std::invalid_argument("perm: degree out of range");
  Perm p;
  p.n = static_cast<std::uint8_t>(n);
  for (int i = 0; i < n; ++i) p.img[i] = static_cast<std::uint8_t>(i);
  return p;
}

Perm Perm::parse(const std::string& s, int n) {
  Perm p = identity(n);
  std::string t;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
  if (t.empty() || t == "()" || t == "id" || t == "1" || t == "e") return p;
  // Compact form "(12)" reads one digit per point; spaced form is split on blanks.
  std::string raw = s;
  std::size_t k = 0;
  while (k < raw.size()) {
    while (k < raw.size() && std::isspace(static_cast<unsigned char>(raw[k]))) ++k;
    if (k == raw.size()) break;
    if (raw[k] != '(') throw std::invalid_argument("perm: expected '(' in " + s);
    std::size_t close = raw.find(')', k);
    if (close == std::string::npos) throw std::invalid_argument("perm: unbalanced " + s);
    std::string body = raw.substr(k + 1, close - k - 1);
    std::vector<int> pts;
    bool spaced = body.find_first_of(" ,") != std::string::npos;
    if (spaced) {
      std::string cur;
      for (char c : body + " ") {
        if (std::isdigit(static_cast<unsigned char>(c))) {
          cur.push_back(c);
        } else if (!cur.empty()) {
          pts.push_back(std::stoi(cur));
          cur.clear();
        }
      }
    } else {
      for (char c : body) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
          throw std::invalid_argument("perm: bad character in " + s);
        pts.push_back(c - '0');
      }
    }
    for (int x : pts)
      if (x < 1 || x > n) throw std::invalid_argument("perm: point out of range in " + s);
    std::vector<int> sorted = pts;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw std::invalid_argument("perm: repeated point in " + s);
    // Written cycles compose right to left, so each new one goes on the right.
    Perm c = identity(n);
    for (std::size_t j = 0; j < pts.size(); ++j)
      c.img[pts[j] - 1] = static_cast<std::uint8_t>(pts[(j + 1) % pts.size()] - 1);
    p = p * c;
    k = close + 1;
  }
  return p;
}

Perm Perm::operator*(const Perm& o) const {
  if (n != o.n) throw std::invalid_argument("perm: degree mismatch");
  Perm r;
  r.n = n;
  for (int i = 0; i < n; ++i) r.img[i] = img[o.img[i]];
  return r;
}

Perm Perm::inverse() const {
  Perm r;
  r.n = n;
  for (int i = 0; i < n; ++i) r.img[img[i]] = static_cast<std::uint8_t>(i);
  return r;
}

bool Perm::is_identity() const {
  for (int i = 0; i < n; ++i)
    if (img[i] != i) return false;
  return true;
}

int Perm::sign() const {
  int s = 1;
  std::array<bool, 8> seen{};
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int j = i; !seen[j]; j = img[j]) {
      seen[j] = true;
      ++len;
    }
    if (len % 2 == 0) s = -s;
  }
  return s;
}

int Perm::order() const {
  int o = 1;
  Perm p = *this;
  while (!p.is_identity()) {
    p = p * *this;
    ++o;
  }
  return o;
}

std::string Perm::str() const {
  std::string out;
  std::array<bool, 8> seen{};
  for (int i = 0; i < n; ++i) {
    if (seen[i] || img[i] == i) continue;
    out += "(";
    bool first = true;
    for (int j = i; !seen[j]; j = img[j]) {
      seen[j] = true;
      if (!first) out += " ";
      out += std::to_string(j + 1);
      first = false;
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

std::uint32_t Perm::code() const {
  std::uint32_t c = n;
  for (int i = 0; i < n; ++i) c = c * 8 + img[i];
  return c;
}

PermGroup::PermGroup(std::vector<Perm> elements) {
  if (elements.empty()) throw std::invalid_argument("group: empty");
  n_ = elements[0].n;
  std::sort(elements.begin(), elements.end(), [](const Perm& a, const Perm& b) {
    if (a.is_identity() != b.is_identity()) return a.is_identity();
    return a.str() < b.str();
  });
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  el_ = std::move(elements);
  if (!el_[0].is_identity()) throw std::invalid_argument("group: identity missing");
  if (el_.size() > 32) throw std::invalid_argument("group: more than 32 elements");
  for (int i = 0; i < order(); ++i) idx_[el_[i].code()] = i;
  mul_.assign(order() * order(), -1);
  inv_.assign(order(), -1);
  for (int a = 0; a < order(); ++a) {
    for (int b = 0; b < order(); ++b) {
      int c = index(el_[a] * el_[b]);
      if (c < 0) throw std::invalid_argument("group: not closed");
      mul_[a * order() + b] = c;
    }
    inv_[a] = index(el_[a].inverse());
  }
}

PermGroup PermGroup::symmetric(int n) {
  std::vector<int> pts(n);
  std::iota(pts.begin(), pts.end(), 0);
  std::vector<Perm> els;
  do {
    Perm p = Perm::identity(n);
    for (int i = 0; i < n; ++i) p.img[i] = static_cast<std::uint8_t>(pts[i]);
    els.push_back(p);
  } while (std::next_permutation(pts.begin(), pts.end()));
  return PermGroup(els);
}

int PermGroup::index(const Perm& p) const {
  auto it = idx_.find(p.code());
  return it == idx_.end() ? -1 : it->second;
}

Mask PermGroup::full_mask() const {
  return order() == 32 ? 0xffffffffu : ((1u << order()) - 1);
}

Mask PermGroup::generated(const std::vector<int>& gens) const {
  Mask m = 1u;  // identity
  std::vector<int> frontier = {0};
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int x : frontier)
      for (int g : gens) {
        int y = mul(x, g);
        if (!(m >> y & 1u)) {
          m |= 1u << y;
          next.push_back(y);
        }
      }
    frontier = std::move(next);
  }
  return m;
}

bool PermGroup::is_subgroup(Mask m) const {
  if (!(m & 1u)) return false;
  for (int a : members(m)) {
    if (!(m >> inv(a) & 1u)) return false;
    for (int b : members(m))
      if (!(m >> mul(a, b) & 1u)) return false;
  }
  return true;
}

Mask PermGroup::conjugate(int h, Mask m) const {
  Mask r = 0;
  for (int a : members(m)) r |= 1u << conj(h, a);
  return r;
}

std::vector<int> PermGroup::members(Mask m) const {
  std::vector<int> out;
  for (int i = 0; i < order(); ++i)
    if (m >> i & 1u) out.push_back(i);
  return out;
}

std::string PermGroup::mask_str(Mask m) const {
  std::string out = "{";
  bool first = true;
  for (int i : members(m)) {
    if (!first) out += ", ";
    out += el_[i].str();
    first = false;
  }
  return out + "}";
}

}  // namespace nichols
