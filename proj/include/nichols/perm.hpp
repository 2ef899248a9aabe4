#pragma once
// Permutations of {1..n} (n <= 8) and finite permutation groups with
// multiplication tables.  Products compose right to left: (fg)(x) = f(g(x)).

#include <array>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

namespace nichols {

struct Perm {
  std::uint8_t n = 0;
  std::array<std::uint8_t, 8> img{};  // img[i] = image of i+1, zero based

  static Perm identity(int n);
  // Cycle notation: "(1 2)(3 4)", "(12)(34)", "()" or "id".
  static Perm parse(const std::string& s, int n);

  Perm operator*(const Perm& o) const;
  Perm inverse() const;
  bool is_identity() const;
  int sign() const;
  int order() const;
  int operator()(int x) const { return img[x - 1] + 1; }  // one based
  std::string str() const;                                 // "(1 2)(3 4)", "()"
  std::uint32_t code() const;

  friend bool operator==(const Perm& a, const Perm& b) { return a.n == b.n && a.img == b.img; }
  friend bool operator!=(const Perm& a, const Perm& b) { return !(a == b); }
};

using Mask = std::uint32_t;  // subset of a group with at most 32 elements

class PermGroup {
 public:
  PermGroup() = default;
  // Elements are ordered: identity first, then by cycle notation.
  explicit PermGroup(std::vector<Perm> elements);
  static PermGroup symmetric(int n);

  int n() const { return n_; }
  int order() const { return static_cast<int>(el_.size()); }
  const Perm& el(int i) const { return el_[i]; }
  const std::vector<Perm>& elements() const { return el_; }
  int id() const { return 0; }
  int mul(int a, int b) const { return mul_[a * order() + b]; }
  int inv(int a) const { return inv_[a]; }
  int conj(int h, int a) const { return mul(mul(h, a), inv(h)); }  // h a h^-1
  int index(const Perm& p) const;  // -1 if absent
  int index(const std::string& cycle) const { return index(Perm::parse(cycle, n_)); }

  // Subgroup helpers (masks of element indices).
  Mask full_mask() const;
  Mask generated(const std::vector<int>& gens) const;
  bool is_subgroup(Mask m) const;
  Mask conjugate(int h, Mask m) const;
  std::vector<int> members(Mask m) const;
  std::string mask_str(Mask m) const;

 private:
  int n_ = 0;
  std::vector<Perm> el_;
  std::vector<int> mul_, inv_;
  std::unordered_map<std::uint32_t, int> idx_;
};

}  // namespace nichols
