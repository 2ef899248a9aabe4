#pragma once
// Finite racks, rack 2-cocycles, the classes R and R', and the quadratic
// relation polynomials phi_C and their Y-restrictions vartheta_{C,Y}.

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "nichols/ncpoly.hpp"
#include "nichols/perm.hpp"
#include "nichols/rational.hpp"
#include "nichols/report.hpp"

namespace nichols {

struct Rack {
  std::vector<std::string> labels;
  std::vector<int> op;      // op[i*size + j] = i |> j
  std::vector<Perm> perms;  // group elements for conjugation racks, else empty
  int degree = 0;           // n of S_n for conjugation racks

  int size() const { return static_cast<int>(labels.size()); }
  int tri(int i, int j) const { return op[i * size() + j]; }
  int index(const std::string& label) const;  // accepts "(1 2)" and "(12)"
};

struct RackCocycle {
  std::vector<Rational> q;  // q[i*size + j] = q_{ij}
  int n = 0;
  const Rational& at(int i, int j) const { return q[i * n + j]; }
  Rational& at(int i, int j) { return q[i * n + j]; }
};

// A class C in R.  cycle = i_1, ..., i_{n(C)}; pairs[h] = (i_{h+2}, i_{h+1})
// in zero-based h, i.e. (i_2,i_1), (i_3,i_2), ...
struct EquivClass {
  std::vector<int> cycle;
  std::vector<std::pair<int, int>> pairs;
  int size() const { return static_cast<int>(cycle.size()); }
  bool contains(int i, int j) const;
};

enum class YTag { R1, R2, R3 };

struct YPartitionTag {
  YTag tag = YTag::R3;
  int i = -1, j = -1;  // the pair in C ∩ Y×Y for R2
};

Report check_rack(const std::vector<std::string>& elements, const std::vector<int>& op);
inline Report check_rack(const Rack& r) { return check_rack(r.labels, r.op); }

// selector "o2" (transpositions of S_n) or "o4" (4-cycles, n = 4 only).
Rack conjugation_rack(int n, const std::string& selector);

Report check_cocycle(const Rack& r, const RackCocycle& q);

RackCocycle constant_cocycle(const Rack& r, const Rational& v);
// q_{ji} = chi_i(j) with chi_{(a b)}(s) = 1 if s(a) < s(b), else -1.
RackCocycle chi_cocycle(const Rack& r);

std::vector<EquivClass> enumerate_classes(const Rack& r);
// Indices (into enumerate_classes) of the classes kept in R'.
std::vector<int> classes_prime(const Rack& r, const RackCocycle& q,
                               const std::vector<EquivClass>& classes);
int class_of(const std::vector<EquivClass>& classes, int i, int j);

// Generators are the rack elements in order (word letter = element index).
Poly phi_C(const EquivClass& c, const RackCocycle& q);

YPartitionTag tag_class(const EquivClass& c, const std::vector<int>& Y);
// Polynomial in the rack generators (letters = element indices).
Poly vartheta_CY(const EquivClass& c, const std::vector<int>& Y, const RackCocycle& q,
                 const Rack& r);

struct RackPreset {
  std::string name;     // o2_3, o2_4, o4_4
  std::string cocycle;  // minus, chi
  Rack rack;
  RackCocycle q;
};

RackPreset rack_preset(const std::string& name, const std::string& cocycle);

nlohmann::ordered_json rack_to_json(const Rack& r, const RackCocycle& q);
// Reads {"elements":[...], "op":[[...]], "q":[[...]]}; op entries are indices
// or labels, q entries are rationals given as numbers or strings.
std::pair<Rack, RackCocycle> rack_from_json(const nlohmann::json& j);

std::string class_label(const EquivClass& c, const Rack& r);

}  // namespace nichols
