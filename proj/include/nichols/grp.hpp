#pragma once
// Subgroups of S_n, group 2-cocycles as explicit tables, principal
// YD-realizations of the rack presets and stabilizers of coideal subalgebras.

#include <string>
#include <vector>

#include "nichols/perm.hpp"
#include "nichols/rack.hpp"
#include "nichols/rational.hpp"
#include "nichols/report.hpp"

namespace nichols {

// All subgroups of S_n (n <= 4) as masks over PermGroup::symmetric(n),
// ordered by size, then by sorted member list.
std::vector<Mask> subgroups(const PermGroup& g);

struct SubgroupClass {
  Mask rep;  // minimal sorted member list in the class
  std::vector<Mask> members;
};
std::vector<SubgroupClass> subgroup_classes(const PermGroup& g);

// Normalized 2-cocycle on a subgroup F of G.  Rows and columns follow the
// sorted member indices of F.
struct GroupCocycle {
  std::vector<int> elems;
  std::vector<Rational> table;

  int pos(int g) const;  // -1 if g is not in F
  const Rational& at(int a, int b) const;  // a, b are G indices
  int size() const { return static_cast<int>(elems.size()); }
  Mask mask() const;
};

GroupCocycle trivial_cocycle(const PermGroup& g, Mask f);
Report check_group_cocycle(const PermGroup& g, const GroupCocycle& psi);
// psi^h(x, y) = psi(h^-1 x h, h^-1 y h) on h F h^-1.
GroupCocycle conjugate_cocycle(const PermGroup& g, int h, const GroupCocycle& psi);
GroupCocycle restrict_cocycle(const PermGroup& g, const GroupCocycle& psi, Mask sub);

// psi1 / psi2 = delta(c) for some c : F -> {+1,-1}.  Both tables must be
// {+1,-1}-valued on the same F.
bool cohomologous_pm1(const PermGroup& g, const GroupCocycle& a, const GroupCocycle& b);
// psi(x,y) != psi(y,x) for a commuting pair; such a class is nontrivial over
// an algebraically closed field.
bool asymmetric_on_commuting_pair(const PermGroup& g, const GroupCocycle& psi);

// {+1,-1}-valued representative of the nontrivial class of S_4, obtained from
// a set-theoretic section of GL(2,3) -> PGL(2,3) = S_4.
GroupCocycle s4_nontrivial_cocycle(const PermGroup& s4);
// psi(x,y) = -1 iff x and y are both odd.
GroupCocycle sign_pullback_cocycle(const PermGroup& g, Mask f);

struct Realization {
  PermGroup G;
  int nx = 0;
  std::vector<int> act;       // act[h*nx + i] = h.i
  std::vector<int> g;         // g[i] = G index of g_i
  std::vector<Rational> chi;  // chi[h*nx + i] = chi_i(h)

  int a(int h, int i) const { return act[h * nx + i]; }
  const Rational& x(int h, int i) const { return chi[h * nx + i]; }
};

Realization standard_realization(const RackPreset& p);
Report check_realization(const Realization& real, const Rack& r, const RackCocycle& q);

// {h in G : h g(Y) h^-1 = g(Y)}.
Mask stabilizer_KY(const std::vector<int>& Y, const Realization& real);
// h.Y as a sorted list.
std::vector<int> act_on_set(const Realization& real, int h, const std::vector<int>& Y);
bool is_F_stable(const Realization& real, Mask f, const std::vector<int>& Y);

// Short structural name ("1", "Z2", "Z3", "Z4", "Z2xZ2", "S3", "D4", "A4", "S4").
std::string subgroup_name(const PermGroup& g, Mask m);

// The epimorphism S_4 -> S_3 with kernel {1,(12)(34),(13)(24),(14)(23)}, read
// off the action on the three pair partitions of {1,2,3,4}.  Labels are chosen
// so that (1 2), (1 3), (2 3) are fixed.  Result: S_4 index -> S_3 index.
std::vector<int> s4_to_s3(const PermGroup& s4, const PermGroup& s3);

}  // namespace nichols
