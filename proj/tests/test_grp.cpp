#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "nichols/grp.hpp"

using namespace nichols;

namespace {

// Closure of a set of permutations under products, by breadth-first search.
std::set<std::uint32_t> closure(const std::vector<Perm>& gens, int n) {
  std::set<std::uint32_t> seen{Perm::identity(n).code()};
  std::vector<Perm> todo{Perm::identity(n)};
  while (!todo.empty()) {
    Perm p = todo.back();
    todo.pop_back();
    for (const auto& g : gens) {
      Perm q = g * p;
      if (seen.insert(q.code()).second) todo.push_back(q);
    }
  }
  return seen;
}

// Every subgroup of S_3 and S_4 is generated by two elements.
std::set<std::set<std::uint32_t>> two_generated(const PermGroup& g) {
  std::set<std::set<std::uint32_t>> out;
  for (const auto& a : g.elements())
    for (const auto& b : g.elements()) out.insert(closure({a, b}, g.n()));
  return out;
}

std::set<std::uint32_t> codes(const PermGroup& g, Mask m) {
  std::set<std::uint32_t> out;
  for (int x : g.members(m)) out.insert(g.el(x).code());
  return out;
}

Mask mask_of(const PermGroup& g, std::initializer_list<const char*> cycles) {
  Mask m = 0;
  for (const char* c : cycles) m |= Mask(1) << g.index(c);
  return m;
}

}  // namespace

TEST_CASE("subgroups of S_3 and S_4 against two-generated closures") {
  for (int n : {3, 4}) {
    PermGroup g = PermGroup::symmetric(n);
    auto subs = subgroups(g);
    std::set<std::set<std::uint32_t>> got;
    for (Mask m : subs) {
      CHECK(g.is_subgroup(m));
      got.insert(codes(g, m));
    }
    CHECK(got == two_generated(g));
    CHECK(subs.size() == (n == 3 ? 6u : 30u));

    std::map<std::uint32_t, Perm> by_code;
    for (const auto& p : g.elements()) by_code[p.code()] = p;
    std::set<std::set<std::set<std::uint32_t>>> orbits;
    for (const auto& s : got) {
      std::set<std::set<std::uint32_t>> orbit;
      for (const auto& h : g.elements()) {
        std::set<std::uint32_t> c;
        for (std::uint32_t code : s) c.insert((h * by_code[code] * h.inverse()).code());
        orbit.insert(c);
      }
      orbits.insert(orbit);
    }
    CHECK(subgroup_classes(g).size() == orbits.size());
    CHECK(orbits.size() == (n == 3 ? 4u : 11u));
  }
}

TEST_CASE("group 2-cocycles") {
  PermGroup s4 = PermGroup::symmetric(4);
  Mask all = s4.full_mask();
  CHECK(check_group_cocycle(s4, trivial_cocycle(s4, all)).ok());
  GroupCocycle nt = s4_nontrivial_cocycle(s4);
  CHECK(check_group_cocycle(s4, nt).ok());
  CHECK(asymmetric_on_commuting_pair(s4, nt));
  CHECK_FALSE(cohomologous_pm1(s4, nt, trivial_cocycle(s4, all)));
  CHECK(check_group_cocycle(s4, sign_pullback_cocycle(s4, all)).ok());

  PermGroup s3 = PermGroup::symmetric(3);
  GroupCocycle bad = trivial_cocycle(s3, s3.full_mask());
  bad.table[1 * bad.size() + 2] = Rational(2);
  CHECK_FALSE(check_group_cocycle(s3, bad).ok());
}

TEST_CASE("conjugate cocycles") {
  PermGroup s4 = PermGroup::symmetric(4);
  GroupCocycle nt = s4_nontrivial_cocycle(s4);
  GroupCocycle same = conjugate_cocycle(s4, s4.id(), nt);
  CHECK(same.elems == nt.elems);
  CHECK(same.table == nt.table);

  Mask v = mask_of(s4, {"()", "(1 2)(3 4)", "(1 3)(2 4)", "(1 4)(2 3)"});
  GroupCocycle rv = restrict_cocycle(s4, nt, v);
  CHECK(check_group_cocycle(s4, rv).ok());
  for (int h : s4.members(v)) {
    GroupCocycle c = conjugate_cocycle(s4, h, rv);
    CHECK(c.elems == rv.elems);
    CHECK(cohomologous_pm1(s4, c, rv));
  }
  GroupCocycle one = trivial_cocycle(s4, v);
  for (int h = 0; h < s4.order(); ++h)
    for (const auto& x : conjugate_cocycle(s4, h, one).table) CHECK(x == Rational(1));
}

TEST_CASE("standard realizations") {
  for (auto [name, cocycle] : {std::pair{"o2_3", "minus"}, std::pair{"o2_4", "minus"},
                               std::pair{"o2_4", "chi"}, std::pair{"o4_4", "minus"}}) {
    RackPreset p = rack_preset(name, cocycle);
    Realization re = standard_realization(p);
    CHECK(check_realization(re, p.rack, p.q).ok());
  }
  RackPreset p3 = rack_preset("o2_3", "minus");
  Realization re3 = standard_realization(p3);
  for (int h = 0; h < re3.G.order(); ++h)
    for (int i = 0; i < re3.nx; ++i) CHECK(re3.x(h, i) == Rational(re3.G.el(h).sign()));

  // chi-q identity by hand at f = (12), i = (12), j = (13): both sides are +1.
  int f = re3.G.index("(1 2)"), i = p3.rack.index("(1 2)"), j = p3.rack.index("(1 3)");
  int fi = re3.a(f, i), fj = re3.a(f, j);
  CHECK(re3.x(f, i) * p3.q.at(p3.rack.tri(fi, fj), fi) ==
        re3.x(f, j) * p3.q.at(p3.rack.tri(i, j), i));

  RackPreset pc = rack_preset("o2_4", "chi");
  Realization rc = standard_realization(pc);
  CHECK(rc.x(rc.G.index("(1 2)"), pc.rack.index("(3 4)")) == Rational(1));

  RackPreset p4 = rack_preset("o4_4", "minus");
  Realization r4 = standard_realization(p4);
  CHECK(r4.G.el(r4.g[p4.rack.index("(1 2 3 4)")]).str() == "(1 2 3 4)");

  Realization broken = re3;
  broken.chi[1 * broken.nx + 0] = -broken.chi[1 * broken.nx + 0];
  Report rep = check_realization(broken, p3.rack, p3.q);
  REQUIRE_FALSE(rep.ok());
  bool cocycle_law = false;
  for (const auto& v : rep.violations) cocycle_law |= v.find("1-cocycle") != std::string::npos;
  CHECK(cocycle_law);
}

TEST_CASE("stabilizers by direct conjugation") {
  auto direct = [](const RackPreset& p, const Realization& re, std::vector<std::string> ys) {
    std::set<std::uint32_t> target;
    for (const auto& y : ys) target.insert(Perm::parse(y, p.rack.degree).code());
    std::set<std::uint32_t> out;
    for (const auto& h : re.G.elements()) {
      std::set<std::uint32_t> img;
      for (const auto& y : ys) img.insert((h * Perm::parse(y, p.rack.degree) * h.inverse()).code());
      if (img == target) out.insert(h.code());
    }
    return out;
  };
  auto stab = [](const RackPreset& p, const Realization& re, std::vector<std::string> ys) {
    std::vector<int> Y;
    for (const auto& y : ys) Y.push_back(p.rack.index(y));
    return codes(re.G, stabilizer_KY(Y, re));
  };

  RackPreset p3 = rack_preset("o2_3", "minus");
  Realization re3 = standard_realization(p3);
  CHECK(stab(p3, re3, {"(1 2)"}) == codes(re3.G, mask_of(re3.G, {"()", "(1 2)"})));
  CHECK(stab(p3, re3, {"(1 2)", "(1 3)"}) == codes(re3.G, mask_of(re3.G, {"()", "(2 3)"})));

  RackPreset p4 = rack_preset("o2_4", "minus");
  Realization re4 = standard_realization(p4);
  for (auto ys : std::vector<std::vector<std::string>>{
           {"(1 2)"}, {"(1 2)", "(3 4)"}, {"(1 2)", "(1 3)", "(2 3)", "(1 4)"},
           {"(1 2)", "(1 3)", "(2 4)", "(3 4)"}, {"(1 3)", "(2 3)", "(3 4)"}}) {
    CHECK(stab(p4, re4, ys) == direct(p4, re4, ys));
  }
  // (2 3) permutes {(12),(13),(23),(14)}.
  CHECK(stab(p4, re4, {"(1 2)", "(1 3)", "(2 3)", "(1 4)"}).size() == 2);
}

TEST_CASE("the epimorphism S_4 -> S_3") {
  PermGroup s4 = PermGroup::symmetric(4), s3 = PermGroup::symmetric(3);
  auto pi = s4_to_s3(s4, s3);
  for (int a = 0; a < s4.order(); ++a)
    for (int b = 0; b < s4.order(); ++b) CHECK(pi[s4.mul(a, b)] == s3.mul(pi[a], pi[b]));
  std::set<std::string> kernel;
  for (int a = 0; a < s4.order(); ++a)
    if (pi[a] == s3.id()) kernel.insert(s4.el(a).str());
  CHECK(kernel == std::set<std::string>{"()", "(1 2)(3 4)", "(1 3)(2 4)", "(1 4)(2 3)"});
  for (auto [src, dst] : {std::pair{"(1 2)", "(1 2)"}, std::pair{"(3 4)", "(1 2)"},
                          std::pair{"(1 3)", "(1 3)"}, std::pair{"(2 4)", "(1 3)"},
                          std::pair{"(1 4)", "(2 3)"}, std::pair{"(2 3)", "(2 3)"}})
    CHECK(s3.el(pi[s4.index(src)]).str() == dst);
}

TEST_CASE("F-stability and subgroup names") {
  RackPreset p = rack_preset("o2_3", "minus");
  Realization re = standard_realization(p);
  Mask z3 = mask_of(re.G, {"()", "(1 2 3)", "(1 3 2)"});
  CHECK(is_F_stable(re, z3, {0, 1, 2}));
  CHECK_FALSE(is_F_stable(re, z3, {0}));
  CHECK(act_on_set(re, re.G.index("(1 2 3)"), {0}) == std::vector<int>{p.rack.index("(2 3)")});
  CHECK(subgroup_name(re.G, z3) == "Z3");
  CHECK(subgroup_name(re.G, re.G.full_mask()) == "S3");
}
