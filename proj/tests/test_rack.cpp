#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "nichols/rack.hpp"

using namespace nichols;

namespace {

// Orbits of (i,j) -> (i|>j, i) computed directly on permutations.
std::multiset<int> orbit_sizes_by_perms(const Rack& r) {
  const int n = r.size();
  auto find = [&](const Perm& p) {
    for (int k = 0; k < n; ++k)
      if (r.perms[k] == p) return k;
    return -1;
  };
  std::set<std::pair<int, int>> done;
  std::multiset<int> sizes;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (done.count({i, j})) continue;
      int a = i, b = j, len = 0;
      do {
        done.insert({a, b});
        ++len;
        int c = find(r.perms[a] * r.perms[b] * r.perms[a].inverse());
        b = a;
        a = c;
      } while (!(a == i && b == j));
      sizes.insert(len);
    }
  return sizes;
}

Word w(std::initializer_list<int> letters) {
  Word out;
  for (int l : letters) out.push_back(static_cast<char>(l));
  return out;
}

}  // namespace

TEST_CASE("conjugation racks satisfy the rack axioms") {
  for (auto [n, sel] : {std::pair{3, "o2"}, std::pair{4, "o2"}, std::pair{4, "o4"}}) {
    Rack r = conjugation_rack(n, sel);
    CHECK(r.size() == (n == 3 ? 3 : 6));
    CHECK(check_rack(r).ok());
  }
}

TEST_CASE("constant operation is not a rack") {
  Report rep = check_rack({"1", "2"}, {0, 0, 0, 0});
  REQUIRE_FALSE(rep.ok());
  CHECK(rep.violations.front().find("left translation by 1") != std::string::npos);
}

TEST_CASE("O_2^3 triangle and the 4-cycle fixed point") {
  Rack r = conjugation_rack(3, "o2");
  CHECK(r.labels == std::vector<std::string>{"(1 2)", "(1 3)", "(2 3)"});
  CHECK(r.tri(r.index("(12)"), r.index("(13)")) == r.index("(2 3)"));
  Rack o4 = conjugation_rack(4, "o4");
  int c = o4.index("(1 2 3 4)");
  REQUIRE(c >= 0);
  CHECK(o4.tri(c, c) == c);
}

TEST_CASE("rack cocycles") {
  for (const char* name : {"o2_3", "o2_4"}) {
    RackPreset p = rack_preset(name, "minus");
    CHECK(check_cocycle(p.rack, p.q).ok());
    CHECK(check_cocycle(p.rack, chi_cocycle(p.rack)).ok());
    for (int i = 0; i < p.rack.size(); ++i) CHECK(p.q.at(i, i) == Rational(-1));
  }
  CHECK(check_cocycle(rack_preset("o4_4", "minus").rack, rack_preset("o4_4", "minus").q).ok());

  RackPreset p = rack_preset("o2_3", "minus");
  RackCocycle bad = p.q;
  bad.at(0, 1) = Rational(1);
  CHECK_FALSE(check_cocycle(p.rack, bad).ok());
}

TEST_CASE("classes agree with a direct orbit count") {
  for (auto [name, expect] : {std::pair{"o2_3", 5}, std::pair{"o2_4", 17}, std::pair{"o4_4", -1}}) {
    Rack r = rack_preset(name, "minus").rack;
    auto classes = enumerate_classes(r);
    std::multiset<int> sizes;
    for (const auto& c : classes) sizes.insert(c.size());
    CHECK(sizes == orbit_sizes_by_perms(r));
    if (expect > 0) CHECK(static_cast<int>(classes.size()) == expect);
    for (const auto& c : classes) {
      CHECK(c.pairs.front() == *std::min_element(c.pairs.begin(), c.pairs.end()));
      for (std::size_t h = 0; h + 1 < c.pairs.size(); ++h) {
        auto [a, b] = c.pairs[h];
        CHECK(c.pairs[h + 1] == std::pair{r.tri(a, b), a});
      }
    }
  }
  auto o24 = enumerate_classes(rack_preset("o2_4", "minus").rack);
  std::map<int, int> by_size;
  for (const auto& c : o24) ++by_size[c.size()];
  CHECK(by_size == std::map<int, int>{{1, 6}, {2, 3}, {3, 8}});
}

TEST_CASE("R' is all of R for the presets") {
  for (auto [name, cocycle] : {std::pair{"o2_3", "minus"}, std::pair{"o2_4", "minus"},
                               std::pair{"o2_4", "chi"}, std::pair{"o4_4", "minus"}}) {
    RackPreset p = rack_preset(name, cocycle);
    auto classes = enumerate_classes(p.rack);
    CHECK(classes_prime(p.rack, p.q, classes).size() == classes.size());
  }
}

TEST_CASE("phi_C") {
  RackPreset p = rack_preset("o2_4", "minus");
  auto classes = enumerate_classes(p.rack);
  int a = p.rack.index("(1 2)"), b = p.rack.index("(3 4)");
  CHECK(phi_C(classes[class_of(classes, a, a)], p.q) == Poly::monomial(w({a, a})));

  Poly plus = phi_C(classes[class_of(classes, a, b)], p.q);
  CHECK(plus.coeff(w({a, b})) == PS(1));
  CHECK(plus.coeff(w({b, a})) == PS(1));
  CHECK(plus.terms().size() == 2);

  RackPreset c = rack_preset("o2_4", "chi");
  Poly minus = phi_C(classes[class_of(classes, a, b)], c.q);
  CHECK(minus.coeff(w({a, b})) == -minus.coeff(w({b, a})));
  CHECK(minus.terms().size() == 2);

  // With q = -1 all signs eta_h are +1.
  RackPreset s3 = rack_preset("o2_3", "minus");
  auto cl3 = enumerate_classes(s3.rack);
  Poly tri = phi_C(cl3[class_of(cl3, 0, 1)], s3.q);
  CHECK(tri.terms().size() == 3);
  for (const auto& t : tri.terms()) CHECK(t.c == PS(1));
}

TEST_CASE("vartheta_CY") {
  RackPreset p = rack_preset("o2_3", "minus");
  auto classes = enumerate_classes(p.rack);
  int i = p.rack.index("(12)"), j = p.rack.index("(13)");
  const EquivClass& mixed = classes[class_of(classes, i, j)];
  Poly v = vartheta_CY(mixed, {i, j}, p.q, p.rack);
  // The unique pair of the class inside Y x Y decides the orientation.
  YPartitionTag t = tag_class(mixed, {i, j});
  REQUIRE(t.tag == YTag::R2);
  CHECK(v.coeff(w({t.i, t.j, t.i})) == PS(1));
  CHECK(v.coeff(w({t.j, t.i, t.j})) == PS(-1));
  CHECK(v.terms().size() == 2);

  std::vector<int> all{0, 1, 2};
  for (const auto& c : classes) {
    CHECK(vartheta_CY(c, all, p.q, p.rack) == phi_C(c, p.q));
    if (c.size() == 3) CHECK(vartheta_CY(c, {i}, p.q, p.rack).is_zero());
  }
}

TEST_CASE("rack JSON round trip") {
  RackPreset p = rack_preset("o2_4", "chi");
  auto [r, q] = rack_from_json(rack_to_json(p.rack, p.q));
  CHECK(r.labels == p.rack.labels);
  CHECK(r.op == p.rack.op);
  CHECK(q.q == p.q.q);
}
