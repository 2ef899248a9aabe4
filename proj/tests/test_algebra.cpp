#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "nichols/algebra.hpp"

using namespace nichols;

namespace {

std::vector<int> ids(const Rack& r, std::initializer_list<const char*> labels) {
  std::vector<int> out;
  for (const char* s : labels) out.push_back(r.index(s));
  std::sort(out.begin(), out.end());
  return out;
}

// Rank of the normal forms of all words in the letters of Y, up to the
// given length.  No closure machinery involved.
int words_span(Algebra& b, const std::vector<int>& Y, int max_len) {
  Echelon e;
  std::vector<Word> level{Word()};
  int rank = 0;
  for (int len = 0; len <= max_len; ++len) {
    for (const auto& w : level) rank += e.insert(b.vec(Poly::monomial(w)));
    std::vector<Word> next;
    for (const auto& w : level)
      for (int y : Y) next.push_back(w + static_cast<char>(b.gen_pos(y)));
    level = std::move(next);
  }
  return rank;
}

std::vector<Poly> catalog_relations(const CatalogItem& it, const Rational& eps) {
  auto rels = parse_relations(it.relations, it.letters);
  for (auto& r : rels) r = r.substitute({{"eps", eps}});
  return rels;
}

}  // namespace

TEST_CASE("bosonization over O_2^3") {
  RackPreset p = rack_preset("o2_3", "minus");
  Realization re = standard_realization(p);
  std::vector<int> all{0, 1, 2};
  Mask G = re.G.full_mask();
  Algebra h = bosonize(p.rack, nichols_relations(p.rack, p.q), all, re, G, trivial_cocycle(re.G, G));
  CHECK(h.dim() == 72);
  Algebra one = bosonize(p.rack, nichols_relations(p.rack, p.q), all, re, 1, trivial_cocycle(re.G, 1));
  CHECK(one.dim() == 12);

  // e_f y_l = chi_l(f) y_{f.l} e_f and e_r e_s = e_{rs}.
  for (int f = 0; f < re.G.order(); ++f) {
    int lf = h.local_group(f);
    for (int l = 0; l < 3; ++l) {
      Poly lhs = h.mul(h.e(lf), h.y(h.gen_pos(l)));
      Poly rhs = h.mul(h.y(h.gen_pos(re.a(f, l))), h.e(lf)).scaled(PS(re.x(f, l)));
      CHECK(lhs == rhs);
    }
    for (int s = 0; s < re.G.order(); ++s)
      CHECK(h.mul(h.e(lf), h.e(h.local_group(s))) == h.e(h.local_group(re.G.mul(f, s))));
  }

  // K_Y for a stable Y smashed with its stabilizer.
  std::vector<int> Y = ids(p.rack, {"(1 2)", "(1 3)"});
  Mask st = stabilizer_KY(Y, re);
  Algebra ky = bosonize(p.rack, ly_relations(p.rack, p.q, Y), Y, re, st, trivial_cocycle(re.G, st));
  CHECK(ky.dim() == 6 * 2);
}

TEST_CASE("coideal subalgebras against the span of words") {
  RackPreset p = rack_preset("o2_3", "minus");
  Algebra b = nichols_quadratic(p.rack, p.q);
  for (unsigned m = 0; m < 8; ++m) {
    std::vector<int> Y;
    for (int i = 0; i < 3; ++i)
      if (m >> i & 1u) Y.push_back(i);
    CHECK(coideal_KY(b, Y).dim == words_span(b, Y, 5));
  }
  CHECK(coideal_KY(b, {}).dim == 1);
  CHECK(coideal_KY(b, ids(p.rack, {"(1 2)", "(1 3)"})).dim == 6);

  RackPreset p4 = rack_preset("o2_4", "minus");
  Algebra b4 = nichols_quadratic(p4.rack, p4.q);
  CHECK(coideal_KY(b4, ids(p4.rack, {"(1 2)", "(1 3)", "(2 3)", "(1 4)", "(2 4)"})).dim == 288);
  std::vector<int> y3 = ids(p4.rack, {"(1 2)", "(1 3)", "(3 4)"});
  CHECK(coideal_KY(b4, y3).dim == words_span(b4, y3, 7));
}

TEST_CASE("coideal table over O_2^3") {
  RackPreset p = rack_preset("o2_3", "minus");
  Realization re = standard_realization(p);
  CoidealTable t = coideal_table(p, re);
  REQUIRE(t.rows.size() == 2);
  CHECK(t.total == 12);
  CHECK(t.rows[0].dim == 2);
  CHECK(t.rows[1].dim == 6);
  CHECK(subgroup_name(re.G, t.rows[0].stabilizer) == "Z2");
  CHECK(subgroup_name(re.G, t.rows[1].stabilizer) == "Z2");
  // <i> for {i}; <k> for {i, j}.
  CHECK(re.G.members(t.rows[0].stabilizer).back() == re.g[t.rows[0].Y[0]]);
  std::set<int> ij(t.rows[1].Y.begin(), t.rows[1].Y.end());
  for (int k = 0; k < 3; ++k)
    if (!ij.count(k)) CHECK(re.G.members(t.rows[1].stabilizer).back() == re.g[k]);
  CHECK(t.rows[0].orbit_size == 3);
  CHECK(t.rows[1].orbit_size == 3);
}

TEST_CASE("presentations L_Y") {
  RackPreset p = rack_preset("o2_3", "minus");
  Algebra b = nichols_quadratic(p.rack, p.q);
  for (unsigned m = 1; m < 8; ++m) {
    std::vector<int> Y;
    for (int i = 0; i < 3; ++i)
      if (m >> i & 1u) Y.push_back(i);
    Algebra ly = build_LY(p.rack, p.q, Y);
    CHECK(ly.dim() == coideal_KY(b, Y).dim);
  }
  CHECK(build_LY(p.rack, p.q, {0, 1, 2}).dim() == b.dim());

  RackPreset p4 = rack_preset("o2_4", "minus");
  Algebra b4 = nichols_quadratic(p4.rack, p4.q);
  std::vector<int> Y{p4.rack.index("(1 3)"), p4.rack.index("(2 3)"), p4.rack.index("(3 4)")};
  Algebra ly = build_LY(p4.rack, p4.q, ids(p4.rack, {"(1 3)", "(2 3)", "(3 4)"}));
  Word xyz2, in_b;
  for (int rep = 0; rep < 2; ++rep)
    for (int y : Y) {
      xyz2.push_back(static_cast<char>(ly.gen_pos(y)));
      in_b.push_back(static_cast<char>(b4.gen_pos(y)));
    }
  CHECK_FALSE(ly.nf(Poly::monomial(xyz2)).is_zero());
  CHECK(b4.nf(Poly::monomial(in_b)).is_zero());
}

TEST_CASE("catalog presentations") {
  RackPreset p = rack_preset("o2_4", "minus");
  Algebra b = nichols_quadratic(p.rack, p.q);
  const auto& cat = o24_catalog();

  const CatalogItem& six = cat[5];
  auto rels6 = catalog_relations(six, 1);
  Report ok6 = check_presentation(b, p.rack, ids(p.rack, {"(1 2)", "(1 3)", "(1 4)"}),
                                  six.letters, rels6, 48);
  CHECK(ok6.ok());
  CHECK(ok6.data["dim_presented"] == 48);

  auto dropped = rels6;
  dropped.erase(dropped.begin() + 6);  // zxyz + yzxy + xyzx
  Report bad6 = check_presentation(b, p.rack, ids(p.rack, {"(1 2)", "(1 3)", "(1 4)"}),
                                   six.letters, dropped, 48);
  CHECK_FALSE(bad6.ok());
  CHECK(bad6.data["dim_presented"] != 48);

  // Item (4) as printed lists one mixed quadratic relation; it vanishes in
  // K_Y but leaves the presented algebra too large.  The mirrored relation
  // completes it.
  const CatalogItem& four = cat[3];
  auto rels4 = catalog_relations(four, 1);
  std::vector<int> y4 = ids(p.rack, {"(1 2)", "(1 3)", "(2 3)"});
  Report printed = check_presentation(b, p.rack, y4, four.letters, rels4, 12);
  CHECK(printed.data.contains("assignment"));
  CHECK(printed.data["dim_closure"] == 12);
  CHECK(printed.data["dim_presented"] != 12);
  rels4.push_back(parse_poly("yx + zy + xz", four.letters));
  CHECK(check_presentation(b, p.rack, y4, four.letters, rels4, 12).ok());
}

TEST_CASE("quotient map checks") {
  RackPreset p = rack_preset("o2_3", "minus");
  Algebra b = nichols_quadratic(p.rack, p.q);
  Algebra c = nichols_quadratic(p.rack, p.q);
  std::vector<Poly> gens{c.y(0), c.y(1), c.y(2)};
  CHECK(quotient_map_check(b, c, gens, {c.e(0)}, {}).ok());

  // Doubling one generator breaks the mixed relations.
  std::vector<Poly> bad{c.y(0), c.y(1), c.y(2).scaled(PS(2))};
  CHECK_FALSE(quotient_map_check(b, c, bad, {c.e(0)}, {}).ok());
  // ... unless the offending images are killed by the extra ideal.
  CHECK(quotient_map_check(b, c, bad, {c.e(0)}, {c.y(2)}).ok());
}
