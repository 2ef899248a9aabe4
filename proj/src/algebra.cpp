#include "nichols/algebra.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace nichols {

int Algebra::local_group(int g) const {
  auto it = std::find(group_elems.begin(), group_elems.end(), g);
  return it == group_elems.end() ? -1 : static_cast<int>(it - group_elems.begin());
}

int Algebra::gen_pos(int rack_index) const {
  auto it = std::find(gen_elems.begin(), gen_elems.end(), rack_index);
  return it == gen_elems.end() ? -1 : static_cast<int>(it - gen_elems.begin());
}

SparseVec Algebra::vec(const Poly& p) {
  SparseVec v;
  for (const auto& [i, c] : rs.coords(p)) v.emplace_back(i, c.constant());
  return v;
}

Poly relabel(const Poly& p, const std::vector<int>& gens) {
  std::vector<Term> ts;
  for (const auto& t : p.terms()) {
    Word w;
    for (char ch : t.w) {
      int l = static_cast<unsigned char>(ch);
      auto it = std::find(gens.begin(), gens.end(), l);
      if (it == gens.end()) throw std::invalid_argument("relabel: letter outside the generator set");
      w.push_back(static_cast<char>(it - gens.begin()));
    }
    ts.push_back(Term{w, t.g, t.c});
  }
  return Poly::from_terms(std::move(ts));
}

GroupCtx make_group_ctx(const Realization& real, Mask f, const GroupCocycle& psi,
                        const std::vector<int>& gens) {
  const PermGroup& G = real.G;
  std::vector<int> el = G.members(f);
  if (el.empty() || el[0] != G.id()) throw std::invalid_argument("F must contain the identity");
  if (psi.elems != el) throw std::invalid_argument("cocycle is not defined on F");
  GroupCtx c;
  c.order = static_cast<int>(el.size());
  c.ngen = static_cast<int>(gens.size());
  auto local = [&](int g) {
    auto it = std::find(el.begin(), el.end(), g);
    if (it == el.end()) throw std::invalid_argument("F is not closed");
    return static_cast<int>(it - el.begin());
  };
  c.mul.assign(c.order * c.order, 0);
  c.inv.assign(c.order, 0);
  c.psi.assign(c.order * c.order, Rational(1));
  for (int a = 0; a < c.order; ++a) {
    c.inv[a] = local(G.inv(el[a]));
    for (int b = 0; b < c.order; ++b) {
      c.mul[a * c.order + b] = local(G.mul(el[a], el[b]));
      c.psi[a * c.order + b] = psi.at(el[a], el[b]);
    }
  }
  c.act.assign(c.order * c.ngen, 0);
  c.chi.assign(c.order * c.ngen, Rational(1));
  for (int a = 0; a < c.order; ++a)
    for (int l = 0; l < c.ngen; ++l) {
      int img = real.a(el[a], gens[l]);
      auto it = std::find(gens.begin(), gens.end(), img);
      if (it == gens.end()) throw std::invalid_argument("F does not stabilize the generators");
      c.act[a * c.ngen + l] = static_cast<std::uint8_t>(it - gens.begin());
      c.chi[a * c.ngen + l] = real.x(el[a], gens[l]);
    }
  c.labels.clear();
  for (int g : el) c.labels.push_back(G.el(g).str());
  return c;
}

Algebra make_algebra(const Rack& r, const std::vector<int>& gens, GroupCtx ctx,
                     std::vector<Poly> relations, int degree_cap) {
  Algebra a;
  for (int g : gens) a.gens.push_back(r.labels[g]);
  a.gen_elems = gens;
  a.group_elems.resize(ctx.order);
  std::iota(a.group_elems.begin(), a.group_elems.end(), 0);
  a.relations = std::move(relations);
  a.rs = RewriteSystem(static_cast<int>(gens.size()), std::move(ctx));
  a.status = a.rs.complete(a.relations, degree_cap);
  return a;
}

std::vector<Poly> nichols_relations(const Rack& r, const RackCocycle& q) {
  auto cls = enumerate_classes(r);
  std::vector<Poly> rel;
  for (int k : classes_prime(r, q, cls)) rel.push_back(phi_C(cls[k], q));
  return rel;
}

Algebra nichols_quadratic(const Rack& r, const RackCocycle& q, int degree_cap) {
  std::vector<int> all(r.size());
  std::iota(all.begin(), all.end(), 0);
  return make_algebra(r, all, GroupCtx::trivial(r.size()), nichols_relations(r, q), degree_cap);
}

Algebra bosonize(const Rack& r, const std::vector<Poly>& rack_relations,
                 const std::vector<int>& gens, const Realization& real, Mask f,
                 const GroupCocycle& psi, int degree_cap) {
  GroupCtx ctx = make_group_ctx(real, f, psi, gens);
  std::vector<Poly> rel;
  for (const auto& p : rack_relations) rel.push_back(relabel(p, gens));
  // The relation span must be F-stable.
  Algebra a = make_algebra(r, gens, ctx, rel, degree_cap);
  Algebra plain = make_algebra(r, gens, GroupCtx::trivial(static_cast<int>(gens.size())), rel,
                               degree_cap);
  if (plain.rs.rule_count() != a.rs.rule_count() ||
      plain.rs.hilbert(degree_cap) != a.rs.hilbert(degree_cap))
    throw std::invalid_argument("F does not stabilize the relation set");
  std::vector<int> el = real.G.members(f);
  a.group_elems = el;
  return a;
}

SubalgebraBasis subalgebra_closure(Algebra& amb, const std::vector<Poly>& generators) {
  SubalgebraBasis sb;
  Poly one = Poly::monomial(Word());
  std::vector<Poly> frontier;
  if (sb.span.insert(amb.vec(one))) {
    frontier.push_back(one);
    sb.elements.push_back(one);
  }
  sb.by_level.push_back(static_cast<int>(frontier.size()));
  while (!frontier.empty()) {
    std::vector<Poly> next;
    for (const auto& v : frontier)
      for (const auto& g : generators) {
        Poly p = amb.mul(v, g);
        if (p.is_zero()) continue;
        if (sb.span.insert(amb.vec(p))) {
          next.push_back(p);
          sb.elements.push_back(p);
        }
      }
    if (next.empty()) break;
    sb.by_level.push_back(static_cast<int>(next.size()));
    frontier = std::move(next);
  }
  sb.dim = sb.span.rank();
  return sb;
}

bool in_span(Algebra& amb, const SubalgebraBasis& sb, const Poly& p) {
  return sb.span.contains(amb.vec(p));
}

Echelon ideal_closure(Algebra& amb, const std::vector<Poly>& elems) {
  Echelon ech;
  std::vector<Poly> mult;
  for (int l = 0; l < static_cast<int>(amb.gens.size()); ++l) mult.push_back(amb.y(l));
  for (int g = 1; g < amb.rs.group().order; ++g) mult.push_back(amb.e(g));
  std::vector<Poly> queue;
  for (const auto& e : elems) queue.push_back(amb.nf(e));
  while (!queue.empty()) {
    Poly p = std::move(queue.back());
    queue.pop_back();
    if (p.is_zero() || !ech.insert(amb.vec(p))) continue;
    for (const auto& m : mult) {
      queue.push_back(amb.mul(m, p));
      queue.push_back(amb.mul(p, m));
    }
  }
  return ech;
}

SubalgebraBasis coideal_KY(Algebra& bx, const std::vector<int>& Y) {
  std::vector<Poly> gens;
  for (int j : Y) gens.push_back(bx.y(bx.gen_pos(j)));
  return subalgebra_closure(bx, gens);
}

std::vector<Poly> ly_relations(const Rack& r, const RackCocycle& q, const std::vector<int>& Y) {
  std::vector<Poly> rel;
  for (const auto& c : enumerate_classes(r)) {
    Poly t = vartheta_CY(c, Y, q, r);
    if (!t.is_zero()) rel.push_back(relabel(t, Y));
  }
  return rel;
}

Algebra build_LY(const Rack& r, const RackCocycle& q, const std::vector<int>& Y,
                 int degree_cap) {
  return make_algebra(r, Y, GroupCtx::trivial(static_cast<int>(Y.size())), ly_relations(r, q, Y),
                      degree_cap);
}

namespace {

std::vector<int> canonical_subset(const Realization& real, const std::vector<int>& Y) {
  std::vector<int> best;
  bool first = true;
  for (int h = 0; h < real.G.order(); ++h) {
    auto img = act_on_set(real, h, Y);
    if (first || img < best) best = img;
    first = false;
  }
  return best;
}

std::vector<int> indices_of(const Rack& r, const std::vector<std::string>& labels) {
  std::vector<int> out;
  for (const auto& s : labels) {
    int k = r.index(s);
    if (k < 0) throw std::invalid_argument("unknown rack element " + s);
    out.push_back(k);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

CoidealTable coideal_table(const RackPreset& p, const Realization& real) {
  const Rack& r = p.rack;
  const int n = r.size();
  if (n > 20) throw std::invalid_argument("coideal table: rack too large");
  Algebra bx = nichols_quadratic(r, p.q);
  CoidealTable tab;
  tab.total = bx.dim();
  std::map<std::vector<int>, CoidealRow> reps;
  std::map<std::vector<int>, std::string> items;
  const std::vector<CatalogItem>* cat = nullptr;
  if (p.name == "o2_4") cat = &o24_catalog();
  if (p.name == "o2_3" && p.cocycle == "minus") cat = &o23_catalog();
  if (cat)
    for (const auto& it : *cat) items[canonical_subset(real, indices_of(r, it.Y))] = it.item;
  for (std::uint32_t m = 0; m < (1u << n); ++m) {
    std::vector<int> Y;
    for (int i = 0; i < n; ++i)
      if (m >> i & 1u) Y.push_back(i);
    SubalgebraBasis k = coideal_KY(bx, Y);
    tab.dims[Y] = k.dim;
    if (Y.empty() || static_cast<int>(Y.size()) == n) continue;
    auto key = canonical_subset(real, Y);
    auto& row = reps[key];
    row.orbit_size++;
    if (key == Y) {
      row.Y = Y;
      row.dim = k.dim;
      row.hilbert = k.by_level;
      row.stabilizer = stabilizer_KY(Y, real);
      if (auto it = items.find(key); it != items.end()) row.item = it->second;
    }
  }
  for (auto& [key, row] : reps) tab.rows.push_back(row);
  std::sort(tab.rows.begin(), tab.rows.end(), [](const CoidealRow& a, const CoidealRow& b) {
    if (a.Y.size() != b.Y.size()) return a.Y.size() < b.Y.size();
    return a.Y < b.Y;
  });
  return tab;
}

const std::vector<CatalogItem>& o24_catalog() {
  static const std::vector<CatalogItem> cat = {
      {"1", {"(1 2)"}, 2, "Z2xZ2", {"x"}, "x^2"},
      {"2", {"(1 2)", "(3 4)"}, 4, "D4", {"x", "z"}, "x^2, z^2, xz + $eps zx"},
      {"3", {"(1 2)", "(1 3)"}, 6, "Z2", {"x", "y"}, "x^2, y^2, xyx - $eps yxy"},
      {"4", {"(1 2)", "(1 3)", "(2 3)"}, 12, "S3", {"x", "y", "z"},
       "x^2, y^2, z^2, xy + yz + $eps zx"},
      {"5", {"(1 2)", "(1 3)", "(3 4)"}, 24, "Z2", {"x", "y", "z"},
       "x^2, y^2, z^2, xyx - $eps yxy, zyz - $eps yzy, xz + $eps zx"},
      {"6", {"(1 2)", "(1 3)", "(1 4)"}, 48, "S3", {"x", "y", "z"},
       "x^2, y^2, z^2, yxy - $eps xyx, zxz - $eps xzx, zyz - $eps yzy, "
       "zxyz + yzxy + xyzx, zyxz + yxzy + xzyx, "
       "zxyxzx + $eps yzxyxz, zxyxzy + $eps xzxyxz"},
      {"7", {"(1 2)", "(1 3)", "(2 3)", "(1 4)"}, 96, "1", {"x", "y", "z", "w"},
       "x^2, y^2, z^2, w^2, zx + $eps yz + $eps xy, zy + yx + $eps xz, wz + $eps zw, "
       "yxy - $eps xyx, wxw - $eps xwx, wyw - $eps ywy, "
       "wyx + $eps wxz - $eps zwy, wyz + wxy - zwx, wxyz - zwxz, wxzw + xwxz, "
       "wxyw + ywxy + xywx, wxyxz - $eps zwxyx, "
       "wxyxwx + $eps ywxyxw, wxyxwy + $eps xwxyxw"},
      {"8", {"(1 2)", "(1 3)", "(2 4)", "(3 4)"}, 144, "1", {"x", "y", "z", "w"},
       "x^2, y^2, z^2, w^2, zy + $eps yz, wx + $eps xw, "
       "yxy - $eps xyx, zxz - $eps xzx, wyw - $eps ywy, wzw - $eps zwz, "
       "zxyx + yzxy, zxyz + $eps xzxy, "
       "wyx - $eps zwy - yxz + $eps xzw, wzx - $eps zxy - ywz + $eps xyw, "
       "wyzxy - $eps ywyzx - xyzwy + xyxzw, wyzxw + zxywz - yxzwy - xwyzx, "
       "wyzw - $eps zxwz - yzxw + yxwy + $eps xwyz - $eps xyzx"},
      {"9", {"(1 2)", "(1 3)", "(2 3)", "(1 4)", "(2 4)"}, 288, "", {"x", "y", "z", "w", "u"},
       "x^2, y^2, z^2, w^2, u^2, wz + $eps zw, uy + $eps yu, "
       "zx + $eps yz + $eps xy, zy + yx + $eps xz, ux + $eps wu + $eps xw, uw + wx + $eps xu, "
       "yxy - $eps xyx, wxw - $eps xwx, wyw - $eps ywy, uzu - $eps zuz, "
       "wyx + $eps wxz - $eps zwy, wyz + wxy - zwx, uzw - $eps wxz - xuz, wxyz - zwxz, "
       "wxyw + ywxy + xywx, wxyxz - $eps zwxyx, wxzw + xwxz, "
       "wxyxwx + $eps ywxyxw, wxyxwy + $eps xwxyxw"},
  };
  return cat;
}

const std::vector<CatalogItem>& o23_catalog() {
  static const std::vector<CatalogItem> cat = {
      {"1", {"(1 2)"}, 2, "Z2", {"x"}, "x^2"},
      {"2", {"(1 2)", "(1 3)"}, 6, "Z2", {"x", "y"}, "x^2, y^2, xyx - yxy"},
  };
  return cat;
}

namespace {

// Image of p under letter i -> sign[i] * y_{target[i]} in bx (no reduction).
Poly substitute_letters(const Poly& p, const std::vector<int>& target,
                        const std::vector<int>& sign) {
  std::vector<Term> ts;
  for (const auto& t : p.terms()) {
    Word w;
    int s = 1;
    for (char ch : t.w) {
      int l = static_cast<unsigned char>(ch);
      w.push_back(static_cast<char>(target[l]));
      s *= sign[l];
    }
    ts.push_back(Term{w, t.g, t.c.scaled(Rational(s))});
  }
  return Poly::from_terms(std::move(ts));
}

}  // namespace

Report check_presentation(Algebra& bx, const Rack& r, const std::vector<int>& Y,
                          const std::vector<std::string>& letters,
                          const std::vector<Poly>& relations, long long expected_dim) {
  Report rep("presentation");
  const int m = static_cast<int>(letters.size());
  if (m != static_cast<int>(Y.size())) {
    rep.fail("letter count differs from |Y|");
    return rep;
  }
  std::vector<Poly> rels = relations;
  std::stable_sort(rels.begin(), rels.end(),
                   [](const Poly& a, const Poly& b) { return a.max_degree() < b.max_degree(); });
  std::vector<int> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  bool found = false;
  std::vector<int> target(m), sign(m);
  do {
    for (std::uint32_t sm = 0; sm < (1u << m) && !found; ++sm) {
      for (int i = 0; i < m; ++i) {
        target[i] = bx.gen_pos(Y[perm[i]]);
        sign[i] = (sm >> i & 1u) ? -1 : 1;
      }
      bool ok = true;
      for (const auto& rel : rels)
        if (!bx.nf(substitute_letters(rel, target, sign)).is_zero()) {
          ok = false;
          break;
        }
      found = ok;
    }
    if (found) break;
  } while (std::next_permutation(perm.begin(), perm.end()));
  if (!found) {
    rep.fail("no assignment of the letters to +-y_j, j in Y, kills every relation");
  } else {
    nlohmann::ordered_json as = nlohmann::ordered_json::object();
    for (int i = 0; i < m; ++i)
      as[letters[i]] = std::string(sign[i] < 0 ? "-" : "") + "y" + r.labels[Y[perm[i]]];
    rep.data["assignment"] = as;
  }
  SubalgebraBasis k = coideal_KY(bx, Y);
  rep.data["dim_closure"] = k.dim;
  GroupCtx triv = GroupCtx::trivial(m);
  RewriteSystem pres(m, triv);
  CompletionStatus st = pres.complete(relations);
  long long pd = st.finite ? pres.dimension() : -1;
  rep.data["dim_presented"] = pd;
  if (pd != k.dim)
    rep.fail("presented dimension " + std::to_string(pd) + " differs from dim K_Y = " +
             std::to_string(k.dim));
  if (expected_dim >= 0 && k.dim != expected_dim)
    rep.fail("dim K_Y = " + std::to_string(k.dim) + ", expected " + std::to_string(expected_dim));
  return rep;
}

Poly evaluate(Algebra& tgt, const Poly& p, const std::vector<Poly>& gen_images,
              const std::vector<Poly>& group_images) {
  Poly acc;
  for (const auto& t : p.terms()) {
    Poly v = Poly::monomial(Word());
    for (char ch : t.w) v = tgt.mul(v, gen_images.at(static_cast<unsigned char>(ch)));
    v = tgt.mul(v, group_images.at(t.g));
    acc = acc + v.scaled(t.c);
  }
  return tgt.nf(acc);
}

Report quotient_map_check(Algebra& src, Algebra& tgt, const std::vector<Poly>& gen_images,
                          const std::vector<Poly>& group_images, const std::vector<Poly>& extra) {
  Report rep("quotient map");
  Echelon ideal = ideal_closure(tgt, extra);
  rep.data["ideal_dim"] = ideal.rank();
  auto in_ideal = [&](const Poly& p) { return p.is_zero() || ideal.contains(tgt.vec(p)); };
  const GroupCtx& sg = src.rs.group();
  // Conjugates e_g r e_g^-1 of a relation follow from r and the group
  // relations checked below.
  for (const auto& rel : src.relations) {
    Poly img = evaluate(tgt, rel, gen_images, group_images);
    if (!in_ideal(img)) rep.fail("relation " + src.show(rel) + " maps to " + tgt.show(img));
  }
  for (int g = 0; g < sg.order; ++g) {
    for (int l = 0; l < sg.ngen; ++l) {
      Poly lhs = tgt.mul(group_images[g], gen_images[l]);
      Poly rhs = tgt.mul(gen_images[sg.a(g, l)], group_images[g]).scaled(PS(sg.x(g, l)));
      if (!in_ideal(lhs - rhs))
        rep.fail("straightening e[" + sg.labels[g] + "] y" + src.gens[l] + " is not preserved");
    }
    for (int h = 0; h < sg.order; ++h) {
      Poly lhs = tgt.mul(group_images[g], group_images[h]);
      Poly rhs = group_images[sg.m(g, h)].scaled(PS(sg.ps(g, h)));
      if (!in_ideal(lhs - rhs))
        rep.fail("group product e[" + sg.labels[g] + "] e[" + sg.labels[h] + "] is not preserved");
    }
  }
  Poly one = Poly::monomial(Word());
  rep.data["target_nonzero_modulo_ideal"] = !in_ideal(one);
  return rep;
}

}  // namespace nichols
