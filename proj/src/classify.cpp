#include "nichols/classify.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace nichols {

namespace {

using Row = std::vector<Rational>;

// Null space of a dense system over Q.
std::vector<Row> null_space(std::vector<Row> rows, int n) {
  std::vector<int> pivot_col;
  int r = 0;
  for (int c = 0; c < n && r < static_cast<int>(rows.size()); ++c) {
    int p = -1;
    for (int i = r; i < static_cast<int>(rows.size()); ++i)
      if (!rows[i][c].is_zero()) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(rows[p], rows[r]);
    Rational inv = rows[r][c].inv();
    for (auto& v : rows[r]) v *= inv;
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
      if (i == r || rows[i][c].is_zero()) continue;
      Rational s = rows[i][c];
      for (int k = 0; k < n; ++k) rows[i][k] -= s * rows[r][k];
    }
    pivot_col.push_back(c);
    ++r;
  }
  std::vector<Row> basis;
  for (int c = 0; c < n; ++c) {
    if (std::find(pivot_col.begin(), pivot_col.end(), c) != pivot_col.end()) continue;
    Row v(n);
    v[c] = Rational(1);
    for (int i = 0; i < r; ++i) v[pivot_col[i]] = -rows[i][c];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<std::string> labels_of(const Rack& r, const std::vector<int>& Y) {
  std::vector<std::string> out;
  for (int l : Y) out.push_back(r.labels[l]);
  return out;
}

}  // namespace

XiSpace xi_solution_space(const ModuleDatum& d) {
  const Rack& r = d.preset.rack;
  const RackCocycle& q = d.preset.q;
  const Realization& re = d.real;
  const PermGroup& G = re.G;
  const int n = static_cast<int>(d.classes.size());
  auto prime = classes_prime(r, q, d.classes);
  std::vector<char> in_prime(n, 0);
  for (int c : prime) in_prime[c] = 1;
  const auto Fel = G.members(d.F);
  auto psi = [&](int a, int b) { return d.psi.at(a, b); };
  std::vector<Row> rows;
  auto vanish = [&](int c) {
    Row row(n);
    row[c] = Rational(1);
    rows.push_back(std::move(row));
  };
  for (int c = 0; c < n; ++c) {
    const EquivClass& C = d.classes[c];
    YPartitionTag t = tag_class(C, d.Y);
    int e = class_element(d, c);
    if (in_prime[c] && t.tag == YTag::R2) {
      vanish(class_of(d.classes, t.i, t.i));
      vanish(class_of(d.classes, t.j, t.j));
    }
    if (!in_prime[c] || t.tag == YTag::R3 || e < 0 || !(d.F >> e & 1u)) {
      vanish(c);
      continue;
    }
    if (t.tag == YTag::R1) {
      for (const auto& [i, j] : C.pairs) {
        int g = G.mul(re.g[i], re.g[j]);
        for (int f : Fel) {
          int fi = re.a(f, i), fj = re.a(f, j);
          int fc = class_of(d.classes, fi, fj);
          Row row(n);
          row[fc] += re.x(f, i) * re.x(f, j) * psi(f, G.inv(f)) /
                     pair_coefficient(d.classes[fc], q, fi, fj);
          row[c] -= psi(f, g) * psi(G.mul(f, g), G.inv(f)) / pair_coefficient(C, q, i, j);
          rows.push_back(std::move(row));
        }
      }
    } else {
      for (int f : Fel) {
        int fc = class_of(d.classes, re.a(f, t.i), re.a(f, t.j));
        Row row(n);
        row[fc] += re.x(f, t.i) * re.x(f, t.i) * re.x(f, t.j) * psi(f, G.inv(f));
        row[c] -= psi(f, e) * psi(G.mul(f, e), G.inv(f));
        rows.push_back(std::move(row));
      }
    }
  }
  XiSpace s;
  s.basis = null_space(std::move(rows), n);
  for (int c = 0; c < n; ++c)
    for (const auto& v : s.basis)
      if (!v[c].is_zero()) {
        s.support.push_back(c);
        break;
      }
  return s;
}

ModuleDatum generic_datum(const ModuleDatum& shape, const XiSpace& space,
                          const std::vector<std::string>& names) {
  ModuleDatum d = shape;
  std::fill(d.xi.begin(), d.xi.end(), PS());
  for (int k = 0; k < space.free(); ++k) {
    PS p = PS::param(k < static_cast<int>(names.size()) ? names[k] : "p" + std::to_string(k));
    for (std::size_t c = 0; c < d.xi.size(); ++c) d.xi[c] += p.scaled(space.basis[k][c]);
  }
  return d;
}

ModuleDatum sample_datum(const ModuleDatum& shape, const XiSpace& space,
                         const std::vector<Rational>& values) {
  if (static_cast<int>(values.size()) != space.free())
    throw std::invalid_argument("sample_datum: one value per free parameter");
  ModuleDatum d = shape;
  std::fill(d.xi.begin(), d.xi.end(), PS());
  for (int k = 0; k < space.free(); ++k)
    for (std::size_t c = 0; c < d.xi.size(); ++c)
      d.xi[c] += PS(space.basis[k][c] * values[k]);
  return d;
}

ModuleDatum conjugate_datum(int h, const ModuleDatum& d) {
  const Realization& re = d.real;
  const PermGroup& G = re.G;
  const RackCocycle& q = d.preset.q;
  ModuleDatum out = make_datum(d.preset, re, act_on_set(re, h, d.Y), G.conjugate(h, d.F),
                               conjugate_cocycle(G, h, d.psi));
  for (std::size_t c = 0; c < d.classes.size(); ++c) {
    if (d.xi[c].is_zero()) continue;
    const EquivClass& C = d.classes[c];
    YPartitionTag t = tag_class(C, d.Y);
    if (t.tag == YTag::R1) {
      auto [i, j] = C.pairs[0];
      int hi = re.a(h, i), hj = re.a(h, j);
      int hc = class_of(d.classes, hi, hj);
      Rational s = pair_coefficient(d.classes[hc], q, hi, hj) /
                   (pair_coefficient(C, q, i, j) * re.x(h, i) * re.x(h, j));
      out.xi[hc] = d.xi[c].scaled(s);
    } else if (t.tag == YTag::R2) {
      int hc = class_of(d.classes, re.a(h, t.i), re.a(h, t.j));
      out.xi[hc] = d.xi[c].scaled((re.x(h, t.i) * re.x(h, t.i) * re.x(h, t.j)).inv());
    } else {
      throw std::invalid_argument("conjugate_datum: xi is nonzero on a class without relation");
    }
  }
  return out;
}

std::string s3_catalog_item(const ModuleDatum& d) {
  if (d.preset.name != "o2_3") return "";
  const int order = static_cast<int>(d.real.G.members(d.F).size());
  switch (d.Y.size()) {
    case 0:
      return "1";
    case 1:
      return order == 1 ? "2" : "3";
    case 2:
      return order == 1 ? "4" : "5";
    default:
      switch (order) {
        case 1: return "6";
        case 2: return "7";
        case 3: return "8";
        default: return "9";
      }
  }
}

std::vector<DatumOrbit> enumerate_data(const RackPreset& p) {
  Realization re = standard_realization(p);
  const PermGroup& G = re.G;
  const int nx = p.rack.size();
  auto subs = subgroups(G);
  const bool s4 = G.order() == 24;
  GroupCocycle nontrivial;
  if (s4) nontrivial = s4_nontrivial_cocycle(G);

  auto members = [&](Mask m) { return G.members(m); };
  std::map<ShapeKey, ModuleDatum> shapes;
  for (unsigned ym = 0; ym < (1u << nx); ++ym) {
    std::vector<int> Y;
    for (int l = 0; l < nx; ++l)
      if (ym >> l & 1u) Y.push_back(l);
    for (Mask F : subs) {
      if (!is_F_stable(re, F, Y)) continue;
      shapes.emplace(ShapeKey{Y, members(F), 0}, make_datum(p, re, Y, F, trivial_cocycle(G, F)));
      if (s4) {
        GroupCocycle r = restrict_cocycle(G, nontrivial, F);
        if (asymmetric_on_commuting_pair(G, r))
          shapes.emplace(ShapeKey{Y, members(F), 1}, make_datum(p, re, Y, F, r));
      }
    }
  }
  std::map<ShapeKey, std::set<ShapeKey>> orbits;
  for (const auto& [key, d] : shapes) {
    std::set<ShapeKey> orbit;
    for (int h = 0; h < G.order(); ++h) {
      Mask F = G.conjugate(h, d.F);
      orbit.insert(ShapeKey{act_on_set(re, h, d.Y), members(F), key.psi_class});
    }
    orbits.emplace(*orbit.begin(), std::move(orbit));
  }
  std::vector<DatumOrbit> out;
  for (const auto& [rep, orbit] : orbits) {
    DatumOrbit o;
    o.key = rep;
    o.orbit_size = static_cast<int>(orbit.size());
    const ModuleDatum& shape = shapes.at(rep);
    o.xi = xi_solution_space(shape);
    o.rep = generic_datum(shape, o.xi);
    o.catalog = s3_catalog_item(shape);
    out.push_back(std::move(o));
  }
  return out;
}

nlohmann::ordered_json orbit_to_json(const DatumOrbit& o) {
  const ModuleDatum& d = o.rep;
  const Rack& r = d.preset.rack;
  nlohmann::ordered_json j;
  j["Y"] = labels_of(r, d.Y);
  std::vector<std::string> F;
  for (int f : o.key.F) F.push_back(d.real.G.el(f).str());
  j["F"] = F;
  j["F_name"] = subgroup_name(d.real.G, d.F);
  j["psi_class"] = o.key.psi_class ? "nontrivial" : "trivial";
  j["orbit_size"] = o.orbit_size;
  if (!o.catalog.empty()) j["catalog_label"] = o.catalog;
  nlohmann::ordered_json xi;
  xi["free"] = o.xi.free();
  std::vector<std::string> support;
  for (int c : o.xi.support) support.push_back(class_label(d.classes[c], r));
  xi["support"] = support;
  nlohmann::ordered_json basis = nlohmann::ordered_json::array();
  for (const auto& v : o.xi.basis) {
    nlohmann::ordered_json b = nlohmann::ordered_json::object();
    for (int c : o.xi.support)
      if (!v[c].is_zero()) b[class_label(d.classes[c], r)] = v[c].str();
    basis.push_back(b);
  }
  xi["basis"] = basis;
  j["xi_constraints"] = xi;
  GroupCtx g = module_group_ctx(d);
  std::vector<std::string> rels;
  for (const auto& p : module_relations(d)) rels.push_back(to_string(p, labels_of(r, d.Y), g.labels));
  j["relations"] = rels;
  return j;
}

const std::vector<S3Family>& s3_families() {
  static const std::vector<S3Family> fam = {
      {"1", 0, "any", {}, 0},     {"2", 1, "1", {2}, 1},     {"3", 1, "Z2", {2}, 1},
      {"4", 2, "1", {2, 3}, 0},   {"5", 2, "Z2", {2, 3}, 0}, {"6", 3, "1", {2}, 1},
      {"7", 3, "Z2", {2}, 1},     {"8", 3, "Z3", {2}, 3},    {"9", 3, "S3", {2}, 2},
  };
  return fam;
}

Report compare_s3_families(const std::vector<DatumOrbit>& orbits) {
  Report rep("s3 families");
  std::map<std::string, std::vector<const DatumOrbit*>> by_item;
  for (const auto& o : orbits) by_item[o.catalog].push_back(&o);
  rep.data["orbits"] = orbits.size();
  rep.data["families"] = by_item.size();
  if (by_item.size() != s3_families().size())
    rep.fail(std::to_string(by_item.size()) + " families, expected " + std::to_string(s3_families().size()));
  for (const auto& fam : s3_families()) {
    auto it = by_item.find(fam.item);
    if (it == by_item.end()) {
      rep.fail("item " + fam.item + ": no orbit");
      continue;
    }
    for (const DatumOrbit* o : it->second) {
      const ModuleDatum& d = o->rep;
      std::string where = "item " + fam.item + " (F = " + subgroup_name(d.real.G, d.F) + ")";
      if (static_cast<int>(d.Y.size()) != fam.y_size) rep.fail(where + ": |Y| = " + std::to_string(d.Y.size()));
      if (fam.F != "any" && subgroup_name(d.real.G, d.F) != fam.F) rep.fail(where + ": F differs");
      std::set<int> deg;
      for (const auto& r : module_relations(d))
        for (const auto& t : r.terms())
          if (!t.w.empty()) deg.insert(static_cast<int>(t.w.size()));
      if (std::vector<int>(deg.begin(), deg.end()) != fam.degrees) rep.fail(where + ": relation degrees differ");
      if (o->xi.free() != fam.free)
        rep.fail(where + ": " + std::to_string(o->xi.free()) + " free scalars, printed " +
                 std::to_string(fam.free));
    }
  }
  return rep;
}

Report exhaustive_orbit_check(const std::vector<DatumOrbit>& orbits) {
  Report rep("orbit check");
  std::set<ShapeKey> reps;
  for (const auto& o : orbits) reps.insert(o.key);
  long long maps = 0;
  for (const auto& o : orbits) {
    std::vector<Rational> v;
    for (int k = 0; k < o.xi.free(); ++k) v.push_back(Rational(2 * k + 3, k + 1));
    ModuleDatum d = sample_datum(o.rep, o.xi, v);
    const Realization& re = d.real;
    const PermGroup& G = re.G;
    Algebra src = build_A(d);
    for (int h = 0; h < G.order(); ++h) {
      std::string where = nlohmann::json(labels_of(d.preset.rack, d.Y)).dump() + " h = " + G.el(h).str();
      ModuleDatum c = conjugate_datum(h, d);
      if (!check_compatible(c).ok()) rep.fail(where + ": conjugate not compatible");
      std::set<ShapeKey> hit;
      for (int k = 0; k < G.order(); ++k) {
        Mask F = G.conjugate(k, c.F);
        ShapeKey key{act_on_set(re, k, c.Y), G.members(F), o.key.psi_class};
        if (reps.count(key)) hit.insert(key);
      }
      if (hit != std::set<ShapeKey>{o.key}) rep.fail(where + ": conjugate leaves the orbit");
      Algebra tgt = build_A(c);
      std::vector<Poly> gens, group;
      for (int l : d.Y) gens.push_back(tgt.y(tgt.gen_pos(re.a(h, l))).scaled(PS(re.x(h, l))));
      for (int f : G.members(d.F)) group.push_back(tgt.e(tgt.local_group(G.conj(h, f))));
      Report m = quotient_map_check(src, tgt, gens, group, {});
      if (src.dim() != tgt.dim()) m.fail("dimensions " + std::to_string(src.dim()) + " and " + std::to_string(tgt.dim()));
      rep.merge(m, where + ": ");
      ++maps;
    }
  }
  rep.data["maps"] = maps;
  return rep;
}

Report duality_check(const RackPreset& p) {
  Report rep("duality");
  Realization re = standard_realization(p);
  CoidealTable t = coideal_table(p, re);
  const int nx = p.rack.size();
  int pairs = 0;
  for (const auto& [Y, dim] : t.dims) {
    std::vector<int> Z;
    for (int l = 0; l < nx; ++l)
      if (!std::binary_search(Y.begin(), Y.end(), l)) Z.push_back(l);
    auto it = t.dims.find(Z);
    if (it == t.dims.end()) {
      rep.fail("no dimension for the complement of " + nlohmann::json(labels_of(p.rack, Y)).dump());
      continue;
    }
    ++pairs;
    if (dim * it->second != t.total)
      rep.fail(nlohmann::json(labels_of(p.rack, Y)).dump() + ": " + std::to_string(dim) + " * " +
               std::to_string(it->second) + " != " + std::to_string(t.total));
  }
  rep.data["total"] = t.total;
  rep.data["pairs"] = pairs;
  return rep;
}

}  // namespace nichols
