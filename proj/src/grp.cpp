#include "nichols/grp.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <stdexcept>

namespace nichols {

namespace {

bool mask_less(const PermGroup& g, Mask a, Mask b) {
  auto ma = g.members(a), mb = g.members(b);
  if (ma.size() != mb.size()) return ma.size() < mb.size();
  return ma < mb;
}

}  // namespace

std::vector<Mask> subgroups(const PermGroup& g) {
  if (g.order() > 24) throw std::invalid_argument("subgroups: group too large");
  std::set<Mask> found;
  for (int a = 0; a < g.order(); ++a) found.insert(g.generated({a}));
  // Joins of pairs until nothing new appears.
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<Mask> cur(found.begin(), found.end());
    for (std::size_t i = 0; i < cur.size(); ++i)
      for (std::size_t j = i + 1; j < cur.size(); ++j) {
        std::vector<int> gens = g.members(cur[i]);
        for (int x : g.members(cur[j])) gens.push_back(x);
        if (found.insert(g.generated(gens)).second) grew = true;
      }
  }
  std::vector<Mask> out(found.begin(), found.end());
  std::sort(out.begin(), out.end(), [&](Mask a, Mask b) { return mask_less(g, a, b); });
  return out;
}

std::vector<SubgroupClass> subgroup_classes(const PermGroup& g) {
  std::vector<SubgroupClass> out;
  std::set<Mask> done;
  for (Mask m : subgroups(g)) {
    if (done.count(m)) continue;
    SubgroupClass c;
    std::set<Mask> orbit;
    for (int h = 0; h < g.order(); ++h) orbit.insert(g.conjugate(h, m));
    c.members.assign(orbit.begin(), orbit.end());
    std::sort(c.members.begin(), c.members.end(),
              [&](Mask a, Mask b) { return mask_less(g, a, b); });
    c.rep = c.members.front();
    done.insert(orbit.begin(), orbit.end());
    out.push_back(std::move(c));
  }
  return out;
}

int GroupCocycle::pos(int g) const {
  auto it = std::lower_bound(elems.begin(), elems.end(), g);
  return it != elems.end() && *it == g ? static_cast<int>(it - elems.begin()) : -1;
}

const Rational& GroupCocycle::at(int a, int b) const {
  int pa = pos(a), pb = pos(b);
  if (pa < 0 || pb < 0) throw std::out_of_range("group cocycle: element outside F");
  return table[pa * size() + pb];
}

Mask GroupCocycle::mask() const {
  Mask m = 0;
  for (int e : elems) m |= Mask(1) << e;
  return m;
}

GroupCocycle trivial_cocycle(const PermGroup& g, Mask f) {
  GroupCocycle c;
  c.elems = g.members(f);
  c.table.assign(c.elems.size() * c.elems.size(), Rational(1));
  return c;
}

Report check_group_cocycle(const PermGroup& g, const GroupCocycle& psi) {
  Report rep("group 2-cocycle");
  const int n = psi.size();
  if (static_cast<int>(psi.table.size()) != n * n) {
    rep.fail("table has wrong shape");
    return rep;
  }
  if (!g.is_subgroup(psi.mask())) {
    rep.fail("support " + g.mask_str(psi.mask()) + " is not a subgroup");
    return rep;
  }
  auto name = [&](int x) { return g.el(x).str(); };
  for (int x : psi.elems) {
    if (psi.at(x, g.id()) != Rational(1) || psi.at(g.id(), x) != Rational(1))
      rep.fail("not normalized at " + name(x));
    for (int y : psi.elems)
      if (psi.at(x, y).is_zero()) rep.fail("zero value at (" + name(x) + ", " + name(y) + ")");
  }
  for (int x : psi.elems)
    for (int y : psi.elems)
      for (int z : psi.elems) {
        Rational lhs = psi.at(x, y) * psi.at(g.mul(x, y), z);
        Rational rhs = psi.at(y, z) * psi.at(x, g.mul(y, z));
        if (lhs != rhs)
          rep.fail("cocycle identity fails at (" + name(x) + ", " + name(y) + ", " + name(z) + ")");
      }
  return rep;
}

GroupCocycle conjugate_cocycle(const PermGroup& g, int h, const GroupCocycle& psi) {
  GroupCocycle c;
  c.elems = g.members(g.conjugate(h, psi.mask()));
  const int n = c.size();
  c.table.assign(n * n, Rational(1));
  const int hi = g.inv(h);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      c.table[a * n + b] = psi.at(g.conj(hi, c.elems[a]), g.conj(hi, c.elems[b]));
  return c;
}

GroupCocycle restrict_cocycle(const PermGroup& g, const GroupCocycle& psi, Mask sub) {
  (void)g;
  GroupCocycle c;
  for (int e : psi.elems)
    if (sub >> e & 1u) c.elems.push_back(e);
  const int n = c.size();
  c.table.assign(n * n, Rational(1));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) c.table[a * n + b] = psi.at(c.elems[a], c.elems[b]);
  return c;
}

bool cohomologous_pm1(const PermGroup& g, const GroupCocycle& a, const GroupCocycle& b) {
  if (a.elems != b.elems) throw std::invalid_argument("cohomologous: different supports");
  const int n = a.size();
  if (n > 31) throw std::invalid_argument("cohomologous: group too large");
  // Unknown bit c_k per element (c = (-1)^bit); equation c_x + c_y + c_xy = r(x,y).
  // Rows are bitsets with the right-hand side in bit 31.
  std::vector<std::uint32_t> rows;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Rational r = a.table[i * n + j] / b.table[i * n + j];
      if (r != Rational(1) && r != Rational(-1))
        throw std::invalid_argument("cohomologous: values outside {+1,-1}");
      std::uint32_t row = 0;
      row ^= 1u << i;
      row ^= 1u << j;
      row ^= 1u << a.pos(g.mul(a.elems[i], a.elems[j]));
      if (r == Rational(-1)) row ^= 1u << 31;
      rows.push_back(row);
    }
  std::size_t rank = 0;
  for (int col = 0; col < n; ++col) {
    std::size_t piv = rank;
    while (piv < rows.size() && !(rows[piv] >> col & 1u)) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (r != rank && (rows[r] >> col & 1u)) rows[r] ^= rows[rank];
    ++rank;
  }
  for (std::uint32_t row : rows)
    if (row == (1u << 31)) return false;
  return true;
}

bool asymmetric_on_commuting_pair(const PermGroup& g, const GroupCocycle& psi) {
  for (int x : psi.elems)
    for (int y : psi.elems)
      if (g.mul(x, y) == g.mul(y, x) && psi.at(x, y) != psi.at(y, x)) return true;
  return false;
}

namespace {

// 2x2 matrices over F_3 as {a, b, c, d}.
using M3 = std::array<int, 4>;

M3 m3_mul(const M3& x, const M3& y) {
  return {(x[0] * y[0] + x[1] * y[2]) % 3, (x[0] * y[1] + x[1] * y[3]) % 3,
          (x[2] * y[0] + x[3] * y[2]) % 3, (x[2] * y[1] + x[3] * y[3]) % 3};
}

// Points of P^1(F_3), numbered 1..4: [1:0], [0:1], [1:1], [1:2].
int p1_index(int u, int v) {
  if (v == 0) return 0;
  int inv_v = v == 1 ? 1 : 2;
  int t = (u * inv_v) % 3;  // [t:1]
  if (t == 0) return 1;
  return t == 1 ? 2 : 3;
}

Perm m3_perm(const M3& m) {
  static const int pts[4][2] = {{1, 0}, {0, 1}, {1, 1}, {1, 2}};
  Perm p = Perm::identity(4);
  for (int k = 0; k < 4; ++k) {
    int u = (m[0] * pts[k][0] + m[1] * pts[k][1]) % 3;
    int v = (m[2] * pts[k][0] + m[3] * pts[k][1]) % 3;
    p.img[k] = static_cast<std::uint8_t>(p1_index(u, v));
  }
  return p;
}

}  // namespace

GroupCocycle s4_nontrivial_cocycle(const PermGroup& s4) {
  if (s4.order() != 24) throw std::invalid_argument("expected S_4");
  std::vector<M3> section(24);
  std::vector<bool> have(24, false);
  // Matrices are visited in lexicographic order, so each permutation gets its
  // least lift and the identity gets I.
  for (int k = 0; k < 81; ++k) {
    M3 m{k / 27, (k / 9) % 3, (k / 3) % 3, k % 3};
    if ((m[0] * m[3] - m[1] * m[2] + 9) % 3 == 0) continue;
    int idx = s4.index(m3_perm(m));
    if (idx < 0) throw std::logic_error("GL(2,3) action outside S_4");
    if (!have[idx]) {
      section[idx] = m;
      have[idx] = true;
    }
  }
  GroupCocycle c = trivial_cocycle(s4, s4.full_mask());
  for (int x = 0; x < 24; ++x)
    for (int y = 0; y < 24; ++y) {
      M3 prod = m3_mul(section[x], section[y]);
      const M3& s = section[s4.mul(x, y)];
      // prod is +-s.
      bool same = prod == s;
      c.table[x * 24 + y] = same ? Rational(1) : Rational(-1);
    }
  return c;
}

GroupCocycle sign_pullback_cocycle(const PermGroup& g, Mask f) {
  GroupCocycle c = trivial_cocycle(g, f);
  const int n = c.size();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (g.el(c.elems[a]).sign() < 0 && g.el(c.elems[b]).sign() < 0)
        c.table[a * n + b] = Rational(-1);
  return c;
}

std::vector<int> s4_to_s3(const PermGroup& s4, const PermGroup& s3) {
  if (s4.n() != 4 || s3.n() != 3) throw std::invalid_argument("s4_to_s3: wrong degrees");
  // A partition is named by the partner of 1: 4 -> 1, 3 -> 2, 2 -> 3.
  auto label = [](int partner) { return 5 - partner; };
  std::vector<int> out(s4.order());
  for (int k = 0; k < s4.order(); ++k) {
    const Perm& s = s4.el(k);
    Perm img = Perm::identity(3);
    for (int partner = 2; partner <= 4; ++partner) {
      int a = s(1), b = s(partner);
      int np;
      if (a == 1) {
        np = b;
      } else if (b == 1) {
        np = a;
      } else {
        // 1 lies in the other block
        int rest[2], m = 0;
        for (int x = 2; x <= 4; ++x)
          if (x != partner) rest[m++] = x;
        int c = s(rest[0]), d = s(rest[1]);
        np = c == 1 ? d : c;
      }
      img.img[label(partner) - 1] = static_cast<std::uint8_t>(label(np) - 1);
    }
    out[k] = s3.index(img);
  }
  return out;
}

Realization standard_realization(const RackPreset& p) {
  const Rack& r = p.rack;
  if (r.degree == 0) throw std::invalid_argument("realization needs a conjugation rack");
  Realization real;
  real.G = PermGroup::symmetric(r.degree);
  real.nx = r.size();
  const int go = real.G.order();
  real.g.resize(real.nx);
  for (int i = 0; i < real.nx; ++i) real.g[i] = real.G.index(r.perms[i]);
  real.act.assign(go * real.nx, -1);
  real.chi.assign(go * real.nx, Rational(1));
  for (int h = 0; h < go; ++h)
    for (int i = 0; i < real.nx; ++i) {
      int c = real.G.conj(h, real.g[i]);
      for (int k = 0; k < real.nx; ++k)
        if (real.g[k] == c) real.act[h * real.nx + i] = k;
    }
  if (p.cocycle == "minus") {
    for (int h = 0; h < go; ++h)
      for (int i = 0; i < real.nx; ++i) real.chi[h * real.nx + i] = real.G.el(h).sign();
  } else if (p.cocycle == "chi") {
    for (int i = 0; i < real.nx; ++i) {
      const Perm& t = r.perms[i];
      int a = -1, b = -1;
      for (int x = 0; x < r.degree; ++x)
        if (t.img[x] != x) (a < 0 ? a : b) = x;
      for (int h = 0; h < go; ++h) {
        const Perm& s = real.G.el(h);
        real.chi[h * real.nx + i] = s.img[a] < s.img[b] ? Rational(1) : Rational(-1);
      }
    }
  } else {
    throw std::invalid_argument("no realization for cocycle '" + p.cocycle + "'");
  }
  return real;
}

Report check_realization(const Realization& real, const Rack& r, const RackCocycle& q) {
  Report rep("YD-realization");
  const PermGroup& G = real.G;
  const int n = real.nx;
  if (n != r.size()) {
    rep.fail("realization and rack sizes differ");
    return rep;
  }
  auto lab = [&](int i) { return r.labels[i]; };
  auto el = [&](int h) { return G.el(h).str(); };
  for (int h = 0; h < G.order(); ++h)
    for (int i = 0; i < n; ++i)
      if (real.g[real.a(h, i)] != G.conj(h, real.g[i]))
        rep.fail("g is not equivariant at (" + el(h) + ", " + lab(i) + ")");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (real.a(real.g[i], j) != r.tri(i, j))
        rep.fail("g_i . j != i |> j at (" + lab(i) + ", " + lab(j) + ")");
  for (int h = 0; h < G.order(); ++h)
    for (int t = 0; t < G.order(); ++t)
      for (int i = 0; i < n; ++i)
        if (real.x(G.mul(h, t), i) != real.x(t, i) * real.x(h, real.a(t, i)))
          rep.fail("1-cocycle law fails at (" + el(h) + ", " + el(t) + ", " + lab(i) + ")");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (real.x(real.g[j], i) != q.at(j, i))
        rep.fail("chi_i(g_j) != q_ji at (" + lab(i) + ", " + lab(j) + ")");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (real.g[i] == real.g[j]) rep.fail("g is not injective on " + lab(i) + ", " + lab(j));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (real.g[i] == G.mul(real.g[j], real.g[k]))
          rep.fail("g_i = g_j g_k at (" + lab(i) + ", " + lab(j) + ", " + lab(k) + ")");
  // chi_i(f) q_{f.i |> f.j, f.i} = chi_j(f) q_{i |> j, i}, for the pairs
  // with (i |> j) |> i = j (commuting pairs of O_2^4 fall outside).
  for (int f = 0; f < G.order(); ++f)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (r.tri(r.tri(i, j), i) != j) continue;
        int fi = real.a(f, i), fj = real.a(f, j);
        Rational lhs = real.x(f, i) * q.at(r.tri(fi, fj), fi);
        Rational rhs = real.x(f, j) * q.at(r.tri(i, j), i);
        if (lhs != rhs)
          rep.fail("chi-q identity fails at (" + el(f) + ", " + lab(i) + ", " + lab(j) + ")");
      }
  return rep;
}

Mask stabilizer_KY(const std::vector<int>& Y, const Realization& real) {
  std::vector<int> sorted = Y;
  std::sort(sorted.begin(), sorted.end());
  Mask m = 0;
  for (int h = 0; h < real.G.order(); ++h)
    if (act_on_set(real, h, sorted) == sorted) m |= Mask(1) << h;
  return m;
}

std::vector<int> act_on_set(const Realization& real, int h, const std::vector<int>& Y) {
  std::vector<int> out;
  for (int i : Y) out.push_back(real.a(h, i));
  std::sort(out.begin(), out.end());
  return out;
}

bool is_F_stable(const Realization& real, Mask f, const std::vector<int>& Y) {
  std::vector<int> sorted = Y;
  std::sort(sorted.begin(), sorted.end());
  for (int h : real.G.members(f))
    if (act_on_set(real, h, sorted) != sorted) return false;
  return true;
}

std::string subgroup_name(const PermGroup& g, Mask m) {
  auto mem = g.members(m);
  int maxord = 1;
  bool abelian = true;
  for (int a : mem) {
    maxord = std::max(maxord, g.el(a).order());
    for (int b : mem)
      if (g.mul(a, b) != g.mul(b, a)) abelian = false;
  }
  switch (mem.size()) {
    case 1: return "1";
    case 2: return "Z2";
    case 3: return "Z3";
    case 4: return maxord == 4 ? "Z4" : "Z2xZ2";
    case 6: return abelian ? "Z6" : "S3";
    case 8: return "D4";
    case 12: return "A4";
    case 24: return "S4";
  }
  return "order " + std::to_string(mem.size());
}

}  // namespace nichols
