#include "nichols/comodule.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <optional>
#include <stdexcept>

namespace nichols {

ModuleDatum make_datum(const RackPreset& p, const Realization& real, std::vector<int> Y, Mask F,
                       GroupCocycle psi) {
  ModuleDatum d;
  d.preset = p;
  d.real = real;
  d.classes = enumerate_classes(p.rack);
  std::sort(Y.begin(), Y.end());
  d.Y = std::move(Y);
  d.F = F;
  d.psi = std::move(psi);
  d.xi.assign(d.classes.size(), PS());
  return d;
}

ModuleDatum make_datum(const RackPreset& p, const std::vector<std::string>& Y,
                       const std::vector<std::string>& F_generators) {
  Realization real = standard_realization(p);
  std::vector<int> y;
  for (const auto& s : Y) {
    int k = p.rack.index(s);
    if (k < 0) throw std::invalid_argument("unknown rack element " + s);
    y.push_back(k);
  }
  std::vector<int> gens;
  for (const auto& s : F_generators) {
    int k = real.G.index(s);
    if (k < 0) throw std::invalid_argument("unknown group element " + s);
    gens.push_back(k);
  }
  Mask F = real.G.generated(gens);
  return make_datum(p, real, y, F, trivial_cocycle(real.G, F));
}

int class_element(const ModuleDatum& d, int cls) {
  const EquivClass& c = d.classes[cls];
  YPartitionTag t = tag_class(c, d.Y);
  const PermGroup& G = d.real.G;
  if (t.tag == YTag::R1) return class_group_element(d.real, c);
  if (t.tag == YTag::R2) {
    int gi = d.real.g[t.i], gj = d.real.g[t.j];
    return G.mul(G.mul(gi, gj), gi);
  }
  return -1;
}

namespace {

int local_index(const ModuleDatum& d, int g) {
  auto el = d.real.G.members(d.F);
  auto it = std::find(el.begin(), el.end(), g);
  return it == el.end() ? -1 : static_cast<int>(it - el.begin());
}

bool in_F(const ModuleDatum& d, int g) { return g >= 0 && (d.F >> g & 1u); }

}  // namespace

Poly module_relation(const ModuleDatum& d, int cls) {
  const EquivClass& c = d.classes[cls];
  Poly t = vartheta_CY(c, d.Y, d.preset.q, d.preset.rack);
  const PS& x = d.xi[cls];
  if (t.is_zero()) {
    if (!x.is_zero()) throw std::invalid_argument("xi is nonzero on a class without relation");
    return t;
  }
  Poly rel = relabel(t, d.Y);
  if (x.is_zero()) return rel;
  int loc = local_index(d, class_element(d, cls));
  if (loc < 0) throw std::invalid_argument("xi_C is nonzero but e_C is not in F");
  return rel - Poly::scalar(x, loc);
}

std::vector<Poly> module_relations(const ModuleDatum& d) {
  auto prime = classes_prime(d.preset.rack, d.preset.q, d.classes);
  std::vector<Poly> out;
  for (int c : prime) {
    Poly r = module_relation(d, c);
    if (!r.is_zero()) out.push_back(r);
  }
  return out;
}

GroupCtx module_group_ctx(const ModuleDatum& d) { return make_group_ctx(d.real, d.F, d.psi, d.Y); }

Report check_compatible(const ModuleDatum& d) {
  Report rep("compatibility");
  const Rack& r = d.preset.rack;
  const RackCocycle& q = d.preset.q;
  const Realization& re = d.real;
  const PermGroup& G = re.G;
  if (!G.is_subgroup(d.F)) rep.fail("F is not a subgroup");
  if (!is_F_stable(re, d.F, d.Y)) rep.fail("F does not stabilize Y");
  if (d.psi.mask() != d.F) rep.fail("psi is not defined on F");
  if (!rep.ok()) return rep;
  const auto Fel = G.members(d.F);
  auto psi = [&](int a, int b) { return d.psi.at(a, b); };
  auto prime = classes_prime(r, q, d.classes);
  std::vector<char> in_prime(d.classes.size(), 0);
  for (int c : prime) in_prime[c] = 1;
  for (std::size_t c = 0; c < d.classes.size(); ++c) {
    const EquivClass& C = d.classes[c];
    const std::string lab = class_label(C, r);
    const PS& x = d.xi[c];
    YPartitionTag t = tag_class(C, d.Y);
    if (!in_prime[c] || t.tag == YTag::R3) {
      if (!x.is_zero()) rep.fail("xi must vanish at " + lab);
      continue;
    }
    if (t.tag == YTag::R2)
      for (int k : {t.i, t.j}) {
        int ck = class_of(d.classes, k, k);
        if (!d.xi[ck].is_zero())
          rep.fail("R2 class " + lab + " needs xi = 0 on the diagonal class of " + r.labels[k]);
      }
    int e = class_element(d, static_cast<int>(c));
    if (!in_F(d, e)) {
      if (!x.is_zero()) rep.fail("normalization: e_C not in F but xi nonzero at " + lab);
      continue;
    }
    if (t.tag == YTag::R1) {
      for (const auto& [i, j] : C.pairs) {
        PS xp = x.scaled(pair_coefficient(C, q, i, j).inv());
        int gij = G.mul(re.g[i], re.g[j]);
        for (int f : Fel) {
          int fi = re.a(f, i), fj = re.a(f, j);
          int fc = class_of(d.classes, fi, fj);
          PS xf = d.xi[fc].scaled(pair_coefficient(d.classes[fc], q, fi, fj).inv());
          Rational lhs = re.x(f, i) * re.x(f, j) * psi(f, G.inv(f));
          Rational rhs = psi(f, gij) * psi(G.mul(f, gij), G.inv(f));
          if (xf.scaled(lhs) != xp.scaled(rhs)) {
            rep.fail("R1 condition fails at " + lab + " pair (" + r.labels[i] + "," +
                     r.labels[j] + ") for f=" + G.el(f).str());
            break;
          }
        }
      }
    } else {
      const int i = t.i, j = t.j;
      int g = G.mul(G.mul(re.g[i], re.g[j]), re.g[i]);
      for (int f : Fel) {
        int fc = class_of(d.classes, re.a(f, i), re.a(f, j));
        Rational lhs = re.x(f, i) * re.x(f, i) * re.x(f, j) * psi(f, G.inv(f));
        Rational rhs = psi(f, g) * psi(G.mul(f, g), G.inv(f));
        if (d.xi[fc].scaled(lhs) != x.scaled(rhs)) {
          rep.fail("R2 condition fails at " + lab + " for f=" + G.el(f).str());
          break;
        }
      }
    }
  }
  return rep;
}

Algebra build_A(const ModuleDatum& d, int degree_cap) {
  Algebra a = make_algebra(d.preset.rack, d.Y, module_group_ctx(d), module_relations(d), degree_cap);
  a.group_elems = d.real.G.members(d.F);
  return a;
}

BResult build_B(Algebra& a, const ModuleDatum& d, const std::vector<int>& Z) {
  std::vector<Poly> gens;
  for (int z : Z) {
    int pos = a.gen_pos(z);
    if (pos < 0) throw std::invalid_argument("Z is not contained in Y");
    gens.push_back(a.y(pos));
  }
  for (int f = 1; f < a.rs.group().order; ++f) gens.push_back(a.e(f));
  BResult out;
  out.span = subalgebra_closure(a, gens);
  Algebra bx = nichols_quadratic(d.preset.rack, d.preset.q);
  out.expected = coideal_KY(bx, Z).dim * static_cast<long long>(a.rs.group().order);
  return out;
}

// ---------------------------------------------------------------- coaction

Coaction::Coaction(BasisAlgebra& h, BasisAlgebra& a, const ModuleDatum& d, int flip_generator)
    : h_(h), a_(a), d_(d) {
  Algebra& H = h.alg();
  Algebra& A = a.alg();
  std::vector<BasisAlgebra*> legs{&h, &a};
  Poly one = Poly::monomial(Word());
  for (int l = 0; l < static_cast<int>(A.gens.size()); ++l) {
    int rl = A.gen_elems[l];
    int hx = H.gen_pos(rl);
    int hg = H.local_group(d.real.g[rl]);
    if (hx < 0 || hg < 0) throw std::invalid_argument("coaction: H lacks x_l or g_l");
    PS s = l == flip_generator ? PS(-1) : PS(1);
    gen_.push_back(Tensor::pure(legs, {H.y(hx), one}) +
                   Tensor::pure(legs, {H.e(hg), A.y(l)}).scaled(s));
  }
  for (int f = 0; f < A.rs.group().order; ++f) {
    int hf = H.local_group(A.group_elems[f]);
    if (hf < 0) throw std::invalid_argument("coaction: F is not inside the group of H");
    grp_.push_back(Tensor::pure(legs, {H.e(hf), A.e(f)}));
  }
}

Tensor Coaction::of(const Poly& p) { return apply_hom(p, gen_, grp_, {&h_, &a_}); }

const Tensor& Coaction::of_basis(int i) {
  auto it = basis_.find(i);
  if (it != basis_.end()) return it->second;
  return basis_.emplace(i, of(a_.element(i))).first->second;
}

namespace {

// Relations, straightening and group products of a presented algebra mapped
// by an algebra map given on generators.
template <class Images>
void check_hom(Report& rep, Algebra& src, const std::vector<Poly>& relations, Images&& img) {
  const GroupCtx& g = src.rs.group();
  for (const auto& r : relations) {
    Tensor t = img(r);
    if (!t.is_zero()) rep.fail("relation " + src.show(r) + " has residue " + t.str());
  }
  for (int f = 0; f < g.order; ++f) {
    for (int l = 0; l < g.ngen; ++l) {
      Tensor t = img(Poly::scalar(PS(1), f)) * img(src.y(l)) -
                 (img(src.y(g.a(f, l))) * img(Poly::scalar(PS(1), f))).scaled(PS(g.x(f, l)));
      if (!t.is_zero())
        rep.fail("straightening e[" + g.labels[f] + "] y" + src.gens[l] + " has residue " + t.str());
    }
    for (int h = 0; h < g.order; ++h) {
      Tensor t = img(Poly::scalar(PS(1), f)) * img(Poly::scalar(PS(1), h)) -
                 img(Poly::scalar(PS(1), g.m(f, h))).scaled(PS(g.ps(f, h)));
      if (!t.is_zero())
        rep.fail("group product e[" + g.labels[f] + "] e[" + g.labels[h] + "] has residue " +
                 t.str());
    }
  }
}

}  // namespace

Report verify_coaction(Coaction& lam, const std::vector<Poly>& relations) {
  Report rep("coaction");
  if (lam.algebra().alg().zero()) rep.fail("A is the zero algebra; the coaction is vacuous");
  check_hom(rep, lam.algebra().alg(), relations, [&](const Poly& p) { return lam.of(p); });
  rep.data["relations"] = relations.size();
  return rep;
}

Report bigalois_scalars(const ModuleDatum& d, const QlDatum& q) {
  Report rep("biGalois scalars");
  const PermGroup& G = d.real.G;
  if (d.preset.name != q.preset.name || d.preset.cocycle != q.preset.cocycle)
    rep.fail("datum and ql-datum live on different racks");
  if (static_cast<int>(d.Y.size()) != d.preset.rack.size() || d.F != G.full_mask())
    rep.fail("a biGalois object needs Y = X and F = G");
  if (!rep.ok()) return rep;
  for (int c : q.prime) {
    const PS& g = q.gamma[c];
    const PS& x = d.xi[c];
    std::string lab = class_label(q.classes[c], q.preset.rack);
    if (!g.is_zero()) {
      if (x != -g) rep.fail("xi must equal -gamma at " + lab);
    } else if (class_group_element(q.real, q.classes[c]) != G.id()) {
      if (!x.is_zero()) rep.fail("xi must vanish at " + lab);
    }
  }
  return rep;
}

Report verify_bigalois(Coaction& lam, BasisAlgebra& hq, const QlDatum& q,
                       const std::vector<Poly>& relations) {
  Report rep("biGalois");
  BasisAlgebra& ab = lam.algebra();
  Algebra& A = ab.alg();
  Algebra& L = hq.alg();
  rep.merge(bigalois_scalars(lam.datum(), q));
  std::vector<BasisAlgebra*> legs{&ab, &hq};
  Poly one = Poly::monomial(Word());
  std::vector<Tensor> gen, grp;
  for (int l = 0; l < static_cast<int>(A.gens.size()); ++l) {
    int rl = A.gen_elems[l];
    int ag = A.local_group(q.real.g[rl]);
    int lx = L.gen_pos(rl);
    if (ag < 0 || lx < 0) throw std::invalid_argument("rho: generator data missing");
    gen.push_back(Tensor::pure(legs, {A.y(l), one}) + Tensor::pure(legs, {A.e(ag), L.y(lx)}));
  }
  for (int f = 0; f < A.rs.group().order; ++f)
    grp.push_back(Tensor::pure(legs, {A.e(f), L.e(L.local_group(A.group_elems[f]))}));
  auto rho = [&](const Poly& p) { return apply_hom(p, gen, grp, legs); };
  check_hom(rep, A, relations, rho);
  // (lambda (x) id) rho = (id (x) rho) lambda on generators.
  BasisAlgebra& hb = lam.hopf();
  std::vector<BasisAlgebra*> legs3{&hb, &ab, &hq};
  std::map<int, Tensor> rho_basis;
  auto rho_b = [&](int i) -> const Tensor& {
    auto it = rho_basis.find(i);
    if (it != rho_basis.end()) return it->second;
    return rho_basis.emplace(i, rho(ab.element(i))).first->second;
  };
  std::vector<Poly> gens;
  for (int l = 0; l < static_cast<int>(A.gens.size()); ++l) gens.push_back(A.y(l));
  for (int f = 0; f < A.rs.group().order; ++f) gens.push_back(A.e(f));
  for (const auto& u : gens) {
    Tensor left(legs3), right(legs3);
    Tensor ru = rho(u), lu = lam.of(u);
    for (const auto& [k, v] : ru.terms())
      for (const auto& [k1, v1] : lam.of_basis(k[0]).terms()) left.add({k1[0], k1[1], k[1]}, v * v1);
    for (const auto& [k, v] : lu.terms())
      for (const auto& [k2, v2] : rho_b(k[1]).terms()) right.add({k[0], k2[0], k2[1]}, v * v2);
    if (!(left == right)) rep.fail("bicomodule identity fails on " + A.show(u));
  }
  return rep;
}

// ---------------------------------------------------------------- canonical map

Report canonical_map_rank(Coaction& lam, std::uint32_t prime) {
  Report rep("canonical map");
  BasisAlgebra& a = lam.algebra();
  BasisAlgebra& h = lam.hopf();
  const int na = a.size(), nh = h.size();
  std::vector<ModRow> rows;
  rows.reserve(static_cast<std::size_t>(na) * na);
  std::map<int, std::uint64_t> acc;
  for (int i = 0; i < na; ++i) {
    const Tensor& li = lam.of_basis(i);
    for (int j = 0; j < na; ++j) {
      acc.clear();
      for (const auto& [k, v] : li.terms()) {
        std::uint64_t cv = v.constant().mod(prime);
        for (const auto& [m, w] : a.product(k[1], j)) {
          int col = k[0] * na + m;
          acc[col] = (acc[col] + cv * w.constant().mod(prime)) % prime;
        }
      }
      ModRow r;
      for (const auto& [c, v] : acc)
        if (v) r.emplace_back(c, static_cast<std::uint32_t>(v));
      rows.push_back(std::move(r));
    }
  }
  int rank = modular_rank(std::move(rows), prime);
  long long dom = static_cast<long long>(na) * na, cod = static_cast<long long>(nh) * na;
  rep.data["prime"] = prime;
  rep.data["rank"] = rank;
  rep.data["domain_dim"] = dom;
  rep.data["codomain_dim"] = cod;
  if (rank != cod) rep.fail("can is not surjective: rank " + std::to_string(rank) + " < " +
                            std::to_string(cod));
  if (rank != dom) rep.fail("can is not injective: rank " + std::to_string(rank) + " < " +
                            std::to_string(dom));
  return rep;
}

Report verify_can_preimages(Coaction& lam) {
  Report rep("canonical map preimages");
  BasisAlgebra& a = lam.algebra();
  BasisAlgebra& h = lam.hopf();
  Algebra& A = a.alg();
  Algebra& H = h.alg();
  const ModuleDatum& d = lam.datum();
  std::vector<BasisAlgebra*> legs{&h, &a};
  Poly one = Poly::monomial(Word());
  auto can = [&](const Poly& x, const Poly& y) {
    return lam.of(x) * Tensor::pure(legs, {one, y});
  };
  const GroupCtx& g = A.rs.group();
  int checked = 0;
  for (int f = 0; f < g.order; ++f) {
    int fi = g.inv[f];
    Tensor lhs = can(A.e(f), A.e(fi));
    Tensor rhs = Tensor::pure(legs, {H.e(H.local_group(A.group_elems[f])), one})
                     .scaled(PS(g.ps(f, fi)));
    ++checked;
    if (!(lhs == rhs)) rep.fail("can(e_f (x) e_f^-1) differs from f (x) 1 for f=" + g.labels[f]);
  }
  for (int l = 0; l < static_cast<int>(A.gens.size()); ++l) {
    int rl = A.gen_elems[l];
    int gl = A.local_group(d.real.g[rl]);
    if (gl < 0) continue;
    int gi = g.inv[gl];
    // e_g e_{g^-1} = psi(g,g^-1), so the second factor is normalized by it.
    Tensor lhs = can(A.y(l), one) -
          can(A.e(gl), A.mul(A.e(gi), A.y(l))).scaled(PS(g.ps(gl, gi).inv()));
    Tensor rhs = Tensor::pure(legs, {H.y(H.gen_pos(rl)), one});
    ++checked;
    if (!(lhs == rhs)) rep.fail("preimage of x_l (x) 1 fails for l=" + A.gens[l]);
  }
  rep.data["checked"] = checked;
  return rep;
}

std::vector<long long> loewy_dims(Coaction& lam) {
  BasisAlgebra& a = lam.algebra();
  BasisAlgebra& h = lam.hopf();
  const int na = a.size();
  int top = 0;
  for (int i = 0; i < h.size(); ++i) top = std::max(top, h.degree(i));
  std::vector<long long> level;
  long long prev = 0;
  for (int n = 0; n <= top; ++n) {
    Echelon ech;
    for (int i = 0; i < na; ++i) {
      SparseVec v;
      for (const auto& [k, c] : lam.of_basis(i).terms())
        if (h.degree(k[0]) > n) v.emplace_back(k[0] * na + k[1], c.constant());
      std::sort(v.begin(), v.end(), [](auto& x, auto& y) { return x.first < y.first; });
      ech.insert(std::move(v));
    }
    long long dim_n = na - ech.rank();
    level.push_back(dim_n - prev);
    prev = dim_n;
    if (dim_n == na) break;
  }
  return level;
}

// ---------------------------------------------------------------- matrices

namespace {

PS parse_entry(const std::string& s) {
  std::string t;
  for (char c : s)
    if (c != ' ') t.push_back(c);
  if (t.empty()) throw std::invalid_argument("empty matrix entry");
  bool neg = false;
  if (t[0] == '-') {
    neg = true;
    t = t.substr(1);
  }
  PS v = std::isalpha(static_cast<unsigned char>(t[0])) ? PS::param(t) : PS(Rational::parse(t));
  return neg ? -v : v;
}

Matrix identity_matrix(int n) {
  Matrix m(n, std::vector<PS>(n));
  for (int i = 0; i < n; ++i) m[i][i] = PS(1);
  return m;
}

Matrix mat_add(const Matrix& a, const Matrix& b, const PS& s) {  // a + s b
  Matrix m = a;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) m[i][j] += b[i][j] * s;
  return m;
}

Matrix mat_scale(const Matrix& a, const PS& s) {
  Matrix m = a;
  for (auto& row : m)
    for (auto& e : row) e *= s;
  return m;
}

}  // namespace

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  const std::size_t n = a.size();
  Matrix m(n, std::vector<PS>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (!b[k][j].is_zero()) m[i][j] += a[i][k] * b[k][j];
    }
  return m;
}

MatrixRep load_matrix_rep(const nlohmann::json& j) {
  MatrixRep m;
  m.basis = j.at("basis").get<std::vector<std::string>>();
  m.dim = static_cast<int>(m.basis.size());
  for (const auto& [name, rows] : j.at("generators").items()) {
    Matrix mat;
    for (const auto& row : rows) {
      std::vector<PS> r;
      for (const auto& e : row) r.push_back(parse_entry(e.get<std::string>()));
      if (static_cast<int>(r.size()) != m.dim) throw std::invalid_argument("matrix row size");
      mat.push_back(std::move(r));
    }
    if (static_cast<int>(mat.size()) != m.dim) throw std::invalid_argument("matrix size");
    m.generators[name] = std::move(mat);
  }
  if (j.contains("derived"))
    for (const auto& [name, word] : j.at("derived").items())
      m.derived[name] = word.get<std::vector<std::string>>();
  return m;
}

MatrixRep load_matrix_rep_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  return load_matrix_rep(nlohmann::json::parse(in));
}

RepImages rep_images(const MatrixRep& m, const ModuleDatum& d) {
  const PermGroup& G = d.real.G;
  const Rack& r = d.preset.rack;
  std::map<int, Matrix> e;
  e[G.id()] = identity_matrix(m.dim);
  auto e_label = [&](int g) { return "e" + G.el(g).str(); };
  for (int g = 0; g < G.order(); ++g) {
    auto it = m.generators.find(e_label(g));
    if (it != m.generators.end()) e[g] = it->second;
  }
  for (int g = 0; g < G.order(); ++g) {
    auto it = m.derived.find(e_label(g));
    if (it == m.derived.end() || e.count(g)) continue;
    Matrix acc = identity_matrix(m.dim);
    for (const auto& f : it->second) acc = mat_mul(acc, m.generators.at(f));
    e[g] = acc;
  }
  auto psi = [&](int a, int b) {
    if (in_F(d, a) && in_F(d, b)) return PS(d.psi.at(a, b));
    return PS(1);
  };
  for (bool grew = true; grew;) {
    grew = false;
    auto known = e;
    for (const auto& [a, ma] : known)
      for (const auto& [b, mb] : known) {
        int ab = G.mul(a, b);
        if (e.count(ab)) continue;
        e[ab] = mat_scale(mat_mul(ma, mb), psi(a, b).constant().inv());
        grew = true;
      }
  }
  std::map<int, Matrix> y;
  for (int l = 0; l < r.size(); ++l) {
    auto it = m.generators.find("y" + r.labels[l]);
    if (it != m.generators.end()) y[l] = it->second;
  }
  for (bool grew = true; grew;) {
    grew = false;
    auto known = y;
    for (const auto& [s, ms] : known)
      for (const auto& [h, mh] : e) {
        int hs = d.real.a(h, s);
        if (y.count(hs)) continue;
        PS c = PS(d.real.x(h, s) * psi(h, G.inv(h)).constant());
        y[hs] = mat_scale(mat_mul(mat_mul(mh, ms), e.at(G.inv(h))), PS(c.constant().inv()));
        grew = true;
      }
  }
  RepImages out;
  for (int l : d.Y) {
    if (!y.count(l)) {
      out.missing.push_back("y" + r.labels[l]);
      out.y.push_back(identity_matrix(m.dim));
    } else {
      out.y.push_back(y[l]);
    }
  }
  for (int g : G.members(d.F)) {
    if (!e.count(g)) {
      out.missing.push_back(e_label(g));
      out.e.push_back(identity_matrix(m.dim));
    } else {
      out.e.push_back(e[g]);
    }
  }
  return out;
}

Report verify_matrix_rep(const MatrixRep& m, const ModuleDatum& d) {
  Report rep("matrix representation");
  RepImages im = rep_images(m, d);
  for (const auto& s : im.missing) rep.fail("no matrix for " + s);
  if (!rep.ok()) return rep;
  const int n = m.dim;
  Matrix zero(n, std::vector<PS>(n));
  auto eval = [&](const Poly& p) {
    Matrix acc = zero;
    for (const auto& t : p.terms()) {
      Matrix v = identity_matrix(n);
      for (char ch : t.w) v = mat_mul(v, im.y[static_cast<unsigned char>(ch)]);
      v = mat_mul(v, im.e[t.g]);
      acc = mat_add(acc, v, t.c);
    }
    return acc;
  };
  auto report = [&](const std::string& what, const Matrix& mm) {
    int bad = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (!mm[i][j].is_zero()) {
          if (bad++ < 4)
            rep.fail(what + ": entry (" + std::to_string(i) + "," + std::to_string(j) + ") = " +
                     mm[i][j].str());
        }
  };
  GroupCtx g = module_group_ctx(d);
  std::vector<std::string> gens;
  for (int l : d.Y) gens.push_back(d.preset.rack.labels[l]);
  auto rels = module_relations(d);
  for (const auto& r : rels) report("relation " + to_string(r, gens, g.labels), eval(r));
  for (int f = 0; f < g.order; ++f) {
    for (int l = 0; l < g.ngen; ++l)
      report("straightening e[" + g.labels[f] + "] y" + gens[l],
             mat_add(mat_mul(im.e[f], im.y[l]), mat_mul(im.y[g.a(f, l)], im.e[f]),
                     PS(-g.x(f, l))));
    for (int h = 0; h < g.order; ++h)
      report("group product e[" + g.labels[f] + "] e[" + g.labels[h] + "]",
             mat_add(mat_mul(im.e[f], im.e[h]), im.e[g.m(f, h)], PS(-g.ps(f, h))));
  }
  rep.data["dimension"] = n;
  rep.data["relations"] = rels.size();
  return rep;
}

}  // namespace nichols

namespace nichols {

MatrixRep specialize(const MatrixRep& m, const std::map<std::string, PS>& values) {
  std::map<std::string, Rational> zero, two;
  for (const auto& [k, v] : values) {
    zero[k] = Rational(0);
    two[k] = Rational(2);
  }
  MatrixRep out = m;
  for (auto& [name, mat] : out.generators)
    for (auto& row : mat)
      for (auto& e : row) {
        if (e.is_constant()) continue;
        PS c0 = e.substitute(zero);
        PS acc = c0, lin = c0;
        for (const auto& [k, v] : values) {
          auto one = zero;
          one[k] = Rational(1);
          PS ek = e.substitute(one) - c0;
          acc += ek * v;
          lin += ek.scaled(Rational(2));
        }
        if (e.substitute(two) != lin)
          throw std::invalid_argument("matrix entry " + e.str() + " is not affine in the parameters");
        e = acc;
      }
  return out;
}

Report nonnull_s3(const ModuleDatum& d, const MatrixRep* m) {
  Report rep("non-null");
  if (d.preset.rack.size() != 3) {
    rep.fail("expected a datum over O_2^3");
    return rep;
  }
  const int order = static_cast<int>(d.real.G.members(d.F).size());
  Algebra bx = nichols_quadratic(d.preset.rack, d.preset.q);
  long long expected = coideal_KY(bx, d.Y).dim * order;
  rep.data["expected"] = expected;
  try {
    Algebra a = build_A(d);
    rep.data["dimension"] = a.dim();
    if (a.zero()) rep.fail("completion reduces 1 to 0");
    else if (a.dim() != expected)
      rep.fail("dimension " + std::to_string(a.dim()) + " differs from dim K_Y |F|");
  } catch (const NonUnitLead& e) {
    rep.fail("completion meets the non-unit coefficient " + e.coeff.str());
    return rep;
  }
  if (!m || d.Y.size() != 3) {
    rep.data["matrices"] = "not applicable";
    return rep;
  }
  auto prime = classes_prime(d.preset.rack, d.preset.q, d.classes);
  std::optional<PS> diag, cubic;
  bool uniform = true;
  for (int c : prime) {
    auto& slot = d.classes[c].size() == 1 ? diag : cubic;
    if (!slot) slot = d.xi[c];
    else if (*slot != d.xi[c]) uniform = false;
  }
  if (!uniform) {
    rep.data["matrices"] = "not applicable";
    return rep;
  }
  MatrixRep s = specialize(*m, {{"xi", diag.value_or(PS())}, {"mu", cubic.value_or(PS())}});
  Report mr = verify_matrix_rep(s, d);
  rep.merge(mr, "matrices: ");
  rep.data["matrices"] = mr.ok() ? "verified" : "failed";
  rep.data["induced_module_dim"] = s.dim;
  return rep;
}

namespace {

struct S4Push {
  RackPreset p3;
  Realization r3;
  std::vector<int> group;  // S_4 index -> S_3 index
  std::vector<int> rack;   // O_2^4 index -> O_2^3 index
};

S4Push s4_push(const ModuleDatum& d) {
  S4Push s;
  s.p3 = rack_preset("o2_3", d.preset.cocycle);
  s.r3 = standard_realization(s.p3);
  s.group = s4_to_s3(d.real.G, s.r3.G);
  for (int l = 0; l < d.preset.rack.size(); ++l) {
    int g = s.group[d.real.g[l]];
    s.rack.push_back(s.p3.rack.index(s.r3.G.el(g).str()));
  }
  return s;
}

Poly map_letters(const Poly& p, const std::vector<int>& to) {
  std::vector<Term> out;
  for (const auto& t : p.terms()) {
    Word w;
    for (char ch : t.w) w.push_back(static_cast<char>(to[static_cast<unsigned char>(ch)]));
    out.push_back({w, t.g, t.c});
  }
  return Poly::from_terms(std::move(out));
}

}  // namespace

ModuleDatum push_to_s3(const ModuleDatum& d) {
  if (d.preset.name != "o2_4") throw std::invalid_argument("push_to_s3 needs a datum over O_2^4");
  for (const auto& v : d.psi.table)
    if (!v.is_one()) throw std::invalid_argument("push_to_s3 needs psi = 1");
  S4Push s = s4_push(d);
  std::vector<int> Y;
  for (int l : d.Y) Y.push_back(s.rack[l]);
  std::sort(Y.begin(), Y.end());
  Y.erase(std::unique(Y.begin(), Y.end()), Y.end());
  std::vector<int> fgen;
  for (int f : d.real.G.members(d.F)) fgen.push_back(s.group[f]);
  Mask F = s.r3.G.generated(fgen);
  ModuleDatum t = make_datum(s.p3, s.r3, Y, F, trivial_cocycle(s.r3.G, F));
  std::vector<char> set(t.classes.size(), 0);
  for (int c : classes_prime(d.preset.rack, d.preset.q, d.classes)) {
    YPartitionTag tag = tag_class(d.classes[c], d.Y);
    if (tag.tag == YTag::R3) continue;
    Poly src = map_letters(vartheta_CY(d.classes[c], d.Y, d.preset.q, d.preset.rack), s.rack);
    int i = tag.tag == YTag::R1 ? d.classes[c].pairs[0].first : tag.i;
    int j = tag.tag == YTag::R1 ? d.classes[c].pairs[0].second : tag.j;
    int tc = class_of(t.classes, s.rack[i], s.rack[j]);
    Poly tgt = vartheta_CY(t.classes[tc], Y, s.p3.q, s.p3.rack);
    if (src.is_zero() || tgt.is_zero()) {
      if (!d.xi[c].is_zero()) throw std::invalid_argument("pushed relation vanishes with xi != 0");
      continue;
    }
    PS kappa = src.lead().c * tgt.coeff(src.lead().w).constant().inv();
    if (src != tgt.scaled(kappa)) throw std::invalid_argument("pushed relation is not a multiple");
    PS v = d.xi[c].scaled(kappa.constant().inv());
    if (set[tc] && t.xi[tc] != v)
      throw std::invalid_argument("inconsistent pushed scalars at " + class_label(t.classes[tc], s.p3.rack));
    t.xi[tc] = v;
    set[tc] = 1;
  }
  return t;
}

Report nonnull_s4(const ModuleDatum& d, const MatrixRep* m) {
  Report rep("non-null via S_4 -> S_3");
  if (d.preset.name != "o2_4" || d.preset.cocycle != "minus") {
    rep.fail("hypotheses unmet: needs O_2^4 with the constant cocycle");
    return rep;
  }
  const Rack& r = d.preset.rack;
  std::optional<PS> diag;
  for (int i : d.Y) {
    const PS& v = d.xi[class_of(d.classes, i, i)];
    if (!diag) diag = v;
    else if (*diag != v) rep.fail("hypotheses unmet: diagonal scalars differ on Y");
  }
  for (int i : d.Y)
    for (int j : d.Y) {
      if (i == j || r.tri(i, j) != j) continue;
      int c = class_of(d.classes, i, j);
      PS rel = d.xi[c].scaled(pair_coefficient(d.classes[c], d.preset.q, i, j).inv());
      if (rel != d.xi[class_of(d.classes, i, i)].scaled(Rational(2)))
        rep.fail("hypotheses unmet: xi_C != 2 xi_i at (" + r.labels[i] + "," + r.labels[j] + ")");
    }
  if (!rep.ok()) return rep;
  ModuleDatum t;
  try {
    t = push_to_s3(d);
  } catch (const std::invalid_argument& e) {
    rep.fail(e.what());
    return rep;
  }
  Algebra src = build_A(d);
  Algebra tgt = build_A(t);
  S4Push s = s4_push(d);
  std::vector<Poly> gi, ei;
  for (int l = 0; l < static_cast<int>(src.gens.size()); ++l)
    gi.push_back(tgt.y(tgt.gen_pos(s.rack[src.gen_elems[l]])));
  for (int f : src.group_elems) ei.push_back(tgt.e(tgt.local_group(s.group[f])));
  rep.merge(quotient_map_check(src, tgt, gi, ei, {}), "quotient: ");
  Report tr = nonnull_s3(t, m);
  rep.merge(tr, "target: ");
  rep.data["source_dimension"] = src.dim();
  rep.data["target"] = tr.data;
  return rep;
}

}  // namespace nichols
