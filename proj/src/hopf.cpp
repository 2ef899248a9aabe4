#include "nichols/hopf.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

namespace nichols {

// ---------------------------------------------------------------- ql-data

Rational pair_coefficient(const EquivClass& c, const RackCocycle& q, int i, int j) {
  Word w{static_cast<char>(i), static_cast<char>(j)};
  PS v = phi_C(c, q).coeff(w);
  if (v.is_zero()) throw std::invalid_argument("pair is not in the class");
  return v.constant();
}

int class_group_element(const Realization& real, const EquivClass& c) {
  const auto& [i, j] = c.pairs[0];
  return real.G.mul(real.g[i], real.g[j]);
}

QlDatum make_ql_datum(const std::string& name, const RackPreset& p,
                      const std::vector<QlRelation>& reps) {
  QlDatum d;
  d.name = name;
  d.preset = p;
  d.real = standard_realization(p);
  d.classes = enumerate_classes(p.rack);
  d.prime = classes_prime(p.rack, p.q, d.classes);
  const int nc = static_cast<int>(d.classes.size());
  d.gamma.assign(nc, PS());
  std::vector<char> seen(nc, 0);
  const Realization& re = d.real;
  for (const auto& rep : reps) {
    int i = p.rack.index(rep.i), j = p.rack.index(rep.j);
    if (i < 0 || j < 0) throw std::invalid_argument("unknown rack element in ql relation");
    for (int h = 0; h < re.G.order(); ++h) {
      int hi = re.a(h, i), hj = re.a(h, j);
      int c = class_of(d.classes, hi, hj);
      // e_h phi_{(i,j)} e_h^-1 = chi_i(h) chi_j(h) phi_{(hi,hj)}
      PS at_pair = rep.gamma.scaled((re.x(h, i) * re.x(h, j)).inv());
      PS canon = at_pair.scaled(pair_coefficient(d.classes[c], p.q, hi, hj));
      if (seen[c] && d.gamma[c] != canon)
        throw std::invalid_argument("ql relations are not conjugation invariant");
      d.gamma[c] = canon;
      seen[c] = 1;
    }
  }
  Report r = check_ql_datum(d);
  if (!r.ok()) throw std::invalid_argument("invalid ql-datum: " + r.violations.front());
  return d;
}

QlDatum ql_datum(const std::string& name, const std::map<std::string, PS>& params) {
  auto par = [&](const std::string& k) {
    auto it = params.find(k);
    return it == params.end() ? PS::param(k) : it->second;
  };
  if (name == "q3m")
    return make_ql_datum(name, rack_preset("o2_3", "minus"), {{"(1 2)", "(2 3)", par("beta")}});
  if (name == "q4m")
    return make_ql_datum(name, rack_preset("o2_4", "minus"),
                         {{"(1 2)", "(3 4)", par("alpha")}, {"(1 2)", "(2 3)", par("beta")}});
  if (name == "q4chi")
    return make_ql_datum(name, rack_preset("o2_4", "chi"), {{"(1 2)", "(2 3)", par("lambda")}});
  if (name == "d4")
    return make_ql_datum(name, rack_preset("o4_4", "minus"),
                         {{"(1 2 3 4)", "(1 2 3 4)", par("alpha")},
                          {"(1 2 3 4)", "(1 2 4 3)", par("beta")}});
  throw std::invalid_argument("unknown ql-datum preset " + name);
}

namespace {

// e_h P e_h^-1 for P in rack letters with G-indexed group parts.
Poly conjugate_lifted(const Realization& re, int h, const Poly& p) {
  std::vector<Term> ts;
  for (const auto& t : p.terms()) {
    Word w;
    Rational s = 1;
    for (char ch : t.w) {
      int l = static_cast<unsigned char>(ch);
      w.push_back(static_cast<char>(re.a(h, l)));
      s *= re.x(h, l);
    }
    ts.push_back(Term{w, re.G.conj(h, t.g), t.c.scaled(s)});
  }
  return Poly::from_terms(std::move(ts));
}

}  // namespace

Poly lifted_relation(const QlDatum& q, int cls) {
  const EquivClass& c = q.classes[cls];
  Poly r = phi_C(c, q.preset.q);
  const PS& g = q.gamma[cls];
  if (g.is_zero()) return r;
  int t = class_group_element(q.real, c);
  return r - Poly::scalar(g) + Poly::scalar(g, t);
}

Report check_ql_datum(const QlDatum& q) {
  Report rep("ql-datum");
  const Rack& r = q.preset.rack;
  const RackCocycle& cq = q.preset.q;
  const Realization& re = q.real;
  rep.merge(check_realization(re, r, cq), "realization: ");
  std::vector<char> in_prime(q.classes.size(), 0);
  for (int k : q.prime) in_prime[k] = 1;
  for (std::size_t c = 0; c < q.classes.size(); ++c) {
    const EquivClass& C = q.classes[c];
    std::string lab = class_label(C, r);
    if (!in_prime[c]) {
      if (!q.gamma[c].is_zero()) rep.fail("gamma nonzero off R' at " + lab);
      continue;
    }
    if (class_group_element(re, C) == re.G.id() && !q.gamma[c].is_zero())
      rep.fail("gamma nonzero at " + lab + " although g_{i2} g_{i1} = 1");
    // gamma_C = q_{k i2} q_{k i1} gamma_{k|>C}, the latter relative to phi
    // started at (k|>i2, k|>i1).
    const auto& [i2, i1] = C.pairs[0];
    for (int k = 0; k < r.size(); ++k) {
      int a = r.tri(k, i2), b = r.tri(k, i1);
      int kc = class_of(q.classes, a, b);
      PS rhs = q.gamma[kc].scaled(cq.at(k, i2) * cq.at(k, i1) /
                                  pair_coefficient(q.classes[kc], cq, a, b));
      if (rhs != q.gamma[c])
        rep.fail("gamma relation fails for k=" + r.labels[k] + " at " + lab);
    }
    // The lifted relation set is stable under conjugation, up to scalars.
    Poly rel = lifted_relation(q, static_cast<int>(c));
    for (int h = 0; h < re.G.order(); ++h) {
      Poly cj = conjugate_lifted(re, h, rel);
      int hc = class_of(q.classes, re.a(h, i2), re.a(h, i1));
      Poly other = lifted_relation(q, hc);
      PS s = cj.lead().c;
      PS t = other.coeff(cj.lead().w, cj.lead().g);
      if (t.is_zero() || cj.scaled(PS(t.constant())) != other.scaled(s)) {
        rep.fail("conjugate of the relation at " + lab + " by " + re.G.el(h).str() +
                 " is not a multiple of a relation");
        break;
      }
    }
  }
  return rep;
}

Algebra lifted_algebra(const QlDatum& q, int degree_cap) {
  const Rack& r = q.preset.rack;
  std::vector<int> all(r.size());
  std::iota(all.begin(), all.end(), 0);
  GroupCtx ctx = make_group_ctx(q.real, q.real.G.full_mask(),
                                trivial_cocycle(q.real.G, q.real.G.full_mask()), all);
  std::vector<Poly> rel;
  for (int c : q.prime) rel.push_back(lifted_relation(q, c));
  Algebra a = make_algebra(r, all, std::move(ctx), std::move(rel), degree_cap);
  return a;
}

Algebra graded_hopf(const RackPreset& p, const Realization& real, int degree_cap) {
  std::vector<int> all(p.rack.size());
  std::iota(all.begin(), all.end(), 0);
  Mask full = real.G.full_mask();
  return bosonize(p.rack, nichols_relations(p.rack, p.q), all, real, full,
                  trivial_cocycle(real.G, full), degree_cap);
}

// ---------------------------------------------------------------- BasisAlgebra

BasisAlgebra::BasisAlgebra(Algebra a) : a_(std::move(a)) {
  if (a_.zero() || !a_.status.finite)
    throw std::invalid_argument("basis arithmetic needs a nonzero finite-dimensional algebra");
  basis_ = a_.rs.basis();
}

int BasisAlgebra::index(const Word& w, int g) const { return basis_.find(w, g); }

Poly BasisAlgebra::element(int i) const {
  return Poly::monomial(basis_.elems[i].first, basis_.elems[i].second);
}

Coords BasisAlgebra::coords(const Poly& p) { return a_.rs.coords(p); }

const Coords& BasisAlgebra::product(int i, int j) {
  std::uint64_t key = static_cast<std::uint64_t>(i) << 32 | static_cast<std::uint32_t>(j);
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;
  Coords c = a_.rs.coords(a_.mul(element(i), element(j)));
  return cache_.emplace(key, std::move(c)).first->second;
}

// ---------------------------------------------------------------- Tensor

void Tensor::add(const std::vector<int>& key, const PS& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = t_.emplace(key, c);
  if (fresh) return;
  it->second += c;
  if (it->second.is_zero()) t_.erase(it);
}

Tensor Tensor::pure(std::vector<BasisAlgebra*> legs, const std::vector<Poly>& factors) {
  if (legs.size() != factors.size()) throw std::invalid_argument("tensor: leg count mismatch");
  std::vector<Coords> cs;
  for (std::size_t k = 0; k < legs.size(); ++k) cs.push_back(legs[k]->coords(factors[k]));
  Tensor t(legs);
  std::vector<int> key(legs.size());
  std::vector<std::size_t> pos(legs.size(), 0);
  for (const auto& c : cs)
    if (c.empty()) return t;
  for (;;) {
    PS v(1);
    for (std::size_t k = 0; k < legs.size(); ++k) {
      key[k] = cs[k][pos[k]].first;
      v *= cs[k][pos[k]].second;
    }
    t.add(key, v);
    std::size_t k = 0;
    while (k < legs.size() && ++pos[k] == cs[k].size()) pos[k++] = 0;
    if (k == legs.size()) break;
  }
  return t;
}

Tensor Tensor::basis(std::vector<BasisAlgebra*> legs, const std::vector<int>& idx) {
  Tensor t(std::move(legs));
  t.add(idx, PS(1));
  return t;
}

Tensor operator+(const Tensor& a, const Tensor& b) {
  Tensor out = a.legs_.empty() ? b : a;
  if (a.legs_.empty()) return out;
  for (const auto& [k, v] : b.t_) out.add(k, v);
  return out;
}

Tensor operator-(const Tensor& a, const Tensor& b) { return a + b.scaled(PS(-1)); }

Tensor Tensor::scaled(const PS& s) const {
  Tensor out(legs_);
  if (s.is_zero()) return out;
  for (const auto& [k, v] : t_) out.t_.emplace(k, v * s);
  return out;
}

Tensor operator*(const Tensor& a, const Tensor& b) {
  Tensor out(a.legs_);
  const std::size_t n = a.legs_.size();
  std::vector<const Coords*> parts(n);
  std::vector<int> key(n);
  for (const auto& [ka, va] : a.t_)
    for (const auto& [kb, vb] : b.t_) {
      bool zero = false;
      for (std::size_t l = 0; l < n; ++l) {
        parts[l] = &a.legs_[l]->product(ka[l], kb[l]);
        if (parts[l]->empty()) zero = true;
      }
      if (zero) continue;
      PS base = va * vb;
      std::vector<std::size_t> pos(n, 0);
      for (;;) {
        PS v = base;
        for (std::size_t l = 0; l < n; ++l) {
          key[l] = (*parts[l])[pos[l]].first;
          v *= (*parts[l])[pos[l]].second;
        }
        out.add(key, v);
        std::size_t l = 0;
        while (l < n && ++pos[l] == parts[l]->size()) pos[l++] = 0;
        if (l == n) break;
      }
    }
  return out;
}

std::string Tensor::str() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, v] : t_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << v.str() << ")";
    for (std::size_t l = 0; l < k.size(); ++l) {
      Algebra& a = legs_[l]->alg();
      os << (l ? " (x) " : " ") << a.show(legs_[l]->element(k[l]));
    }
  }
  return first ? "0" : os.str();
}

Tensor apply_hom(const Poly& p, const std::vector<Tensor>& gen_images,
                 const std::vector<Tensor>& group_images, const std::vector<BasisAlgebra*>& legs) {
  std::vector<int> unit;
  for (auto* l : legs) unit.push_back(l->unit());
  Tensor acc(legs);
  for (const auto& t : p.terms()) {
    Tensor v = Tensor::basis(legs, unit);
    for (char ch : t.w) v = v * gen_images.at(static_cast<unsigned char>(ch));
    v = v * group_images.at(t.g);
    acc = acc + v.scaled(t.c);
  }
  return acc;
}

// ---------------------------------------------------------------- Coproduct

Coproduct::Coproduct(BasisAlgebra& h, const Realization& real) : h_(h) {
  Algebra& a = h.alg();
  std::vector<BasisAlgebra*> legs{&h, &h};
  Poly one = Poly::monomial(Word());
  for (int l = 0; l < static_cast<int>(a.gens.size()); ++l) {
    int g = a.local_group(real.g[a.gen_elems[l]]);
    if (g < 0) throw std::invalid_argument("coproduct: g_l is not in the group of H");
    gen_.push_back(Tensor::pure(legs, {a.e(g), a.y(l)}) + Tensor::pure(legs, {a.y(l), one}));
  }
  for (int g = 0; g < a.rs.group().order; ++g) grp_.push_back(Tensor::pure(legs, {a.e(g), a.e(g)}));
}

Tensor Coproduct::of(const Poly& p) { return apply_hom(p, gen_, grp_, {&h_, &h_}); }

const Tensor& Coproduct::of_basis(int i) {
  auto it = basis_.find(i);
  if (it != basis_.end()) return it->second;
  return basis_.emplace(i, of(h_.element(i))).first->second;
}

PS Coproduct::counit_basis(int i) const { return h_.degree(i) == 0 ? PS(1) : PS(); }

Report check_counit(Coproduct& d, const std::vector<int>& basis_elems) {
  Report rep("counit");
  for (int b : basis_elems) {
    std::map<int, PS> l, r;
    for (const auto& [k, v] : d.of_basis(b).terms()) {
      PS e0 = d.counit_basis(k[0]), e1 = d.counit_basis(k[1]);
      if (!e0.is_zero()) l[k[1]] += v * e0;
      if (!e1.is_zero()) r[k[0]] += v * e1;
    }
    auto is_b = [&](const std::map<int, PS>& m) {
      for (const auto& [k, v] : m)
        if (v != (k == b ? PS(1) : PS())) return false;
      return m.count(b) == 1;
    };
    if (!is_b(l)) rep.fail("(eps (x) id) Delta differs from the identity at basis element " +
                           std::to_string(b));
    if (!is_b(r)) rep.fail("(id (x) eps) Delta differs from the identity at basis element " +
                           std::to_string(b));
  }
  rep.data["checked"] = basis_elems.size();
  return rep;
}

Report check_coassociativity(Coproduct& d, const std::vector<int>& basis_elems) {
  Report rep("coassociativity");
  BasisAlgebra& h = d.algebra();
  std::vector<BasisAlgebra*> legs3{&h, &h, &h};
  for (int b : basis_elems) {
    Tensor left(legs3), right(legs3);
    for (const auto& [k, v] : d.of_basis(b).terms()) {
      for (const auto& [k1, v1] : d.of_basis(k[0]).terms()) left.add({k1[0], k1[1], k[1]}, v * v1);
      for (const auto& [k2, v2] : d.of_basis(k[1]).terms()) right.add({k[0], k2[0], k2[1]}, v * v2);
    }
    if (!(left == right)) rep.fail("coassociativity fails at basis element " + std::to_string(b));
  }
  rep.data["checked"] = basis_elems.size();
  return rep;
}

Report check_coproduct_multiplicative(Coproduct& d,
                                      const std::vector<std::pair<int, int>>& pairs) {
  Report rep("coproduct multiplicative");
  BasisAlgebra& h = d.algebra();
  std::vector<BasisAlgebra*> legs{&h, &h};
  for (const auto& [u, v] : pairs) {
    Tensor lhs(legs);
    for (const auto& [k, c] : h.product(u, v))
      for (const auto& [kk, cc] : d.of_basis(k).terms()) lhs.add(kk, c * cc);
    Tensor rhs = d.of_basis(u) * d.of_basis(v);
    if (!(lhs == rhs))
      rep.fail("Delta(uv) != Delta(u)Delta(v) for basis pair (" + std::to_string(u) + ", " +
               std::to_string(v) + ")");
  }
  rep.data["checked"] = pairs.size();
  return rep;
}

// ---------------------------------------------------------------- Hopf cocycles

Rational HopfCocycleTable::at(int i, int j) const {
  auto it = values.find({i, j});
  return it == values.end() ? Rational(0) : it->second;
}

nlohmann::ordered_json HopfCocycleTable::to_json() const {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  j["dim"] = dim;
  nlohmann::ordered_json v = nlohmann::ordered_json::object();
  for (const auto& [k, x] : values) v[std::to_string(k.first) + "," + std::to_string(k.second)] = x.str();
  j["values"] = v;
  return j;
}

HopfCocycleTable extend_group_cocycle(const GroupCocycle& sigma, BasisAlgebra& h) {
  HopfCocycleTable t;
  t.dim = h.size();
  Algebra& a = h.alg();
  std::vector<int> deg0;
  for (int i = 0; i < h.size(); ++i)
    if (h.degree(i) == 0) deg0.push_back(i);
  for (int i : deg0)
    for (int j : deg0) {
      int gi = a.group_elems[h.group(i)], gj = a.group_elems[h.group(j)];
      if (sigma.pos(gi) < 0 || sigma.pos(gj) < 0)
        throw std::invalid_argument("sigma is not defined on the group of H");
      t.values[{i, j}] = sigma.at(gi, gj);
    }
  return t;
}

namespace {

using RVec = std::map<int, Rational>;

struct CocycleSides {
  const HopfCocycleTable& s;
  Coproduct& d;
  BasisAlgebra& h;
  std::vector<std::vector<std::pair<int, Rational>>> rows, cols;  // nonzero entries
  std::map<std::pair<int, int>, RVec> left_cache, right_cache;

  CocycleSides(const HopfCocycleTable& s_, Coproduct& d_) : s(s_), d(d_), h(d_.algebra()) {
    rows.resize(h.size());
    cols.resize(h.size());
    for (const auto& [k, v] : s.values)
      if (!v.is_zero()) {
        rows[k.first].emplace_back(k.second, v);
        cols[k.second].emplace_back(k.first, v);
      }
  }
  // sum s(x1, y1) x2 y2
  const RVec& left(int x, int y) {
    auto key = std::make_pair(x, y);
    auto it = left_cache.find(key);
    if (it != left_cache.end()) return it->second;
    RVec out;
    for (const auto& [kx, vx] : d.of_basis(x).terms()) {
      if (rows[kx[0]].empty()) continue;
      for (const auto& [ky, vy] : d.of_basis(y).terms()) {
        Rational sv = s.at(kx[0], ky[0]);
        if (sv.is_zero()) continue;
        Rational c = vx.constant() * vy.constant() * sv;
        for (const auto& [m, pv] : h.product(kx[1], ky[1])) out[m] += c * pv.constant();
      }
    }
    return left_cache.emplace(key, std::move(out)).first->second;
  }
  // sum s(y1, z1) y2 z2
  const RVec& right(int y, int z) {
    auto key = std::make_pair(y, z);
    auto it = right_cache.find(key);
    if (it != right_cache.end()) return it->second;
    RVec out;
    for (const auto& [ky, vy] : d.of_basis(y).terms()) {
      if (rows[ky[0]].empty()) continue;
      for (const auto& [kz, vz] : d.of_basis(z).terms()) {
        Rational sv = s.at(ky[0], kz[0]);
        if (sv.is_zero()) continue;
        Rational c = vy.constant() * vz.constant() * sv;
        for (const auto& [m, pv] : h.product(ky[1], kz[1])) out[m] += c * pv.constant();
      }
    }
    return right_cache.emplace(key, std::move(out)).first->second;
  }
  bool holds(int x, int y, int z) {
    Rational lhs = 0, rhs = 0;
    for (const auto& [m, v] : left(x, y))
      if (!v.is_zero()) lhs += v * s.at(m, z);
    for (const auto& [m, v] : right(y, z))
      if (!v.is_zero()) rhs += v * s.at(x, m);
    return lhs == rhs;
  }
};

}  // namespace

Report verify_hopf_cocycle(const HopfCocycleTable& s, Coproduct& d, long samples,
                           std::uint64_t seed) {
  Report rep("hopf cocycle");
  CocycleSides cs(s, d);
  const int n = d.algebra().size();
  long checked = 0, failed = 0;
  auto one = [&](int x, int y, int z) {
    ++checked;
    if (cs.holds(x, y, z)) return;
    if (++failed <= 20)
      rep.fail("cocycle identity fails at basis triple (" + std::to_string(x) + ", " +
               std::to_string(y) + ", " + std::to_string(z) + ")");
  };
  if (samples <= 0) {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        cs.left_cache.clear();
        for (int z = 0; z < n; ++z) one(x, y, z);
      }
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (long k = 0; k < samples; ++k) {
      int x = pick(rng), y = pick(rng), z = pick(rng);
      one(x, y, z);
    }
  }
  // The unit conditions s(x,1) = s(1,x) = eps(x).
  int u = d.algebra().unit();
  for (int x = 0; x < n; ++x) {
    Rational e = d.counit_basis(x).is_zero() ? Rational(0) : Rational(1);
    if (s.at(x, u) != e || s.at(u, x) != e) {
      rep.fail("normalization fails at basis element " + std::to_string(x));
      break;
    }
  }
  rep.data["triples_checked"] = checked;
  rep.data["triples_failed"] = failed;
  rep.data["exhaustive"] = samples <= 0;
  return rep;
}

}  // namespace nichols

namespace nichols {

Report ql_quotient_check(const QlDatum& q4, const QlDatum& q3) {
  Report rep("ql quotient");
  if (q4.preset.rack.size() != 6 || q3.preset.rack.size() != 3) {
    rep.fail("expected ql-data over O_2^4 and O_2^3");
    return rep;
  }
  Algebra src = lifted_algebra(q4);
  Algebra tgt = lifted_algebra(q3);
  auto pi = s4_to_s3(q4.real.G, q3.real.G);
  std::vector<Poly> gi, ei;
  for (int l = 0; l < static_cast<int>(src.gens.size()); ++l) {
    int g = pi[q4.real.g[src.gen_elems[l]]];
    int r = q3.preset.rack.index(q3.real.G.el(g).str());
    gi.push_back(tgt.y(tgt.gen_pos(r)));
  }
  for (int f : src.group_elems) ei.push_back(tgt.e(tgt.local_group(pi[f])));
  rep.merge(quotient_map_check(src, tgt, gi, ei, {}));
  rep.data["source_dimension"] = src.dim();
  rep.data["target_dimension"] = tgt.dim();
  return rep;
}

}  // namespace nichols
