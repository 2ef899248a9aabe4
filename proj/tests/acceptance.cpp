// Acceptance run: one PASS/FAIL line per criterion, details indented below.
// Exit status is nonzero if any criterion fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "nichols/classify.hpp"

using namespace nichols;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;
  void expect(bool ok, const std::string& what) {
    if (!ok) pass = false;
    notes.push_back(std::string(ok ? "ok   " : "FAIL ") + what);
  }
  void report(const Report& r, const std::string& what) {
    expect(r.ok(), what);
    for (std::size_t k = 0; k < r.violations.size() && k < 6; ++k) notes.push_back("       " + r.violations[k]);
  }
};

std::string str(const std::vector<long long>& v) {
  std::ostringstream s;
  for (std::size_t k = 0; k < v.size(); ++k) s << (k ? "," : "(") << v[k];
  s << ")";
  return s.str();
}

std::vector<int> subset(unsigned m, int n) {
  std::vector<int> Y;
  for (int i = 0; i < n; ++i)
    if (m >> i & 1u) Y.push_back(i);
  return Y;
}

ModuleDatum s3_full(const PS& xi, const PS& mu) {
  ModuleDatum d = make_datum(rack_preset("o2_3", "minus"), {"(1 2)", "(1 3)", "(2 3)"}, {"(1 2)", "(1 3)"});
  for (int c : classes_prime(d.preset.rack, d.preset.q, d.classes))
    d.xi[c] = d.classes[c].size() == 1 ? xi : mu;
  return d;
}

MatrixRep appendix() { return load_matrix_rep_file(std::string(NICHOLS_DATA_DIR) + "/appendix_matrices.json"); }

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

// 1. Coideal dimension table over O_2^4 for both cocycles.
Outcome coideal_o24() {
  Outcome o;
  auto t0 = Clock::now();
  for (const char* eps : {"minus", "chi"}) {
    RackPreset p = rack_preset("o2_4", eps);
    Realization re = standard_realization(p);
    CoidealTable t = coideal_table(p, re);
    std::multiset<long long> dims;
    for (const auto& row : t.rows) dims.insert(row.dim);
    o.expect(dims == std::multiset<long long>{2, 4, 6, 12, 24, 48, 96, 144, 288},
             std::string(eps) + ": nine Y-classes with dims {2,4,6,12,24,48,96,144,288}");
    for (const auto& it : o24_catalog()) {
      const CoidealRow* row = nullptr;
      for (const auto& r : t.rows)
        if (r.item == it.item) row = &r;
      if (!row) {
        o.expect(false, std::string(eps) + " item (" + it.item + "): no row");
        continue;
      }
      std::string st = subgroup_name(re.G, row->stabilizer);
      o.expect(row->dim == it.dim, std::string(eps) + " item (" + it.item + "): dim " + std::to_string(row->dim));
      if (!it.stabilizer.empty())
        o.expect(st == it.stabilizer,
                 std::string(eps) + " item (" + it.item + "): stabilizer " + st + ", listed " + it.stabilizer);
    }
  }
  double s = seconds_since(t0);
  o.expect(s < 300, "runtime " + std::to_string(s) + " s");
  return o;
}

// 2. dim K_Y dim K_Z = 576 for complementary pairs.
Outcome duality() {
  Outcome o;
  for (const char* eps : {"minus", "chi"}) {
    RackPreset p = rack_preset("o2_4", eps);
    CoidealTable t = coideal_table(p, standard_realization(p));
    int bad = 0, pairs = 0;
    for (unsigned m = 0; m < 64; ++m) {
      long long a = t.dims.at(subset(m, 6)), b = t.dims.at(subset(63u ^ m, 6));
      ++pairs;
      bad += a * b != 576;
    }
    o.expect(t.total == 576 && bad == 0,
             std::string(eps) + ": " + std::to_string(pairs) + " pairs, " + std::to_string(bad) + " off 576");
  }
  return o;
}

// 3. S_3 coideals, L_Y against K_Y, and (xyz)^2.
Outcome coideals_s3() {
  Outcome o;
  RackPreset p = rack_preset("o2_3", "minus");
  Realization re = standard_realization(p);
  CoidealTable t = coideal_table(p, re);
  o.expect(t.rows.size() == 2 && t.rows[0].dim == 2 && t.rows[1].dim == 6, "dims {2,6}");
  if (t.rows.size() == 2) {
    auto st0 = re.G.members(t.rows[0].stabilizer), st1 = re.G.members(t.rows[1].stabilizer);
    int i = t.rows[0].Y[0];
    int k = 3 - t.rows[1].Y[0] - t.rows[1].Y[1];
    o.expect(st0 == std::vector<int>{re.G.id(), re.g[i]}, "stab K_{i} = <i>");
    o.expect(st1 == std::vector<int>{re.G.id(), re.g[k]}, "stab K_{i,j} = <k>");
  }
  Algebra b = nichols_quadratic(p.rack, p.q);
  int equal = 0;
  for (unsigned m = 0; m < 8; ++m) {
    auto Y = subset(m, 3);
    long long ly = Y.empty() ? 1 : build_LY(p.rack, p.q, Y).dim();
    equal += ly == coideal_KY(b, Y).dim;
  }
  o.expect(equal == 8, "dim L_Y = dim K_Y for all 8 subsets");

  RackPreset p4 = rack_preset("o2_4", "minus");
  Algebra b4 = nichols_quadratic(p4.rack, p4.q);
  std::vector<int> Y{p4.rack.index("(1 3)"), p4.rack.index("(2 3)"), p4.rack.index("(3 4)")};
  std::vector<int> sorted = Y;
  std::sort(sorted.begin(), sorted.end());
  Algebra ly = build_LY(p4.rack, p4.q, sorted);
  Word w_ly, w_b;
  for (int rep = 0; rep < 2; ++rep)
    for (int y : Y) {
      w_ly.push_back(static_cast<char>(ly.gen_pos(y)));
      w_b.push_back(static_cast<char>(b4.gen_pos(y)));
    }
  o.expect(!ly.nf(Poly::monomial(w_ly)).is_zero(), "(xyz)^2 != 0 in L_Y");
  o.expect(b4.nf(Poly::monomial(w_b)).is_zero(), "(xyz)^2 = 0 in K_Y");
  return o;
}

// 4. The shipped matrices satisfy the relations over Q[xi, mu].
Outcome matrices() {
  Outcome o;
  MatrixRep m = appendix();
  ModuleDatum d = s3_full(PS::param("xi"), PS::param("mu"));
  o.report(verify_matrix_rep(m, d), "all relations of A(O_2^3,S_3,1,xi,mu), zero residual");
  const Matrix& a = m.generators.at("e(1 2)");
  const Matrix& b = m.generators.at("e(1 3)");
  Matrix e23 = mat_mul(a, mat_mul(b, a));
  RepImages im = rep_images(m, d);
  auto F = d.real.G.members(d.F);
  int loc = static_cast<int>(std::find(F.begin(), F.end(), d.real.G.index("(2 3)")) - F.begin());
  o.expect(im.missing.empty() && im.e[loc] == e23, "e(2 3) = e(1 2) e(1 3) e(1 2)");
  o.expect(m.dim == 12, "12 x 12");
  return o;
}

// 5. Dimensions of the liftings and of A; Loewy levels.
Outcome lifting_dims() {
  Outcome o;
  for (int beta : {0, 1}) {
    QlDatum q = ql_datum("q3m", {{"beta", PS(beta)}});
    o.expect(lifted_algebra(q).dim() == 72, "dim H(Q_3[(0," + std::to_string(beta) + ")]) = 72");
  }
  RackPreset p = rack_preset("o2_3", "minus");
  Algebra b = nichols_quadratic(p.rack, p.q);
  long long expected = coideal_KY(b, {0, 1, 2}).dim * 6;
  Algebra a = build_A(s3_full(PS::param("xi"), PS::param("mu")));
  o.expect(a.dim() == 72 && expected == 72, "dim A(O_2^3,S_3,1,xi,mu) = 72 = dim K_X |S_3|");
  ModuleDatum d = s3_full(PS(1), PS(0));
  BasisAlgebra H(graded_hopf(p, d.real)), A(build_A(d));
  Coaction lam(H, A, d);
  auto lv = loewy_dims(lam);
  o.expect(lv == std::vector<long long>{6, 18, 24, 18, 6}, "Loewy levels " + str(lv) + " = (1,3,4,3,1)*6");
  return o;
}

// 6. Canonical map and its preimages.
Outcome galois() {
  Outcome o;
  auto t0 = Clock::now();
  std::mt19937 rng(20261016);
  std::uniform_int_distribution<std::uint32_t> pick(40000, 65000);
  auto is_prime = [](std::uint32_t n) {
    for (std::uint32_t k = 2; k * k <= n; ++k)
      if (n % k == 0) return false;
    return true;
  };
  std::uint32_t prime = pick(rng);
  while (!is_prime(prime)) ++prime;
  RackPreset p = rack_preset("o2_3", "minus");
  ModuleDatum d = s3_full(PS(1), PS(0));
  BasisAlgebra H(graded_hopf(p, d.real)), A(build_A(d));
  Coaction lam(H, A, d);
  Report r = canonical_map_rank(lam, prime);
  long long rank = r.data.contains("rank") ? r.data["rank"].get<long long>() : -1;
  o.report(r, "canonical map bijective mod " + std::to_string(prime));
  o.expect(rank == 5184, "rank " + std::to_string(rank) + " = 5184");
  o.report(verify_can_preimages(lam), "can(e_f (x) e_f^-1) = f (x) 1 and the generator preimages");
  double s = seconds_since(t0);
  o.expect(s < 600, "runtime " + std::to_string(s) + " s");
  return o;
}

// 7. biGalois objects for the listed liftings.
Outcome bigalois() {
  Outcome o;
  struct Case {
    std::string name;
    std::map<std::string, PS> params;
    PS diag;
  };
  // Diagonal classes with g_i g_i = 1 take -alpha/2 on Q_4^{-1}.
  const PS half(Rational(-1, 2));
  const std::vector<Case> cases{
      {"q3m", {{"beta", PS(1)}}, PS()},
      {"q4m", {{"alpha", PS(0)}, {"beta", PS(0)}}, PS()},
      {"q4m", {{"alpha", PS(1)}, {"beta", PS(0)}}, half},
      {"q4m", {{"alpha", PS(0)}, {"beta", PS(1)}}, PS()},
      {"q4chi", {{"lambda", PS(1)}}, PS()},
      {"d4", {{"alpha", PS(1)}, {"beta", PS(0)}}, PS()},
  };
  for (const auto& c : cases) {
    QlDatum q = ql_datum(c.name, c.params);
    Mask G = q.real.G.full_mask();
    std::vector<int> X(q.preset.rack.size());
    std::iota(X.begin(), X.end(), 0);
    ModuleDatum d = make_datum(q.preset, q.real, X, G, trivial_cocycle(q.real.G, G));
    for (int k : q.prime) {
      if (!q.gamma[k].is_zero()) d.xi[k] = -q.gamma[k];
      else if (class_group_element(q.real, q.classes[k]) == q.real.G.id()) d.xi[k] = c.diag;
    }
    std::string label = c.name;
    for (const auto& [k, v] : c.params) label += " " + k + "=" + v.str();
    Report sc = bigalois_scalars(d, q);
    BasisAlgebra H(graded_hopf(q.preset, q.real)), HQ(lifted_algebra(q)), A(build_A(d));
    Coaction lam(H, A, d);
    Report r = verify_bigalois(lam, HQ, q, module_relations(d));
    r.merge(sc, "scalars: ");
    o.report(r, label + ": xi = -gamma, zero residue");
  }
  return o;
}

// 8. The S_3 families and the orbit check.
Outcome classification() {
  Outcome o;
  auto orbits = enumerate_data(rack_preset("o2_3", "minus"));
  Report fam = compare_s3_families(orbits);
  o.expect(fam.data["families"] == 9, "9 orbit families (" + fam.data["orbits"].dump() + " orbits)");
  o.report(fam, "same F, relation shapes and free parameters as printed");
  Report orb = exhaustive_orbit_check(orbits);
  o.report(orb, "exhaustive orbit check over the 6 elements of S_3 (" + orb.data["maps"].dump() + " maps)");
  return o;
}

// 9. Free 3-class parameters for F = Z_3 and F = S_3; forced squares.
Outcome compatibility() {
  Outcome o;
  RackPreset p = rack_preset("o2_3", "minus");
  for (auto [gen, want] : {std::pair<std::vector<std::string>, int>{{"(1 2 3)"}, 2},
                           std::pair<std::vector<std::string>, int>{{"(1 2)", "(1 3)"}, 1}}) {
    ModuleDatum d = make_datum(p, {"(1 2)", "(1 3)", "(2 3)"}, gen);
    XiSpace s = xi_solution_space(d);
    std::vector<int> three;
    for (std::size_t c = 0; c < d.classes.size(); ++c)
      if (d.classes[c].size() == 3) three.push_back(static_cast<int>(c));
    Echelon e;
    int rank = 0;
    for (const auto& v : s.basis) {
      SparseVec row;
      for (std::size_t k = 0; k < three.size(); ++k)
        if (!v[three[k]].is_zero()) row.emplace_back(static_cast<int>(k), v[three[k]]);
      rank += e.insert(row);
    }
    o.expect(rank == want, "F = " + subgroup_name(d.real.G, d.F) + ": " + std::to_string(rank) +
                               " independent 3-class parameters");
  }
  int agree = 0, total = 0;
  for (const auto& orb : enumerate_data(p)) {
    const ModuleDatum& d = orb.rep;
    if (d.Y.empty()) continue;
    bool r2 = false;
    for (int c : classes_prime(p.rack, p.q, d.classes)) r2 |= tag_class(d.classes[c], d.Y).tag == YTag::R2;
    bool forced = true;
    for (int y : d.Y) {
      int c = class_of(d.classes, y, y);
      forced &= std::find(orb.xi.support.begin(), orb.xi.support.end(), c) == orb.xi.support.end();
    }
    ++total;
    agree += r2 == forced;
    if (r2 != forced) o.notes.push_back("       item " + orb.catalog + ": R2 " + std::to_string(r2) + ", forced " + std::to_string(forced));
  }
  o.expect(agree == total, "squares forced to 0 exactly for R2 data (" + std::to_string(agree) + "/" +
                               std::to_string(total) + ")");
  return o;
}

// 10. Exhaustive cocycle identity on 72^3 triples.
Outcome hopf_cocycle() {
  Outcome o;
  auto t0 = Clock::now();
  RackPreset p = rack_preset("o2_3", "minus");
  Realization re = standard_realization(p);
  BasisAlgebra H(graded_hopf(p, re));
  Coproduct D(H, re);
  Mask G = re.G.full_mask();
  for (auto [name, s] : {std::pair{"trivial", trivial_cocycle(re.G, G)}, std::pair{"sign", sign_pullback_cocycle(re.G, G)}}) {
    Report r = verify_hopf_cocycle(extend_group_cocycle(s, H), D, 0);
    o.report(r, std::string(name) + ": " + r.data.value("triples_checked", nlohmann::ordered_json(0)).dump() + " triples");
  }
  double s = seconds_since(t0);
  o.expect(s < 600, "runtime " + std::to_string(s) + " s");
  return o;
}

// 11. Documented single-entry corruptions.
Outcome mutations() {
  Outcome o;
  RackPreset p = rack_preset("o2_3", "minus");
  Rack r = p.rack;
  o.expect(check_rack(r).ok(), "rack axioms pass on O_2^3");
  r.op[1] = r.op[2];  // (1 2) > (1 3) := (1 2) > (2 3)
  o.expect(!check_rack(r).ok(), "rack axioms: op entry ((1 2),(1 3)) overwritten");

  ModuleDatum d = s3_full(PS(1), PS(2));
  o.expect(check_compatible(d).ok(), "compatibility passes on the S_3 datum");
  ModuleDatum bad = d;
  for (int c : classes_prime(p.rack, p.q, bad.classes))
    if (bad.classes[c].size() == 3) {
      bad.xi[c] += PS(1);
      break;
    }
  o.expect(!check_compatible(bad).ok(), "compatibility: one 3-class scalar shifted by 1");

  BasisAlgebra H(graded_hopf(p, d.real)), A(build_A(d));
  Coaction good(H, A, d), flipped(H, A, d, 0);
  o.expect(verify_coaction(good, module_relations(d)).ok(), "coaction passes");
  o.expect(!verify_coaction(flipped, module_relations(d)).ok(), "coaction: sign of g (x) y_(1 2) flipped");

  MatrixRep m = appendix();
  ModuleDatum sym = s3_full(PS::param("xi"), PS::param("mu"));
  auto& y = m.generators.at("y(1 2)");
  bool done = false;
  for (auto& row : y)
    for (auto& v : row)
      if (!done && !v.is_zero()) {
        v += PS(1);
        done = true;
      }
  o.expect(!verify_matrix_rep(m, sym).ok(), "matrices: first nonzero entry of y(1 2) plus 1");
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"coideal dimension table over O_2^4", coideal_o24},
      {"duality dim K_Y dim K_Z = 576", duality},
      {"S_3 coideals and L_Y", coideals_s3},
      {"appendix matrices", matrices},
      {"lifting dimensions and Loewy levels", lifting_dims},
      {"Galois canonical map", galois},
      {"biGalois objects", bigalois},
      {"classification over S_3", classification},
      {"compatibility cross-checks", compatibility},
      {"Hopf cocycle extension", hopf_cocycle},
      {"mutation robustness", mutations},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o.expect(false, std::string("exception: ") + e.what());
    }
    failed += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " " << k + 1 << " " << criteria[k].first << "\n";
    for (const auto& n : o.notes) std::cout << "    " << n << "\n";
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria pass\n";
  return failed ? 1 : 0;
}
