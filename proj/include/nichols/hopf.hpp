#pragma once
// ql-data and the lifted Hopf algebras H(Q), arithmetic in tensor powers of
// finite-dimensional presented algebras, coproducts, and the extension of a
// group 2-cocycle to a Hopf 2-cocycle on B#kG.

#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "nichols/algebra.hpp"
#include "nichols/grp.hpp"
#include "nichols/rack.hpp"
#include "nichols/report.hpp"

namespace nichols {

// ---------------------------------------------------------------- ql-data

struct QlDatum {
  std::string name;
  RackPreset preset;
  Realization real;
  std::vector<EquivClass> classes;
  std::vector<int> prime;  // indices of the classes in R'
  std::vector<PS> gamma;   // per class, relative to the canonical phi_C
};

// One relation  phi_{(i,j)}(a) = gamma (1 - H_{g_i g_j}),  phi started at (i,j).
struct QlRelation {
  std::string i, j;
  PS gamma;
};

// Coefficient of T_i T_j in the canonical phi_C of the class of (i,j).
Rational pair_coefficient(const EquivClass& c, const RackCocycle& q, int i, int j);
// G index of g_{i_2} g_{i_1} for the canonical start of c.
int class_group_element(const Realization& real, const EquivClass& c);

// gamma on the remaining classes follows by conjugation with G.
QlDatum make_ql_datum(const std::string& name, const RackPreset& p,
                      const std::vector<QlRelation>& reps);
// Presets q3m, q4m (alpha, beta), q4chi (lambda), d4 (alpha, beta).  Missing
// parameters stay symbolic.
QlDatum ql_datum(const std::string& name, const std::map<std::string, PS>& params = {});
Report check_ql_datum(const QlDatum& q);

// Relation phi_C(a) - gamma_C (1 - H_{g_{i_2} g_{i_1}}) on the full group.
Poly lifted_relation(const QlDatum& q, int cls);
Algebra lifted_algebra(const QlDatum& q, int degree_cap = 16);
// Map H(Q) -> H(Q') for Q over O_2^4 and Q' over O_2^3, a_l -> a_{pi(l)},
// H_f -> H_{pi(f)} with pi : S_4 -> S_3.
Report ql_quotient_check(const QlDatum& q4, const QlDatum& q3);

// B(X,q) # kG.
Algebra graded_hopf(const RackPreset& p, const Realization& real, int degree_cap = 16);

// ---------------------------------------------------------------- tensors

using Coords = std::vector<std::pair<int, PS>>;

// A finite-dimensional algebra seen through its basis, with cached products.
class BasisAlgebra {
 public:
  explicit BasisAlgebra(Algebra a);
  Algebra& alg() { return a_; }
  int size() const { return static_cast<int>(basis_.elems.size()); }
  const Coords& product(int i, int j);
  Coords coords(const Poly& p);
  Poly element(int i) const;
  int degree(int i) const { return static_cast<int>(basis_.elems[i].first.size()); }
  int group(int i) const { return basis_.elems[i].second; }  // local group index
  int index(const Word& w, int g) const;
  int unit() const { return index(Word(), 0); }

 private:
  Algebra a_;
  RewriteSystem::Basis basis_;
  std::unordered_map<std::uint64_t, Coords> cache_;
};

class Tensor {
 public:
  Tensor() = default;
  explicit Tensor(std::vector<BasisAlgebra*> legs) : legs_(std::move(legs)) {}
  static Tensor pure(std::vector<BasisAlgebra*> legs, const std::vector<Poly>& factors);
  static Tensor basis(std::vector<BasisAlgebra*> legs, const std::vector<int>& idx);

  const std::vector<BasisAlgebra*>& legs() const { return legs_; }
  const std::map<std::vector<int>, PS>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  void add(const std::vector<int>& key, const PS& c);

  friend Tensor operator+(const Tensor& a, const Tensor& b);
  friend Tensor operator-(const Tensor& a, const Tensor& b);
  friend Tensor operator*(const Tensor& a, const Tensor& b);
  Tensor scaled(const PS& s) const;
  friend bool operator==(const Tensor& a, const Tensor& b) { return a.t_ == b.t_; }
  std::string str() const;

 private:
  std::vector<BasisAlgebra*> legs_;
  std::map<std::vector<int>, PS> t_;
};

// Image of p under the algebra map determined by generator and group images
// (group images indexed by the local group index of the source).
Tensor apply_hom(const Poly& p, const std::vector<Tensor>& gen_images,
                 const std::vector<Tensor>& group_images, const std::vector<BasisAlgebra*>& legs);

// Coproduct of a Hopf algebra H = B#kG or H(Q):
//   Delta(a_l) = g_l (x) a_l + a_l (x) 1,  Delta(H_t) = H_t (x) H_t.
class Coproduct {
 public:
  Coproduct(BasisAlgebra& h, const Realization& real);
  Tensor of(const Poly& p);
  const Tensor& of_basis(int i);
  PS counit_basis(int i) const;
  BasisAlgebra& algebra() { return h_; }

 private:
  BasisAlgebra& h_;
  std::vector<Tensor> gen_, grp_;
  std::map<int, Tensor> basis_;
};

Report check_counit(Coproduct& d, const std::vector<int>& basis_elems);
Report check_coassociativity(Coproduct& d, const std::vector<int>& basis_elems);
Report check_coproduct_multiplicative(Coproduct& d,
                                      const std::vector<std::pair<int, int>>& pairs);

// ---------------------------------------------------------------- Hopf cocycles

// Sparse table of a bilinear form on basis pairs.
struct HopfCocycleTable {
  int dim = 0;
  std::map<std::pair<int, int>, Rational> values;
  Rational at(int i, int j) const;
  nlohmann::ordered_json to_json() const;
};

// sigma on degree-zero pairs (e_g, e_h), zero elsewhere.
HopfCocycleTable extend_group_cocycle(const GroupCocycle& sigma, BasisAlgebra& h);

// Checks  s(x1,y1) s(x2 y2, z) = s(y1,z1) s(x, y2 z2)  on all basis triples
// when samples == 0, else on `samples` random triples drawn with `seed`.
Report verify_hopf_cocycle(const HopfCocycleTable& s, Coproduct& d, long samples = 0,
                           std::uint64_t seed = 1);

}  // namespace nichols
