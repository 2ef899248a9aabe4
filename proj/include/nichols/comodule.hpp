#pragma once
// Module data (Y, F, psi, xi), the comodule algebras A(Y,F,psi,xi) and their
// subalgebras B(Z,F,psi,xi), coaction and biGalois checks, the canonical map,
// the Loewy filtration and explicit matrix representations.

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "nichols/algebra.hpp"
#include "nichols/hopf.hpp"

namespace nichols {

struct ModuleDatum {
  RackPreset preset;
  Realization real;
  std::vector<EquivClass> classes;
  std::vector<int> Y;  // sorted rack indices
  Mask F = 1;
  GroupCocycle psi;
  std::vector<PS> xi;  // per class; R^1 classes relative to the canonical phi_C
};

// Empty xi (all zero); F given by generators in cycle notation.
ModuleDatum make_datum(const RackPreset& p, const std::vector<std::string>& Y,
                       const std::vector<std::string>& F_generators);
ModuleDatum make_datum(const RackPreset& p, const Realization& real, std::vector<int> Y, Mask F,
                       GroupCocycle psi);

// G index of e_C, or -1 for R^3 classes.
int class_element(const ModuleDatum& d, int cls);
// Relation vartheta_{C,Y}(y) - xi_C e_C in A's letters, or zero for R^3.
Poly module_relation(const ModuleDatum& d, int cls);
std::vector<Poly> module_relations(const ModuleDatum& d);
GroupCtx module_group_ctx(const ModuleDatum& d);

Report check_compatible(const ModuleDatum& d);

// Completed A(Y,F,psi,xi).  Throws if xi_C != 0 while e_C lies outside F.
Algebra build_A(const ModuleDatum& d, int degree_cap = 16);

struct BResult {
  SubalgebraBasis span;
  long long expected = 0;  // dim K_Z * |F|
};
// B(Z,F,psi,xi) inside a (nonzero, finite) A(X,F,psi,xi).
BResult build_B(Algebra& a, const ModuleDatum& d, const std::vector<int>& Z);

// Left coaction lambda : A -> H (x) A with H = B(X,q) # kG.
class Coaction {
 public:
  // flip_generator >= 0 negates the g_l (x) y_l part for that A-generator.
  Coaction(BasisAlgebra& h, BasisAlgebra& a, const ModuleDatum& d, int flip_generator = -1);
  Tensor of(const Poly& p);
  const Tensor& of_basis(int i);
  BasisAlgebra& hopf() { return h_; }
  BasisAlgebra& algebra() { return a_; }
  const ModuleDatum& datum() const { return d_; }

 private:
  BasisAlgebra& h_;
  BasisAlgebra& a_;
  const ModuleDatum& d_;
  std::vector<Tensor> gen_, grp_;
  std::map<int, Tensor> basis_;
};

// Relations, straightening and group products of A map to zero under lambda.
Report verify_coaction(Coaction& lam, const std::vector<Poly>& relations);

// rho : A(X,G,1,xi) -> A (x) H(Q);  also the scalar constraints relating xi to
// gamma and the bicomodule identity on generators.
Report bigalois_scalars(const ModuleDatum& d, const QlDatum& q);
Report verify_bigalois(Coaction& lam, BasisAlgebra& hq, const QlDatum& q,
                       const std::vector<Poly>& relations);

// Rank of can(x (x) y) = x_(-1) (x) x_(0) y over F_p on basis pairs.
Report canonical_map_rank(Coaction& lam, std::uint32_t prime);
// can(e_f (x) e_{f^-1}) = psi(f,f^-1) f (x) 1 and
// can(y_l (x) 1 - e_{g_l} (x) e_{g_l^-1} y_l) = x_l (x) 1.
Report verify_can_preimages(Coaction& lam);

// dim A_n - dim A_{n-1} for A_n = lambda^-1(H_n (x) A).
std::vector<long long> loewy_dims(Coaction& lam);

// Matrices over Q[params] for a presentation; `images` assigns a matrix to
// every generator of A (y by position, then e_f by local index).
using Matrix = std::vector<std::vector<PS>>;

struct MatrixRep {
  int dim = 0;
  std::vector<std::string> basis;
  std::map<std::string, Matrix> generators;  // "y(1 2)", "e(1 2)", ...
  std::map<std::string, std::vector<std::string>> derived;
};

MatrixRep load_matrix_rep(const nlohmann::json& j);
MatrixRep load_matrix_rep_file(const std::string& path);
Matrix mat_mul(const Matrix& a, const Matrix& b);

// Matrices for all y_l and e_f of d, derived from the given ones with
//   e_g e_h = psi(g,h) e_{gh},  y_{h.s} = e_h y_s e_{h^-1} / (chi_s(h) psi(h,h^-1)).
struct RepImages {
  std::vector<Matrix> y;  // by position in Y
  std::vector<Matrix> e;  // by local index in F
  std::vector<std::string> missing;
};
RepImages rep_images(const MatrixRep& m, const ModuleDatum& d);

// Every defining relation, straightening relation and group product of d
// evaluates to the zero matrix.
Report verify_matrix_rep(const MatrixRep& m, const ModuleDatum& d);

// Replaces the parameters of m by the given scalars.  Entries must be affine
// in the replaced parameters.
MatrixRep specialize(const MatrixRep& m, const std::map<std::string, PS>& values);

// Non-nullity of A(Y,F,psi,xi) over O_2^3: the completed algebra has 1 != 0
// and dimension dim K_Y |F|.  When Y = X with equal diagonal scalars and equal
// 3-class scalars, the matrices `m` specialized to (xi, mu) must also satisfy
// every relation.
Report nonnull_s3(const ModuleDatum& d, const MatrixRep* m);

// Datum over O_2^3 obtained by pushing d (over O_2^4, psi = 1) along
// S_4 -> S_3; throws if the pushed scalars are inconsistent.
ModuleDatum push_to_s3(const ModuleDatum& d);
// Hypotheses: equal diagonal scalars on Y and, for the constant cocycle,
// xi_C = 2 xi_i on commuting classes inside Y.  Certificate: the quotient map
// A(d) -> A(push_to_s3(d)) plus nonnull_s3 of the target.
Report nonnull_s4(const ModuleDatum& d, const MatrixRep* m);

}  // namespace nichols
