#pragma once
// Algebras presented by generators y_l and group elements e_f of a subgroup F,
// completed by the rewriting engine: quadratic Nichols algebras, their
// bosonizations, coideal subalgebras K_Y and the presentations L_Y.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nichols/grp.hpp"
#include "nichols/linalg.hpp"
#include "nichols/ncpoly.hpp"
#include "nichols/rack.hpp"
#include "nichols/report.hpp"

namespace nichols {

struct Algebra {
  std::vector<std::string> gens;  // generator labels
  std::vector<int> gen_elems;     // rack index of each generator
  std::vector<int> group_elems;   // local group index -> index in G
  std::vector<Poly> relations;    // letters are generator positions
  RewriteSystem rs;
  CompletionStatus status;

  long long dim() { return rs.dimension(); }
  bool zero() const { return status.zero_algebra; }
  Poly y(int pos) const { return Poly::monomial(Word(1, static_cast<char>(pos))); }
  Poly e(int local) const { return Poly::scalar(PS(1), local); }
  int local_group(int g) const;  // -1 if g is not in F
  int gen_pos(int rack_index) const;
  Poly mul(const Poly& a, const Poly& b) { return rs.mul(a, b); }
  Poly nf(const Poly& p) { return rs.nf(p); }
  std::vector<std::string> group_labels() const { return rs.group().labels; }
  std::string show(const Poly& p) const { return to_string(p, gens, rs.group().labels); }
  // Coordinates over Q (throws on parameters).
  SparseVec vec(const Poly& p);
};

// Letters of p are rack indices; the result uses positions in `gens`.
Poly relabel(const Poly& p, const std::vector<int>& gens);

GroupCtx make_group_ctx(const Realization& real, Mask f, const GroupCocycle& psi,
                        const std::vector<int>& gens);

Algebra make_algebra(const Rack& r, const std::vector<int>& gens, GroupCtx ctx,
                     std::vector<Poly> relations, int degree_cap = 16);

// Relations phi_C for C in R'.
std::vector<Poly> nichols_relations(const Rack& r, const RackCocycle& q);
Algebra nichols_quadratic(const Rack& r, const RackCocycle& q, int degree_cap = 16);
// B (relations in rack letters over `gens`) smashed with k_psi F.
Algebra bosonize(const Rack& r, const std::vector<Poly>& rack_relations,
                 const std::vector<int>& gens, const Realization& real, Mask f,
                 const GroupCocycle& psi, int degree_cap = 16);

struct SubalgebraBasis {
  long long dim = 0;
  std::vector<int> by_level;  // new dimensions after 0, 1, 2, ... generator factors
  Echelon span;
  std::vector<Poly> elements;  // the inserted spanning elements, in order
};

SubalgebraBasis subalgebra_closure(Algebra& amb, const std::vector<Poly>& generators);
bool in_span(Algebra& amb, const SubalgebraBasis& sb, const Poly& p);
// Two-sided ideal generated by `elems`.
Echelon ideal_closure(Algebra& amb, const std::vector<Poly>& elems);

// K_Y inside the quadratic Nichols algebra on X.
SubalgebraBasis coideal_KY(Algebra& bx, const std::vector<int>& Y);

// Relations vartheta_{C,Y} over Y (letters are positions in Y).
std::vector<Poly> ly_relations(const Rack& r, const RackCocycle& q, const std::vector<int>& Y);
Algebra build_LY(const Rack& r, const RackCocycle& q, const std::vector<int>& Y,
                 int degree_cap = 16);

struct CoidealRow {
  std::vector<int> Y;  // orbit representative
  int orbit_size = 0;
  long long dim = 0;
  std::vector<int> hilbert;
  Mask stabilizer = 0;
  std::string item;  // catalog item, "" if none
};

struct CoidealTable {
  std::vector<CoidealRow> rows;  // nonempty proper Y up to conjugation, by |Y| then Y
  std::map<std::vector<int>, long long> dims;  // every subset
  long long total = 0;                          // dim of the Nichols algebra
};

CoidealTable coideal_table(const RackPreset& p, const Realization& real);

// Catalog data for the O_2^4 items (1)-(9) and the O_2^3 items.
struct CatalogItem {
  std::string item;
  std::vector<std::string> Y;  // example subset, cycle notation
  long long dim;
  std::string stabilizer;  // structural name as printed, "" if not listed
  std::vector<std::string> letters;
  std::string relations;  // "$eps" stands for the sign epsilon
};
const std::vector<CatalogItem>& o24_catalog();
const std::vector<CatalogItem>& o23_catalog();

// Searches an assignment letter -> +-y_j (j in Y) under which all relations
// vanish in bx, then compares the dimension of the presented algebra with
// dim K_Y.
Report check_presentation(Algebra& bx, const Rack& r, const std::vector<int>& Y,
                          const std::vector<std::string>& letters,
                          const std::vector<Poly>& relations, long long expected_dim = -1);

// Images: for every source generator a target element, and for every source
// group element (local index) a target element.  Checks that every source
// relation, every straightening relation and every group product relation
// maps into the ideal generated by `extra`.
Report quotient_map_check(Algebra& src, Algebra& tgt, const std::vector<Poly>& gen_images,
                          const std::vector<Poly>& group_images, const std::vector<Poly>& extra);

// Substitutes letters by target polynomials and multiplies in the target.
Poly evaluate(Algebra& tgt, const Poly& p, const std::vector<Poly>& gen_images,
              const std::vector<Poly>& group_images);

}  // namespace nichols
