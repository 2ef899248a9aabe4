#pragma once
// Enumeration of the data (Y, F, psi, xi) up to conjugation, solution spaces
// of the compatibility conditions, and the duality of coideal dimensions.

#include <string>
#include <vector>

#include <json.hpp>

#include "nichols/comodule.hpp"

namespace nichols {

// Compatible families xi as the null space of the linear conditions.
// Every vector lists one value per class (canonical normalization).
struct XiSpace {
  std::vector<int> support;  // classes that are not forced to vanish
  std::vector<std::vector<Rational>> basis;
  int free() const { return static_cast<int>(basis.size()); }
};

XiSpace xi_solution_space(const ModuleDatum& shape);
// xi = sum_k p_k basis[k] with symbolic p_k named by `names` (or "p0", "p1", ...).
ModuleDatum generic_datum(const ModuleDatum& shape, const XiSpace& space,
                          const std::vector<std::string>& names = {});
ModuleDatum sample_datum(const ModuleDatum& shape, const XiSpace& space,
                         const std::vector<Rational>& values);

// (h.Y, h F h^-1, psi^h, xi^h), with xi^h rescaled so that the algebra map
// e_f -> e_{hfh^-1}, y_l -> chi_l(h) y_{h.l} carries relations to relations.
ModuleDatum conjugate_datum(int h, const ModuleDatum& d);

// Comparable key of (Y, F, psi class).
struct ShapeKey {
  std::vector<int> Y;
  std::vector<int> F;  // sorted members
  int psi_class = 0;   // 0 trivial, 1 the nontrivial class
  friend auto operator<=>(const ShapeKey&, const ShapeKey&) = default;
};

struct DatumOrbit {
  ModuleDatum rep;  // lexicographically least shape in the orbit; xi generic
  ShapeKey key;
  int orbit_size = 0;
  XiSpace xi;
  std::string catalog;  // S_3 catalog item, "" otherwise
};

// All (Y, F, psi) with F.Y = Y, psi up to cohomology; orbits under G.
std::vector<DatumOrbit> enumerate_data(const RackPreset& p);

// Catalog item for data over O_2^3 with the constant cocycle: 1..9.
std::string s3_catalog_item(const ModuleDatum& d);

nlohmann::ordered_json orbit_to_json(const DatumOrbit& o);

// The S_3 families as printed: |Y|, F up to isomorphism ("any" for item 1),
// degrees of the defining relations in the y's, number of free scalars.
struct S3Family {
  std::string item;
  int y_size;
  std::string F;
  std::vector<int> degrees;
  int free;
};
const std::vector<S3Family>& s3_families();

// Groups the orbits by catalog item and compares F, relation degrees and
// free scalars with s3_families().
Report compare_s3_families(const std::vector<DatumOrbit>& orbits);

// For every orbit, a sampled xi and every h in G: d^h is compatible, lies
// in the same orbit and e_f -> e_{hfh^-1}, y_l -> chi_l(h) y_{h.l} maps
// A(d) onto A(d^h).
Report exhaustive_orbit_check(const std::vector<DatumOrbit>& orbits);

// dim K_Y dim K_{X \ Y} = dim B(X,q) for every Y.
Report duality_check(const RackPreset& p);

}  // namespace nichols
