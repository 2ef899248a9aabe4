#pragma once
// Sparse exact echelon forms over Q and a modular rank routine.

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "nichols/rational.hpp"

namespace nichols {

using SparseVec = std::vector<std::pair<int, Rational>>;  // sorted by index, no zeros

SparseVec sparse_axpy(const SparseVec& a, const Rational& s, const SparseVec& b);  // a - s*b

// Incremental row echelon form; the pivot of a row is its smallest index and
// pivot entries are 1.
class Echelon {
 public:
  // Returns the reduced vector (empty iff v is in the span).
  SparseVec reduce(SparseVec v) const;
  // Inserts v if independent; returns true when the rank grew.
  bool insert(SparseVec v);
  bool contains(const SparseVec& v) const { return reduce(v).empty(); }
  int rank() const { return static_cast<int>(rows_.size()); }
  const std::map<int, SparseVec>& rows() const { return rows_; }

 private:
  std::map<int, SparseVec> rows_;
};

// Rank of a sparse matrix over F_p.  Entries are residues in [0, p).
using ModRow = std::vector<std::pair<int, std::uint32_t>>;
int modular_rank(std::vector<ModRow> rows, std::uint32_t p);

std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p);

}  // namespace nichols
