#include "nichols/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace nichols {

SparseVec sparse_axpy(const SparseVec& a, const Rational& s, const SparseVec& b) {
  SparseVec out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, -(s * b[j].second));
      ++j;
    } else {
      Rational v = a[i].second - s * b[j].second;
      if (!v.is_zero()) out.emplace_back(a[i].first, v);
      ++i;
      ++j;
    }
  }
  return out;
}

SparseVec Echelon::reduce(SparseVec v) const {
  std::size_t k = 0;
  while (k < v.size()) {
    auto it = rows_.find(v[k].first);
    if (it == rows_.end()) {
      ++k;
      continue;
    }
    // Entries before position k are untouched by this row (its pivot is its
    // smallest index), so the scan can continue from k.
    Rational s = v[k].second;
    v = sparse_axpy(v, s, it->second);
  }
  return v;
}

bool Echelon::insert(SparseVec v) {
  v = reduce(std::move(v));
  if (v.empty()) return false;
  Rational lead = v.front().second;
  if (!lead.is_one())
    for (auto& e : v) e.second /= lead;
  rows_[v.front().first] = std::move(v);
  return true;
}

std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p) {
  std::uint64_t r = 1, b = a % p, e = p - 2;
  if (b == 0) throw std::domain_error("mod_inverse of zero");
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

int modular_rank(std::vector<ModRow> rows, std::uint32_t p) {
  // Pivot on the smallest column of each row; rows are reduced against the
  // stored pivots one at a time.
  std::map<int, ModRow> piv;
  std::vector<std::uint64_t> dense;
  int maxcol = 0;
  for (const auto& r : rows)
    for (const auto& e : r) maxcol = std::max(maxcol, e.first + 1);
  dense.assign(maxcol, 0);
  std::vector<char> touched(maxcol, 0);
  std::vector<int> idx;
  int rank = 0;
  for (auto& r : rows) {
    idx.clear();
    for (const auto& [c, v] : r) {
      if (!touched[c]) {
        touched[c] = 1;
        idx.push_back(c);
      }
      dense[c] = (dense[c] + v) % p;
    }
    std::make_heap(idx.begin(), idx.end(), std::greater<int>());
    ModRow out;
    while (!idx.empty()) {
      std::pop_heap(idx.begin(), idx.end(), std::greater<int>());
      int c = idx.back();
      idx.pop_back();
      touched[c] = 0;
      std::uint64_t v = dense[c];
      dense[c] = 0;
      if (v == 0) continue;
      auto it = piv.find(c);
      if (it == piv.end()) {
        out.emplace_back(c, static_cast<std::uint32_t>(v));
        continue;
      }
      // subtract v * pivot row (pivot entry 1)
      for (std::size_t k = 1; k < it->second.size(); ++k) {
        int cc = it->second[k].first;
        if (!touched[cc]) {
          touched[cc] = 1;
          idx.push_back(cc);
          std::push_heap(idx.begin(), idx.end(), std::greater<int>());
        }
        dense[cc] = (dense[cc] + (p - v) * it->second[k].second) % p;
      }
    }
    if (out.empty()) continue;
    std::uint64_t inv = mod_inverse(out.front().second, p);
    for (auto& e : out) e.second = static_cast<std::uint32_t>(e.second * inv % p);
    piv[out.front().first] = std::move(out);
    ++rank;
  }
  return rank;
}

}  // namespace nichols
