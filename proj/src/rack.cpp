#include "nichols/rack.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace nichols {

int Rack::index(const std::string& label) const {
  for (int i = 0; i < size(); ++i)
    if (labels[i] == label) return i;
  if (degree > 0) {
    try {
      Perm p = Perm::parse(label, degree);
      for (int i = 0; i < size(); ++i)
        if (perms[i] == p) return i;
    } catch (const std::invalid_argument&) {
    }
  }
  return -1;
}

bool EquivClass::contains(int i, int j) const {
  return std::find(pairs.begin(), pairs.end(), std::make_pair(i, j)) != pairs.end();
}

Report check_rack(const std::vector<std::string>& elements, const std::vector<int>& op) {
  Report rep("rack axioms");
  const int n = static_cast<int>(elements.size());
  if (static_cast<int>(op.size()) != n * n) {
    rep.fail("operation table has " + std::to_string(op.size()) + " entries, expected " +
             std::to_string(n * n));
    return rep;
  }
  for (int v : op)
    if (v < 0 || v >= n) {
      rep.fail("operation value out of range");
      return rep;
    }
  auto t = [&](int i, int j) { return op[i * n + j]; };
  for (int i = 0; i < n; ++i) {
    std::vector<bool> hit(n, false);
    for (int j = 0; j < n; ++j) hit[t(i, j)] = true;
    if (std::find(hit.begin(), hit.end(), false) != hit.end())
      rep.fail("left translation by " + elements[i] + " is not a bijection");
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (t(i, t(j, k)) != t(t(i, j), t(i, k)))
          rep.fail("self-distributivity fails at (" + elements[i] + ", " + elements[j] + ", " +
                   elements[k] + ")");
  return rep;
}

Rack conjugation_rack(int n, const std::string& selector) {
  if (n < 2 || n > 6) throw std::invalid_argument("conjugation rack: n out of range");
  PermGroup sn = PermGroup::symmetric(n);
  std::vector<Perm> els;
  for (const auto& p : sn.elements()) {
    std::string s = p.str();
    int cycles = static_cast<int>(std::count(s.begin(), s.end(), '('));
    int moved = 0;
    for (int i = 0; i < n; ++i) moved += p.img[i] != i;
    if (selector == "o2") {
      if (cycles == 1 && moved == 2) els.push_back(p);
    } else if (selector == "o4") {
      if (n != 4) throw std::invalid_argument("the 4-cycle rack requires n = 4");
      if (cycles == 1 && moved == 4) els.push_back(p);
    } else {
      throw std::invalid_argument("unknown class selector '" + selector + "'");
    }
  }
  std::sort(els.begin(), els.end(), [](const Perm& a, const Perm& b) { return a.str() < b.str(); });
  Rack r;
  r.degree = n;
  r.perms = els;
  for (const auto& p : els) r.labels.push_back(p.str());
  const int m = r.size();
  r.op.assign(m * m, -1);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      Perm c = els[i] * els[j] * els[i].inverse();
      for (int k = 0; k < m; ++k)
        if (els[k] == c) r.op[i * m + j] = k;
    }
  return r;
}

Report check_cocycle(const Rack& r, const RackCocycle& q) {
  Report rep("rack 2-cocycle");
  const int n = r.size();
  if (q.n != n || static_cast<int>(q.q.size()) != n * n) {
    rep.fail("cocycle table has wrong shape");
    return rep;
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (q.at(i, j).is_zero()) rep.fail("q(" + r.labels[i] + ", " + r.labels[j] + ") = 0");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        Rational lhs = q.at(i, r.tri(j, k)) * q.at(j, k);
        Rational rhs = q.at(r.tri(i, j), r.tri(i, k)) * q.at(i, k);
        if (lhs != rhs)
          rep.fail("cocycle identity fails at (" + r.labels[i] + ", " + r.labels[j] + ", " +
                   r.labels[k] + "): " + lhs.str() + " != " + rhs.str());
      }
  return rep;
}

RackCocycle constant_cocycle(const Rack& r, const Rational& v) {
  RackCocycle q;
  q.n = r.size();
  q.q.assign(q.n * q.n, v);
  return q;
}

RackCocycle chi_cocycle(const Rack& r) {
  if (r.degree == 0) throw std::invalid_argument("chi cocycle needs a conjugation rack");
  RackCocycle q;
  q.n = r.size();
  q.q.assign(q.n * q.n, Rational(1));
  for (int i = 0; i < q.n; ++i) {
    const Perm& t = r.perms[i];
    int a = -1, b = -1;
    for (int x = 0; x < r.degree; ++x)
      if (t.img[x] != x) (a < 0 ? a : b) = x;
    if (b < 0 || t.order() != 2) throw std::invalid_argument("chi cocycle needs transpositions");
    for (int j = 0; j < q.n; ++j) {
      const Perm& s = r.perms[j];
      q.at(j, i) = s.img[a] < s.img[b] ? Rational(1) : Rational(-1);
    }
  }
  return q;
}

std::vector<EquivClass> enumerate_classes(const Rack& r) {
  const int n = r.size();
  std::vector<int> seen(n * n, -1);
  std::vector<EquivClass> out;
  // Pairs are visited in lexicographic order, so the first unseen pair is the
  // least element of its class and becomes (i_2, i_1).
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (seen[i * n + j] >= 0) continue;
      EquivClass c;
      int a = j, b = i;  // i_1, i_2
      c.cycle.push_back(a);
      int cur_i = i, cur_j = j;
      for (;;) {
        seen[cur_i * n + cur_j] = static_cast<int>(out.size());
        c.pairs.emplace_back(cur_i, cur_j);
        int ni = r.tri(cur_i, cur_j), nj = cur_i;
        if (ni == i && nj == j) break;
        c.cycle.push_back(nj);
        cur_i = ni;
        cur_j = nj;
      }
      (void)b;
      out.push_back(std::move(c));
    }
  return out;
}

std::vector<int> classes_prime(const Rack& r, const RackCocycle& q,
                               const std::vector<EquivClass>& classes) {
  (void)r;
  std::vector<int> keep;
  for (int k = 0; k < static_cast<int>(classes.size()); ++k) {
    const auto& c = classes[k];
    Rational prod = 1;
    for (const auto& [a, b] : c.pairs) prod *= q.at(a, b);
    Rational target = c.size() % 2 ? Rational(-1) : Rational(1);
    if (prod == target) keep.push_back(k);
  }
  return keep;
}

int class_of(const std::vector<EquivClass>& classes, int i, int j) {
  for (int k = 0; k < static_cast<int>(classes.size()); ++k)
    if (classes[k].contains(i, j)) return k;
  return -1;
}

Poly phi_C(const EquivClass& c, const RackCocycle& q) {
  std::vector<Term> ts;
  Rational eta = 1;
  const int n = c.size();
  for (int h = 0; h < n; ++h) {
    // pairs[h] = (i_{h+2}, i_{h+1}) in one-based naming.
    if (h > 0) eta = -eta * q.at(c.pairs[h - 1].first, c.pairs[h - 1].second);
    Word w;
    w.push_back(static_cast<char>(c.pairs[h].first));
    w.push_back(static_cast<char>(c.pairs[h].second));
    ts.push_back(Term{w, 0, PS(eta)});
  }
  Rational total = 1;
  for (const auto& [a, b] : c.pairs) total *= q.at(a, b);
  if (total != (n % 2 ? Rational(-1) : Rational(1)))
    throw std::invalid_argument("phi_C: class not in R'");
  return Poly::from_terms(std::move(ts));
}

YPartitionTag tag_class(const EquivClass& c, const std::vector<int>& Y) {
  std::set<int> ys(Y.begin(), Y.end());
  int inside = 0;
  YPartitionTag t;
  for (const auto& [a, b] : c.pairs)
    if (ys.count(a) && ys.count(b)) {
      ++inside;
      t.i = a;
      t.j = b;
    }
  if (inside == c.size())
    t.tag = YTag::R1;
  else if (inside == 1)
    t.tag = YTag::R2;
  else if (inside == 0)
    t.tag = YTag::R3;
  else
    throw std::logic_error("class meets Y x Y in an unexpected number of pairs");
  if (t.tag != YTag::R2) t.i = t.j = -1;
  return t;
}

Poly vartheta_CY(const EquivClass& c, const std::vector<int>& Y, const RackCocycle& q,
                 const Rack& r) {
  YPartitionTag t = tag_class(c, Y);
  if (t.tag == YTag::R1) return phi_C(c, q);
  if (t.tag == YTag::R3) return Poly();
  const int i = t.i, j = t.j;
  Word a{static_cast<char>(i), static_cast<char>(j), static_cast<char>(i)};
  Word b{static_cast<char>(j), static_cast<char>(i), static_cast<char>(j)};
  return Poly::from_terms({Term{a, 0, PS(1)}, Term{b, 0, PS(q.at(r.tri(i, j), i))}});
}

RackPreset rack_preset(const std::string& name, const std::string& cocycle) {
  RackPreset p;
  p.name = name;
  p.cocycle = cocycle;
  if (name == "o2_3")
    p.rack = conjugation_rack(3, "o2");
  else if (name == "o2_4")
    p.rack = conjugation_rack(4, "o2");
  else if (name == "o4_4")
    p.rack = conjugation_rack(4, "o4");
  else
    throw std::invalid_argument("unknown rack preset '" + name + "'");
  if (cocycle == "minus")
    p.q = constant_cocycle(p.rack, Rational(-1));
  else if (cocycle == "chi") {
    if (name == "o4_4") throw std::invalid_argument("the chi cocycle is defined on transpositions");
    p.q = chi_cocycle(p.rack);
  } else
    throw std::invalid_argument("unknown cocycle '" + cocycle + "'");
  return p;
}

nlohmann::ordered_json rack_to_json(const Rack& r, const RackCocycle& q) {
  nlohmann::ordered_json j;
  j["elements"] = r.labels;
  auto op = nlohmann::ordered_json::array();
  auto qq = nlohmann::ordered_json::array();
  for (int a = 0; a < r.size(); ++a) {
    auto row = nlohmann::ordered_json::array();
    auto qrow = nlohmann::ordered_json::array();
    for (int b = 0; b < r.size(); ++b) {
      row.push_back(r.tri(a, b));
      const Rational& v = q.at(a, b);
      if (v.is_integer())
        qrow.push_back(v.num());
      else
        qrow.push_back(v.str());
    }
    op.push_back(row);
    qq.push_back(qrow);
  }
  j["op"] = op;
  j["q"] = qq;
  return j;
}

std::pair<Rack, RackCocycle> rack_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("elements") || !j.contains("op"))
    throw std::invalid_argument("rack json needs \"elements\" and \"op\"");
  Rack r;
  for (const auto& e : j.at("elements")) r.labels.push_back(e.get<std::string>());
  const int n = r.size();
  const auto& op = j.at("op");
  if (!op.is_array() || static_cast<int>(op.size()) != n)
    throw std::invalid_argument("rack json: op must be an n x n table");
  r.op.assign(n * n, -1);
  for (int a = 0; a < n; ++a) {
    if (!op[a].is_array() || static_cast<int>(op[a].size()) != n)
      throw std::invalid_argument("rack json: op must be an n x n table");
    for (int b = 0; b < n; ++b) {
      const auto& v = op[a][b];
      int k = -1;
      if (v.is_number_integer()) {
        k = v.get<int>();
      } else if (v.is_string()) {
        k = r.index(v.get<std::string>());
      }
      if (k < 0 || k >= n) throw std::invalid_argument("rack json: bad op entry");
      r.op[a * n + b] = k;
    }
  }
  RackCocycle q = constant_cocycle(r, Rational(-1));
  if (j.contains("q")) {
    const auto& qq = j.at("q");
    if (!qq.is_array() || static_cast<int>(qq.size()) != n)
      throw std::invalid_argument("rack json: q must be an n x n table");
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        const auto& v = qq[a].at(b);
        q.at(a, b) = v.is_string() ? Rational::parse(v.get<std::string>())
                                   : Rational(v.get<long long>());
      }
  }
  return {r, q};
}

std::string class_label(const EquivClass& c, const Rack& r) {
  std::string s = "[";
  for (std::size_t h = 0; h < c.cycle.size(); ++h) {
    if (h) s += ", ";
    s += r.labels[c.cycle[h]];
  }
  return s + "]";
}

}  // namespace nichols
