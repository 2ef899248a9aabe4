#include "nichols/ncpoly.hpp"

#include <algorithm>
#include <cctype>
#include <queue>
#include <sstream>

namespace nichols {

bool deglex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    auto x = static_cast<unsigned char>(a[i]), y = static_cast<unsigned char>(b[i]);
    if (x != y) return x < y;
  }
  return false;
}

namespace {

bool term_before(const Term& a, const Term& b) {
  if (a.w != b.w) return deglex_less(b.w, a.w);
  return a.g < b.g;
}

}  // namespace

// ---------------------------------------------------------------- Poly

Poly Poly::monomial(const Word& w, int g, const PS& c) {
  Poly p;
  if (!c.is_zero()) p.t_.push_back(Term{w, g, c});
  return p;
}

Poly Poly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), term_before);
  Poly p;
  for (auto& t : terms) {
    if (!p.t_.empty() && p.t_.back().w == t.w && p.t_.back().g == t.g) {
      p.t_.back().c += t.c;
      if (p.t_.back().c.is_zero()) p.t_.pop_back();
    } else if (!t.c.is_zero()) {
      p.t_.push_back(std::move(t));
    }
  }
  return p;
}

int Poly::min_degree() const {
  int m = -1;
  for (const auto& t : t_)
    if (m < 0 || static_cast<int>(t.w.size()) < m) m = static_cast<int>(t.w.size());
  return m;
}

bool Poly::homogeneous() const {
  return t_.empty() || min_degree() == max_degree();
}

bool Poly::group_free() const {
  for (const auto& t : t_)
    if (t.g != 0) return false;
  return true;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& t : r.t_) t.c = -t.c;
  return r;
}

Poly operator+(const Poly& a, const Poly& b) {
  Poly r;
  r.t_.reserve(a.t_.size() + b.t_.size());
  std::size_t i = 0, j = 0;
  while (i < a.t_.size() || j < b.t_.size()) {
    if (j == b.t_.size() || (i < a.t_.size() && term_before(a.t_[i], b.t_[j]))) {
      r.t_.push_back(a.t_[i++]);
    } else if (i == a.t_.size() || term_before(b.t_[j], a.t_[i])) {
      r.t_.push_back(b.t_[j++]);
    } else {
      PS c = a.t_[i].c + b.t_[j].c;
      if (!c.is_zero()) r.t_.push_back(Term{a.t_[i].w, a.t_[i].g, c});
      ++i;
      ++j;
    }
  }
  return r;
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly Poly::scaled(const PS& s) const {
  if (s.is_zero()) return Poly();
  Poly r;
  for (const auto& t : t_) {
    PS c = t.c * s;
    if (!c.is_zero()) r.t_.push_back(Term{t.w, t.g, c});
  }
  return r;
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.t_.size() != b.t_.size()) return false;
  for (std::size_t i = 0; i < a.t_.size(); ++i)
    if (a.t_[i].w != b.t_[i].w || a.t_[i].g != b.t_[i].g || a.t_[i].c != b.t_[i].c) return false;
  return true;
}

PS Poly::coeff(const Word& w, int g) const {
  for (const auto& t : t_)
    if (t.w == w && t.g == g) return t.c;
  return PS();
}

Poly Poly::substitute(const std::map<std::string, Rational>& vals) const {
  std::vector<Term> out;
  for (const auto& t : t_) out.push_back(Term{t.w, t.g, t.c.substitute(vals)});
  return from_terms(std::move(out));
}

std::vector<std::string> Poly::parameters() const {
  std::vector<std::string> out;
  for (const auto& t : t_)
    for (auto& n : t.c.parameters()) out.push_back(n);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Poly free_mul(const Poly& a, const Poly& b) {
  std::vector<Term> out;
  for (const auto& x : a.terms())
    for (const auto& y : b.terms()) {
      if (x.g != 0 || y.g != 0) throw std::invalid_argument("free_mul: group parts present");
      out.push_back(Term{x.w + y.w, 0, x.c * y.c});
    }
  return Poly::from_terms(std::move(out));
}

// ---------------------------------------------------------------- GroupCtx

GroupCtx GroupCtx::trivial(int ngen) {
  GroupCtx c;
  c.ngen = ngen;
  c.act.resize(ngen);
  for (int l = 0; l < ngen; ++l) c.act[l] = static_cast<std::uint8_t>(l);
  c.chi.assign(ngen, Rational(1));
  return c;
}

// ---------------------------------------------------------------- RewriteSystem

RewriteSystem::RewriteSystem(int ngen, GroupCtx ctx) : ngen_(ngen), ctx_(std::move(ctx)) {
  if (ngen_ > 250) throw std::invalid_argument("too many generators");
  if (ctx_.ngen != ngen_) throw std::invalid_argument("group context arity mismatch");
}

std::string RewriteSystem::key(const Word& w, int g) {
  std::string k = w;
  k.push_back(static_cast<char>(0xFF));
  k.push_back(static_cast<char>(g));
  return k;
}

int RewriteSystem::Basis::find(const Word& w, int g) const {
  auto it = index.find(key(w, g));
  return it == index.end() ? -1 : it->second;
}

std::optional<int> RewriteSystem::rule_for_suffix(const Word& v) const {
  for (const auto& [len, cnt] : lead_lengths_) {
    if (cnt <= 0) continue;
    if (static_cast<std::size_t>(len) > v.size()) break;
    auto it = lead_index_.find(v.substr(v.size() - len));
    if (it != lead_index_.end()) return it->second;
  }
  return std::nullopt;
}

bool RewriteSystem::reducible(const Word& v) const {
  for (std::size_t s = 0; s < v.size(); ++s)
    if (rule_for_suffix(v.substr(0, s + 1))) return true;
  return v.empty() && st_.zero_algebra;
}

Poly RewriteSystem::right_group(const Poly& p, int g) const {
  if (g == 0) return p;
  std::vector<Term> out;
  out.reserve(p.terms().size());
  for (const auto& t : p.terms())
    out.push_back(Term{t.w, ctx_.m(t.g, g), t.c.scaled(ctx_.ps(t.g, g))});
  return Poly::from_terms(std::move(out));
}

Poly RewriteSystem::right_word(const Poly& p, const Word& c) const {
  std::vector<Term> out;
  for (const auto& t : p.terms()) {
    Word w = t.w;
    Rational f = 1;
    for (char ch : c) {
      int l = static_cast<unsigned char>(ch);
      f *= ctx_.x(t.g, l);
      w.push_back(static_cast<char>(ctx_.a(t.g, l)));
    }
    out.push_back(Term{w, t.g, t.c.scaled(f)});
  }
  return Poly::from_terms(std::move(out));
}

Poly RewriteSystem::left_word(const Word& a, const Poly& p) const {
  std::vector<Term> out;
  for (const auto& t : p.terms()) out.push_back(Term{a + t.w, t.g, t.c});
  return Poly::from_terms(std::move(out));
}

Poly RewriteSystem::conj_relation(int g, const Poly& p) {
  std::vector<Term> out;
  int gi = ctx_.inv[g];
  for (const auto& t : p.terms()) {
    Word w;
    Rational f = 1;
    for (char ch : t.w) {
      int l = static_cast<unsigned char>(ch);
      f *= ctx_.x(g, l);
      w.push_back(static_cast<char>(ctx_.a(g, l)));
    }
    int gh = ctx_.m(g, t.g);
    f *= ctx_.ps(g, t.g) * ctx_.ps(gh, gi);
    out.push_back(Term{w, ctx_.m(gh, gi), t.c.scaled(f)});
  }
  return Poly::from_terms(std::move(out));
}

Poly RewriteSystem::left_group(int g, const Poly& p) {
  Poly out;
  for (const auto& t : p.terms()) {
    Word w;
    Rational f = 1;
    for (char ch : t.w) {
      int l = static_cast<unsigned char>(ch);
      f *= ctx_.x(g, l);
      w.push_back(static_cast<char>(ctx_.a(g, l)));
    }
    f *= ctx_.ps(g, t.g);
    out = out + right_group(nf_word(w), ctx_.m(g, t.g)).scaled(t.c.scaled(f));
  }
  return out;
}

Poly RewriteSystem::times_letter_normal(const Word& u, int letter) {
  Word v = u;
  v.push_back(static_cast<char>(letter));
  if (auto it = memo_.find(v); it != memo_.end()) return it->second;
  Poly res;
  auto r = rule_for_suffix(v);
  if (!r) {
    res = Poly::monomial(v);
  } else {
    const Rule& rule = rules_[*r];
    Word a = v.substr(0, v.size() - rule.lead.size());
    std::vector<Term> acc;
    Poly rhs = rule.rhs;  // copy: recursion may grow rules_? no, but memo may rehash
    for (const auto& t : rhs.terms()) {
      Poly part = right_group(nf_word(a + t.w), t.g);
      for (const auto& s : part.terms()) acc.push_back(Term{s.w, s.g, s.c * t.c});
    }
    res = Poly::from_terms(std::move(acc));
  }
  memo_[v] = res;
  return res;
}

Poly RewriteSystem::nf_word(const Word& w) {
  if (st_.zero_algebra) return Poly();
  if (w.empty()) return Poly::monomial(Word());
  if (auto it = memo_.find(w); it != memo_.end()) return it->second;
  Poly pre = nf_word(w.substr(0, w.size() - 1));
  int x = static_cast<unsigned char>(w.back());
  std::vector<Term> acc;
  for (const auto& t : pre.terms()) {
    int l2 = ctx_.a(t.g, x);
    PS c = t.c.scaled(ctx_.x(t.g, x));
    Poly e = right_group(times_letter_normal(t.w, l2), t.g);
    for (const auto& s : e.terms()) acc.push_back(Term{s.w, s.g, s.c * c});
  }
  Poly res = Poly::from_terms(std::move(acc));
  memo_[w] = res;
  return res;
}

Poly RewriteSystem::nf(const Poly& p) {
  if (st_.zero_algebra) return Poly();
  std::vector<Term> acc;
  for (const auto& t : p.terms()) {
    Poly e = right_group(nf_word(t.w), t.g);
    for (const auto& s : e.terms()) acc.push_back(Term{s.w, s.g, s.c * t.c});
  }
  Poly r = Poly::from_terms(std::move(acc));
  if (!quotient_rows_.empty()) r = reduce_quotient(r);
  return r;
}

Poly RewriteSystem::mul(const Poly& a, const Poly& b) {
  std::vector<Term> acc;
  for (const auto& x : a.terms())
    for (const auto& y : b.terms()) {
      Word w = x.w;
      Rational f = ctx_.ps(x.g, y.g);
      for (char ch : y.w) {
        int l = static_cast<unsigned char>(ch);
        f *= ctx_.x(x.g, l);
        w.push_back(static_cast<char>(ctx_.a(x.g, l)));
      }
      acc.push_back(Term{w, ctx_.m(x.g, y.g), (x.c * y.c).scaled(f)});
    }
  return nf(Poly::from_terms(std::move(acc)));
}

void RewriteSystem::push_overlaps(int r) {
  const Word& lr = rules_[r].lead;
  auto push = [&](int a, int b, std::size_t k, std::size_t deg) {
    heap_.push_back(Item{static_cast<int>(deg), seq_++, a, b, static_cast<int>(k), Poly()});
    std::push_heap(heap_.begin(), heap_.end(), ItemCmp());
  };
  for (int s = 0; s < static_cast<int>(rules_.size()); ++s) {
    if (!rules_[s].active) continue;
    const Word& ls = rules_[s].lead;
    std::size_t mx = std::min(lr.size(), ls.size());
    for (std::size_t k = 1; k < mx; ++k) {
      if (lr.compare(lr.size() - k, k, ls, 0, k) == 0) push(r, s, k, lr.size() + ls.size() - k);
      if (s != r && ls.compare(ls.size() - k, k, lr, 0, k) == 0)
        push(s, r, k, lr.size() + ls.size() - k);
    }
  }
}

void RewriteSystem::add_rule(const Word& lead, Poly rhs) {
  memo_.clear();
  basis_ready_ = false;
  for (int r = 0; r < static_cast<int>(rules_.size()); ++r) {
    Rule& old = rules_[r];
    if (!old.active || old.lead.find(lead) == Word::npos) continue;
    old.active = false;
    lead_index_.erase(old.lead);
    lead_lengths_[static_cast<int>(old.lead.size())]--;
    Poly back = Poly::monomial(old.lead) - old.rhs;
    heap_.push_back(Item{static_cast<int>(old.lead.size()), seq_++, -1, -1, 0, back});
    std::push_heap(heap_.begin(), heap_.end(), ItemCmp());
  }
  rules_.push_back(Rule{lead, std::move(rhs), true});
  int idx = static_cast<int>(rules_.size()) - 1;
  lead_index_[lead] = idx;
  lead_lengths_[static_cast<int>(lead.size())]++;
  if (lead.empty()) st_.zero_algebra = true;
  push_overlaps(idx);
  for (auto& e : extras_) {
    heap_.push_back(Item{e.max_degree(), seq_++, -1, -1, 0, e});
    std::push_heap(heap_.begin(), heap_.end(), ItemCmp());
  }
  extras_.clear();
}

void RewriteSystem::add_element(Poly p) {
  const Word w = p.lead().w;
  std::vector<const Term*> top;
  for (const auto& t : p.terms())
    if (t.w == w) top.push_back(&t);
  if (top.size() == 1) {
    const Term& t = *top[0];
    if (!t.c.is_nonzero_constant())
      throw NonUnitLead("leading coefficient " + t.c.str() + " is not a unit", t.c);
    int gi = ctx_.inv[t.g];
    Rational s = (t.c.constant() * ctx_.ps(t.g, gi)).inv();
    Poly q = right_group(p, gi).scaled(PS(s));
    Poly rhs = Poly::monomial(w) - q;
    add_rule(w, std::move(rhs));
    return;
  }
  extras_.push_back(std::move(p));
  try_resolve_extras();
}

bool RewriteSystem::try_resolve_extras() {
  // Group the pending elements by leading word; the right kF-span of their
  // leading parts either is all of kF (then a monic rule exists) or not.
  std::map<Word, std::vector<Poly>> by_lead;
  for (const auto& e : extras_) by_lead[e.lead().w].push_back(e);
  for (auto& [w, ps] : by_lead) {
    std::vector<Poly> rows;
    for (const auto& p : ps)
      for (int h = 0; h < ctx_.order; ++h) rows.push_back(right_group(p, h));
    // Gauss-Jordan on coordinates (w, g).
    std::vector<Poly> ech;
    std::vector<int> piv;
    for (auto row : rows) {
      for (std::size_t k = 0; k < ech.size(); ++k) {
        PS c = row.coeff(w, piv[k]);
        if (!c.is_zero()) row = row - ech[k].scaled(c);
      }
      int pg = -1;
      PS pc;
      for (const auto& t : row.terms())
        if (t.w == w) {
          pg = t.g;
          pc = t.c;
          break;
        }
      if (pg < 0) continue;
      if (!pc.is_nonzero_constant()) return false;  // parametric: leave pending
      row = row.scaled(PS(pc.constant().inv()));
      for (std::size_t k = 0; k < ech.size(); ++k) {
        PS c = ech[k].coeff(w, pg);
        if (!c.is_zero()) ech[k] = ech[k] - row.scaled(c);
      }
      ech.push_back(row);
      piv.push_back(pg);
    }
    if (static_cast<int>(ech.size()) == ctx_.order) {
      for (std::size_t k = 0; k < ech.size(); ++k)
        if (piv[k] == 0) {
          Poly monic = ech[k];
          add_element(monic);  // requeues the remaining extras
          return true;
        }
    }
  }
  return false;
}

std::vector<std::vector<Word>> RewriteSystem::normal_words(int max_degree) const {
  std::vector<std::vector<Word>> out;
  if (st_.zero_algebra) return out;
  out.push_back({Word()});
  for (int d = 1; d <= max_degree; ++d) {
    std::vector<Word> next;
    for (const auto& u : out.back())
      for (int l = 0; l < ngen_; ++l) {
        Word v = u;
        v.push_back(static_cast<char>(l));
        if (!rule_for_suffix(v)) next.push_back(v);
      }
    if (next.empty()) break;
    std::sort(next.begin(), next.end(), deglex_less);
    out.push_back(std::move(next));
  }
  return out;
}

std::vector<int> RewriteSystem::hilbert(int max_degree) const {
  std::vector<int> h;
  for (const auto& lvl : normal_words(max_degree)) h.push_back(static_cast<int>(lvl.size()));
  return h;
}

long long RewriteSystem::word_dimension() const {
  if (st_.zero_algebra) return 0;
  if (!st_.finite) return -1;
  long long s = 0;
  for (const auto& lvl : normal_words(st_.empty_degree)) s += static_cast<long long>(lvl.size());
  return s;
}

long long RewriteSystem::dimension() {
  if (st_.zero_algebra) return 0;
  if (!st_.finite) return -1;
  if (st_.needs_quotient) return static_cast<long long>(basis().elems.size());
  return word_dimension() * ctx_.order;
}

std::vector<RewriteSystem::Rule> RewriteSystem::active_rules() const {
  std::vector<Rule> out;
  for (const auto& r : rules_)
    if (r.active) out.push_back(r);
  std::sort(out.begin(), out.end(),
            [](const Rule& a, const Rule& b) { return deglex_less(a.lead, b.lead); });
  return out;
}

std::size_t RewriteSystem::rule_count() const {
  std::size_t n = 0;
  for (const auto& r : rules_) n += r.active;
  return n;
}

CompletionStatus RewriteSystem::complete(const std::vector<Poly>& relations, int degree_cap) {
  rules_.clear();
  lead_index_.clear();
  lead_lengths_.clear();
  memo_.clear();
  heap_.clear();
  extras_.clear();
  quotient_rows_.clear();
  basis_ready_ = false;
  st_ = CompletionStatus();
  homogeneous_ = true;
  for (const auto& r : relations) {
    if (!r.homogeneous()) homogeneous_ = false;
    for (int g = 0; g < ctx_.order; ++g) {
      Poly c = conj_relation(g, r);
      if (c.is_zero()) continue;
      heap_.push_back(Item{c.max_degree(), seq_++, -1, -1, 0, c});
      std::push_heap(heap_.begin(), heap_.end(), ItemCmp());
    }
  }
  int checked = 0;
  while (!heap_.empty() && !st_.zero_algebra) {
    int d = heap_.front().degree;
    if (!st_.finite && d > degree_cap) break;
    std::pop_heap(heap_.begin(), heap_.end(), ItemCmp());
    Item it = std::move(heap_.back());
    heap_.pop_back();
    if (st_.finite && homogeneous_ && d >= st_.empty_degree) continue;
    Poly p;
    if (it.r1 >= 0) {
      const Rule& a = rules_[it.r1];
      const Rule& b = rules_[it.r2];
      if (!a.active || !b.active) continue;
      Word left = a.lead.substr(0, a.lead.size() - it.k);
      Word right = b.lead.substr(it.k);
      p = left_word(left, b.rhs) - right_word(a.rhs, right);
    } else {
      p = std::move(it.p);
    }
    p = nf(p);
    if (!p.is_zero()) add_element(std::move(p));
    st_.degree_reached = std::max(st_.degree_reached, d);
    bool level_done = heap_.empty() || heap_.front().degree > d;
    if (level_done && !st_.finite) {
      auto nw = normal_words(d + 1);
      int upto = std::min<int>(d, degree_cap);
      for (int e = std::max(1, checked); e <= upto; ++e)
        if (static_cast<int>(nw.size()) <= e) {
          st_.finite = true;
          st_.empty_degree = e;
          break;
        }
      checked = std::max(checked, upto);
    }
  }
  if (!st_.finite && !st_.zero_algebra && heap_.empty()) {
    // The queue ran dry before an empty degree was certified.
    auto nw = normal_words(degree_cap + 1);
    if (static_cast<int>(nw.size()) <= degree_cap) {
      st_.finite = true;
      st_.empty_degree = static_cast<int>(nw.size());
    }
  }
  st_.complete = st_.zero_algebra || heap_.empty();
  st_.needs_quotient = !st_.zero_algebra && !extras_.empty();
  if (!st_.complete) st_.degree_reached = degree_cap;
  if (st_.zero_algebra) {
    st_.finite = true;
    st_.empty_degree = 0;
  }
  return st_;
}

// ---------------------------------------------------------------- basis / quotient

const RewriteSystem::Basis& RewriteSystem::basis() {
  if (basis_ready_) return basis_;
  if (!st_.finite) throw std::logic_error("basis requested for an algebra not known to be finite");
  basis_ = Basis();
  quotient_rows_.clear();
  for (const auto& lvl : normal_words(st_.empty_degree))
    for (const auto& w : lvl)
      for (int g = 0; g < ctx_.order; ++g) {
        basis_.index[key(w, g)] = static_cast<int>(basis_.elems.size());
        basis_.elems.emplace_back(w, g);
      }
  basis_ready_ = true;
  if (st_.needs_quotient) build_quotient();
  return basis_;
}

namespace {

using SVec = std::vector<std::pair<int, Rational>>;  // sorted by index

SVec axpy(const SVec& a, const Rational& s, const SVec& b) {  // a - s*b
  SVec out;
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

}  // namespace

void RewriteSystem::build_quotient() {
  // Ideal generated by the unresolved elements and by every overlap
  // difference of the final rules, closed under multiplication by generators.
  std::vector<Poly> gens = extras_;
  full_index_ = basis_;
  for (std::size_t a = 0; a < rules_.size(); ++a) {
    if (!rules_[a].active) continue;
    for (std::size_t b = 0; b < rules_.size(); ++b) {
      if (!rules_[b].active) continue;
      const Word& la = rules_[a].lead;
      const Word& lb = rules_[b].lead;
      for (std::size_t k = 1; k < std::min(la.size(), lb.size()); ++k)
        if (la.compare(la.size() - k, k, lb, 0, k) == 0)
          gens.push_back(left_word(la.substr(0, la.size() - k), rules_[b].rhs) -
                         right_word(rules_[a].rhs, lb.substr(k)));
    }
  }
  auto to_vec = [&](const Poly& p) {
    SVec v;
    for (const auto& t : p.terms()) {
      int i = basis_.find(t.w, t.g);
      if (i < 0) throw std::logic_error("quotient: term outside basis");
      v.emplace_back(i, t.c.constant());
    }
    std::sort(v.begin(), v.end(), [](auto& x, auto& y) { return x.first < y.first; });
    return v;
  };
  auto reduce = [&](SVec v) {
    // Eliminate from the highest index downward.
    for (;;) {
      bool changed = false;
      for (auto it = v.rbegin(); it != v.rend(); ++it) {
        auto row = quotient_rows_.find(it->first);
        if (row != quotient_rows_.end()) {
          v = axpy(v, it->second, row->second);
          changed = true;
          break;
        }
      }
      if (!changed) return v;
    }
  };
  auto raw_nf = [&](const Poly& x) {
    std::vector<Term> acc;
    for (const auto& t : x.terms()) {
      Poly e = right_group(nf_word(t.w), t.g);
      for (const auto& s : e.terms()) acc.push_back(Term{s.w, s.g, s.c * t.c});
    }
    return Poly::from_terms(std::move(acc));
  };
  std::vector<Poly> queue;
  for (auto& g : gens) queue.push_back(raw_nf(g));
  while (!queue.empty()) {
    Poly p = std::move(queue.back());
    queue.pop_back();
    if (p.is_zero()) continue;
    SVec v = reduce(to_vec(p));
    if (v.empty()) continue;
    Rational lead = v.back().second;
    for (auto& e : v) e.second /= lead;
    int piv = v.back().first;
    for (auto& [k, row] : quotient_rows_) {
      auto f = std::find_if(row.begin(), row.end(), [&](auto& e) { return e.first == piv; });
      if (f != row.end()) row = axpy(row, f->second, v);
    }
    quotient_rows_[piv] = v;
    Poly back;
    {
      std::vector<Term> ts;
      for (auto& [i, c] : v) ts.push_back(Term{basis_.elems[i].first, basis_.elems[i].second, PS(c)});
      back = Poly::from_terms(std::move(ts));
    }
    for (int l = 0; l < ngen_; ++l) {
      queue.push_back(raw_nf(left_word(Word(1, static_cast<char>(l)), back)));
      queue.push_back(raw_nf(right_word(back, Word(1, static_cast<char>(l)))));
    }
    for (int g = 1; g < ctx_.order; ++g) {
      queue.push_back(right_group(back, g));
      std::vector<Term> acc;
      for (const auto& t : back.terms()) {
        Word w;
        Rational f = ctx_.ps(g, t.g);
        for (char ch : t.w) {
          int l = static_cast<unsigned char>(ch);
          f *= ctx_.x(g, l);
          w.push_back(static_cast<char>(ctx_.a(g, l)));
        }
        acc.push_back(Term{w, ctx_.m(g, t.g), t.c.scaled(f)});
      }
      queue.push_back(raw_nf(Poly::from_terms(std::move(acc))));
    }
  }
  // Restrict the index to non-pivot elements.
  Basis reduced;
  for (std::size_t i = 0; i < basis_.elems.size(); ++i) {
    if (quotient_rows_.count(static_cast<int>(i))) continue;
    reduced.index[key(basis_.elems[i].first, basis_.elems[i].second)] =
        static_cast<int>(reduced.elems.size());
    reduced.elems.push_back(basis_.elems[i]);
  }
  basis_ = std::move(reduced);
  if (basis_.elems.empty()) st_.zero_algebra = true;
}

Poly RewriteSystem::reduce_quotient(const Poly& p) const {
  if (quotient_rows_.empty()) return p;
  std::map<int, PS> v;
  for (const auto& t : p.terms()) {
    int i = full_index_.find(t.w, t.g);
    if (i < 0) throw std::logic_error("quotient: term outside basis");
    v[i] += t.c;
  }
  for (auto it = v.rbegin(); it != v.rend();) {
    auto row = quotient_rows_.find(it->first);
    if (row == quotient_rows_.end() || it->second.is_zero()) {
      ++it;
      continue;
    }
    PS s = it->second;
    for (const auto& [k, c] : row->second) {
      v[k] -= s.scaled(c);
    }
    it = v.rbegin();
  }
  std::vector<Term> ts;
  for (const auto& [i, c] : v)
    if (!c.is_zero())
      ts.push_back(Term{full_index_.elems[i].first, full_index_.elems[i].second, c});
  return Poly::from_terms(std::move(ts));
}

std::vector<std::pair<int, PS>> RewriteSystem::coords(const Poly& p) {
  const Basis& b = basis();
  Poly q = nf(p);
  std::vector<std::pair<int, PS>> out;
  for (const auto& t : q.terms()) {
    int i = b.find(t.w, t.g);
    if (i < 0) throw std::logic_error("coords: term outside basis");
    out.emplace_back(i, t.c);
  }
  std::sort(out.begin(), out.end(), [](auto& x, auto& y) { return x.first < y.first; });
  return out;
}

// ---------------------------------------------------------------- parsing

namespace {

struct Parser {
  const std::string& s;
  const std::vector<std::string>& gens;
  std::size_t i = 0;

  void ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  [[noreturn]] void fail(const std::string& msg) {
    throw std::invalid_argument("parse error at column " + std::to_string(i) + ": " + msg +
                                " in '" + s + "'");
  }
  bool at_factor_start() {
    ws();
    if (i >= s.size()) return false;
    char c = s[i];
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '$' || c == '(';
  }

  Poly expr() {
    ws();
    Poly acc;
    bool neg = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
      neg = s[i] == '-';
      ++i;
    }
    Poly t = term();
    acc = neg ? -t : t;
    for (;;) {
      ws();
      if (i >= s.size() || (s[i] != '+' && s[i] != '-')) break;
      bool minus = s[i] == '-';
      ++i;
      Poly u = term();
      acc = minus ? acc - u : acc + u;
    }
    return acc;
  }

  Poly term() {
    Poly acc = factor();
    for (;;) {
      ws();
      if (i < s.size() && s[i] == '*') {
        ++i;
        acc = free_mul(acc, factor());
      } else if (at_factor_start()) {
        acc = free_mul(acc, factor());
      } else {
        break;
      }
    }
    return acc;
  }

  Poly factor() {
    Poly base = primary();
    ws();
    if (i < s.size() && s[i] == '^') {
      ++i;
      ws();
      std::size_t st = i;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      if (st == i) fail("exponent expected");
      int e = std::stoi(s.substr(st, i - st));
      Poly r = Poly::monomial(Word());
      for (int k = 0; k < e; ++k) r = free_mul(r, base);
      return r;
    }
    return base;
  }

  Poly primary() {
    ws();
    if (i >= s.size()) fail("unexpected end");
    char c = s[i];
    if (c == '(') {
      ++i;
      Poly e = expr();
      ws();
      if (i >= s.size() || s[i] != ')') fail("')' expected");
      ++i;
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t st = i;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      if (i + 1 < s.size() && s[i] == '/' && std::isdigit(static_cast<unsigned char>(s[i + 1]))) {
        ++i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      }
      return Poly::scalar(PS(Rational::parse(s.substr(st, i - st))));
    }
    if (c == '$') {
      ++i;
      std::string name = ident();
      if (name.empty()) fail("parameter name expected");
      return Poly::scalar(PS::param(name));
    }
    std::string name = ident();
    if (name.empty()) fail("unexpected character");
    for (std::size_t k = 0; k < gens.size(); ++k)
      if (gens[k] == name) return Poly::monomial(Word(1, static_cast<char>(k)));
    Word w;
    for (char ch : name) {
      int found = -1;
      for (std::size_t k = 0; k < gens.size(); ++k)
        if (gens[k].size() == 1 && gens[k][0] == ch) found = static_cast<int>(k);
      if (found < 0) fail("unknown generator '" + name + "'");
      w.push_back(static_cast<char>(found));
    }
    return Poly::monomial(w);
  }

  std::string ident() {
    std::size_t st = i;
    while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
    return s.substr(st, i - st);
  }
};

}  // namespace

Poly parse_poly(const std::string& text, const std::vector<std::string>& gens) {
  auto eq = text.find('=');
  if (eq != std::string::npos)
    return parse_poly(text.substr(0, eq), gens) - parse_poly(text.substr(eq + 1), gens);
  Parser p{text, gens};
  Poly r = p.expr();
  p.ws();
  if (p.i != text.size()) p.fail("trailing input");
  return r;
}

std::vector<Poly> parse_relations(const std::string& text, const std::vector<std::string>& gens) {
  std::vector<Poly> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    bool blank = true;
    for (char c : line)
      if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
    if (blank) continue;
    // Several relations may share a line separated by ','.
    std::string cur;
    int depth = 0;
    for (char c : line + ",") {
      if (c == '(') ++depth;
      if (c == ')') --depth;
      if (c == ',' && depth == 0) {
        bool empty = true;
        for (char d : cur)
          if (!std::isspace(static_cast<unsigned char>(d))) empty = false;
        if (!empty) out.push_back(parse_poly(cur, gens));
        cur.clear();
      } else {
        cur.push_back(c);
      }
    }
  }
  return out;
}

std::string to_string(const Poly& p, const std::vector<std::string>& gens,
                      const std::vector<std::string>& group_labels) {
  if (p.is_zero()) return "0";
  bool compact = true;
  for (const auto& g : gens)
    if (g.size() != 1) compact = false;
  std::string out;
  for (const auto& t : p.terms()) {
    std::string mono;
    for (char ch : t.w) {
      const std::string& n = gens.at(static_cast<unsigned char>(ch));
      if (!mono.empty() && !compact) mono += "*";
      mono += n;
    }
    if (t.g != 0) {
      std::string lab = t.g < static_cast<int>(group_labels.size()) ? group_labels[t.g]
                                                                  : std::to_string(t.g);
      if (!mono.empty()) mono += "*";
      mono += "e[" + lab + "]";
    }
    std::string c = t.c.str();
    bool neg = false;
    bool single = t.c.terms().size() == 1;
    if (single && c[0] == '-') {
      neg = true;
      c = c.substr(1);
    }
    if (!single) c = "(" + c + ")";
    std::string piece;
    if (mono.empty())
      piece = c;
    else if (c == "1")
      piece = mono;
    else
      piece = c + "*" + mono;
    if (out.empty())
      out = (neg ? "-" : "") + piece;
    else
      out += (neg ? " - " : " + ") + piece;
  }
  return out;
}

}  // namespace nichols
