#pragma once
// Noncommutative polynomials over ParamScalar, optionally with group-algebra
// coefficients on the right, and a degree-bounded overlap completion
// (Buchberger / Knuth-Bendix style) under deglex.
//
// A term is  c * w * e_g  with w a word in the degree-one generators and
// g an element of a finite group F acting on the generators by
//   e_g y_l = chi_l(g) y_{g.l} e_g ,   e_g e_h = psi(g,h) e_{gh}.
// With F trivial this is the plain free algebra.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "nichols/param.hpp"

namespace nichols {

using Word = std::string;  // one byte per generator index

// deglex: shorter words are smaller; equal length compares letters, where a
// letter with smaller index is smaller.
bool deglex_less(const Word& a, const Word& b);

struct Term {
  Word w;
  int g = 0;
  PS c;
};

class Poly {
 public:
  Poly() = default;
  static Poly monomial(const Word& w, int g = 0, const PS& c = PS(1));
  static Poly scalar(const PS& c, int g = 0) { return monomial(Word(), g, c); }
  static Poly from_terms(std::vector<Term> terms);

  bool is_zero() const { return t_.empty(); }
  const std::vector<Term>& terms() const { return t_; }
  const Term& lead() const { return t_.front(); }
  int max_degree() const { return t_.empty() ? -1 : static_cast<int>(t_.front().w.size()); }
  int min_degree() const;
  bool homogeneous() const;
  bool group_free() const;  // all terms carry the identity

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  Poly scaled(const PS& s) const;
  friend bool operator==(const Poly& a, const Poly& b);
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  // Coefficient of (w, g).
  PS coeff(const Word& w, int g = 0) const;
  Poly substitute(const std::map<std::string, Rational>& vals) const;
  std::vector<std::string> parameters() const;

 private:
  std::vector<Term> t_;  // descending deglex on w, then ascending g; no zeros
};

// Free-algebra product of group-free polynomials (no rewriting).
Poly free_mul(const Poly& a, const Poly& b);

// Finite group acting on the generators, with a normalized 2-cocycle.
struct GroupCtx {
  int order = 1;
  int ngen = 0;
  std::vector<int> mul = {0};
  std::vector<int> inv = {0};
  std::vector<Rational> psi = {Rational(1)};
  std::vector<std::uint8_t> act;  // act[g*ngen + l] = g.l
  std::vector<Rational> chi;      // chi[g*ngen + l] = chi_l(g)
  std::vector<std::string> labels = {"1"};

  static GroupCtx trivial(int ngen);
  int m(int a, int b) const { return mul[a * order + b]; }
  const Rational& ps(int a, int b) const { return psi[a * order + b]; }
  int a(int g, int l) const { return act[g * ngen + l]; }
  const Rational& x(int g, int l) const { return chi[g * ngen + l]; }
};

struct NonUnitLead : std::runtime_error {
  NonUnitLead(const std::string& what, PS c) : std::runtime_error(what), coeff(std::move(c)) {}
  PS coeff;  // the offending leading coefficient
};

struct CompletionStatus {
  bool complete = false;     // all overlaps resolved (finite case) or up to the cap
  bool finite = false;       // some degree has no normal words
  bool zero_algebra = false; // 1 reduces to 0
  int empty_degree = -1;     // first degree without normal words
  int degree_reached = 0;
  bool needs_quotient = false;  // leading coefficients outside k^x F were met
};

// Inter-reduced rewrite rules lead -> rhs together with the machinery to
// reduce, multiply and complete.  Not thread safe (normal forms are cached).
class RewriteSystem {
 public:
  struct Rule {
    Word lead;
    Poly rhs;
    bool active = true;
  };

  RewriteSystem() : RewriteSystem(0, GroupCtx::trivial(0)) {}
  RewriteSystem(int ngen, GroupCtx ctx);

  int ngen() const { return ngen_; }
  const GroupCtx& group() const { return ctx_; }

  // Runs completion on `relations` (each interpreted as "= 0").  Relations are
  // first closed under conjugation by the group.
  CompletionStatus complete(const std::vector<Poly>& relations, int degree_cap = 16);
  const CompletionStatus& status() const { return st_; }

  Poly nf(const Poly& p);
  Poly nf_word(const Word& w);
  Poly mul(const Poly& a, const Poly& b);
  Poly group_element(int g) const { return Poly::scalar(PS(1), g); }
  Poly generator(int l) const { return Poly::monomial(Word(1, static_cast<char>(l))); }

  // Normal words by degree up to max_degree (or the empty degree).
  std::vector<std::vector<Word>> normal_words(int max_degree) const;
  std::vector<int> hilbert(int max_degree) const;
  // Total dimension when finite; times |F|.  -1 if not finite.
  long long dimension();
  long long word_dimension() const;

  std::vector<Rule> active_rules() const;
  std::size_t rule_count() const;
  bool has_quotient() const { return !quotient_rows_.empty() || st_.needs_quotient; }

  // Basis of the quotient (normal words x group) when finite, with the ideal
  // fallback applied.  Index lookup for linear algebra on coordinates.
  struct Basis {
    std::vector<std::pair<Word, int>> elems;
    std::unordered_map<std::string, int> index;  // key(w,g)
    int find(const Word& w, int g) const;
  };
  const Basis& basis();
  // Coordinates of an element in the basis (after nf); throws on parameters
  // when a quotient fallback is active.
  std::vector<std::pair<int, PS>> coords(const Poly& p);

  static std::string key(const Word& w, int g);

 private:
  Poly times_letter_normal(const Word& u, int letter);
  Poly right_word(const Poly& p, const Word& c) const;  // p * c (straightening)
  Poly left_word(const Word& a, const Poly& p) const;   // a * p
  Poly right_group(const Poly& p, int g) const;         // p * e_g
  Poly left_group(int g, const Poly& p);                // e_g * p (reduced)
  Poly conj_relation(int g, const Poly& p);             // e_g p e_g^-1

  void add_element(Poly p);
  void add_rule(const Word& lead, Poly rhs);
  void push_overlaps(int r);
  std::optional<int> rule_for_suffix(const Word& v) const;
  bool reducible(const Word& v) const;
  bool try_resolve_extras();
  void build_quotient();
  Poly reduce_quotient(const Poly& p) const;

  struct Item {
    int degree;
    long seq;
    int r1 = -1, r2 = -1, k = 0;  // overlap descriptor, or
    Poly p;                       // a polynomial (r1 < 0)
  };
  struct ItemCmp {
    bool operator()(const Item& a, const Item& b) const {
      return a.degree != b.degree ? a.degree > b.degree : a.seq > b.seq;
    }
  };

  int ngen_;
  GroupCtx ctx_;
  std::vector<Rule> rules_;
  std::unordered_map<Word, int> lead_index_;
  std::map<int, int> lead_lengths_;  // length -> active count
  std::unordered_map<Word, Poly> memo_;
  std::vector<Item> heap_;
  long seq_ = 0;
  std::vector<Poly> extras_;
  CompletionStatus st_;
  bool homogeneous_ = true;
  bool basis_ready_ = false;
  Basis basis_;
  // Quotient fallback: echelon rows over basis coordinates, pivot -> row.
  std::map<int, std::vector<std::pair<int, Rational>>> quotient_rows_;
  Basis full_index_;  // pre-quotient basis, used to reduce modulo the ideal
};

// Text form: one relation per line, '=' allowed, generators are identifiers,
// parameters are '$name', products by '*' or juxtaposition, '^n' powers.
// Identifiers that are not generator names but spell a sequence of
// single-character generator names are split.
Poly parse_poly(const std::string& text, const std::vector<std::string>& gens);
std::vector<Poly> parse_relations(const std::string& text, const std::vector<std::string>& gens);

// Deterministic printing; group parts printed as "e[label]" unless identity.
std::string to_string(const Poly& p, const std::vector<std::string>& gens,
                      const std::vector<std::string>& group_labels = {});

}  // namespace nichols
