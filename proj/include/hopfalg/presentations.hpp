#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "hopfalg/hopf.hpp"

namespace hopf {

// Words are sequences of letter indices. Letter index order is precedence
// order (index 0 is the smallest letter).
using Word = std::vector<uint8_t>;

struct WordHash {
  std::size_t operator()(const Word& w) const;
};

// Weighted-degree order: total weight first, then lexicographic by precedence.
struct Mono {
  int weight = 0;
  Word w;
  bool operator<(const Mono& o) const { return weight != o.weight ? weight < o.weight : w < o.w; }
  bool operator==(const Mono& o) const { return weight == o.weight && w == o.w; }
};

// Noncommutative polynomial, terms in increasing order (leading term last).
using Poly = std::map<Mono, Scalar>;

class Alphabet {
 public:
  Alphabet() = default;
  // letters in increasing precedence, with positive weights
  Alphabet(std::vector<std::string> letters, std::vector<int> weights);

  int size() const { return static_cast<int>(letters_.size()); }
  const std::vector<std::string>& letters() const { return letters_; }
  const std::vector<int>& weights() const { return weights_; }
  int index(const std::string& letter) const;  // -1 if absent
  int weight(const Word& w) const;
  Mono mono(const Word& w) const { return {weight(w), w}; }
  std::string format(const Word& w) const;  // "a*b^2", "1" for the empty word
  Word parse_word(const std::string& text) const;

 private:
  std::vector<std::string> letters_;
  std::vector<int> weights_;
};

// Polynomial helpers.
void poly_add_term(Poly& p, const Mono& m, const Scalar& c);
Poly poly_add(const Poly& a, const Poly& b);
Poly poly_scale(const Poly& a, const Scalar& s);
Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_word(const Alphabet& A, const Word& w, const Scalar& c = Scalar(1));
// Parses "(scalar)*w1*w2^3 + w3 - (x)*1"; coefficients must be parenthesized.
Poly parse_poly(const Alphabet& A, const std::string& text);
std::string format_poly(const Alphabet& A, const Poly& p);

struct Rule {
  Word lhs;
  Poly rhs;  // every term strictly smaller than lhs
};

struct Ambiguity {
  Word word;          // the overlap or inclusion word
  int rule1 = 0, rule2 = 0;
  Poly difference;    // nonzero normal form of the two reductions
};

class IrreducibleOverflow : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class RewritingSystem {
 public:
  RewritingSystem() = default;
  RewritingSystem(Alphabet alphabet, std::vector<Rule> rules);

  const Alphabet& alphabet() const { return alph_; }
  const std::vector<Rule>& rules() const { return rules_; }
  // Empty string if every rule is decreasing.
  std::string well_formed() const;

  bool is_normal(const Word& w) const;
  Poly normal_form(const Word& w) const;
  Poly reduce(const Poly& p) const;
  std::vector<Ambiguity> overlap_check() const;
  // All normal words in increasing order. max_weight < 0 means exhaustive;
  // throws IrreducibleOverflow once more than max_count words are found.
  std::vector<Word> irreducible_monomials(int max_weight = -1, std::size_t max_count = 100000) const;

  // Line format: "letters: a:1 b:1 ..." then "WORD -> scalar*WORD + ...".
  std::string to_text() const;
  static RewritingSystem from_text(const std::string& text);

 private:
  // first (leftmost) occurrence of a rule's lhs in w: (rule, position)
  bool find_match(const Word& w, int& rule, int& pos) const;
  void index_rules();

  Alphabet alph_;
  std::vector<Rule> rules_;
  std::vector<std::vector<int>> by_first_;
  mutable std::unordered_map<Word, Poly, WordHash> cache_;
};

// Derives a reduced, complete rule set from defining relations (each relation
// is a polynomial equal to zero) by resolving overlaps until none is left.
// Used to produce the compiled-in fixture rule sets; overlap_check remains
// the certificate. Throws if max_rules is exceeded.
RewritingSystem complete_relations(const Alphabet& A, const std::vector<Poly>& relations, std::size_t max_rules = 2000);

// Dimension of the weight-w component of the quotient by homogeneous
// relations, by linear algebra on the span of u*r*v (independent of rewriting).
int homogeneous_quotient_dim(const Alphabet& A, const std::vector<Poly>& relations, int w);

// ---------------------------------------------------------------------------
// Realization as Hopf algebras.

struct TensorTerm {
  Scalar coef;
  std::string left, right;  // monomial texts in the fixture alphabet
};

struct Fixture {
  std::string name;
  Alphabet alphabet;
  std::vector<Poly> relations;
  RewritingSystem system;
  std::map<std::string, std::string> composite;  // letter -> defining product
  std::map<std::string, std::vector<TensorTerm>> coproduct;
  std::map<std::string, Scalar> counit;
  std::map<std::string, std::string> antipode;  // closed forms where given
  int expected_dim = 0;
};

struct FixtureParams {
  int i = 0, j = 0, k = 0, iota = 0;
  Scalar mu;
};

// Names: H, K, A, A', A1, C, grA, grA', D, Cfam (lifting C_{2,j,k,0}(mu)),
// Bfam (lifting B_{1,j,0,iota}(mu)).
Fixture fixture(const std::string& name, const FixtureParams& p = {});
std::vector<std::string> fixture_names();

// Algebra on the normal words; mult(u, w) = normal form of u*w.
struct RealizedAlgebra {
  std::vector<Word> basis;
  std::unordered_map<Word, int, WordHash> index;
  std::vector<SparseVec> table;  // row u*dim + w
};
RealizedAlgebra realize_algebra(const RewritingSystem& sys, std::size_t max_dim = 5000);

// Full Hopf structure from a fixture: realized algebra, coproduct extended
// multiplicatively from the generators, counit, antipode (closed forms on
// generators where given, derived from the coproduct otherwise, then extended
// anti-multiplicatively), generators set for the reduced checks.
HopfAlgebra realize_hopf(const Fixture& f);
// Realized element of a monomial/polynomial text.
SparseVec realize_element(const HopfAlgebra& A, const RewritingSystem& sys, const std::string& poly_text);
SparseVec realize_poly(const HopfAlgebra& A, const RewritingSystem& sys, const Poly& p);

}  // namespace hopf
