#include <algorithm>
#include <map>
#include <set>

#include "doctest.h"
#include "hopfalg/presentations.hpp"

using namespace hopf;

TEST_CASE("reduction in H follows ab = xi ba") {
  Fixture f = fixture("H");
  const Alphabet& A = f.system.alphabet();
  Poly r = f.system.reduce(parse_poly(A, "a*b"));
  CHECK(format_poly(A, r) == format_poly(A, parse_poly(A, "(x)*b*a")));
  CHECK(format_poly(A, f.system.reduce(parse_poly(A, "1"))) == "1");
  // idempotent
  Poly p = parse_poly(A, "a*d*c*b*a + (x)*d^3*a^2 - c*a*b");
  Poly q = f.system.reduce(p);
  CHECK(f.system.reduce(q) == q);
}

TEST_CASE("basis words of H") {
  Fixture f = fixture("H");
  auto words = f.system.irreducible_monomials();
  CHECK(words.size() == 24);
  std::set<std::string> got;
  for (const auto& w : words) got.insert(f.alphabet.format(w));
  for (const char* t : {"", "d*", "b*", "c*"})
    for (int i = 0; i < 6; ++i) {
      std::string a = i == 0 ? "" : (i == 1 ? "a" : "a^" + std::to_string(i));
      std::string w = std::string(t) + a;
      if (!w.empty() && w.back() == '*') w.pop_back();
      CHECK(got.count(w.empty() ? "1" : w) == 1);
    }
}

TEST_CASE("a toy system with an unresolved overlap") {
  Alphabet A({"x", "y"}, {1, 1});
  std::vector<Rule> rules = {{A.parse_word("x*y"), parse_poly(A, "1")},
                             {A.parse_word("y*x"), parse_poly(A, "1")},
                             {A.parse_word("x*x"), Poly{}}};
  RewritingSystem sys(A, rules);
  CHECK(sys.well_formed().empty());
  CHECK_FALSE(sys.overlap_check().empty());
}

TEST_CASE("free monoid on one letter") {
  Alphabet A({"t"}, {1});
  RewritingSystem sys(A, {});
  CHECK(sys.irreducible_monomials(5).size() == 6);
  CHECK_THROWS_AS(sys.irreducible_monomials(-1, 50), IrreducibleOverflow);
}

TEST_CASE("every fixture is confluent and realizes with the expected dimension") {
  for (const char* n : {"H", "K", "A", "A'", "A1", "C", "grA", "grA'"}) {
    CAPTURE(n);
    Fixture f = fixture(n);
    CHECK(f.system.overlap_check().empty());
    HopfAlgebra A = realize_hopf(f);
    CHECK(A.dim() == f.expected_dim);
    CHECK(verify_axioms(A).ok());
  }
}

TEST_CASE("irreducible counts agree with linear algebra on homogeneous relations") {
  // quantum plane ab = xi ba and a Jordan-like pair with a cubic relation
  Alphabet A({"b", "a"}, {1, 1});
  std::vector<Poly> rels = {parse_poly(A, "a*b - (x)*b*a"), parse_poly(A, "a^3")};
  RewritingSystem sys = complete_relations(A, rels);
  CHECK(sys.overlap_check().empty());
  auto words = sys.irreducible_monomials(6);
  std::map<int, int> per;
  for (const auto& w : words) per[A.weight(w)]++;
  for (int w = 0; w <= 6; ++w) {
    CAPTURE(w);
    CHECK(homogeneous_quotient_dim(A, rels, w) == per[w]);
    CHECK(per[w] == std::min(w + 1, 3));
  }
}

TEST_CASE("rule text round trip") {
  Fixture f = fixture("K");
  RewritingSystem r = RewritingSystem::from_text(f.system.to_text());
  CHECK(r.to_text() == f.system.to_text());
  CHECK(r.irreducible_monomials().size() == 24);
}

TEST_CASE("lifting presentations") {
  for (int mu : {0, 1}) {
    FixtureParams p;
    p.i = 2;
    p.j = 2;
    p.mu = Scalar(mu);
    Fixture c = fixture("Cfam", p);
    CHECK(c.system.overlap_check().empty());
    CHECK(c.system.irreducible_monomials().size() == 432);
    CHECK(c.expected_dim == 432);
    FixtureParams q;
    q.i = 1;
    q.j = 2;
    q.mu = Scalar(mu);
    Fixture b = fixture("Bfam", q);
    CHECK(b.system.overlap_check().empty());
    CHECK(b.system.irreducible_monomials().size() == 432);
  }
  CHECK_THROWS_AS(fixture("Cfam", FixtureParams{2, 3, 0, 0, Scalar(1)}), std::invalid_argument);
}

TEST_CASE("the double presentation realizes to 576 dimensions") {
  Fixture f = fixture("D");
  CHECK(f.system.overlap_check().empty());
  CHECK(realize_algebra(f.system).basis.size() == 576);
}
