#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <vector>

#include "ginv/relations.hpp"
#include "ginv/ring.hpp"

using namespace ginv;

namespace {

const FieldSpec kQ = FieldSpec::rationals();

std::vector<int> uniform(int n, int v) { return std::vector<int>(n, v); }

// Built once; the alternating cubic inside is the expensive part.
const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = relation_catalog(kQ);
  return entries;
}

std::vector<Scalar> sym_coords(const SymbolicRelation& rel) {
  auto basis = enumerate_noncrossing(rel.n(), rel.factor_valence());
  SymIndex sym(basis.size(), rel.degree());
  return relation_coordinates(rel, basis, sym);
}

}  // namespace

TEST_CASE("symbolic terms canonicalize factors and signs") {
  Field f(kQ);
  auto a = GraphMonomial::normalize(4, {{1, 2}, {3, 4}});
  auto b = GraphMonomial::normalize(4, {{1, 4}, {2, 3}});

  SymbolicRelation r1(4, 2, kQ), r2(4, 2, kQ);
  r1.add_term({a.negated(), b}, f.one());
  r2.add_term({b, a}, f.from_int(-1));  // order ignored, sign folded
  CHECK(r1 == r2);

  SymbolicRelation cancel(4, 2, kQ);
  cancel.add_term({a, b}, f.one());
  cancel.add_term({b, a}, f.from_int(-1));
  CHECK(cancel.zero());

  SymbolicRelation bad(4, 2, kQ);
  CHECK_THROWS(bad.add_term({a}, f.one()));  // wrong arity
  CHECK_THROWS(bad.add_term(
      {a, GraphMonomial::normalize(4, {{1, 2}, {1, 2}})}, f.one()));

  SymbolicRelation scaled = r1.scaled(f.from_int(3));
  CHECK(scaled.terms().begin()->second == f.from_int(-3));
  CHECK(r1.factor_valence() == std::vector<int>{1, 1, 1, 1});

  SymbolicRelation empty(4, 2, kQ);
  CHECK_THROWS_AS(empty.factor_valence(), std::logic_error);
}

TEST_CASE("the binomial quadric on eight points") {
  const SymbolicRelation sq = simple_quadric();
  CHECK(sq.n() == 8);
  CHECK(sq.degree() == 2);
  CHECK(sq.terms().size() == 2);
  CHECK(sq.factor_valence() == uniform(8, 1));
  CHECK(sq.has_zero_image());
  Field f(kQ);
  for (const auto& [tuple, c] : sq.terms()) {
    CHECK(tuple.size() == 2);
    CHECK((c == f.one() || c == f.from_int(-1)));
  }
  CHECK_THROWS_AS(simple_quadric(6), std::invalid_argument);
}

TEST_CASE("extension by bystander edges") {
  Field f(kQ);
  SymbolicRelation pl(4, 1, kQ);
  pl.add_term({GraphMonomial::normalize(4, {{1, 2}, {3, 4}})}, f.one());
  pl.add_term({GraphMonomial::normalize(4, {{1, 3}, {2, 4}})}, f.from_int(-1));
  pl.add_term({GraphMonomial::normalize(4, {{1, 4}, {2, 3}})}, f.one());
  REQUIRE(pl.has_zero_image());

  auto ext = extend_relation(pl, {{5, 6}});
  CHECK(ext.n() == 6);
  CHECK(ext.factor_valence() == uniform(6, 1));
  CHECK(ext.terms().size() == 3);
  CHECK(ext.has_zero_image());

  CHECK_THROWS_AS(extend_relation(pl, {{4, 6}}), std::invalid_argument);
  CHECK_THROWS_AS(extend_relation(pl, {{5, 6}, {6, 7}}), std::invalid_argument);
}

TEST_CASE("the five rotated quadrics on five points") {
  auto dp = del_pezzo_quadrics();
  REQUIRE(dp.size() == 5);
  std::vector<int> rho{2, 3, 4, 5, 1};
  for (std::size_t k = 0; k < 5; ++k) {
    CHECK(dp[k].n() == 5);
    CHECK(dp[k].degree() == 2);
    CHECK(dp[k].factor_valence() == uniform(5, 2));
    CHECK_FALSE(dp[k].zero());
    for (std::size_t j = k + 1; j < 5; ++j) CHECK_FALSE(dp[k] == dp[j]);
    CHECK(dp[k].apply_permutation(rho) == dp[(k + 1) % 5]);  // orbit closes
  }
  CHECK(dp[0].has_zero_image());

  // they are independent: their coordinate span has dimension 5
  SpanBuilder span(kQ, SymIndex(6, 2).size());
  for (const auto& rel : dp) span.insert(sym_coords(rel));
  CHECK(span.rank() == 5);
}

TEST_CASE("the binomial cubic on six points") {
  auto segre = segre_binomial_cubic();
  CHECK(segre.n() == 6);
  CHECK(segre.degree() == 3);
  CHECK(segre.terms().size() == 2);
  CHECK(segre.has_zero_image());

  // it spans the unique cubic: its orbit under S_6 stays one-dimensional
  auto orbit = orbit_span(segre);
  CHECK(orbit.dimension == 1);
}

TEST_CASE("the alternating cubic on eight points") {
  auto sk = skew_cubic(8);
  CHECK(sk.n() == 8);
  CHECK(sk.degree() == 3);
  CHECK(sk.terms().size() == 28);

  // primitive integer coefficients
  Field f(kQ);
  mpz_class g = 0;
  for (const auto& [tuple, c] : sk.terms()) {
    REQUIRE(c.is_rational());
    REQUIRE(c.rational_value().get_den() == 1);
    g = gcd(g, c.rational_value().get_num());
  }
  CHECK(g == 1);

  // a transposition negates it (in coordinates, where proportionality is
  // visible after re-canonicalization)
  auto coords = sym_coords(sk);
  std::vector<int> tau{2, 1, 3, 4, 5, 6, 7, 8};
  auto flipped = sym_coords(sk.apply_permutation(tau));
  REQUIRE(flipped.size() == coords.size());
  for (std::size_t i = 0; i < coords.size(); ++i)
    CHECK(flipped[i] == f.neg(coords[i]));

  // any starting matching gives the same normalized relation up to nothing:
  // the symmetrization of a permuted matching is the same invariant, and the
  // primitive lead-positive normalization pins the representative
  auto other = skew_cubic(
      8, GraphMonomial::normalize(8, {{1, 3}, {2, 4}, {5, 7}, {6, 8}}));
  CHECK(other == sk);

  CHECK_THROWS_AS(skew_cubic(7), std::invalid_argument);
  CHECK_THROWS_AS(
      skew_cubic(8, GraphMonomial::normalize(8, {{1, 2}, {3, 4}, {5, 6}, {5, 6}})),
      std::invalid_argument);

  // beyond eight points the alternating character is absent and the
  // construction certifies the zero relation
  CHECK(skew_cubic(10).zero());
}

TEST_CASE("partial derivatives of the alternating cubic") {
  auto sk = skew_cubic(8);
  auto ps = partials(sk);
  REQUIRE(ps.size() == 14);
  std::size_t nonzero = 0;
  SpanBuilder span(kQ, SymIndex(14, 2).size());
  for (const auto& p : ps) {
    if (p.zero()) continue;
    ++nonzero;
    CHECK(p.degree() == 2);
    span.insert(sym_coords(p));
  }
  CHECK(nonzero == 14);
  CHECK(span.rank() == 14);  // they span the full quadric kernel

  // the span is basis-independent: differentiate in a sheared basis
  auto nc = enumerate_noncrossing(8, uniform(8, 1));
  Field f(kQ);
  std::vector<GraphPolynomial> sheared;
  for (std::size_t i = 0; i < nc.size(); ++i) {
    GraphPolynomial b(kQ);
    b.add_term(nc[i], f.one());
    if (i + 1 < nc.size()) b.add_term(nc[i + 1], f.one());
    sheared.push_back(b);
  }
  auto ps2 = partials(sk, sheared);
  REQUIRE(ps2.size() == 14);
  std::vector<std::vector<Scalar>> cols1, cols2;
  for (const auto& p : ps) cols1.push_back(sym_coords(p));
  for (const auto& p : ps2)
    if (!p.zero()) cols2.push_back(sym_coords(p));
  std::size_t len = SymIndex(14, 2).size();
  CHECK(subspace_equal(SparseMatrix::from_columns(kQ, len, cols1),
                       SparseMatrix::from_columns(kQ, len, cols2)));

  // a degenerate "basis" is rejected
  std::vector<GraphPolynomial> dup(14, sheared[0]);
  CHECK_THROWS_AS(partials(sk, dup), std::invalid_argument);
  CHECK_THROWS_AS(partials(simple_quadric()), std::invalid_argument);  // degree 2
}

TEST_CASE("orbit spans") {
  auto res = orbit_span(simple_quadric());
  CHECK(res.dimension == 14);
  CHECK(res.elements >= 14);
  CHECK(res.sweeps >= 2);
  CHECK(res.span.rank() == 14);
}

TEST_CASE("degree-2 generation of higher relations") {
  auto g4 = generation_check(4, 3);
  CHECK(g4.verdict == GenerationVerdict::Equal);
  CHECK(g4.defect == 0);

  auto g6 = generation_check(6, 3);
  CHECK(g6.verdict == GenerationVerdict::StrictlyContained);
  CHECK(g6.kernel2_dim == 0);
  CHECK(g6.kernel_d_dim == 1);
  CHECK(g6.generated_dim == 0);
  CHECK(g6.defect == 1);
  CHECK_FALSE(g6.defect_filled_by_skew_cubic);  // only weighed on 8 points

  CHECK_THROWS_AS(generation_check(6, 2), std::invalid_argument);
}

TEST_CASE("the catalog round-trips through text") {
  const auto& entries = catalog();
  REQUIRE(entries.size() == 13);

  std::vector<std::string> names;
  for (const auto& e : entries) names.push_back(e.name);
  std::vector<std::string> expect{
      "SignRelation",       "Plucker",
      "ExtendedPlucker",    "SimpleQuadric",
      "ExtendedSimpleQuadric", "DelPezzoQuadric",
      "DelPezzoQuadric",    "DelPezzoQuadric",
      "DelPezzoQuadric",    "DelPezzoQuadric",
      "SegreBinomialCubic", "SkewCubic",
      "SkewCubicPartial"};
  CHECK(names == expect);

  for (const auto& e : entries) {
    CHECK(e.relation.has_zero_image());
    CHECK_FALSE(e.note.empty());
    auto back = parse_relation(relation_to_text(e.relation), e.relation.n(),
                               e.relation.degree(), e.relation.field());
    CHECK(back == e.relation);
  }

  // the sign relation's two terms are the same canonical monomial with
  // opposite signs, so it collapses to the zero combination
  CHECK(entries[0].relation.zero());
  CHECK(relation_to_text(entries[0].relation) == "0\n");

  std::string dump = catalog_dump(entries);
  CHECK(std::count(dump.begin(), dump.end(), '\n') >= 12);
  CHECK(dump.find("SimpleQuadric | 8 | 2 | ") != std::string::npos);
  CHECK(dump.find("SignRelation | 2 | 1 | 0") != std::string::npos);
}

TEST_CASE("relation text parsing rejects malformed input") {
  CHECK_THROWS_AS(parse_relation("1*[n=4; 1-2 3-4]", 4, 2, kQ), ParseError);
  CHECK_THROWS_AS(
      parse_relation("bogus*[n=4; 1-2 3-4]*[n=4; 1-2 3-4]", 4, 2, kQ),
      ParseError);
  // factor on the wrong vertex count: caught by term validation
  CHECK_THROWS_AS(
      parse_relation("1*[n=5; 1-2 3-4]*[n=5; 1-2 3-4]", 4, 2, kQ),
      std::invalid_argument);
  CHECK(parse_relation("0", 4, 2, kQ).zero());
  CHECK_THROWS_AS(parse_relation("", 4, 2, kQ), ParseError);
}
