#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <vector>

#include "ginv/graph.hpp"
#include "ginv/straighten.hpp"

using namespace ginv;

namespace {

GraphMonomial random_graph(std::mt19937_64& rng, int max_n = 7, int max_edges = 6) {
  int n = 2 + int(rng() % (max_n - 1));
  int m = 1 + int(rng() % max_edges);
  std::vector<std::pair<int, int>> raw;
  for (int e = 0; e < m; ++e) {
    int a = 1 + int(rng() % n), b = 1 + int(rng() % n);
    if (a == b) b = a % n + 1;
    raw.emplace_back(a, b);
  }
  return GraphMonomial::normalize(n, raw);
}

// Manifestly independent check: expand everything to monomials in x (with the
// y exponents implied by the valence) and compare over the integers.
std::map<std::vector<int>, mpz_class> expand_poly_int(const GraphPolynomial& p) {
  std::map<std::vector<int>, mpz_class> total;
  for (const auto& [g, c] : p.terms()) {
    REQUIRE(c.is_rational());
    const mpq_class& q = c.rational_value();
    REQUIRE(q.get_den() == 1);
    for (const auto& [key, coeff] : expand_brackets(g)) {
      auto& slot = total[key];
      slot += coeff * q.get_num();
      if (slot == 0) total.erase(key);
    }
  }
  return total;
}

GraphPolynomial combo_to_poly(const ZCombo& z, int /*n*/) {
  GraphPolynomial p(FieldSpec::rationals());
  Field f(FieldSpec::rationals());
  for (const auto& [g, c] : z) p.add_term(g, f.from_mpz(c));
  return p;
}

}  // namespace

TEST_CASE("the two-term move rewrites one crossing") {
  auto g = GraphMonomial::normalize(4, {{1, 3}, {2, 4}});
  auto step = plucker_step(g, {0, 1});
  Field f(FieldSpec::rationals());

  GraphPolynomial expected(FieldSpec::rationals());
  expected.add_term(GraphMonomial::normalize(4, {{1, 2}, {3, 4}}), f.one());
  expected.add_term(GraphMonomial::normalize(4, {{1, 4}, {2, 3}}), f.one());
  CHECK(step == expected);

  CHECK_THROWS_AS(
      plucker_step(GraphMonomial::normalize(4, {{1, 2}, {3, 4}}), {0, 1}),
      std::invalid_argument);
  CHECK_THROWS_AS(plucker_step(g, {0, 5}), std::invalid_argument);
}

TEST_CASE("the move preserves the bracket expansion") {
  std::mt19937_64 rng(41);
  int done = 0;
  while (done < 60) {
    auto g = random_graph(rng);
    auto cr = crossings(g);
    if (cr.empty()) continue;
    auto pair = cr[rng() % cr.size()];
    auto step = plucker_step(g, pair);
    GraphPolynomial orig(FieldSpec::rationals());
    orig.add_term(g, Field(FieldSpec::rationals()).one());
    CHECK(expand_poly_int(orig) == expand_poly_int(step));
    ++done;
  }
}

TEST_CASE("straightening frozen examples") {
  Field f(FieldSpec::rationals());

  auto z = straighten_graph(GraphMonomial::normalize(4, {{1, 3}, {2, 4}}));
  REQUIRE(z.size() == 2);
  CHECK(z.at(GraphMonomial::normalize(4, {{1, 2}, {3, 4}})) == 1);
  CHECK(z.at(GraphMonomial::normalize(4, {{1, 4}, {2, 3}})) == 1);

  // noncrossing input passes through
  auto nc = GraphMonomial::normalize(4, {{1, 2}, {3, 4}});
  auto znc = straighten_graph(nc);
  REQUIRE(znc.size() == 1);
  CHECK(znc.at(nc) == 1);

  // sign case: the doubled reversed edge
  auto rev = GraphMonomial::normalize(2, {{1, 2}, {2, 1}});
  CHECK(rev.sign() == -1);
  auto zrev = straighten_graph(rev);
  REQUIRE(zrev.size() == 1);
  CHECK(zrev.at(GraphMonomial::normalize(2, {{1, 2}, {1, 2}})) == -1);

  // three mutually crossing chords on six points
  auto deep = straighten_graph(GraphMonomial::normalize(6, {{1, 4}, {2, 5}, {3, 6}}));
  for (const auto& [g, c] : deep) {
    CHECK(is_noncrossing(g));
    CHECK(c > 0);
  }
  GraphPolynomial in(FieldSpec::rationals());
  in.add_term(GraphMonomial::normalize(6, {{1, 4}, {2, 5}, {3, 6}}), f.one());
  CHECK(expand_poly_int(in) == expand_poly_int(combo_to_poly(deep, 6)));
}

TEST_CASE("canonical graphs straighten with nonnegative coefficients") {
  std::mt19937_64 rng(43);
  for (int t = 0; t < 80; ++t) {
    auto g = random_graph(rng).abs();
    for (const auto& [h, c] : straighten_graph(g)) {
      CHECK(is_noncrossing(h));
      CHECK(h.sign() == 1);
      CHECK(h.valence() == g.valence());
      CHECK(c >= 0);
    }
  }
}

TEST_CASE("straightening equals the expansion oracle") {
  std::mt19937_64 rng(47);
  for (int t = 0; t < 60; ++t) {
    auto g = random_graph(rng);
    GraphPolynomial p(FieldSpec::rationals());
    p.add_term(g, Field(FieldSpec::rationals()).one());
    CHECK(straighten(p) == straighten_by_solve(p));
  }
}

TEST_CASE("straightening preserves the expansion and is a projection") {
  std::mt19937_64 rng(53);
  Field f(FieldSpec::rationals());
  for (int t = 0; t < 40; ++t) {
    auto g = random_graph(rng);
    GraphPolynomial p(FieldSpec::rationals());
    p.add_term(g, f.one());
    auto s = straighten(p);
    CHECK(expand_poly_int(p) == expand_poly_int(s));
    CHECK(straighten(s) == s);  // already noncrossing: fixed point
  }
}

TEST_CASE("straightening is linear") {
  Field f(FieldSpec::rationals());
  std::mt19937_64 rng(59);
  for (int t = 0; t < 20; ++t) {
    auto g = random_graph(rng, 6, 4);
    // build a second graph with the same valence by superposing differently:
    // shuffle the vertex labels
    std::vector<int> sigma(g.n());
    for (int i = 0; i < g.n(); ++i) sigma[i] = i + 1;
    std::shuffle(sigma.begin(), sigma.end(), rng);
    auto h = apply_permutation(sigma, g);
    std::vector<int> vs = g.valence();
    std::sort(vs.begin(), vs.end());
    std::vector<int> vh = h.valence();
    std::sort(vh.begin(), vh.end());
    REQUIRE(vs == vh);
    if (h.valence() != g.valence()) continue;  // need equal valence to combine

    Scalar a = f.from_int(long(rng() % 7) - 3), b = f.from_int(long(rng() % 7) - 3);
    GraphPolynomial combo(FieldSpec::rationals());
    combo.add_term(g, a);
    combo.add_term(h, b);
    GraphPolynomial expect(FieldSpec::rationals());
    for (const auto& [k, c] : straighten_graph(g))
      expect.add_term(k, f.mul(a, f.from_mpz(c)));
    for (const auto& [k, c] : straighten_graph(h))
      expect.add_term(k, f.mul(b, f.from_mpz(c)));
    CHECK(straighten(combo) == expect);
  }
}

TEST_CASE("the memo returns identical results across calls") {
  auto g = GraphMonomial::normalize(6, {{1, 4}, {2, 5}, {3, 6}, {1, 4}});
  auto first = straighten_graph(g);
  auto second = straighten_graph(g);
  CHECK(first == second);
  CHECK(!first.empty());
}

TEST_CASE("prime-field straightening matches the integer reduction") {
  FieldSpec f7 = FieldSpec::prime(7);
  Field f(f7);
  auto g = GraphMonomial::normalize(6, {{1, 4}, {2, 5}, {3, 6}});
  GraphPolynomial p(f7);
  p.add_term(g, f.one());
  auto s = straighten(p);
  auto z = straighten_graph(g);
  REQUIRE(!s.zero());
  for (const auto& [h, c] : s.terms()) {
    auto it = z.find(h);
    REQUIRE(it != z.end());
    CHECK(c == f.from_mpz(it->second));
  }
}
