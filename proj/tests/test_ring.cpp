#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "ginv/ring.hpp"

using namespace ginv;

namespace {

std::vector<int> uniform(int n, int v) { return std::vector<int>(n, v); }

// Evaluate a dense-exponent coefficient vector at a point tuple; used as a
// cross-check between the two coordinatizations.
Scalar eval_dense(const std::vector<long long>& dense, const std::vector<int>& v,
                  const PointTuple& pts, const Field& f) {
  Scalar total = f.zero();
  std::size_t len = dense.size();
  for (std::size_t idx = 0; idx < len; ++idx) {
    if (dense[idx] == 0) continue;
    // decode mixed radix, vertex 1 most significant
    std::size_t rest = idx;
    Scalar term = f.from_int(dense[idx]);
    for (int i = int(v.size()) - 1; i >= 0; --i) {
      int e = int(rest % std::size_t(v[i] + 1));
      rest /= std::size_t(v[i] + 1);
      for (int k = 0; k < e; ++k) term = f.mul(term, pts[i].first);
      for (int k = 0; k < v[i] - e; ++k) term = f.mul(term, pts[i].second);
    }
    total = f.add(total, term);
  }
  return total;
}

}  // namespace

TEST_CASE("graded dimensions of the matching spaces") {
  auto d4 = graded_dimension(4, uniform(4, 1));
  CHECK(d4.dimension == 2);
  CHECK(d4.noncrossing == 2);
  CHECK(d4.spanning == 3);

  CHECK(graded_dimension(6, uniform(6, 1)).dimension == 5);
  CHECK(graded_dimension(6, uniform(6, 1)).spanning == 15);
  CHECK(graded_dimension(8, uniform(8, 1)).dimension == 14);
  CHECK(graded_dimension(8, uniform(8, 1)).spanning == 105);
  CHECK(graded_dimension(10, uniform(10, 1)).dimension == 42);

  CHECK(graded_dimension(2, uniform(2, 1)).dimension == 1);
  CHECK(graded_dimension(5, uniform(5, 1)).dimension == 0);  // odd total
  CHECK(graded_dimension(5, uniform(5, 2)).dimension == 6);
  CHECK(graded_dimension(5, uniform(5, 2)).spanning == 22);
  CHECK(graded_dimension(6, uniform(6, 2)).dimension == 15);
  CHECK(graded_dimension(2, {3, 1}).dimension == 0);  // unrealizable
}

TEST_CASE("full and sampled coordinatizations agree on dimensions") {
  for (auto [n, v] : {std::pair{6, 1}, {5, 2}, {4, 2}}) {
    SpaceOptions full, sampled;
    full.mode = CoordMode::FullCoefficients;
    sampled.mode = CoordMode::SampledEvaluations;
    sampled.seed = 99;
    auto a = graded_dimension(n, uniform(n, v), FieldSpec::rationals(), full);
    auto b = graded_dimension(n, uniform(n, v), FieldSpec::rationals(), sampled);
    CHECK(a.dimension == b.dimension);
    CHECK(a.mode == CoordMode::FullCoefficients);
    CHECK(b.mode == CoordMode::SampledEvaluations);
  }
}

TEST_CASE("default coordinate mode switches on coordinate-space size") {
  CHECK(default_mode(uniform(6, 1)) == CoordMode::FullCoefficients);   // 2^6
  CHECK(default_mode(uniform(10, 1)) == CoordMode::FullCoefficients);  // 2^10
  CHECK(default_mode(uniform(10, 6)) == CoordMode::SampledEvaluations);  // 7^10
}

TEST_CASE("dense integer expansion matches point evaluation") {
  std::mt19937_64 rng(61);
  Field f(FieldSpec::prime(1000003));
  for (int t = 0; t < 25; ++t) {
    int n = 3 + int(rng() % 4);
    std::vector<std::pair<int, int>> raw;
    int m = 1 + int(rng() % 4);
    for (int e = 0; e < m; ++e) {
      int a = 1 + int(rng() % n), b = 1 + int(rng() % n);
      if (a == b) b = a % n + 1;
      raw.emplace_back(a, b);
    }
    auto g = GraphMonomial::normalize(n, raw);
    PointTuple pts;
    for (int i = 0; i < n; ++i)
      pts.push_back({f.from_int(long(rng() % 1000)), f.from_int(long(rng() % 1000))});
    Scalar direct = eval_at_point(g, pts, f);
    Scalar via = eval_dense(expand_dense_int(g), g.valence(), pts, f);
    CHECK(direct == via);
  }
}

TEST_CASE("evaluation is multiplicative under superposition") {
  std::mt19937_64 rng(67);
  Field f(FieldSpec::prime(65537));
  auto g = GraphMonomial::normalize(5, {{1, 3}, {2, 4}});
  auto h = GraphMonomial::normalize(5, {{2, 5}, {1, 4}});
  for (int t = 0; t < 20; ++t) {
    PointTuple pts;
    for (int i = 0; i < 5; ++i)
      pts.push_back({f.from_int(long(rng() % 65537)), f.from_int(long(rng() % 65537))});
    CHECK(f.mul(eval_at_point(g, pts, f), eval_at_point(h, pts, f)) ==
          eval_at_point(superpose(g, h), pts, f));
  }
}

TEST_CASE("multidegree spaces coordinatize their basis") {
  auto sp = MultidegreeSpace::create(6, uniform(6, 1), FieldSpec::rationals());
  CHECK(sp.dim() == 5);
  CHECK(sp.coord_len() == 64);  // 2^6 exponent vectors
  for (std::size_t i = 0; i < sp.dim(); ++i) {
    CHECK(sp.basis_index(sp.basis()[i]) == i);
    CHECK(sp.coordinates(sp.basis()[i]).size() == sp.coord_len());
  }
  CHECK_THROWS(sp.basis_index(GraphMonomial::normalize(6, {{1, 4}, {2, 5}, {3, 6}})));

  SpaceOptions so;
  so.mode = CoordMode::SampledEvaluations;
  so.seed = 5;
  auto sampled = MultidegreeSpace::create(6, uniform(6, 1), FieldSpec::rationals(), so);
  // one sample per spanning graph plus the safety margin
  CHECK(sampled.samples().size() == 15 + so.sample_margin);
  CHECK(sampled.coord_len() == sampled.samples().size());
}

TEST_CASE("Sym^d monomial index") {
  SymIndex sym(3, 2);
  CHECK(sym.size() == 6);
  CHECK(sym.letters() == 3);
  CHECK(sym.degree() == 2);
  std::vector<std::vector<std::size_t>> expect{{0, 0}, {1, 0}, {1, 1},
                                               {2, 0}, {2, 1}, {2, 2}};
  CHECK(sym.tuples() == expect);
  CHECK(sym.index_of({0, 1}) == 1);  // sorted descending before lookup
  CHECK(sym.index_of({2, 1}) == 4);
  CHECK_THROWS(sym.index_of({3, 0}));

  SymIndex cube(4, 3);
  CHECK(cube.size() == 20);  // C(4+3-1, 3)
}

TEST_CASE("multiplication kernels at the frozen dimensions") {
  auto k6 = relation_kernel(6, uniform(6, 1), 2);
  CHECK(k6.sym_dim == 15);
  CHECK(k6.target_dim == 15);
  CHECK(k6.image_rank == 15);
  CHECK(k6.relations.empty());

  auto k8 = relation_kernel(8, uniform(8, 1), 2);
  CHECK(k8.basis.size() == 14);
  CHECK(k8.sym_dim == 105);
  CHECK(k8.target_dim == 91);
  CHECK(k8.relations.size() == 14);
  for (const auto& rel : k8.relations) {
    CHECK_FALSE(rel.terms().empty());
    CHECK(rel.has_zero_image());
  }

  auto k63 = relation_kernel(6, uniform(6, 1), 3);
  CHECK(k63.sym_dim == 35);
  CHECK(k63.relations.size() == 1);
  CHECK(k63.image_rank == 34);
  CHECK(k63.target_dim >= k63.image_rank);

  auto k5 = relation_kernel(5, uniform(5, 2), 2);
  CHECK(k5.sym_dim == 21);
  CHECK(k5.relations.size() == 5);
  CHECK(k5.image_rank == 16);
  CHECK(k5.target_dim >= k5.image_rank);
}

TEST_CASE("kernel computation validates its inputs") {
  CHECK_THROWS_AS(relation_kernel(6, uniform(6, 1), 1), std::invalid_argument);
  CHECK_THROWS_AS(relation_kernel(5, uniform(5, 1), 2), std::invalid_argument);
  KernelOptions tiny;
  tiny.workload_cap = 10;
  CHECK_THROWS_AS(relation_kernel(8, uniform(8, 1), 2, FieldSpec::rationals(), tiny),
                  CapExceeded);
}

TEST_CASE("expansion coordinates give the same kernels") {
  KernelOptions exp_mode;
  exp_mode.expansion_coordinates = true;

  auto a = relation_kernel(6, uniform(6, 1), 2, FieldSpec::rationals(), exp_mode);
  CHECK(a.relations.empty());
  CHECK(a.image_rank == 15);

  auto b = relation_kernel(8, uniform(8, 1), 2, FieldSpec::prime(65537), exp_mode);
  CHECK(b.relations.size() == 14);

  auto c = relation_kernel(8, uniform(8, 1), 2, FieldSpec::prime(65537));
  CHECK(c.relations.size() == 14);
}

TEST_CASE("relation coordinates locate the Sym^d monomials") {
  auto k8 = relation_kernel(8, uniform(8, 1), 2);
  SymIndex sym(k8.basis.size(), 2);
  for (const auto& rel : k8.relations) {
    auto coords = relation_coordinates(rel, k8.basis, sym);
    CHECK(coords.size() == sym.size());
    std::size_t nonzero = 0;
    Field f(FieldSpec::rationals());
    for (const auto& c : coords)
      if (!f.is_zero(c)) ++nonzero;
    CHECK(nonzero >= 2);  // a one-term relation would mean a vanishing product
  }
}

TEST_CASE("degree-1 generation certificates") {
  auto r = kempe_check(6, uniform(6, 1), 2);
  CHECK(r.generated);
  CHECK_FALSE(r.vacuous);
  CHECK(r.target_dim == 15);
  CHECK(r.image_rank == 15);
  CHECK(r.certificate.kind == FieldKind::PrimeField);

  auto v = kempe_check(3, uniform(3, 1), 2);
  CHECK(v.vacuous);
  CHECK(v.generated);

  auto w = kempe_check(5, uniform(5, 2), 2);
  CHECK(w.generated);

  auto k3 = kempe_check(4, {2, 1, 2, 1}, 3);
  CHECK(k3.generated);

  // seed only changes the sample points, not the verdict
  auto r2 = kempe_check(6, uniform(6, 1), 2, FieldSpec::rationals(), 1234);
  CHECK(r2.generated);

  CHECK_THROWS_AS(kempe_check(6, uniform(6, 1), 1), std::invalid_argument);
  CHECK_THROWS_AS(kempe_check(6, {1, 1, 1, 1, 1, 0}, 2), std::invalid_argument);
}

TEST_CASE("linear relations among graph monomials") {
  auto rels4 = linear_relation_space(4, uniform(4, 1));
  REQUIRE(rels4.size() == 1);
  const auto& rel = rels4[0];
  REQUIRE(rel.terms().size() == 3);
  Field f(FieldSpec::rationals());
  std::vector<Scalar> coeffs;
  for (const auto& [g, c] : rel.terms()) coeffs.push_back(c);
  // graphs in lex order [12|34], [13|24], [14|23]; the middle one enters
  // with the opposite sign
  CHECK(coeffs[0] == f.one());
  CHECK(coeffs[1] == f.from_int(-1));
  CHECK(coeffs[2] == f.one());
  CHECK(straighten(rel).zero());

  auto rels6 = linear_relation_space(6, uniform(6, 1));
  CHECK(rels6.size() == 10);
  for (const auto& r6 : rels6) CHECK(straighten(r6).zero());

  auto rels4p = linear_relation_space(4, uniform(4, 1), FieldSpec::prime(5));
  CHECK(rels4p.size() == 1);
}
