#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <vector>

#include "ginv/symrep.hpp"

using namespace ginv;

namespace {

std::vector<int> uniform(int n, int v) { return std::vector<int>(n, v); }

ClassFunction irreducible(const CharacterTable& t, const Partition& lambda) {
  ClassFunction chi;
  chi.n = t.n();
  chi.values = t.values()[t.index_of(lambda)];
  return chi;
}

}  // namespace

TEST_CASE("partition enumeration") {
  auto p5 = partitions_of(5);
  REQUIRE(p5.size() == 7);
  CHECK(p5.front() == Partition{5});
  CHECK(p5.back() == Partition{1, 1, 1, 1, 1});
  CHECK(p5[1] == Partition{4, 1});
  CHECK(p5[2] == Partition{3, 2});
  CHECK(partitions_of(8).size() == 22);
  CHECK(partitions_of(10).size() == 42);
  CHECK(partitions_of(1) == std::vector<Partition>{{1}});
}

TEST_CASE("hook length dimensions") {
  CHECK(hook_dimension({1}) == 1);
  CHECK(hook_dimension({4}) == 1);
  CHECK(hook_dimension({1, 1, 1}) == 1);
  CHECK(hook_dimension({2, 2}) == 2);
  CHECK(hook_dimension({3, 3}) == 5);
  CHECK(hook_dimension({4, 4}) == 14);
  CHECK(hook_dimension({5, 5}) == 42);
  CHECK(hook_dimension({2, 1}) == 2);
  CHECK(hook_dimension({4, 2, 2, 2}) == 300);
  CHECK(hook_dimension({2, 2, 2, 2}) == 14);
  // sum of squares over all partitions is the group order
  for (int n : {5, 6}) {
    mpz_class total = 0;
    for (const auto& p : partitions_of(n)) total += hook_dimension(p) * hook_dimension(p);
    mpz_class fact = 1;
    for (int k = 2; k <= n; ++k) fact *= k;
    CHECK(total == fact);
  }
}

TEST_CASE("conjugacy class bookkeeping") {
  CHECK(class_size(6, {2, 1, 1, 1, 1}) == 15);
  CHECK(class_size(6, {6}) == 120);
  CHECK(class_size(6, {1, 1, 1, 1, 1, 1}) == 1);
  mpz_class total = 0;
  for (const auto& mu : partitions_of(6)) total += class_size(6, mu);
  CHECK(total == 720);

  CHECK(class_sign(6, {3, 2, 1}) == -1);
  CHECK(class_sign(6, {2, 2, 2}) == -1);
  CHECK(class_sign(6, {3, 3}) == 1);
  CHECK(class_sign(4, {1, 1, 1, 1}) == 1);

  CHECK(class_representative(6, {3, 2, 1}) == std::vector<int>{2, 3, 1, 5, 4, 6});
  CHECK(class_representative(4, {4}) == std::vector<int>{2, 3, 4, 1});

  CHECK(cycle_type_power({6}, 2) == Partition{3, 3});
  CHECK(cycle_type_power({6}, 3) == Partition{2, 2, 2});
  CHECK(cycle_type_power({4, 2}, 2) == Partition{2, 2, 1, 1});
  CHECK(cycle_type_power({3, 3}, 3) == Partition{1, 1, 1, 1, 1, 1});
  CHECK(cycle_type_power({5}, 2) == Partition{5});
}

TEST_CASE("the full character table of S4") {
  CharacterTable t(4);
  REQUIRE(t.partitions().size() == 5);
  // classes indexed by cycle type: (4), (3,1), (2,2), (2,1,1), (1^4)
  auto row = [&](const Partition& lambda) { return t.values()[t.index_of(lambda)]; };
  CHECK(row({4}) == std::vector<mpz_class>{1, 1, 1, 1, 1});
  CHECK(row({3, 1}) == std::vector<mpz_class>{-1, 0, -1, 1, 3});
  CHECK(row({2, 2}) == std::vector<mpz_class>{0, -1, 2, 0, 2});
  CHECK(row({2, 1, 1}) == std::vector<mpz_class>{1, 0, -1, -1, 3});
  CHECK(row({1, 1, 1, 1}) == std::vector<mpz_class>{-1, 1, 1, -1, 1});

  CHECK_THROWS_AS(CharacterTable(15), std::invalid_argument);
  CHECK_THROWS_AS(t.index_of({5}), std::invalid_argument);
}

TEST_CASE("character rows are orthonormal") {
  CharacterTable t(6);
  const auto& parts = t.partitions();
  mpz_class order = 720;
  for (std::size_t a = 0; a < parts.size(); ++a)
    for (std::size_t b = a; b < parts.size(); ++b) {
      mpz_class inner = 0;
      for (std::size_t c = 0; c < parts.size(); ++c)
        inner += t.class_sizes()[c] * t.value(a, c) * t.value(b, c);
      CHECK(inner == (a == b ? order : 0));
    }
  // identity column carries the hook-length dimensions
  std::size_t id = parts.size() - 1;  // (1,...,1) is last
  for (std::size_t a = 0; a < parts.size(); ++a)
    CHECK(t.value(a, id) == hook_dimension(parts[a]));
}

TEST_CASE("matching-space characters") {
  auto sp4 = MultidegreeSpace::create(4, uniform(4, 1), FieldSpec::rationals());
  auto chi4 = module_character(sp4);
  CharacterTable t4(4);
  // the 2-dimensional matching space is the irreducible labeled (2,2)
  CHECK(chi4.values == t4.values()[t4.index_of({2, 2})]);

  auto sp6 = MultidegreeSpace::create(6, uniform(6, 1), FieldSpec::rationals());
  auto chi6 = module_character(sp6);
  auto dec6 = decompose(chi6);
  REQUIRE(dec6.size() == 1);
  CHECK(dec6.begin()->first == Partition{3, 3});
  CHECK(dec6.begin()->second == 1);

  auto bad = MultidegreeSpace::create(4, {2, 1, 2, 1}, FieldSpec::rationals());
  CHECK_THROWS_AS(module_character(bad), std::invalid_argument);
}

TEST_CASE("symmetric-power plethysms and decompositions") {
  auto sp6 = MultidegreeSpace::create(6, uniform(6, 1), FieldSpec::rationals());
  auto chi = module_character(sp6);

  auto sym2 = sym_power_character(chi, 2);
  auto dec2 = decompose(sym2);
  std::map<Partition, long long> expect2{{{6}, 1}, {{4, 2}, 1}, {{2, 2, 2}, 1}};
  CHECK(dec2 == expect2);

  auto sym3 = sym_power_character(chi, 3);
  auto dec3 = decompose(sym3);
  // all-even partitions of 6 with at most... plus the alternating column
  mpz_class dim3 = 0;
  for (const auto& [lam, m] : dec3) {
    CHECK(m > 0);
    dim3 += hook_dimension(lam) * mpz_class(long(m));
  }
  CHECK(dim3 == 35);  // dim Sym^3 of a 5-dimensional space

  CHECK_THROWS_AS(sym_power_character(chi, 4), std::invalid_argument);

  // sign multiplicities in Sym^3 of the matching spaces: present once for
  // 6 and 8 points, absent for 10
  CHECK(sign_multiplicity(sym3) == 1);
}

TEST_CASE("decompose validates integrality") {
  CharacterTable t(5);
  auto chi = irreducible(t, {3, 2});
  auto dec = decompose(chi);
  REQUIRE(dec.size() == 1);
  CHECK(dec.at({3, 2}) == 1);

  // sums decompose additively
  ClassFunction sum;
  sum.n = 5;
  sum.values.resize(t.partitions().size());
  for (std::size_t c = 0; c < sum.values.size(); ++c)
    sum.values[c] = t.value(t.index_of({5}), c) + 2 * t.value(t.index_of({3, 2}), c);
  auto decs = decompose(sum);
  CHECK(decs.at({5}) == 1);
  CHECK(decs.at({3, 2}) == 2);

  // a non-character (fractional multiplicity) is rejected
  ClassFunction bogus;
  bogus.n = 5;
  bogus.values.assign(t.partitions().size(), 0);
  bogus.values[t.partitions().size() - 1] = 1;  // delta at the identity
  CHECK_THROWS_AS(decompose(bogus), std::logic_error);

  CHECK(sign_multiplicity(irreducible(t, {1, 1, 1, 1, 1})) == 1);
  CHECK(sign_multiplicity(irreducible(t, {5})) == 0);
}
