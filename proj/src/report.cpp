#include "ginv/report.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "ginv/common.hpp"
#include "ginv/relations.hpp"
#include "ginv/ring.hpp"
#include "ginv/sparse.hpp"
#include "ginv/straighten.hpp"
#include "ginv/symrep.hpp"

namespace ginv {

std::string verdict_str(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Skipped: return "skipped";
  }
  return "?";
}

bool VerificationReport::all_passed() const {
  for (const auto& c : checks)
    if (c.verdict == Verdict::Fail) return false;
  return true;
}

namespace {

struct Outcome {
  std::string computed;
  std::string expected;
  bool pass = false;
  FieldSpec field = FieldSpec::rationals();
};

struct CheckSpec {
  std::string id;
  std::string statement;
  bool quick = false;    // member of the quick suite
  bool stretch = false;  // gated behind --stretch
  int cost = 10;         // scheduling hint, larger starts earlier
  std::function<Outcome(const VerifyOptions&)> run;
};

std::vector<int> unit_weights(int n) { return std::vector<int>(n, 1); }

template <class T>
std::string join(const std::vector<T>& v, const char* sep = ", ") {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << sep;
    os << v[i];
  }
  return os.str();
}

std::string partition_str(const Partition& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(p[i]);
  }
  return s + ")";
}

std::string decomposition_str(const std::map<Partition, long long>& dec) {
  std::string s;
  for (const auto& [p, m] : dec) {
    if (!s.empty()) s += " + ";
    s += partition_str(p);
    if (m != 1) s += "x" + std::to_string(m);
  }
  return s.empty() ? "0" : s;
}

// Sym^d coordinate frame for degree-d relations on the graded piece (n, w).
struct SymFrame {
  std::vector<GraphMonomial> basis;
  SymIndex sym;
  SymFrame(int n, const std::vector<int>& w, int d)
      : basis(enumerate_noncrossing(n, w)), sym(basis.size(), d) {}
  std::vector<Scalar> coords(const SymbolicRelation& r) const {
    return relation_coordinates(r, basis, sym);
  }
};

// Loop-free multigraph on 2..max_n vertices with valences <= 3, at least
// one edge, random orientations.
GraphMonomial random_graph(std::mt19937_64& rng, int max_n = 8) {
  for (;;) {
    int n = 2 + int(rng() % (max_n - 1));
    std::vector<int> cap(n + 1);
    for (int i = 1; i <= n; ++i) cap[i] = 1 + int(rng() % 3);
    std::vector<std::pair<int, int>> edges;
    int misses = 0;
    while (misses < 64) {
      int a = 1 + int(rng() % n), b = 1 + int(rng() % n);
      if (a == b || cap[a] == 0 || cap[b] == 0) {
        ++misses;
        continue;
      }
      edges.push_back({a, b});
      --cap[a];
      --cap[b];
      if (edges.size() >= 2 && rng() % 4 == 0) break;
    }
    if (!edges.empty()) return GraphMonomial::normalize(n, edges);
  }
}

bool span_holds_kernel(const SpanBuilder& span, const KernelResult& kr,
                       const SymFrame& frame) {
  for (const auto& rel : kr.relations)
    if (!span.contains(frame.coords(rel))) return false;
  return true;
}

// --- individual checks --------------------------------------------------

Outcome check_dims_catalan(const VerifyOptions&) {
  Outcome o;
  std::vector<std::size_t> dims, ncs;
  for (int n : {4, 6, 8, 10}) {
    auto g = graded_dimension(n, unit_weights(n));
    dims.push_back(g.dimension);
    ncs.push_back(g.noncrossing);
  }
  o.computed = join(dims) + "; noncrossing " + join(ncs);
  o.expected = "2, 5, 14, 42; noncrossing 2, 5, 14, 42";
  o.pass = o.computed == o.expected;
  return o;
}

Outcome check_n4_linear(const VerifyOptions&) {
  Outcome o;
  auto rels = linear_relation_space(4, unit_weights(4));
  std::vector<std::string> coeffs;
  if (rels.size() == 1)
    for (const auto& [g, c] : rels[0].terms())
      coeffs.push_back(c.rational_value().get_str());
  o.computed = std::to_string(rels.size()) +
               " relation; coefficients " + join(coeffs);
  o.expected = "1 relation; coefficients 1, -1, 1";
  o.pass = o.computed == o.expected;
  return o;
}

Outcome check_n5_dims(const VerifyOptions&) {
  Outcome o;
  auto d1 = graded_dimension(5, unit_weights(5));
  auto d2 = graded_dimension(5, {2, 2, 2, 2, 2});
  o.computed = "dim " + std::to_string(d1.dimension) + " and " +
               std::to_string(d2.dimension);
  o.expected = "dim 0 and 6";
  o.pass = o.computed == o.expected;
  return o;
}

Outcome check_n5_kernel2(const VerifyOptions&) {
  Outcome o;
  auto kr = relation_kernel(5, {2, 2, 2, 2, 2}, 2);
  o.computed = std::to_string(kr.relations.size());
  o.expected = "5";
  o.pass = o.computed == o.expected;
  return o;
}

Outcome check_n5_delpezzo(const VerifyOptions&) {
  Outcome o;
  std::vector<int> w{2, 2, 2, 2, 2};
  SymFrame frame(5, w, 2);
  SpanBuilder span(FieldSpec::rationals(), frame.sym.size());
  for (const auto& r : del_pezzo_quadrics()) span.insert(frame.coords(r));
  auto kr = relation_kernel(5, w, 2);
  bool contained = span_holds_kernel(span, kr, frame);
  o.computed = "span " + std::to_string(span.rank()) + " of kernel " +
               std::to_string(kr.relations.size()) +
               (contained ? "; kernel contained" : "; kernel NOT contained");
  o.expected = "span 5 of kernel 5; kernel contained";
  o.pass = o.computed == o.expected;
  return o;
}

Outcome check_n6_kernel2(const VerifyOptions&) {
  Outcome o;
  auto kr = relation_kernel(6, unit_weights(6), 2);
  o.computed = std::to_string(kr.relations.size());
  o.expected = "0";
  o.pass = o.computed == o.expected;
  return o;
}

Outcome check_n6_kernel3(const VerifyOptions&) {
  Outcome o;
  auto kr = relation_kernel(6, unit_weights(6), 3);
  o.computed = std::to_string(kr.relations.size());
  o.expected = "1";
  o.pass = o.computed == o.expected;
  return o;
}

Outcome check_n6_segre(const VerifyOptions&) {
  Outcome o;
  SymFrame frame(6, unit_weights(6), 3);
  auto segre = segre_binomial_cubic();
  auto sc = frame.coords(segre);
  SpanBuilder span(FieldSpec::rationals(), frame.sym.size());
  bool nonzero = span.insert(sc);
  auto kr = relation_kernel(6, unit_weights(6), 3);
  bool spans = kr.relations.size() == 1 && span_holds_kernel(span, kr, frame);
  o.computed = std::string(nonzero ? "nonzero" : "ZERO") +
               (spans ? "; spans the kernel" : "; does NOT span the kernel");
  o.expected = "nonzero; spans the kernel";
  o.pass = o.computed == o.expected;
  return o;
}

Outcome check_n6_skew(const VerifyOptions&) {
  Outcome o;
  SymFrame frame(6, unit_weights(6), 3);
  auto a = frame.coords(skew_cubic(6));
  auto b = frame.coords(segre_binomial_cubic());
  o.computed = a == b ? "equal (ratio 1)" : "different";
  o.expected = "equal (ratio 1)";
  o.pass = o.computed == o.expected;
  return o;
}

Outcome check_n8_kernel2(const VerifyOptions&) {
  Outcome o;
  auto kr = relation_kernel(8, unit_weights(8), 2);
  o.computed = std::to_string(kr.relations.size());
  o.expected = "14";
  o.pass = o.computed == o.expected;
  return o;
}

Outcome check_n8_partials(const VerifyOptions&) {
  Outcome o;
  SymFrame frame(8, unit_weights(8), 2);
  auto ps = partials(skew_cubic(8));
  std::size_t nonzero = 0;
  SpanBuilder span(FieldSpec::rationals(), frame.sym.size());
  for (const auto& p : ps) {
    if (!p.zero()) ++nonzero;
    span.insert(frame.coords(p));
  }
  auto kr = relation_kernel(8, unit_weights(8), 2);
  bool contained = span_holds_kernel(span, kr, frame);
  o.computed = std::to_string(nonzero) + " nonzero partials; span " +
               std::to_string(span.rank()) + " of kernel " +
               std::to_string(kr.relations.size()) +
               (contained ? "; kernel contained" : "; kernel NOT contained");
  o.expected = "14 nonzero partials; span 14 of kernel 14; kernel contained";
  o.pass = o.computed == o.expected;
  return o;
}

Outcome check_n8_orbit(const VerifyOptions&) {
  Outcome o;
  SymFrame frame(8, unit_weights(8), 2);
  auto os = orbit_span(simple_quadric());
  auto kr = relation_kernel(8, unit_weights(8), 2);
  bool contained = span_holds_kernel(os.span, kr, frame);
  o.computed = "orbit span " + std::to_string(os.dimension) + " of kernel " +
               std::to_string(kr.relations.size()) +
               (contained ? "; kernel contained" : "; kernel NOT contained");
  o.expected = "orbit span 14 of kernel 14; kernel contained";
  o.pass = o.computed == o.expected;
  return o;
}

Outcome check_n8_skew_sign(const VerifyOptions&) {
  Outcome o;
  SymFrame frame(8, unit_weights(8), 3);
  auto sk = skew_cubic(8);
  auto c0 = frame.coords(sk);
  auto ct = frame.coords(sk.apply_permutation({2, 1, 3, 4, 5, 6, 7, 8}));
  auto c3 = frame.coords(sk.apply_permutation({2, 3, 1, 4, 5, 6, 7, 8}));
  Field f(sk.field());
  bool negated = true;
  for (std::size_t i = 0; i < c0.size(); ++i)
    if (!(ct[i] == f.neg(c0[i]))) negated = false;
  bool invariant = c3 == c0;
  o.computed = std::string(negated ? "negates under (1 2)" : "NOT negated") +
               (invariant ? "; invariant under (1 2 3)" : "; NOT invariant");
  o.expected = "negates under (1 2); invariant under (1 2 3)";
  o.pass = o.computed == o.expected;
  return o;
}

Outcome check_n8_generation_q(const VerifyOptions&) {
  Outcome o;
  auto g = generation_check(8, 3);
  o.computed = std::string(g.verdict == GenerationVerdict::Equal
                               ? "equal: "
                               : "strict: ") +
               std::to_string(g.generated_dim) + " of " +
               std::to_string(g.kernel_d_dim) + " generated from " +
               std::to_string(g.kernel2_dim) + " quadrics";
  o.expected = "equal: 196 of 196 generated from 14 quadrics";
  o.pass = o.computed == o.expected;
  return o;
}

Outcome check_char3_generation(const VerifyOptions&) {
  Outcome o;
  o.field = FieldSpec::prime(3);
  auto g = generation_check(8, 3, o.field);
  o.computed = std::string(g.verdict == GenerationVerdict::StrictlyContained
                               ? "strict containment: "
                               : "equal: ") +
               std::to_string(g.generated_dim) + " of " +
               std::to_string(g.kernel_d_dim) + "; defect " +
               std::to_string(g.defect) +
               (g.defect_filled_by_skew_cubic
                    ? ", filled by the alternating cubic"
                    : ", NOT filled by the alternating cubic");
  o.expected =
      "strict containment: 195 of 196; defect 1, filled by the alternating "
      "cubic";
  o.pass = o.computed == o.expected;
  return o;
}

const std::uint64_t kTenPointPrime = 1000003;

Outcome check_n10_kernel2(const VerifyOptions&) {
  Outcome o;
  o.field = FieldSpec::prime(kTenPointPrime);
  mpz_class hook = hook_dimension({4, 2, 2, 2});
  KernelOptions ko;
  ko.expansion_coordinates = true;
  auto kr = relation_kernel(10, unit_weights(10), 2, o.field, ko);
  o.computed = "hook count " + hook.get_str() + "; kernel dimension " +
               std::to_string(kr.relations.size()) + " (modulus " +
               std::to_string(kTenPointPrime) + ")";
  o.expected = "hook count 300; kernel dimension 300 (modulus 1000003)";
  o.pass = o.computed == o.expected;
  return o;
}

Outcome check_n10_orbit(const VerifyOptions&) {
  Outcome o;
  o.field = FieldSpec::prime(kTenPointPrime);
  auto ext = extend_relation(simple_quadric(), {{9, 10}});
  bool zero_image = ext.has_zero_image();  // exact integer expansion
  auto os = orbit_span(ext);               // rational span
  KernelOptions ko;
  ko.expansion_coordinates = true;
  auto kr = relation_kernel(10, unit_weights(10), 2, o.field, ko);
  o.computed = "rational orbit span " + std::to_string(os.dimension) +
               "; prime-field kernel " + std::to_string(kr.relations.size()) +
               (zero_image ? "; extension expands to zero"
                           : "; extension does NOT expand to zero");
  o.expected =
      "rational orbit span 300; prime-field kernel 300; extension expands to "
      "zero";
  o.pass = o.computed == o.expected;
  return o;
}

Outcome check_rep_keyfact(const VerifyOptions&) {
  Outcome o;
  std::vector<std::string> lines;
  bool ok = true;
  for (int n : {6, 8, 10}) {
    auto space1 = MultidegreeSpace::create(n, unit_weights(n),
                                           FieldSpec::rationals());
    auto dsym = decompose(sym_power_character(module_character(space1), 2));
    auto space2 = MultidegreeSpace::create(n, std::vector<int>(n, 2),
                                           FieldSpec::rationals());
    auto dr2 = decompose(module_character(space2));

    std::map<Partition, long long> want_sym, want_r2;
    for (const auto& p : partitions_of(n)) {
      bool even = std::all_of(p.begin(), p.end(),
                              [](int x) { return x % 2 == 0; });
      if (!even) continue;
      if (p.size() <= 4) want_sym[p] = 1;
      if (p.size() <= 3) want_r2[p] = 1;
    }
    std::map<Partition, long long> diff;
    for (const auto& [p, m] : dsym)
      if (!dr2.count(p)) diff[p] = m;
    bool here = dsym == want_sym && dr2 == want_r2;
    for (const auto& [p, m] : diff)
      if (p.size() != 4 || m != 1) here = false;
    if (diff.size() != want_sym.size() - want_r2.size()) here = false;
    ok = ok && here;
    lines.push_back("n=" + std::to_string(n) + " difference " +
                    decomposition_str(diff));
  }
  o.computed = join(lines, "; ") + (ok ? "; multiplicity-free" : "; MISMATCH");
  o.expected =
      "n=6 difference 0; n=8 difference (2,2,2,2); n=10 difference "
      "(4,2,2,2); multiplicity-free";
  o.pass = ok && o.computed == o.expected;
  return o;
}

Outcome check_rep_r1_irreducible(const VerifyOptions&) {
  Outcome o;
  std::vector<std::string> got;
  bool ok = true;
  for (int n : {4, 6, 8, 10}) {
    auto space = MultidegreeSpace::create(n, unit_weights(n),
                                          FieldSpec::rationals());
    auto dec = decompose(module_character(space));
    std::map<Partition, long long> want{{{n / 2, n / 2}, 1}};
    ok = ok && dec == want;
    got.push_back(decomposition_str(dec));
  }
  o.computed = join(got, "; ");
  o.expected = "(2,2); (3,3); (4,4); (5,5)";
  o.pass = ok && o.computed == o.expected;
  return o;
}

Outcome check_skew_sign_multiplicity(const VerifyOptions&) {
  Outcome o;
  auto mult = [](int n) {
    auto space = MultidegreeSpace::create(n, unit_weights(n),
                                          FieldSpec::rationals());
    return sign_multiplicity(sym_power_character(module_character(space), 3));
  };
  o.computed = std::to_string(mult(8)) + " at n=8; " + std::to_string(mult(10)) +
               " at n=10";
  o.expected = "1 at n=8; 0 at n=10";
  o.pass = o.computed == o.expected;
  return o;
}

Outcome check_kempe(const VerifyOptions& opts) {
  Outcome o;
  std::size_t cases = 0, generated = 0, vacuous = 0;
  for (int n = 1; n <= 6; ++n) {
    std::vector<int> w(n, 1);
    for (;;) {
      long total = 0;
      for (int x : w) total += x;
      if (total % 2 == 0) {
        for (int k = 2; k <= 3; ++k) {
          auto r = kempe_check(n, w, k, FieldSpec::rationals(), opts.seed);
          ++cases;
          if (r.generated) ++generated;
          if (r.vacuous) ++vacuous;
        }
      }
      int i = n - 1;
      while (i >= 0 && w[i] == 3) w[i--] = 1;
      if (i < 0) break;
      ++w[i];
    }
  }
  for (int k = 2; k <= 3; ++k) {
    auto r = kempe_check(8, unit_weights(8), k, FieldSpec::rationals(),
                         opts.seed);
    ++cases;
    if (r.generated) ++generated;
  }
  o.computed = std::to_string(generated) + " of " + std::to_string(cases) +
               " weight configurations generated (" + std::to_string(vacuous) +
               " vacuously)";
  o.expected = "1094 of 1094 weight configurations generated (6 vacuously)";
  o.pass = o.computed == o.expected;
  return o;
}

Outcome check_straighten_oracle(const VerifyOptions& opts) {
  Outcome o;
  o.field = opts.field;
  Field f(opts.field);
  std::mt19937_64 rng(opts.seed ^ 0x5157a11e);
  std::size_t agree = 0;
  const std::size_t trials = 200;
  for (std::size_t t = 0; t < trials; ++t) {
    GraphPolynomial p(opts.field);
    p.add_term(random_graph(rng), f.one());
    if (straighten(p) == straighten_by_solve(p)) ++agree;
  }
  o.computed = std::to_string(agree) + " of " + std::to_string(trials) +
               " agree with the solve oracle";
  o.expected = "200 of 200 agree with the solve oracle";
  o.pass = agree == trials;
  return o;
}

Outcome check_relations_expand(const VerifyOptions&) {
  Outcome o;
  std::size_t total = 0, zero = 0;
  auto tally = [&](const SymbolicRelation& r) {
    ++total;
    if (r.has_zero_image()) ++zero;
  };
  for (const auto& e : relation_catalog()) tally(e.relation);
  for (const auto& r : relation_kernel(8, unit_weights(8), 2).relations)
    tally(r);
  for (const auto& r : relation_kernel(6, unit_weights(6), 3).relations)
    tally(r);
  for (const auto& r : relation_kernel(5, {2, 2, 2, 2, 2}, 2).relations)
    tally(r);
  o.computed = std::to_string(zero) + " of " + std::to_string(total) +
               " relations expand to zero";
  o.expected = "33 of 33 relations expand to zero";
  o.pass = o.computed == o.expected;
  return o;
}

Outcome check_plucker_expand(const VerifyOptions& opts) {
  Outcome o;
  o.field = opts.field;
  Field f(opts.field);
  std::mt19937_64 rng(opts.seed ^ 0x9a7c0de);
  std::size_t preserved = 0;
  const std::size_t trials = 200;
  for (std::size_t t = 0; t < trials; ++t) {
    GraphMonomial g = random_graph(rng);
    auto cr = crossings(g);
    if (cr.empty()) {
      --t;  // resample; termination is overwhelmingly likely
      continue;
    }
    auto pair = cr[rng() % cr.size()];
    auto lhs = bracket_expand(g, f);
    auto step = plucker_step(g, pair, opts.field);
    std::vector<Scalar> rhs(lhs.size(), f.zero());
    for (const auto& [h, c] : step.terms()) {
      auto he = bracket_expand(h, f);
      for (std::size_t i = 0; i < rhs.size(); ++i)
        rhs[i] = f.add(rhs[i], f.mul(c, he[i]));
    }
    if (lhs == rhs) ++preserved;
  }
  o.computed = std::to_string(preserved) + " of " + std::to_string(trials) +
               " moves preserve the expansion";
  o.expected = "200 of 200 moves preserve the expansion";
  o.pass = preserved == trials;
  return o;
}

Outcome check_rank_nullity(const VerifyOptions& opts) {
  Outcome o;
  o.field = opts.field;
  std::mt19937_64 rng(opts.seed ^ 0x4a4b);
  FieldSpec alt = opts.field.kind == FieldKind::PrimeField
                      ? opts.field
                      : FieldSpec::prime(65537);
  std::size_t ok = 0;
  const std::size_t trials = 40;
  for (std::size_t t = 0; t < trials; ++t) {
    FieldSpec fs = t % 2 == 0 ? FieldSpec::rationals() : alt;
    Field f(fs);
    std::size_t rows = 1 + rng() % 12, cols = 1 + rng() % 12;
    SparseMatrix m(rows, cols, fs);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) {
        if (rng() % 10 < 6) continue;
        long e = long(rng() % 9) - 4;
        if (e != 0) m.set(i, j, f.from_int(e));
      }
    auto r = rref(m);
    auto kb = kernel_basis(m);
    bool good = r.rank + kb.size() == cols &&
                r.rank <= std::min(rows, cols) &&
                std::is_sorted(r.pivot_cols.begin(), r.pivot_cols.end());
    for (const auto& v : kb) {
      for (std::size_t i = 0; i < rows && good; ++i) {
        Scalar acc = f.zero();
        for (const auto& [j, c] : m.row(i)) acc = f.add(acc, f.mul(c, v[j]));
        if (!f.is_zero(acc)) good = false;
      }
    }
    if (good) ++ok;
  }
  o.computed = std::to_string(ok) + " of " + std::to_string(trials) +
               " matrices satisfy rank + nullity = cols with annihilating "
               "kernels";
  o.expected =
      "40 of 40 matrices satisfy rank + nullity = cols with annihilating "
      "kernels";
  o.pass = ok == trials;
  return o;
}

Outcome check_stretch_n12(const VerifyOptions& opts) {
  Outcome o;
  o.field = FieldSpec::prime(kTenPointPrime);
  mpz_class predicted =
      hook_dimension({6, 2, 2, 2}) + hook_dimension({4, 4, 2, 2});
  o.expected = "kernel dimension " + predicted.get_str() +
               " (hook prediction from the 4-part all-even partitions)";
  std::vector<int> ones(12, 1);
  SymIndex sym(enumerate_noncrossing(12, ones).size(), 2);
  // Expansion cost: 24 edge passes over the 3^12 coordinate space per
  // Sym^2 basis product.
  std::uint64_t est = std::uint64_t(sym.size()) * 24u * 531441u;
  if (est > opts.stretch_ops_budget)
    throw CapExceeded("estimated " + std::to_string(est) +
                      " coordinate operations exceed the stretch budget " +
                      std::to_string(opts.stretch_ops_budget) +
                      "; raise --stretch-budget to attempt the computation");
  KernelOptions ko;
  ko.expansion_coordinates = true;
  ko.workload_cap = std::size_t(-1);
  auto kr = relation_kernel(12, ones, 2, o.field, ko);
  o.computed = "kernel dimension " + std::to_string(kr.relations.size()) +
               " (modulus " + std::to_string(kTenPointPrime) + ")";
  o.pass = mpz_class((long)kr.relations.size()) == predicted;
  return o;
}

std::vector<CheckSpec> registry() {
  std::vector<CheckSpec> specs = {
      {"dims.catalan",
       "the degree-1 graded pieces at unit weights have dimensions 2, 5, 14, "
       "42 for n = 4, 6, 8, 10, matching the noncrossing counts",
       true, false, 20, check_dims_catalan},
      {"n4.linear.relations",
       "the three perfect matchings on 4 points satisfy exactly one linear "
       "relation, with coefficients 1, -1, 1",
       true, false, 10, check_n4_linear},
      {"n5.dims",
       "5 points carry no degree-1 invariants at unit weights, and doubling "
       "the weights gives a 6-dimensional space",
       true, false, 10, check_n5_dims},
      {"n5.kernel2.dim",
       "the quadric relation space on the doubled weights at 5 points has "
       "dimension 5",
       true, false, 10, check_n5_kernel2},
      {"n5.delpezzo.span",
       "the five rotated binomial quadrics span the 5-dimensional quadric "
       "relation space at 5 points",
       true, false, 10, check_n5_delpezzo},
      {"n6.kernel2.dim", "6 points admit no quadric relations at unit weights",
       true, false, 10, check_n6_kernel2},
      {"n6.kernel3.dim",
       "the cubic relation space at 6 points is 1-dimensional", true, false,
       15, check_n6_kernel3},
      {"n6.segre.span",
       "the binomial cubic at 6 points is nonzero in Sym^3 and spans the "
       "cubic relation space",
       true, false, 15, check_n6_segre},
      {"n6.skew.proportional",
       "the alternating cubic at 6 points equals the binomial cubic after "
       "primitive normalization",
       true, false, 10, check_n6_skew},
      {"n8.kernel2.dim",
       "the quadric relation space at 8 points has dimension 14", true, false,
       20, check_n8_kernel2},
      {"n8.partials.span",
       "the 14 formal partial derivatives of the alternating cubic span the "
       "quadric relation space at 8 points",
       true, false, 30, check_n8_partials},
      {"n8.orbit.span",
       "the S_8-orbit of the binomial quadric spans the quadric relation "
       "space at 8 points",
       true, false, 30, check_n8_orbit},
      {"n8.skew.sign",
       "the alternating cubic at 8 points negates under a transposition and "
       "is invariant under a 3-cycle",
       true, false, 20, check_n8_skew_sign},
      {"n8.generation.q",
       "over the rationals, multiples of the 14 quadrics span the whole "
       "cubic relation space at 8 points",
       true, false, 60, check_n8_generation_q},
      {"char3-generation",
       "over F_3 the quadric multiples miss a 1-dimensional piece of the "
       "cubic relation space at 8 points, and the alternating cubic fills it",
       false, false, 60, check_char3_generation},
      {"n10.kernel2.dim",
       "the quadric relation space at 10 points has dimension 300, agreeing "
       "with the hook-length count for the partition (4,2,2,2)",
       false, false, 90, check_n10_kernel2},
      {"n10.orbit.span",
       "the S_10-orbit of the extended binomial quadric spans the full "
       "quadric relation space at 10 points (rational span squeezed against "
       "the prime-field rank)",
       false, false, 100, check_n10_orbit},
      {"rep.keyfact",
       "Sym^2 of the degree-1 piece is multiplicity-free with all-even "
       "summands of at most 4 parts, the degree-2 piece keeps those with at "
       "most 3 parts, and the difference is exactly the 4-part summand (n = "
       "6, 8, 10)",
       true, false, 25, check_rep_keyfact},
      {"rep.r1.irreducible",
       "the degree-1 piece at unit weights is the irreducible module of the "
       "two-row partition (n/2, n/2) for n = 4, 6, 8, 10",
       true, false, 15, check_rep_r1_irreducible},
      {"skew.sign.multiplicity",
       "the sign character appears once in Sym^3 of the degree-1 piece at n "
       "= 8 and not at all at n = 10",
       true, false, 15, check_skew_sign_multiplicity},
      {"kempe.generation",
       "degree-1 pieces generate: R_(k-1)w x R_w surjects onto R_kw for "
       "every weight vector with entries <= 3, n <= 6, even total, k <= 3, "
       "and for unit weights at n = 8",
       false, false, 1000, check_kempe},
      {"property.straighten.oracle",
       "straightening agrees with the independent linear-solve oracle on 200 "
       "random graphs",
       true, false, 40, check_straighten_oracle},
      {"property.relations.expand",
       "every catalog relation and every computed kernel element "
       "bracket-expands to zero",
       true, false, 25, check_relations_expand},
      {"property.plucker.expand",
       "the two-term rewriting move preserves the bracket expansion on 200 "
       "random crossings",
       true, false, 20, check_plucker_expand},
      {"property.rank.nullity",
       "rank plus nullity equals the column count on random matrices, and "
       "every kernel vector annihilates its matrix",
       true, false, 10, check_rank_nullity},
      {"stretch.n12.kernel2",
       "the quadric relation space at 12 points matches the hook-length "
       "prediction from the 4-part all-even partitions (stretch)",
       false, true, 80, check_stretch_n12},
  };
  return specs;
}

// --- cache --------------------------------------------------------------

std::string escape_line(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '\\') out += "\\\\";
    else if (c == '\n') out += "\\n";
    else out += c;
  }
  return out;
}

std::string unescape_line(const std::string& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '\\' && i + 1 < s.size()) {
      out += s[i + 1] == 'n' ? '\n' : s[i + 1];
      ++i;
    } else {
      out += s[i];
    }
  }
  return out;
}

std::string cache_key(const CheckSpec& spec, const VerifyOptions& opts) {
  return std::string(kReportVersion) + "|" + spec.id + "|field=" +
         opts.field.str() + "|seed=" + std::to_string(opts.seed) +
         "|budget=" + std::to_string(opts.stretch_ops_budget);
}

std::filesystem::path cache_path(const std::string& dir,
                                 const std::string& key) {
  char name[32];
  std::snprintf(name, sizeof name, "%016llx.check",
                (unsigned long long)fnv1a64(key));
  return std::filesystem::path(dir) / name;
}

// Only passing results are cached.  Returns true and fills `res` on a hit.
bool cache_load(const std::string& dir, const std::string& key,
                CheckResult& res) {
  std::ifstream in(cache_path(dir, key));
  if (!in) return false;
  std::string k, verdict, field, computed, expected;
  if (!std::getline(in, k) || k != key) return false;
  if (!std::getline(in, verdict) || verdict != "pass") return false;
  if (!std::getline(in, field)) return false;
  if (!std::getline(in, computed)) return false;
  if (!std::getline(in, expected)) return false;
  FieldSpec fs;
  if (field == "Q") {
    fs = FieldSpec::rationals();
  } else if (field.rfind("F_", 0) == 0) {
    try {
      fs = FieldSpec::prime(std::stoull(field.substr(2)));
    } catch (const std::exception&) {
      return false;
    }
  } else {
    return false;
  }
  res.verdict = Verdict::Pass;
  res.field = fs;
  res.computed = unescape_line(computed);
  res.expected = unescape_line(expected);
  return true;
}

void cache_store(const std::string& dir, const std::string& key,
                 const CheckResult& res) {
  if (res.verdict != Verdict::Pass) return;
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) return;
  std::ofstream out(cache_path(dir, key), std::ios::trunc);
  if (!out) return;
  out << key << "\n"
      << "pass\n"
      << res.field.str() << "\n"
      << escape_line(res.computed) << "\n"
      << escape_line(res.expected) << "\n";
}

CheckResult run_one(const CheckSpec& spec, const VerifyOptions& opts) {
  CheckResult res;
  res.id = spec.id;
  res.statement = spec.statement;
  if (spec.stretch && !opts.stretch) {
    res.verdict = Verdict::Skipped;
    res.skip_reason = "stretch check disabled; run verify with --stretch";
    return res;
  }
  std::string key;
  if (!opts.cache_dir.empty()) {
    key = cache_key(spec, opts);
    if (cache_load(opts.cache_dir, key, res)) return res;
  }
  auto t0 = std::chrono::steady_clock::now();
  try {
    Outcome o = spec.run(opts);
    res.computed = o.computed;
    res.expected = o.expected;
    res.field = o.field;
    res.verdict = o.pass ? Verdict::Pass : Verdict::Fail;
  } catch (const CapExceeded& e) {
    res.verdict = Verdict::Skipped;
    res.skip_reason = e.what();
  } catch (const std::exception& e) {
    res.verdict = Verdict::Fail;
    res.computed = std::string("error: ") + e.what();
  }
  res.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  if (!opts.cache_dir.empty()) cache_store(opts.cache_dir, key, res);
  return res;
}

}  // namespace

std::vector<std::string> known_claim_ids() {
  std::vector<std::string> ids;
  for (const auto& s : registry()) ids.push_back(s.id);
  std::sort(ids.begin(), ids.end());
  return ids;
}

VerificationReport run_verification(const VerifyOptions& opts) {
  auto specs = registry();
  std::vector<CheckSpec> selected;
  if (!opts.claims.empty()) {
    for (const std::string& want : opts.claims) {
      auto it = std::find_if(specs.begin(), specs.end(),
                             [&](const CheckSpec& s) { return s.id == want; });
      if (it == specs.end())
        throw std::invalid_argument("unknown claim id '" + want +
                                    "'; known ids: " +
                                    join(known_claim_ids()));
      selected.push_back(*it);
    }
  } else {
    for (const auto& s : specs) {
      if (opts.suite == SuiteKind::Quick && !(s.quick && !s.stretch)) continue;
      selected.push_back(s);
    }
  }
  // Long checks first so the worker pool packs well.
  std::stable_sort(selected.begin(), selected.end(),
                   [](const CheckSpec& a, const CheckSpec& b) {
                     return a.cost > b.cost;
                   });

  std::vector<CheckResult> results(selected.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= selected.size()) break;
      results[i] = run_one(selected[i], opts);
    }
  };
  std::size_t jobs = opts.jobs;
  if (jobs == 0) {
    jobs = std::thread::hardware_concurrency();
    if (jobs == 0) jobs = 1;
    jobs = std::min<std::size_t>(jobs, 8);
  }
  jobs = std::min(std::max<std::size_t>(jobs, 1), selected.size());
  std::vector<std::thread> pool;
  for (std::size_t i = 0; i + 1 < jobs; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  std::sort(results.begin(), results.end(),
            [](const CheckResult& a, const CheckResult& b) {
              return a.id < b.id;
            });
  VerificationReport report;
  report.version = kReportVersion;
  report.config = opts;
  report.checks = std::move(results);
  return report;
}

std::string report_to_text(const VerificationReport& r) {
  std::ostringstream os;
  os << "verification " << r.version << " (suite "
     << (r.config.suite == SuiteKind::Quick ? "quick" : "full") << ", field "
     << r.config.field.str() << ", seed " << r.config.seed << ")\n";
  std::size_t passed = 0, failed = 0, skipped = 0;
  for (const auto& c : r.checks) {
    char line[64];
    std::snprintf(line, sizeof line, "[%s]", verdict_str(c.verdict).c_str());
    os << line << " " << c.id << "  (" << c.field.str() << ", ";
    std::snprintf(line, sizeof line, "%.1fs", c.elapsed_seconds);
    os << line << ")\n";
    os << "    " << c.statement << "\n";
    switch (c.verdict) {
      case Verdict::Pass:
        ++passed;
        os << "    computed: " << c.computed << "\n";
        break;
      case Verdict::Fail:
        ++failed;
        os << "    computed: " << c.computed << "\n";
        os << "    expected: " << c.expected << "\n";
        break;
      case Verdict::Skipped:
        ++skipped;
        os << "    skipped: " << c.skip_reason << "\n";
        break;
    }
  }
  os << "summary: " << r.checks.size() << " checks, " << passed << " passed, "
     << failed << " failed, " << skipped << " skipped\n";
  return os.str();
}

std::string report_to_json(const VerificationReport& r) {
  nlohmann::ordered_json j;
  j["version"] = r.version;
  nlohmann::ordered_json cfg;
  cfg["suite"] = r.config.suite == SuiteKind::Quick ? "quick" : "full";
  cfg["field"] = r.config.field.str();
  cfg["claims"] = r.config.claims;
  cfg["jobs"] = r.config.jobs;
  cfg["seed"] = r.config.seed;
  cfg["cache_dir"] = r.config.cache_dir;
  cfg["stretch"] = r.config.stretch;
  j["config"] = std::move(cfg);
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const auto& c : r.checks) {
    nlohmann::ordered_json e;
    e["id"] = c.id;
    e["statement"] = c.statement;
    e["computed"] = c.computed;
    e["expected"] = c.expected;
    e["verdict"] = verdict_str(c.verdict);
    e["skip_reason"] = c.skip_reason;
    e["field"] = c.field.str();
    e["elapsed_seconds"] = c.elapsed_seconds;
    checks.push_back(std::move(e));
  }
  j["checks"] = std::move(checks);
  return j.dump(2) + "\n";
}

}  // namespace ginv
