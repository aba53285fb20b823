#include "ginv/relations.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

#include "ginv/ring.hpp"
#include "ginv/straighten.hpp"
#include "ginv/symrep.hpp"

namespace ginv {

namespace {

int permutation_parity(const std::vector<int>& sigma) {
  int inv = 0;
  for (std::size_t i = 0; i < sigma.size(); ++i)
    for (std::size_t j = i + 1; j < sigma.size(); ++j)
      if (sigma[i] > sigma[j]) ++inv;
  return inv % 2 ? -1 : 1;
}

GraphMonomial cycle_graph(int n, const std::vector<int>& order) {
  std::vector<Edge> es;
  es.reserve(order.size());
  for (std::size_t i = 0; i < order.size(); ++i)
    es.emplace_back(order[i], order[(i + 1) % order.size()]);
  return GraphMonomial::normalize(n, es);
}

void require_zero_image(const SymbolicRelation& r, const char* what) {
  if (!r.has_zero_image())
    throw std::logic_error(std::string(what) +
                           ": image under multiplication is not zero");
}

GraphMonomial tuple_superposition(const std::vector<GraphMonomial>& t) {
  GraphMonomial p = t.front();
  for (std::size_t i = 1; i < t.size(); ++i) p = superpose(p, t[i]);
  return p;
}

// a - b with the coefficient of b corrected for the factors' orientation
// signs, so the two products cancel exactly whenever their superposition
// multigraphs agree.
SymbolicRelation signed_binomial(int n, const std::vector<GraphMonomial>& a,
                                 const std::vector<GraphMonomial>& b,
                                 FieldSpec field, const char* what) {
  if (tuple_superposition(a).abs() != tuple_superposition(b).abs())
    throw std::logic_error(std::string(what) + ": superpositions differ");
  int sa = 1, sb = 1;
  for (const GraphMonomial& g : a) sa *= g.sign();
  for (const GraphMonomial& g : b) sb *= g.sign();
  Field f(field);
  SymbolicRelation r(n, static_cast<int>(a.size()), field);
  r.add_term(a, f.one());
  r.add_term(b, f.from_int(-sa * sb));
  require_zero_image(r, what);
  return r;
}

std::map<GraphMonomial, std::size_t> index_graphs(
    const std::vector<GraphMonomial>& basis) {
  std::map<GraphMonomial, std::size_t> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], i);
  return index;
}

}  // namespace

void SymbolicRelation::add_term(std::vector<GraphMonomial> factors,
                                const Scalar& c) {
  if (static_cast<int>(factors.size()) != degree_)
    throw std::invalid_argument("add_term: tuple length differs from the degree");
  Field f(field_);
  Scalar coeff = c;
  for (GraphMonomial& g : factors) {
    if (g.n() != n_)
      throw std::invalid_argument("add_term: factor on the wrong vertex count");
    if (g.sign() < 0) {
      coeff = f.neg(coeff);
      g = g.abs();
    }
  }
  std::sort(factors.rbegin(), factors.rend());
  std::vector<int> v = factors.front().valence();
  for (const GraphMonomial& g : factors)
    if (g.valence() != v)
      throw std::invalid_argument("add_term: factors of mixed valence");
  if (!terms_.empty() && factor_valence() != v)
    throw std::invalid_argument("add_term: valence differs from existing terms");
  auto [it, fresh] = terms_.try_emplace(std::move(factors), coeff);
  if (!fresh) it->second = f.add(it->second, coeff);
  if (f.is_zero(it->second)) terms_.erase(it);
}

std::vector<int> SymbolicRelation::factor_valence() const {
  if (terms_.empty())
    throw std::logic_error("factor_valence of the zero relation");
  return terms_.begin()->first.front().valence();
}

bool SymbolicRelation::has_zero_image() const {
  if (terms_.empty()) return true;
  Field f(field_);
  std::vector<Scalar> image;
  for (const auto& [tuple, c] : terms_) {
    std::vector<long long> ex = expand_dense_int(tuple_superposition(tuple));
    if (image.empty()) image.assign(ex.size(), f.zero());
    for (std::size_t i = 0; i < ex.size(); ++i)
      if (ex[i] != 0) image[i] = f.add(image[i], f.mul(c, f.from_int(ex[i])));
  }
  for (const Scalar& s : image)
    if (!f.is_zero(s)) return false;
  return true;
}

SymbolicRelation SymbolicRelation::apply_permutation(
    const std::vector<int>& sigma) const {
  SymbolicRelation out(n_, degree_, field_);
  for (const auto& [tuple, c] : terms_) {
    std::vector<GraphMonomial> img;
    img.reserve(tuple.size());
    for (const GraphMonomial& g : tuple)
      img.push_back(ginv::apply_permutation(sigma, g));
    out.add_term(std::move(img), c);
  }
  return out;
}

SymbolicRelation SymbolicRelation::scaled(const Scalar& c) const {
  Field f(field_);
  SymbolicRelation out(n_, degree_, field_);
  for (const auto& [tuple, co] : terms_) out.add_term(tuple, f.mul(co, c));
  return out;
}

SymbolicRelation simple_quadric(int n, FieldSpec field) {
  if (n != 8)
    throw std::invalid_argument("simple_quadric is defined on 8 points");
  auto m = [](std::vector<Edge> es) {
    return GraphMonomial::normalize(8, es);
  };
  GraphMonomial g1 = m({{1, 2}, {3, 4}, {5, 6}, {7, 8}});
  GraphMonomial g2 = m({{1, 4}, {2, 3}, {5, 8}, {6, 7}});
  GraphMonomial g3 = m({{1, 2}, {3, 4}, {5, 8}, {6, 7}});
  GraphMonomial g4 = m({{1, 4}, {2, 3}, {5, 6}, {7, 8}});
  return signed_binomial(8, {g1, g2}, {g3, g4}, field, "simple_quadric");
}

SymbolicRelation extend_relation(const SymbolicRelation& rel,
                                 const std::vector<Edge>& extra) {
  int n = rel.n();
  int nprime = n;
  for (const Edge& e : extra) nprime = std::max({nprime, e.first, e.second});
  std::vector<int> cover(static_cast<std::size_t>(nprime) + 1, 0);
  for (const Edge& e : extra) {
    if (e.first <= n || e.second <= n || e.first < 1 || e.second < 1)
      throw std::invalid_argument(
          "extend_relation: extension edges touch existing vertices");
    ++cover[static_cast<std::size_t>(e.first)];
    ++cover[static_cast<std::size_t>(e.second)];
  }
  for (int v = n + 1; v <= nprime; ++v)
    if (cover[static_cast<std::size_t>(v)] != 1)
      throw std::invalid_argument(
          "extend_relation: extension must match the new vertices exactly once");
  SymbolicRelation out(nprime, rel.degree(), rel.field());
  for (const auto& [tuple, c] : rel.terms()) {
    std::vector<GraphMonomial> lifted;
    lifted.reserve(tuple.size());
    for (const GraphMonomial& g : tuple) {
      std::vector<Edge> es = g.edges();
      es.insert(es.end(), extra.begin(), extra.end());
      lifted.push_back(GraphMonomial::normalize(nprime, es));
    }
    out.add_term(std::move(lifted), c);
  }
  require_zero_image(out, "extend_relation");
  return out;
}

std::vector<SymbolicRelation> del_pezzo_quadrics(FieldSpec field) {
  // Two ways of splitting the complete graph on 5 vertices into a pair of
  // Hamiltonian cycles; the products agree, the unordered pairs do not.
  SymbolicRelation base = signed_binomial(
      5,
      {cycle_graph(5, {1, 2, 3, 4, 5}), cycle_graph(5, {1, 3, 5, 2, 4})},
      {cycle_graph(5, {1, 2, 3, 5, 4}), cycle_graph(5, {1, 3, 4, 2, 5})},
      field, "del_pezzo_quadrics");
  std::vector<int> rho = {2, 3, 4, 5, 1};
  std::vector<SymbolicRelation> out;
  out.reserve(5);
  out.push_back(base);
  for (int k = 1; k < 5; ++k) {
    out.push_back(out.back().apply_permutation(rho));
    require_zero_image(out.back(), "del_pezzo_quadrics");
  }
  return out;
}

SymbolicRelation segre_binomial_cubic(FieldSpec field) {
  auto m = [](std::vector<Edge> es) {
    return GraphMonomial::normalize(6, es);
  };
  // The two parity classes of bijections {1,3,5} -> {2,4,6}, three perfect
  // matchings each, with equal total superposition.
  return signed_binomial(
      6,
      {m({{1, 2}, {3, 4}, {5, 6}}), m({{1, 4}, {2, 5}, {3, 6}}),
       m({{1, 6}, {2, 3}, {4, 5}})},
      {m({{1, 4}, {2, 3}, {5, 6}}), m({{1, 6}, {2, 5}, {3, 4}}),
       m({{1, 2}, {3, 6}, {4, 5}})},
      field, "segre_binomial_cubic");
}

SymbolicRelation skew_cubic(int n, const GraphMonomial& matching,
                            FieldSpec field) {
  if (n < 2 || n % 2 != 0)
    throw std::invalid_argument("skew_cubic: n must be even and positive");
  if (matching.n() != n)
    throw std::invalid_argument("skew_cubic: matching on the wrong vertex count");
  for (int d : matching.valence())
    if (d != 1)
      throw std::invalid_argument("skew_cubic: not a perfect matching");

  if (n > 8) {
    // The alternating sum vanishes identically: the sign character does not
    // occur in the third symmetric power of the degree-1 piece.  Certify
    // that instead of adding up n! terms.
    MultidegreeSpace sp = MultidegreeSpace::create(n, std::vector<int>(n, 1),
                                                   FieldSpec::rationals());
    if (sign_multiplicity(sym_power_character(module_character(sp), 3)) != 0)
      throw std::logic_error("skew_cubic: sign multiplicity unexpectedly nonzero");
    return SymbolicRelation(n, 3, field);
  }

  // sum over sigma of sgn(sigma) (sigma Gamma)^3, grouped by the image
  // matching: cosets of the matching stabilizer contribute with one sign.
  std::map<GraphMonomial, long> weight;
  std::vector<int> sigma(static_cast<std::size_t>(n));
  std::iota(sigma.begin(), sigma.end(), 1);
  GraphMonomial gamma = matching.abs();
  do {
    GraphMonomial img = ginv::apply_permutation(sigma, gamma);
    weight[img.abs()] += permutation_parity(sigma) * img.sign();
  } while (std::next_permutation(sigma.begin(), sigma.end()));

  std::vector<GraphMonomial> basis =
      enumerate_noncrossing(n, std::vector<int>(n, 1));
  std::map<GraphMonomial, std::size_t> index = index_graphs(basis);
  SymIndex sym(basis.size(), 3);
  std::vector<mpz_class> coords(sym.size(), 0);
  for (const auto& [m, w] : weight) {
    if (w == 0) continue;
    std::vector<std::pair<std::size_t, mpz_class>> lin;
    for (const auto& [b, a] : straighten_graph(m))
      lin.emplace_back(index.at(b), a);
    for (std::size_t i = 0; i < lin.size(); ++i)
      for (std::size_t j = i; j < lin.size(); ++j)
        for (std::size_t k = j; k < lin.size(); ++k) {
          long mult = (i == j && j == k) ? 1 : (i == j || j == k) ? 3 : 6;
          coords[sym.index_of({lin[i].first, lin[j].first, lin[k].first})] +=
              lin[i].second * lin[j].second * lin[k].second * (w * mult);
        }
  }

  // Primitive integer form, leading coefficient positive.  Without the
  // content division the whole vector is divisible by the order of the
  // matching stabilizer, which kills it modulo small primes.
  mpz_class content = 0;
  for (const mpz_class& c : coords)
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
  SymbolicRelation out(n, 3, field);
  if (content == 0) return out;
  int lead = 0;
  for (const mpz_class& c : coords)
    if (c != 0) {
      lead = sgn(c);
      break;
    }
  Field f(field);
  for (std::size_t s = 0; s < coords.size(); ++s) {
    if (coords[s] == 0) continue;
    mpz_class c = coords[s] * lead / content;
    const std::vector<std::size_t>& t = sym.tuples()[s];
    out.add_term({basis[t[0]], basis[t[1]], basis[t[2]]}, f.from_mpz(c));
  }
  require_zero_image(out, "skew_cubic");
  return out;
}

SymbolicRelation skew_cubic(int n, FieldSpec field) {
  if (n < 2 || n % 2 != 0)
    throw std::invalid_argument("skew_cubic: n must be even and positive");
  std::vector<Edge> es;
  for (int i = 1; i < n; i += 2) es.emplace_back(i, i + 1);
  return skew_cubic(n, GraphMonomial::normalize(n, es), field);
}

namespace {

// Formal derivative of a degree-3 coordinate vector with respect to letter
// b: each tuple containing b loses one copy, weighted by its multiplicity.
SymbolicRelation coordinate_partial(
    const std::vector<Scalar>& coords, const SymIndex& sym3, std::size_t b,
    const std::vector<GraphMonomial>& letters, int n, const Field& f) {
  SymbolicRelation rel(n, 2, f.spec());
  for (std::size_t s = 0; s < coords.size(); ++s) {
    if (f.is_zero(coords[s])) continue;
    const std::vector<std::size_t>& t = sym3.tuples()[s];
    long count = std::count(t.begin(), t.end(), b);
    if (count == 0) continue;
    std::vector<GraphMonomial> pair;
    bool dropped = false;
    for (std::size_t idx : t) {
      if (idx == b && !dropped) {
        dropped = true;
        continue;
      }
      pair.push_back(letters[idx]);
    }
    rel.add_term(std::move(pair), f.mul(coords[s], f.from_int(count)));
  }
  return rel;
}

}  // namespace

std::vector<SymbolicRelation> partials(const SymbolicRelation& cubic) {
  if (cubic.degree() != 3)
    throw std::invalid_argument("partials: the relation must have degree 3");
  if (cubic.zero())
    throw std::invalid_argument("partials: zero relation has no graded piece");
  int n = cubic.n();
  std::vector<GraphMonomial> basis =
      enumerate_noncrossing(n, cubic.factor_valence());
  SymIndex sym3(basis.size(), 3);
  std::vector<Scalar> coords = relation_coordinates(cubic, basis, sym3);
  Field f(cubic.field());
  std::vector<SymbolicRelation> out;
  out.reserve(basis.size());
  for (std::size_t b = 0; b < basis.size(); ++b) {
    out.push_back(coordinate_partial(coords, sym3, b, basis, n, f));
    require_zero_image(out.back(), "partials");
  }
  return out;
}

std::vector<SymbolicRelation> partials(const SymbolicRelation& cubic,
                                       const std::vector<GraphPolynomial>& basis) {
  if (cubic.degree() != 3)
    throw std::invalid_argument("partials: the relation must have degree 3");
  if (cubic.zero())
    throw std::invalid_argument("partials: zero relation has no graded piece");
  int n = cubic.n();
  std::vector<int> v = cubic.factor_valence();
  std::vector<GraphMonomial> nc = enumerate_noncrossing(n, v);
  std::map<GraphMonomial, std::size_t> index = index_graphs(nc);
  std::size_t t = nc.size();
  if (basis.size() != t)
    throw std::invalid_argument("partials: basis size differs from the dimension");
  Field f(cubic.field());

  // mat[i][j]: coordinate i of the j-th given element; its inverse gives the
  // coordinates of the noncrossing monomials in the given basis.
  std::vector<std::vector<Scalar>> mat(t, std::vector<Scalar>(t, f.zero()));
  for (std::size_t j = 0; j < t; ++j) {
    if (!(basis[j].field() == cubic.field()))
      throw std::invalid_argument("partials: basis over a different field");
    GraphPolynomial s = straighten(basis[j]);
    for (const auto& [g, c] : s.terms()) {
      auto it = index.find(g);
      if (it == index.end())
        throw std::invalid_argument("partials: basis element of the wrong graded piece");
      mat[it->second][j] = c;
    }
  }
  SparseMatrix aug(t, 2 * t, cubic.field());
  for (std::size_t i = 0; i < t; ++i) {
    for (std::size_t j = 0; j < t; ++j) aug.set(i, j, mat[i][j]);
    aug.set(i, t + i, f.one());
  }
  RrefResult red = rref(aug);
  for (std::size_t pc : red.pivot_cols)
    if (pc >= t)
      throw std::invalid_argument("partials: the given elements are not a basis");
  std::vector<std::vector<Scalar>> inv(t, std::vector<Scalar>(t, f.zero()));
  for (std::size_t i = 0; i < t; ++i)
    for (std::size_t j = 0; j < t; ++j) inv[i][j] = red.matrix.get(i, t + j);

  SymIndex sym3(t, 3);
  std::vector<Scalar> nc_coords = relation_coordinates(cubic, nc, sym3);
  // Re-express in the given basis: each noncrossing letter i expands as
  // sum_a inv[a][i] basis_a.
  std::vector<Scalar> alt_coords(sym3.size(), f.zero());
  for (std::size_t s = 0; s < nc_coords.size(); ++s) {
    if (f.is_zero(nc_coords[s])) continue;
    const std::vector<std::size_t>& tp = sym3.tuples()[s];
    for (std::size_t a = 0; a < t; ++a) {
      if (f.is_zero(inv[a][tp[0]])) continue;
      Scalar ca = f.mul(nc_coords[s], inv[a][tp[0]]);
      for (std::size_t b = 0; b < t; ++b) {
        if (f.is_zero(inv[b][tp[1]])) continue;
        Scalar cab = f.mul(ca, inv[b][tp[1]]);
        for (std::size_t c = 0; c < t; ++c) {
          if (f.is_zero(inv[c][tp[2]])) continue;
          std::size_t idx = sym3.index_of({a, b, c});
          alt_coords[idx] = f.add(alt_coords[idx], f.mul(cab, inv[c][tp[2]]));
        }
      }
    }
  }

  std::vector<SymbolicRelation> out;
  out.reserve(t);
  for (std::size_t b = 0; b < t; ++b) {
    // Derivative in the alternative coordinates, then expanded back into
    // graph-monomial pairs through the basis columns.
    SymbolicRelation rel(n, 2, cubic.field());
    for (std::size_t s = 0; s < alt_coords.size(); ++s) {
      if (f.is_zero(alt_coords[s])) continue;
      const std::vector<std::size_t>& tp = sym3.tuples()[s];
      long count = std::count(tp.begin(), tp.end(), b);
      if (count == 0) continue;
      std::vector<std::size_t> pair;
      bool dropped = false;
      for (std::size_t idx : tp) {
        if (idx == b && !dropped) {
          dropped = true;
          continue;
        }
        pair.push_back(idx);
      }
      Scalar w = f.mul(alt_coords[s], f.from_int(count));
      for (std::size_t i = 0; i < t; ++i) {
        if (f.is_zero(mat[i][pair[0]])) continue;
        Scalar wi = f.mul(w, mat[i][pair[0]]);
        for (std::size_t j = 0; j < t; ++j) {
          if (f.is_zero(mat[j][pair[1]])) continue;
          rel.add_term({nc[i], nc[j]}, f.mul(wi, mat[j][pair[1]]));
        }
      }
    }
    require_zero_image(rel, "partials");
    out.push_back(std::move(rel));
  }
  return out;
}

namespace {

using LetterAction = std::vector<std::vector<std::pair<std::size_t, mpz_class>>>;

LetterAction letter_action(const std::vector<int>& sigma,
                           const std::vector<GraphMonomial>& basis,
                           const std::map<GraphMonomial, std::size_t>& index) {
  LetterAction act(basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (const auto& [b, a] : straighten_graph(apply_permutation(sigma, basis[j])))
      act[j].emplace_back(index.at(b), a);
  return act;
}

std::vector<Scalar> apply_letter_action(const LetterAction& act,
                                        const SymIndex& sym,
                                        const std::vector<Scalar>& vec,
                                        const Field& f) {
  std::vector<Scalar> out(sym.size(), f.zero());
  std::vector<std::size_t> pick(static_cast<std::size_t>(sym.degree()));
  for (std::size_t s = 0; s < vec.size(); ++s) {
    if (f.is_zero(vec[s])) continue;
    const std::vector<std::size_t>& tuple = sym.tuples()[s];
    std::function<void(std::size_t, const mpz_class&)> walk =
        [&](std::size_t level, const mpz_class& prod) {
          if (level == tuple.size()) {
            std::size_t idx = sym.index_of(pick);
            out[idx] = f.add(out[idx], f.mul(vec[s], f.from_mpz(prod)));
            return;
          }
          for (const auto& [i, a] : act[tuple[level]]) {
            pick[level] = i;
            walk(level + 1, prod * a);
          }
        };
    walk(0, 1);
  }
  return out;
}

}  // namespace

OrbitSpanResult orbit_span(const SymbolicRelation& rel) {
  if (rel.zero())
    return {0, 0, 0, SpanBuilder(rel.field(), 0)};
  int n = rel.n();
  std::vector<GraphMonomial> basis =
      enumerate_noncrossing(n, rel.factor_valence());
  std::map<GraphMonomial, std::size_t> index = index_graphs(basis);
  SymIndex sym(basis.size(), rel.degree());
  Field f(rel.field());

  std::vector<int> tau(static_cast<std::size_t>(n)), rho(static_cast<std::size_t>(n));
  std::iota(tau.begin(), tau.end(), 1);
  std::swap(tau[0], tau[1]);
  for (int i = 0; i < n; ++i) rho[static_cast<std::size_t>(i)] = i + 2 > n ? 1 : i + 2;
  LetterAction act_tau = letter_action(tau, basis, index);
  LetterAction act_rho = letter_action(rho, basis, index);

  SpanBuilder span(rel.field(), sym.size());
  std::vector<std::vector<Scalar>> reps;
  std::vector<Scalar> v0 = relation_coordinates(rel, basis, sym);
  if (span.insert(v0)) reps.push_back(std::move(v0));
  std::size_t sweeps = 0;
  bool added = !reps.empty();
  while (added) {
    ++sweeps;
    added = false;
    std::size_t end = reps.size();
    for (std::size_t i = 0; i < end; ++i) {
      for (const LetterAction* act : {&act_tau, &act_rho}) {
        std::vector<Scalar> w = apply_letter_action(*act, sym, reps[i], f);
        if (span.insert(w)) {
          reps.push_back(std::move(w));
          added = true;
        }
      }
    }
  }
  return {span.rank(), reps.size(), sweeps, std::move(span)};
}

GenerationCheck generation_check(int n, int d, FieldSpec field) {
  if (d < 3)
    throw std::invalid_argument("generation_check: degree must be at least 3");
  std::vector<int> w(static_cast<std::size_t>(n), 1);
  KernelOptions opts;
  opts.expansion_coordinates = field.kind == FieldKind::PrimeField;
  KernelResult k2 = relation_kernel(n, w, 2, field, opts);
  KernelResult kd = relation_kernel(n, w, d, field, opts);
  if (k2.basis != kd.basis)
    throw std::logic_error("generation_check: inconsistent degree-1 bases");
  const std::vector<GraphMonomial>& basis = k2.basis;
  std::size_t t = basis.size();
  SymIndex sym2(t, 2), symd(t, d), symlow(t, d - 2);
  Field f(field);

  SpanBuilder kernel_span(field, symd.size());
  for (const SymbolicRelation& r : kd.relations)
    if (!kernel_span.insert(relation_coordinates(r, basis, symd)))
      throw std::logic_error("generation_check: degree-d kernel basis is dependent");

  GenerationCheck out;
  out.kernel2_dim = k2.relations.size();
  out.kernel_d_dim = kd.relations.size();

  SpanBuilder generated(field, symd.size());
  for (const SymbolicRelation& r : k2.relations) {
    std::vector<Scalar> v2 = relation_coordinates(r, basis, sym2);
    for (const std::vector<std::size_t>& mono : symlow.tuples()) {
      std::vector<Scalar> prod(symd.size(), f.zero());
      for (std::size_t s = 0; s < v2.size(); ++s) {
        if (f.is_zero(v2[s])) continue;
        std::vector<std::size_t> tuple = sym2.tuples()[s];
        tuple.insert(tuple.end(), mono.begin(), mono.end());
        std::size_t idx = symd.index_of(std::move(tuple));
        prod[idx] = f.add(prod[idx], v2[s]);
      }
      if (!kernel_span.contains(prod))
        throw std::logic_error(
            "generation_check: a degree-2 multiple escaped the degree-d kernel");
      generated.insert(std::move(prod));
    }
  }
  out.generated_dim = generated.rank();
  out.defect = out.kernel_d_dim - out.generated_dim;
  out.verdict = out.defect == 0 ? GenerationVerdict::Equal
                                : GenerationVerdict::StrictlyContained;
  if (n == 8 && d == 3 && out.defect > 0) {
    SymbolicRelation skew = skew_cubic(8, field);
    std::vector<Scalar> sv = relation_coordinates(skew, basis, symd);
    out.defect_filled_by_skew_cubic = kernel_span.contains(sv) &&
                                      generated.insert(sv) &&
                                      generated.rank() == out.kernel_d_dim;
  }
  return out;
}

std::vector<CatalogEntry> relation_catalog(FieldSpec field) {
  Field f(field);
  std::vector<CatalogEntry> out;
  {
    SymbolicRelation r(2, 1, field);
    r.add_term({GraphMonomial::normalize(2, {{1, 2}})}, f.one());
    r.add_term({GraphMonomial::normalize(2, {{2, 1}})}, f.one());
    out.push_back({"SignRelation", r,
                   "reversing an edge negates the monomial; the canonical form "
                   "absorbs the two-term sum, leaving zero"});
  }
  SymbolicRelation pl(4, 1, field);
  pl.add_term({GraphMonomial::normalize(4, {{1, 2}, {3, 4}})}, f.one());
  pl.add_term({GraphMonomial::normalize(4, {{1, 3}, {2, 4}})}, f.from_int(-1));
  pl.add_term({GraphMonomial::normalize(4, {{1, 4}, {2, 3}})}, f.one());
  require_zero_image(pl, "relation_catalog");
  out.push_back({"Plucker", pl, "three-term exchange among the matchings on four points"});
  out.push_back({"ExtendedPlucker", extend_relation(pl, {{5, 6}}),
                 "the same exchange with bystander edge 5-6 on every term"});
  SymbolicRelation sq = simple_quadric(8, field);
  out.push_back({"SimpleQuadric", sq,
                 "two splittings of one multigraph into matching pairs"});
  out.push_back({"ExtendedSimpleQuadric",
                 extend_relation(sq, {{9, 10}, {11, 12}}),
                 "carried to twelve points by bystander edges 9-10 and 11-12"});
  std::vector<SymbolicRelation> dp = del_pezzo_quadrics(field);
  for (std::size_t k = 0; k < dp.size(); ++k)
    out.push_back({"DelPezzoQuadric", dp[k],
                   "rotation " + std::to_string(k) + " of the five-point binomial"});
  out.push_back({"SegreBinomialCubic", segre_binomial_cubic(field),
                 "the two parity classes of matchings between odd and even vertices"});
  SymbolicRelation sk = skew_cubic(8, field);
  out.push_back({"SkewCubic", sk,
                 "alternating symmetrization of a matching cube, primitive integer form"});
  for (SymbolicRelation& p : partials(sk))
    if (!p.zero()) {
      out.push_back({"SkewCubicPartial", std::move(p),
                     "derivative of the alternating cubic along the first basis "
                     "direction with a nonzero derivative"});
      break;
    }
  return out;
}

namespace {

std::string term_string(const Field& f,
                        const std::vector<GraphMonomial>& tuple,
                        const Scalar& c) {
  std::string s = f.str(c);
  for (const GraphMonomial& g : tuple) {
    s += "*[";
    s += to_literal(g);
    s += ']';
  }
  return s;
}

}  // namespace

std::string catalog_dump(const std::vector<CatalogEntry>& entries) {
  std::string out;
  for (const CatalogEntry& e : entries) {
    Field f(e.relation.field());
    out += e.name;
    out += " | ";
    out += std::to_string(e.relation.n());
    out += " | ";
    out += std::to_string(e.relation.degree());
    out += " | ";
    if (e.relation.zero()) {
      out += '0';
    } else {
      bool first = true;
      for (const auto& [tuple, c] : e.relation.terms()) {
        if (!first) out += " + ";
        out += term_string(f, tuple, c);
        first = false;
      }
    }
    out += '\n';
  }
  return out;
}

std::string relation_to_text(const SymbolicRelation& rel) {
  if (rel.zero()) return "0\n";
  Field f(rel.field());
  std::string out;
  for (const auto& [tuple, c] : rel.terms()) {
    out += term_string(f, tuple, c);
    out += '\n';
  }
  return out;
}

SymbolicRelation parse_relation(std::string_view text, int n, int degree,
                                FieldSpec field) {
  Field f(field);
  SymbolicRelation out(n, degree, field);
  std::size_t line_start = 0;
  bool any = false;
  while (line_start < text.size()) {
    std::size_t eol = text.find('\n', line_start);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(line_start, eol - line_start);
    std::size_t off = line_start;
    line_start = eol + 1;
    std::size_t a = line.find_first_not_of(" \t\r");
    if (a == std::string_view::npos) continue;
    std::size_t z = line.find_last_not_of(" \t\r");
    line = line.substr(a, z - a + 1);
    off += a;
    if (line == "0") {
      any = true;
      continue;
    }
    std::size_t star = line.find('*');
    if (star == std::string_view::npos)
      throw ParseError("expected '*' after the coefficient", off + line.size());
    Scalar c;
    try {
      c = f.parse(line.substr(0, star));
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), off);
    }
    std::vector<GraphMonomial> factors;
    std::size_t p = star + 1;
    while (true) {
      while (p < line.size() && line[p] == ' ') ++p;
      if (p >= line.size() || line[p] != '[')
        throw ParseError("expected '[' before a graph literal", off + p);
      std::size_t q = line.find(']', p);
      if (q == std::string_view::npos)
        throw ParseError("unterminated graph literal", off + p);
      try {
        factors.push_back(parse_literal(line.substr(p + 1, q - p - 1)));
      } catch (const ParseError& e) {
        throw ParseError("invalid graph literal", off + p + 1 + e.pos());
      }
      p = q + 1;
      while (p < line.size() && line[p] == ' ') ++p;
      if (p == line.size()) break;
      if (line[p] != '*')
        throw ParseError("expected '*' between factors", off + p);
      ++p;
    }
    if (static_cast<int>(factors.size()) != degree)
      throw ParseError("wrong number of factors for the declared degree", off);
    any = true;
    out.add_term(std::move(factors), c);
  }
  if (!any) throw ParseError("empty relation text", 0);
  return out;
}

}  // namespace ginv
