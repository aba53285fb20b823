#include "ginv/ring.hpp"

#include <algorithm>
#include <cassert>
#include <random>
#include <stdexcept>
#include <string>

namespace ginv {

namespace {

// Mixed-radix layout of exponent tuples: digit i has radix v_i + 1, vertex 1
// most significant.  Returns total size, fills strides.
std::size_t exponent_space(const std::vector<int>& v,
                           std::vector<std::size_t>& stride,
                           std::size_t cap) {
  stride.assign(v.size(), 1);
  std::size_t total = 1;
  for (std::size_t i = v.size(); i-- > 0;) {
    stride[i] = total;
    std::size_t radix = static_cast<std::size_t>(v[i]) + 1;
    if (total > cap / radix + 1) total = cap + 1;  // saturate
    else total *= radix;
    if (total > cap)
      throw CapExceeded("exponent space exceeds cap of " + std::to_string(cap));
  }
  return total;
}

}  // namespace

CoordMode default_mode(const std::vector<int>& v) {
  std::size_t total = 1;
  for (int x : v) {
    total *= static_cast<std::size_t>(x) + 1;
    if (total > (1u << 20)) return CoordMode::SampledEvaluations;
  }
  return CoordMode::FullCoefficients;
}

Scalar eval_at_point(const GraphMonomial& g, const PointTuple& pts,
                     const Field& f) {
  if (static_cast<int>(pts.size()) != g.n())
    throw std::invalid_argument("eval_at_point: wrong number of points");
  Scalar acc = g.sign() < 0 ? f.neg(f.one()) : f.one();
  for (const Edge& e : g.edges()) {
    const auto& [xa, ya] = pts[e.first - 1];
    const auto& [xb, yb] = pts[e.second - 1];
    Scalar bracket = f.sub(f.mul(xa, yb), f.mul(xb, ya));
    acc = f.mul(acc, bracket);
  }
  return acc;
}

std::vector<Scalar> eval_at(const GraphMonomial& g,
                            const std::vector<PointTuple>& samples,
                            const Field& f) {
  std::vector<Scalar> out;
  out.reserve(samples.size());
  for (const PointTuple& pts : samples) out.push_back(eval_at_point(g, pts, f));
  return out;
}

std::vector<long long> expand_dense_int(const GraphMonomial& g,
                                        std::size_t cap) {
  std::vector<int> v = g.valence();
  std::vector<std::size_t> stride;
  std::size_t total = exponent_space(v, stride, cap);
  if (g.edge_count() > 40)
    throw CapExceeded("expansion of > 40 edges");
  std::vector<long long> acc(total, 0), next(total);
  acc[0] = g.sign();
  for (const Edge& e : g.edges()) {
    std::fill(next.begin(), next.end(), 0LL);
    std::size_t sa = stride[e.first - 1], sb = stride[e.second - 1];
    for (std::size_t idx = 0; idx < total; ++idx) {
      long long c = acc[idx];
      if (c == 0) continue;
      next[idx + sa] += c;
      next[idx + sb] -= c;
    }
    acc.swap(next);
  }
  return acc;
}

std::vector<Scalar> bracket_expand(const GraphMonomial& g, const Field& f) {
  std::vector<long long> dense = expand_dense_int(g, 1u << 26);
  std::vector<Scalar> out;
  out.reserve(dense.size());
  for (long long c : dense) out.push_back(f.from_int(c));
  return out;
}

MultidegreeSpace MultidegreeSpace::create(int n, std::vector<int> valence,
                                          FieldSpec field,
                                          const SpaceOptions& opts) {
  MultidegreeSpace s;
  s.n_ = n;
  s.valence_ = std::move(valence);
  s.field_ = field;
  s.basis_ = enumerate_noncrossing(n, s.valence_);
  for (std::size_t i = 0; i < s.basis_.size(); ++i)
    s.index_.emplace(s.basis_[i], i);
  s.mode_ = opts.mode.value_or(default_mode(s.valence_));
  if (s.mode_ == CoordMode::SampledEvaluations) {
    SpanningEnumeration sp =
        enumerate_spanning(n, s.valence_, opts.spanning_cap);
    if (sp.truncated)
      throw CapExceeded("spanning enumeration truncated at " +
                        std::to_string(opts.spanning_cap));
    std::size_t count = sp.graphs.size() + opts.sample_margin;
    Field f(field);
    std::mt19937_64 rng(opts.seed);
    s.samples_.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
      PointTuple pts;
      std::vector<std::uint64_t> used;
      for (int i = 0; i < n; ++i) {
        std::uint64_t draw;
        do {
          draw = f.is_rationals()
                     ? rng() % (1u << 21)
                     : rng() % f.spec().modulus;
        } while (std::find(used.begin(), used.end(), draw) != used.end());
        used.push_back(draw);
        Scalar x = f.is_rationals()
                       ? f.from_int(static_cast<long>(draw) - (1 << 20))
                       : Scalar::residue(draw);
        pts.push_back({x, f.one()});
      }
      s.samples_.push_back(std::move(pts));
    }
  }
  return s;
}

std::size_t MultidegreeSpace::basis_index(const GraphMonomial& g) const {
  auto it = index_.find(g.sign() < 0 ? g.abs() : g);
  if (it == index_.end())
    throw std::invalid_argument("graph is not a basis element");
  return it->second;
}

std::size_t MultidegreeSpace::coord_len() const {
  if (mode_ == CoordMode::SampledEvaluations) return samples_.size();
  std::vector<std::size_t> stride;
  return exponent_space(valence_, stride, 1u << 26);
}

std::vector<Scalar> MultidegreeSpace::coordinates(const GraphMonomial& g) const {
  if (g.valence() != valence_)
    throw std::invalid_argument("coordinates: valence mismatch");
  Field f(field_);
  if (mode_ == CoordMode::FullCoefficients) return bracket_expand(g, f);
  return eval_at(g, samples_, f);
}

GradedDimension graded_dimension(int n, const std::vector<int>& v,
                                 FieldSpec field, const SpaceOptions& opts) {
  GradedDimension out;
  out.noncrossing = enumerate_noncrossing(n, v).size();
  SpanningEnumeration sp = enumerate_spanning(n, v, opts.spanning_cap);
  if (sp.truncated)
    throw CapExceeded("spanning enumeration truncated at " +
                      std::to_string(opts.spanning_cap));
  out.spanning = sp.graphs.size();
  out.mode = opts.mode.value_or(default_mode(v));
  if (sp.graphs.empty()) return out;

  Field f(field);
  if (out.mode == CoordMode::FullCoefficients) {
    std::vector<std::size_t> stride;
    std::size_t len = exponent_space(v, stride, 1u << 26);
    SpanBuilder span(field, len);
    for (const GraphMonomial& g : sp.graphs) span.insert(bracket_expand(g, f));
    out.dimension = span.rank();
  } else {
    SpaceOptions sopts = opts;
    sopts.mode = CoordMode::SampledEvaluations;
    MultidegreeSpace space = MultidegreeSpace::create(n, v, field, sopts);
    SpanBuilder span(field, space.coord_len());
    for (const GraphMonomial& g : sp.graphs)
      span.insert(eval_at(g, space.samples(), f));
    out.dimension = span.rank();
  }
  return out;
}

SymIndex::SymIndex(std::size_t b, int d) : b_(b), d_(d) {
  if (d < 0) throw std::invalid_argument("negative symmetric degree");
  // Size check: C(b + d - 1, d) kept within a sane bound.
  {
    std::size_t est = 1;
    for (int i = 0; i < d; ++i) {
      est = est * (b + d - 1 - i) / (i + 1);
      if (est > 5'000'000)
        throw CapExceeded("Sym^d index too large");
    }
  }
  std::vector<std::size_t> t(d);
  // Weakly decreasing tuples, generated directly in increasing
  // lexicographic order (each position ranges below its predecessor).
  auto rec = [&](auto&& self, int pos, std::size_t hi) -> void {
    if (pos == d) {
      tuples_.push_back(t);
      return;
    }
    for (std::size_t i = 0; i < hi; ++i) {
      t[pos] = i;
      self(self, pos + 1, i + 1);
    }
  };
  if (b > 0 || d == 0) rec(rec, 0, b);
  for (std::size_t i = 0; i < tuples_.size(); ++i) pos_.emplace(tuples_[i], i);
}

std::size_t SymIndex::index_of(std::vector<std::size_t> t) const {
  if (t.size() != static_cast<std::size_t>(d_))
    throw std::invalid_argument("tuple degree mismatch");
  std::sort(t.begin(), t.end(), std::greater<>());
  auto it = pos_.find(t);
  if (it == pos_.end()) throw std::invalid_argument("tuple out of range");
  return it->second;
}

namespace {

// Superposition of the basis graphs named by a tuple.
GraphMonomial tuple_product(const std::vector<GraphMonomial>& basis,
                            const std::vector<std::size_t>& tuple) {
  GraphMonomial acc = basis[tuple[0]];
  for (std::size_t i = 1; i < tuple.size(); ++i)
    acc = superpose(acc, basis[tuple[i]]);
  return acc;
}

}  // namespace

KernelResult relation_kernel(int n, const std::vector<int>& w, int d,
                             FieldSpec field, const KernelOptions& opts) {
  if (d < 2) throw std::invalid_argument("relation_kernel requires d >= 2");
  for (int x : w)
    if (x < 1) throw std::invalid_argument("weights must be positive");
  KernelResult res;
  res.basis = enumerate_noncrossing(n, w);
  if (res.basis.empty())
    throw std::invalid_argument("relation_kernel: R_w is zero");

  std::vector<int> dw(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) dw[i] = d * w[i];
  std::vector<GraphMonomial> target = enumerate_noncrossing(n, dw);
  std::map<GraphMonomial, std::size_t> target_index;
  for (std::size_t i = 0; i < target.size(); ++i)
    target_index.emplace(target[i], i);

  SymIndex sym(res.basis.size(), d);
  res.sym_dim = sym.size();
  res.target_dim = target.size();
  if (res.sym_dim * std::max<std::size_t>(res.target_dim, 1) >
      opts.workload_cap)
    throw CapExceeded("relation_kernel workload " +
                      std::to_string(res.sym_dim) + " x " +
                      std::to_string(res.target_dim) + " exceeds cap");

  Field f(field);
  std::vector<GraphMonomial> products;
  products.reserve(res.sym_dim);
  for (std::size_t j = 0; j < res.sym_dim; ++j)
    products.push_back(tuple_product(res.basis, sym.tuples()[j]));

  // Sparse integer expansions, built lazily (used for the expansion-mode
  // matrix and for the soundness pass).
  std::vector<std::vector<std::pair<std::size_t, long long>>> expansions;
  std::size_t expansion_len = 0;
  auto build_expansions = [&] {
    if (!expansions.empty()) return;
    std::vector<std::size_t> stride;
    expansion_len = exponent_space(dw, stride, 1u << 26);
    expansions.resize(res.sym_dim);
    for (std::size_t j = 0; j < res.sym_dim; ++j) {
      std::vector<long long> dense = expand_dense_int(products[j], 1u << 26);
      for (std::size_t idx = 0; idx < dense.size(); ++idx)
        if (dense[idx] != 0) expansions[j].push_back({idx, dense[idx]});
    }
  };

  std::vector<std::vector<Scalar>> kernel;
  if (opts.expansion_coordinates) {
    build_expansions();
    SparseMatrix m(expansion_len, res.sym_dim, field);
    for (std::size_t j = 0; j < res.sym_dim; ++j)
      for (const auto& [idx, c] : expansions[j]) {
        Scalar s = f.from_int(c);
        if (!f.is_zero(s)) m.set(idx, j, s);
      }
    kernel = kernel_basis(m);
  } else {
    SparseMatrix m(res.target_dim, res.sym_dim, field);
    for (std::size_t j = 0; j < res.sym_dim; ++j) {
      for (const auto& [mono, z] : straighten_graph(products[j])) {
        auto it = target_index.find(mono);
        if (it == target_index.end())
          throw std::logic_error("straightening left the noncrossing span");
        Scalar c = f.from_mpz(z);
        if (!f.is_zero(c)) m.set(it->second, j, c);
      }
    }
    kernel = kernel_basis(m);
  }
  res.image_rank = res.sym_dim - kernel.size();

  if (opts.verify_expansion) {
    // Independent soundness pass: every kernel element, multiplied out and
    // bracket-expanded, must vanish identically.
    build_expansions();
    std::vector<Scalar> image(expansion_len, f.zero());
    for (const auto& vec : kernel) {
      std::fill(image.begin(), image.end(), f.zero());
      for (std::size_t j = 0; j < res.sym_dim; ++j) {
        if (f.is_zero(vec[j])) continue;
        for (const auto& [idx, c] : expansions[j])
          image[idx] = f.add(image[idx], f.mul(vec[j], f.from_int(c)));
      }
      for (const Scalar& s : image)
        if (!f.is_zero(s))
          throw std::logic_error(
              "relation_kernel: kernel element fails expansion check");
    }
  }

  for (const auto& vec : kernel) {
    SymbolicRelation rel(n, d, field);
    for (std::size_t j = 0; j < res.sym_dim; ++j) {
      if (f.is_zero(vec[j])) continue;
      std::vector<GraphMonomial> factors;
      for (std::size_t idx : sym.tuples()[j]) factors.push_back(res.basis[idx]);
      rel.add_term(std::move(factors), vec[j]);
    }
    res.relations.push_back(std::move(rel));
  }
  return res;
}

std::vector<Scalar> relation_coordinates(const SymbolicRelation& rel,
                                         const std::vector<GraphMonomial>& basis,
                                         const SymIndex& sym) {
  Field f(rel.field());
  std::map<GraphMonomial, std::size_t> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], i);
  std::vector<Scalar> out(sym.size(), f.zero());
  for (const auto& [factors, coeff] : rel.terms()) {
    // Straighten each factor, then distribute the product over tuples.
    std::vector<std::vector<std::pair<std::size_t, Scalar>>> parts;
    for (const GraphMonomial& g : factors) {
      std::vector<std::pair<std::size_t, Scalar>> part;
      for (const auto& [mono, z] : straighten_graph(g)) {
        auto it = index.find(mono);
        if (it == index.end())
          throw std::invalid_argument(
              "relation factor straightens outside the given basis");
        part.push_back({it->second, f.from_mpz(z)});
      }
      parts.push_back(std::move(part));
    }
    std::vector<std::pair<std::vector<std::size_t>, Scalar>> acc;
    acc.push_back({{}, coeff});
    for (const auto& part : parts) {
      std::vector<std::pair<std::vector<std::size_t>, Scalar>> next;
      for (const auto& [tuple, c] : acc) {
        for (const auto& [idx, pc] : part) {
          auto t2 = tuple;
          t2.push_back(idx);
          next.push_back({std::move(t2), f.mul(c, pc)});
        }
      }
      acc = std::move(next);
    }
    for (auto& [tuple, c] : acc) {
      std::size_t pos = sym.index_of(tuple);
      out[pos] = f.add(out[pos], c);
    }
  }
  return out;
}

KempeResult kempe_check(int n, const std::vector<int>& w, int k,
                        FieldSpec field, std::uint64_t seed) {
  if (k < 2) throw std::invalid_argument("kempe_check requires k >= 2");
  for (int x : w)
    if (x < 1) throw std::invalid_argument("weights must be positive");
  KempeResult res;
  long total = 0;
  for (int x : w) total += x;
  if (total % 2 != 0) {
    res.generated = true;
    res.vacuous = true;
    return res;
  }
  std::vector<int> kw(w.size()), k1w(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    kw[i] = k * w[i];
    k1w[i] = (k - 1) * w[i];
  }
  std::vector<GraphMonomial> target = enumerate_noncrossing(n, kw);
  res.target_dim = target.size();
  if (target.empty()) {
    res.generated = true;
    res.vacuous = true;
    return res;
  }
  std::vector<GraphMonomial> left = enumerate_noncrossing(n, k1w);
  std::vector<GraphMonomial> right = enumerate_noncrossing(n, w);

  if (field.kind == FieldKind::Rationals) {
    // Evaluation certificate: integer evaluations reduced mod a large
    // prime.  Full rank mod p forces full rank over Q, which proves the
    // products span; only a shortfall needs the exact fallback.
    FieldSpec pf = FieldSpec::prime((1ULL << 61) - 1);
    Field f(pf);
    std::size_t m = target.size() + 32;
    std::mt19937_64 rng(seed);
    std::vector<PointTuple> samples;
    samples.reserve(m);
    for (std::size_t s = 0; s < m; ++s) {
      PointTuple pts;
      std::vector<std::uint64_t> used;
      for (int i = 0; i < n; ++i) {
        std::uint64_t draw;
        do {
          draw = rng() % pf.modulus;
        } while (std::find(used.begin(), used.end(), draw) != used.end());
        used.push_back(draw);
        pts.push_back({Scalar::residue(draw), f.one()});
      }
      samples.push_back(std::move(pts));
    }
    std::vector<std::vector<Scalar>> levals, revals;
    for (const GraphMonomial& g : left) levals.push_back(eval_at(g, samples, f));
    for (const GraphMonomial& g : right) revals.push_back(eval_at(g, samples, f));
    SpanBuilder span(pf, m);
    for (std::size_t i = 0; i < levals.size() && span.rank() < target.size();
         ++i) {
      for (std::size_t j = 0; j < revals.size() && span.rank() < target.size();
           ++j) {
        std::vector<Scalar> prod(m);
        for (std::size_t s = 0; s < m; ++s)
          prod[s] = f.mul(levals[i][s], revals[j][s]);
        span.insert(std::move(prod));
      }
    }
    if (span.rank() == target.size()) {
      res.generated = true;
      res.image_rank = span.rank();
      res.certificate = pf;
      return res;
    }
    // fall through to the exact computation
  }

  std::map<GraphMonomial, std::size_t> target_index;
  for (std::size_t i = 0; i < target.size(); ++i)
    target_index.emplace(target[i], i);
  Field f(field);
  SpanBuilder span(field, target.size());
  for (std::size_t i = 0; i < left.size() && span.rank() < target.size(); ++i) {
    for (std::size_t j = 0; j < right.size() && span.rank() < target.size();
         ++j) {
      GraphMonomial prod = superpose(left[i], right[j]);
      std::vector<Scalar> col(target.size(), f.zero());
      for (const auto& [mono, z] : straighten_graph(prod)) {
        auto it = target_index.find(mono);
        if (it == target_index.end())
          throw std::logic_error("straightening left the noncrossing span");
        col[it->second] = f.from_mpz(z);
      }
      span.insert(std::move(col));
    }
  }
  res.image_rank = span.rank();
  res.generated = span.rank() == target.size();
  res.certificate = field;
  return res;
}

std::vector<GraphPolynomial> linear_relation_space(int n,
                                                   const std::vector<int>& v,
                                                   FieldSpec field,
                                                   const SpaceOptions& opts) {
  SpanningEnumeration sp = enumerate_spanning(n, v, opts.spanning_cap);
  if (sp.truncated)
    throw CapExceeded("spanning enumeration truncated at " +
                      std::to_string(opts.spanning_cap));
  Field f(field);
  std::vector<GraphPolynomial> out;
  if (sp.graphs.empty()) return out;

  CoordMode mode = opts.mode.value_or(default_mode(v));
  std::vector<std::vector<Scalar>> cols;
  cols.reserve(sp.graphs.size());
  if (mode == CoordMode::FullCoefficients) {
    for (const GraphMonomial& g : sp.graphs) cols.push_back(bracket_expand(g, f));
  } else {
    SpaceOptions sopts = opts;
    sopts.mode = CoordMode::SampledEvaluations;
    MultidegreeSpace space = MultidegreeSpace::create(n, v, field, sopts);
    for (const GraphMonomial& g : sp.graphs)
      cols.push_back(eval_at(g, space.samples(), f));
  }
  std::size_t rows = cols.front().size();
  SparseMatrix m = SparseMatrix::from_columns(field, rows, cols);
  for (auto& vec : kernel_basis(m)) {
    GraphPolynomial p(field);
    if (f.is_rationals()) {
      // Clear denominators and divide by the content; first nonzero
      // coefficient positive.
      mpz_class lcm = 1;
      for (const Scalar& s : vec)
        if (sgn(s.rational_value()) != 0)
          mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(),
                  s.rational_value().get_den_mpz_t());
      std::vector<mpz_class> ints;
      ints.reserve(vec.size());
      mpz_class content = 0;
      for (const Scalar& s : vec) {
        mpz_class z = s.rational_value().get_num() * lcm /
                      s.rational_value().get_den();
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), z.get_mpz_t());
        ints.push_back(z);
      }
      if (content == 0) content = 1;
      int lead = 0;
      for (const mpz_class& z : ints)
        if (z != 0) {
          lead = sgn(z);
          break;
        }
      if (lead < 0) content = -content;
      for (std::size_t j = 0; j < ints.size(); ++j)
        p.add_term(sp.graphs[j], f.from_mpq(mpq_class(ints[j] / content)));
    } else {
      for (std::size_t j = 0; j < vec.size(); ++j)
        p.add_term(sp.graphs[j], vec[j]);
    }
    // Soundness: a candidate must actually straighten to zero.
    GraphPolynomial st = straighten(p);
    if (!st.zero())
      throw std::logic_error(
          "linear_relation_space: candidate fails straightening check");
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace ginv
