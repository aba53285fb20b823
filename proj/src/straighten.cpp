#include "ginv/straighten.hpp"

#include <algorithm>
#include <cassert>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>

#include "ginv/sparse.hpp"

namespace ginv {

namespace {

std::size_t count_crossings(const std::vector<Edge>& es) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < es.size(); ++i)
    for (std::size_t j = i + 1; j < es.size(); ++j)
      if (edges_cross(es[i], es[j])) ++c;
  return c;
}

// The two replacement edge pairs for a crossing (p,q) x (r,s), p<r<q<s.
// Both children are canonical as written.
void replacements(const Edge& e, const Edge& f, std::pair<Edge, Edge>& c1,
                  std::pair<Edge, Edge>& c2) {
  Edge lo = std::min(e, f), hi = std::max(e, f);
  int p = lo.first, q = lo.second, r = hi.first, s = hi.second;
  assert(p < r && r < q && q < s);
  c1 = {Edge{p, r}, Edge{q, s}};
  c2 = {Edge{p, s}, Edge{r, q}};
}

struct MemoKey {
  int n;
  std::vector<Edge> edges;
  auto operator<=>(const MemoKey&) const = default;
};

std::shared_mutex g_memo_mu;
std::map<MemoKey, ZCombo> g_memo;
constexpr std::size_t kMemoEdgeLimit = 16;

// Straightening of the canonical sign-+1 graph with the given edges.
ZCombo straighten_core(int n, const std::vector<Edge>& top,
                       std::size_t step_cap) {
  std::map<std::vector<Edge>, mpz_class> done;
  // crossing count -> edge list -> collected coefficient
  std::map<std::size_t, std::map<std::vector<Edge>, mpz_class>> pending;

  auto push = [&](std::vector<Edge> es, const mpz_class& c) {
    std::size_t cr = count_crossings(es);
    if (cr == 0) {
      mpz_class& slot = done[std::move(es)];
      slot += c;
    } else {
      mpz_class& slot = pending[cr][std::move(es)];
      slot += c;
      // collected coefficients of canonical graphs never cancel to zero
      // here (they are sums of positives), but keep the map tidy anyway
    }
  };

  push(top, 1);
  std::size_t steps = 0;
  while (!pending.empty()) {
    auto level_it = std::prev(pending.end());
    auto& bucket = level_it->second;
    auto item = std::prev(bucket.end());  // lex-largest edge list
    std::vector<Edge> es = item->first;
    mpz_class coeff = item->second;
    bucket.erase(item);
    if (bucket.empty()) pending.erase(level_it);
    if (coeff == 0) continue;

    if (++steps > step_cap)
      throw CapExceeded("straightening exceeded step cap");

    // Lexicographically largest crossing pair of edges.
    std::size_t bi = 0, bj = 0;
    bool found = false;
    for (std::size_t i = 0; i < es.size(); ++i) {
      for (std::size_t j = i + 1; j < es.size(); ++j) {
        if (!edges_cross(es[i], es[j])) continue;
        if (!found || std::make_pair(es[i], es[j]) >
                          std::make_pair(es[bi], es[bj])) {
          bi = i;
          bj = j;
          found = true;
        }
      }
    }
    assert(found);

    std::pair<Edge, Edge> c1, c2;
    replacements(es[bi], es[bj], c1, c2);
    for (const auto& rep : {c1, c2}) {
      std::vector<Edge> child = es;
      child.erase(child.begin() + bj);
      child.erase(child.begin() + bi);
      child.push_back(rep.first);
      child.push_back(rep.second);
      std::sort(child.begin(), child.end());
      assert(count_crossings(child) < level);
      push(std::move(child), coeff);
    }
  }

  ZCombo out;
  for (auto& [es, c] : done) {
    if (c == 0) continue;
    std::vector<std::pair<int, int>> raw(es.begin(), es.end());
    out.emplace(GraphMonomial::normalize(n, raw), c);
  }
  return out;
}

}  // namespace

GraphPolynomial plucker_step(const GraphMonomial& g,
                             std::pair<std::size_t, std::size_t> pair,
                             FieldSpec field) {
  const auto& es = g.edges();
  if (pair.first >= es.size() || pair.second >= es.size())
    throw std::invalid_argument("plucker_step: edge index out of range");
  if (!edges_cross(es[pair.first], es[pair.second]))
    throw std::invalid_argument("plucker_step: edges do not cross");
  std::pair<Edge, Edge> c1, c2;
  replacements(es[pair.first], es[pair.second], c1, c2);
  Field f(field);
  GraphPolynomial out(field);
  for (const auto& rep : {c1, c2}) {
    std::vector<std::pair<int, int>> raw;
    for (std::size_t i = 0; i < es.size(); ++i)
      if (i != pair.first && i != pair.second) raw.push_back(es[i]);
    raw.push_back(rep.first);
    raw.push_back(rep.second);
    GraphMonomial child = GraphMonomial::normalize(g.n(), raw);
    if (g.sign() < 0) child = child.negated();
    out.add_term(child, f.one());
  }
  return out;
}

ZCombo straighten_graph(const GraphMonomial& g, std::size_t step_cap) {
  if (is_noncrossing(g)) {
    ZCombo out;
    out.emplace(g.abs(), g.sign());
    return out;
  }
  const bool cacheable = g.edge_count() <= kMemoEdgeLimit;
  MemoKey key{g.n(), g.edges()};
  if (cacheable) {
    std::shared_lock lock(g_memo_mu);
    auto it = g_memo.find(key);
    if (it != g_memo.end()) {
      ZCombo out = it->second;
      if (g.sign() < 0)
        for (auto& [mono, c] : out) c = -c;
      return out;
    }
  }
  ZCombo abs_result = straighten_core(g.n(), g.edges(), step_cap);
  if (cacheable) {
    std::unique_lock lock(g_memo_mu);
    g_memo.emplace(std::move(key), abs_result);
  }
  if (g.sign() < 0)
    for (auto& [mono, c] : abs_result) c = -c;
  return abs_result;
}

GraphPolynomial straighten(const GraphPolynomial& p, std::size_t step_cap) {
  Field f(p.field());
  GraphPolynomial out(p.field());
  for (const auto& [g, c] : p.terms()) {
    ZCombo combo = straighten_graph(g, step_cap);
    for (const auto& [mono, z] : combo)
      out.add_term(mono, f.mul(c, f.from_mpz(z)));
  }
  return out;
}

GraphPolynomial straighten_by_solve(const GraphPolynomial& p) {
  Field f(p.field());
  GraphPolynomial out(p.field());
  if (p.zero()) return out;

  const int n = p.n();
  const std::vector<int> v = p.valence();
  std::vector<GraphMonomial> basis = enumerate_noncrossing(n, v);

  // Expansion of p over the field.
  std::map<std::vector<int>, Scalar> rhs;
  for (const auto& [g, c] : p.terms()) {
    for (const auto& [expo, z] : expand_brackets(g)) {
      auto it = rhs.find(expo);
      Scalar add = f.mul(c, f.from_mpz(z));
      if (it == rhs.end())
        rhs.emplace(expo, add);
      else
        it->second = f.add(it->second, add);
    }
  }

  std::vector<std::map<std::vector<int>, mpz_class>> cols;
  cols.reserve(basis.size());
  std::map<std::vector<int>, std::size_t> coord;
  for (const GraphMonomial& b : basis) {
    cols.push_back(expand_brackets(b));
    for (const auto& [expo, z] : cols.back()) coord.emplace(expo, 0);
  }
  for (const auto& [expo, s] : rhs) coord.emplace(expo, 0);
  std::size_t next = 0;
  for (auto& [expo, idx] : coord) idx = next++;

  SparseMatrix aug(coord.size(), basis.size() + 1, p.field());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (const auto& [expo, z] : cols[j])
      aug.set(coord.at(expo), j, f.from_mpz(z));
  for (const auto& [expo, s] : rhs) aug.set(coord.at(expo), basis.size(), s);

  RrefResult r = rref(aug);
  for (std::size_t i = 0; i < r.rank; ++i) {
    std::size_t pc = r.pivot_cols[i];
    if (pc == basis.size())
      throw std::logic_error(
          "straighten_by_solve: input outside the noncrossing span");
    Scalar c = r.matrix.get(i, basis.size());
    if (!f.is_zero(c)) out.add_term(basis[pc], c);
  }
  return out;
}

}  // namespace ginv
