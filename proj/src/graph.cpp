#include "ginv/graph.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace ginv {

GraphMonomial GraphMonomial::normalize(
    int n, const std::vector<std::pair<int, int>>& raw) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  GraphMonomial g;
  g.n_ = n;
  for (auto [a, b] : raw) {
    if (a < 1 || a > n || b < 1 || b > n)
      throw std::invalid_argument("edge endpoint out of range 1..n");
    if (a == b) throw std::invalid_argument("loop edge " + std::to_string(a));
    if (a < b) {
      g.edges_.push_back({a, b});
    } else {
      g.edges_.push_back({b, a});
      g.sign_ = -g.sign_;
    }
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  return g;
}

GraphMonomial GraphMonomial::abs() const {
  GraphMonomial g = *this;
  g.sign_ = 1;
  return g;
}

GraphMonomial GraphMonomial::negated() const {
  GraphMonomial g = *this;
  g.sign_ = -g.sign_;
  return g;
}

std::vector<int> GraphMonomial::valence() const {
  std::vector<int> v(n_, 0);
  for (const Edge& e : edges_) {
    ++v[e.first - 1];
    ++v[e.second - 1];
  }
  return v;
}

GraphMonomial superpose(const GraphMonomial& a, const GraphMonomial& b) {
  if (a.n() != b.n())
    throw std::invalid_argument("superpose: vertex count mismatch");
  GraphMonomial out;
  std::vector<std::pair<int, int>> raw;
  raw.reserve(a.edge_count() + b.edge_count());
  for (const Edge& e : a.edges()) raw.push_back(e);
  for (const Edge& e : b.edges()) raw.push_back(e);
  out = GraphMonomial::normalize(a.n(), raw);
  if (a.sign() * b.sign() < 0) out = out.negated();
  return out;
}

bool edges_cross(const Edge& e, const Edge& f) {
  int a = e.first, b = e.second, c = f.first, d = f.second;
  return (a < c && c < b && b < d) || (c < a && a < d && d < b);
}

std::vector<std::pair<std::size_t, std::size_t>> crossings(
    const GraphMonomial& g) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  const auto& es = g.edges();
  for (std::size_t i = 0; i < es.size(); ++i)
    for (std::size_t j = i + 1; j < es.size(); ++j)
      if (edges_cross(es[i], es[j])) out.push_back({i, j});
  return out;
}

bool is_noncrossing(const GraphMonomial& g) {
  const auto& es = g.edges();
  for (std::size_t i = 0; i < es.size(); ++i)
    for (std::size_t j = i + 1; j < es.size(); ++j)
      if (edges_cross(es[i], es[j])) return false;
  return true;
}

namespace {

// Backtracking enumeration by lexicographically increasing edge list.  At
// each step the lowest vertex with remaining valence must be an endpoint of
// the next edge, otherwise it can never be completed.
struct DegreeEnum {
  int n = 0;
  bool noncross = false;
  std::size_t cap = 0;
  std::vector<int> rem;
  std::vector<Edge> cur;
  std::vector<GraphMonomial>* out = nullptr;
  bool truncated = false;

  bool feasible() const {
    long total = 0, mx = 0;
    for (int r : rem) {
      total += r;
      mx = std::max<long>(mx, r);
    }
    return total % 2 == 0 && 2 * mx <= total;
  }

  void rec() {
    if (truncated) return;
    int a = 0;
    while (a < n && rem[a] == 0) ++a;
    if (a == n) {
      if (out->size() >= cap) {
        truncated = true;
        return;
      }
      GraphMonomial g = GraphMonomial::normalize(n, cur);
      out->push_back(std::move(g));
      return;
    }
    int va = a + 1;  // 1-based
    int bmin = va + 1;
    if (!cur.empty() && cur.back().first == va)
      bmin = std::max(bmin, cur.back().second);
    for (int vb = bmin; vb <= n; ++vb) {
      if (rem[vb - 1] == 0) continue;
      Edge e{va, vb};
      if (noncross) {
        bool ok = true;
        for (const Edge& f : cur)
          if (edges_cross(e, f)) {
            ok = false;
            break;
          }
        if (!ok) continue;
      }
      --rem[va - 1];
      --rem[vb - 1];
      if (feasible()) {
        cur.push_back(e);
        rec();
        cur.pop_back();
      }
      ++rem[va - 1];
      ++rem[vb - 1];
      if (truncated) return;
    }
  }
};

void check_valence_arg(int n, const std::vector<int>& v) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  if (static_cast<int>(v.size()) != n)
    throw std::invalid_argument("valence vector length != n");
  for (int x : v)
    if (x < 0) throw std::invalid_argument("negative valence entry");
}

}  // namespace

std::vector<GraphMonomial> enumerate_noncrossing(int n,
                                                 const std::vector<int>& v) {
  check_valence_arg(n, v);
  std::vector<GraphMonomial> out;
  DegreeEnum e;
  e.n = n;
  e.noncross = true;
  e.cap = static_cast<std::size_t>(-1);
  e.rem = v;
  e.out = &out;
  if (e.feasible()) e.rec();
  return out;
}

SpanningEnumeration enumerate_spanning(int n, const std::vector<int>& v,
                                       std::size_t cap) {
  check_valence_arg(n, v);
  SpanningEnumeration res;
  DegreeEnum e;
  e.n = n;
  e.noncross = false;
  e.cap = cap;
  e.rem = v;
  e.out = &res.graphs;
  if (e.feasible()) e.rec();
  res.truncated = e.truncated;
  return res;
}

GraphMonomial apply_permutation(const std::vector<int>& sigma,
                                const GraphMonomial& g) {
  int n = g.n();
  if (static_cast<int>(sigma.size()) != n)
    throw std::invalid_argument("permutation length != n");
  std::vector<bool> seen(n, false);
  for (int x : sigma) {
    if (x < 1 || x > n || seen[x - 1])
      throw std::invalid_argument("not a permutation of 1..n");
    seen[x - 1] = true;
  }
  std::vector<std::pair<int, int>> raw;
  raw.reserve(g.edge_count());
  for (const Edge& e : g.edges())
    raw.push_back({sigma[e.first - 1], sigma[e.second - 1]});
  GraphMonomial out = GraphMonomial::normalize(n, raw);
  if (g.sign() < 0) out = out.negated();
  return out;
}

std::map<std::vector<int>, mpz_class> expand_brackets(const GraphMonomial& g) {
  if (g.edge_count() > 40)
    throw CapExceeded("bracket expansion of " +
                      std::to_string(g.edge_count()) + " edges exceeds cap");
  std::map<std::vector<int>, mpz_class> acc;
  acc[std::vector<int>(g.n(), 0)] = g.sign();
  for (const Edge& ed : g.edges()) {
    std::map<std::vector<int>, mpz_class> next;
    for (const auto& [e, c] : acc) {
      std::vector<int> e1 = e;
      ++e1[ed.first - 1];
      next[std::move(e1)] += c;  // x_a y_b
      std::vector<int> e2 = e;
      ++e2[ed.second - 1];
      next[std::move(e2)] -= c;  // - x_b y_a
    }
    for (auto it = next.begin(); it != next.end();)
      it = it->second == 0 ? next.erase(it) : std::next(it);
    acc = std::move(next);
  }
  return acc;
}

std::string to_literal(const GraphMonomial& g) {
  std::ostringstream os;
  os << "n=" << g.n() << ";";
  bool flip_first = g.sign() < 0;
  if (flip_first && g.edges().empty())
    throw std::logic_error("cannot print sign -1 with no edges");
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    const Edge& e = g.edges()[i];
    if (i == 0 && flip_first)
      os << " " << e.second << "-" << e.first;
    else
      os << " " << e.first << "-" << e.second;
  }
  return os.str();
}

GraphMonomial parse_literal(std::string_view text) {
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() &&
           std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  };
  auto parse_int = [&]() -> int {
    std::size_t start = i;
    long v = 0;
    while (i < text.size() &&
           std::isdigit(static_cast<unsigned char>(text[i]))) {
      v = v * 10 + (text[i] - '0');
      if (v > 1000000) throw ParseError("integer too large", start);
      ++i;
    }
    if (i == start) throw ParseError("expected integer", start);
    return static_cast<int>(v);
  };
  skip_ws();
  if (i >= text.size() || text[i] != 'n') throw ParseError("expected 'n'", i);
  ++i;
  if (i >= text.size() || text[i] != '=') throw ParseError("expected '='", i);
  ++i;
  int n = parse_int();
  skip_ws();
  if (i >= text.size() || text[i] != ';') throw ParseError("expected ';'", i);
  ++i;
  std::vector<std::pair<int, int>> raw;
  while (true) {
    skip_ws();
    if (i >= text.size()) break;
    std::size_t tok = i;
    int a = parse_int();
    if (i >= text.size() || text[i] != '-')
      throw ParseError("expected '-' in edge token", i);
    ++i;
    int b = parse_int();
    if (a < 1 || a > n || b < 1 || b > n)
      throw ParseError("edge endpoint out of range 1..n", tok);
    if (a == b) throw ParseError("loop edge", tok);
    raw.push_back({a, b});
  }
  return GraphMonomial::normalize(n, raw);
}

void GraphPolynomial::add_term(const GraphMonomial& g, const Scalar& c) {
  Field f(field_);
  if (f.is_zero(c)) return;
  if (!shape_set_) {
    shape_set_ = true;
    n_ = g.n();
    valence_ = g.valence();
  } else if (g.n() != n_ || g.valence() != valence_) {
    throw std::invalid_argument("inhomogeneous term added to GraphPolynomial");
  }
  GraphMonomial key = g.abs();
  Scalar add = g.sign() < 0 ? f.neg(c) : c;
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(std::move(key), add);
  } else {
    it->second = f.add(it->second, add);
    if (f.is_zero(it->second)) terms_.erase(it);
  }
}

int GraphPolynomial::n() const {
  if (!shape_set_) throw std::logic_error("zero polynomial has no vertex count");
  return n_;
}

std::vector<int> GraphPolynomial::valence() const {
  if (!shape_set_) throw std::logic_error("zero polynomial has no valence");
  return valence_;
}

std::string to_text(const GraphPolynomial& p) {
  if (p.zero()) return "0";
  Field f(p.field());
  std::ostringstream os;
  bool first = true;
  for (const auto& [g, c] : p.terms()) {
    if (!first) os << "\n";
    first = false;
    os << f.str(c) << "*[" << to_literal(g) << "]";
  }
  return os.str();
}

std::string to_display(const GraphPolynomial& p) {
  if (p.zero()) return "0";
  Field f(p.field());
  std::ostringstream os;
  bool first = true;
  for (const auto& [g, c] : p.terms()) {
    if (!first) os << " ";
    first = false;
    std::string cs = f.str(c);
    if (!cs.empty() && cs[0] == '-')
      os << "−" << cs.substr(1);
    else
      os << "+" << cs;
    os << "·[";
    for (std::size_t i = 0; i < g.edges().size(); ++i) {
      const Edge& e = g.edges()[i];
      if (i) os << " ";
      os << e.first << "-" << e.second;
    }
    os << "]";
  }
  return os.str();
}

GraphPolynomial parse_polynomial(std::string_view text, FieldSpec field) {
  GraphPolynomial p(field);
  Field f(field);
  std::size_t line_start = 0;
  bool saw_zero = false, saw_term = false;
  while (line_start <= text.size()) {
    std::size_t eol = text.find('\n', line_start);
    std::string_view line = text.substr(
        line_start, eol == std::string_view::npos ? std::string_view::npos
                                                  : eol - line_start);
    // trim
    std::size_t b = 0, e = line.size();
    while (b < e && std::isspace(static_cast<unsigned char>(line[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(line[e - 1]))) --e;
    line = line.substr(b, e - b);
    if (!line.empty()) {
      if (line == "0") {
        saw_zero = true;
      } else {
        std::size_t star = line.find("*[");
        if (star == std::string_view::npos || line.back() != ']')
          throw ParseError("expected '<coeff>*[<graph literal>]'",
                           line_start + b);
        Scalar c;
        try {
          c = f.parse(line.substr(0, star));
        } catch (const std::invalid_argument& ex) {
          throw ParseError(ex.what(), line_start + b);
        }
        GraphMonomial g;
        try {
          g = parse_literal(line.substr(star + 2, line.size() - star - 3));
        } catch (const ParseError& ex) {
          throw ParseError(ex.what(), line_start + b + star + 2 + ex.pos());
        }
        p.add_term(g, c);
        saw_term = true;
      }
    }
    if (eol == std::string_view::npos) break;
    line_start = eol + 1;
  }
  if (saw_zero && saw_term)
    throw ParseError("'0' line mixed with terms", 0);
  return p;
}

}  // namespace ginv
