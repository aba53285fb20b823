/*
 * Directed loop-free multigraphs on vertices 1..n, used as bracket monomials:
 * the edge a->b stands for the 2x2 determinant x_a y_b - x_b y_a.  Reversing
 * an edge flips the sign, so every monomial carries a canonical form (each
 * edge stored low->high, edges sorted lexicographically, multiplicity as
 * repetition) together with a sign in {+1,-1}.
 *
 * Two edges (a,b),(c,d) in canonical orientation "cross" when the chords ab
 * and cd intersect inside the circle with 1..n on its boundary in order:
 * a < c < b < d or c < a < d < b.  Edges sharing an endpoint never cross.
 */
#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "ginv/common.hpp"
#include "ginv/field.hpp"

namespace ginv {

using Edge = std::pair<int, int>;  // canonical: first < second, 1-based

class GraphMonomial {
public:
  GraphMonomial() = default;

  // Canonicalizes raw directed edges; throws std::invalid_argument on loops
  // (a == b) or endpoints outside 1..n.
  static GraphMonomial normalize(int n, const std::vector<std::pair<int, int>>& raw);

  int n() const { return n_; }
  int sign() const { return sign_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }

  GraphMonomial abs() const;             // same edges, sign +1
  GraphMonomial negated() const;
  std::vector<int> valence() const;      // degree of each vertex, index 0 = vertex 1

  auto operator<=>(const GraphMonomial&) const = default;

private:
  int n_ = 0;
  int sign_ = 1;
  std::vector<Edge> edges_;
};

// Union of edge multisets; signs multiply.  Throws on vertex-count mismatch.
GraphMonomial superpose(const GraphMonomial& a, const GraphMonomial& b);

bool edges_cross(const Edge& e, const Edge& f);

// All crossing pairs of edge indices (i < j), lexicographically ordered.
std::vector<std::pair<std::size_t, std::size_t>> crossings(const GraphMonomial& g);
bool is_noncrossing(const GraphMonomial& g);

// All noncrossing graphs with the given valence vector, in lexicographic
// order of their edge lists.  Unrealizable valences yield the empty list.
std::vector<GraphMonomial> enumerate_noncrossing(int n, const std::vector<int>& v);

struct SpanningEnumeration {
  std::vector<GraphMonomial> graphs;
  bool truncated = false;  // hit the cap; graphs holds a lex prefix
};

// All loop-free multigraphs with the given valence vector (the spanning set
// of the graded piece), lexicographic, stopping at `cap` graphs.
SpanningEnumeration enumerate_spanning(int n, const std::vector<int>& v,
                                       std::size_t cap);

// sigma has length n; vertex i maps to sigma[i-1].  Must be a permutation of
// 1..n.  The image is renormalized, so the sign tracks edge reversals.
GraphMonomial apply_permutation(const std::vector<int>& sigma,
                                const GraphMonomial& g);

// Expand the product of brackets into monomials in x_1..x_n (with each y_i
// exponent determined as valence_i - x-exponent).  Key = x-exponent vector,
// value = integer coefficient; the graph's sign is included.  Throws
// CapExceeded for graphs with more than 40 edges.
std::map<std::vector<int>, mpz_class> expand_brackets(const GraphMonomial& g);

// Text format: "n=<N>; a-b c-d ..." with tokens separated by whitespace.
// A token written high-low denotes the reversed (negated) edge.  Printing
// encodes an overall sign of -1 by reversing the first edge; parsing and
// printing are exact inverses on canonical output.
std::string to_literal(const GraphMonomial& g);
GraphMonomial parse_literal(std::string_view text);  // throws ParseError

// Linear combinations of same-valence graph monomials.  Keys are stored with
// sign +1; the sign is folded into the coefficient.  Zero coefficients are
// erased, so `terms().empty()` means the zero polynomial.
class GraphPolynomial {
public:
  explicit GraphPolynomial(FieldSpec field) : field_(field) {}

  void add_term(const GraphMonomial& g, const Scalar& c);

  const std::map<GraphMonomial, Scalar>& terms() const { return terms_; }
  const FieldSpec& field() const { return field_; }
  bool zero() const { return terms_.empty(); }

  // n / valence of the terms; throws std::logic_error on the zero polynomial.
  int n() const;
  std::vector<int> valence() const;

  bool operator==(const GraphPolynomial& o) const {
    return field_ == o.field_ && terms_ == o.terms_;
  }

private:
  FieldSpec field_;
  bool shape_set_ = false;
  int n_ = 0;
  std::vector<int> valence_;
  std::map<GraphMonomial, Scalar> terms_;
};

// Polynomial text format: one term per line, "<coeff>*[<graph literal>]",
// e.g. "1*[n=4; 1-2 3-4]".  Exact round trip; the zero polynomial prints
// as the single line "0".
std::string to_text(const GraphPolynomial& p);
GraphPolynomial parse_polynomial(std::string_view text, FieldSpec field);

// One-line display form: "+1·[1-2 3-4] +1·[1-4 2-3]" (edge lists without the
// vertex-count prefix, signed coefficients, U+00B7 separator, U+2212 minus).
std::string to_display(const GraphPolynomial& p);

}  // namespace ginv
