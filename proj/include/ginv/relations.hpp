/*
 * Degree-d relations among degree-1 generators, represented symbolically: a
 * linear combination of unordered d-tuples of graph monomials (the factors),
 * each tuple standing for the product of its factors.  A relation is an
 * element of Sym^d applied to the degree-1 piece whose image under actual
 * multiplication is the zero invariant.
 *
 * The named constructions (binomial quadrics, the binomial cubic on six
 * points, the alternating cubic on eight and its partial derivatives) live
 * here too, together with orbit spans and the degree-d generation verdict.
 */
#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "ginv/graph.hpp"
#include "ginv/sparse.hpp"

namespace ginv {

class SymbolicRelation {
public:
  SymbolicRelation(int n, int degree, FieldSpec field)
      : n_(n), degree_(degree), field_(field) {}

  // Tuple entries are canonicalized (signs folded into the coefficient,
  // factors sorted descending); all factors must share one valence.
  void add_term(std::vector<GraphMonomial> factors, const Scalar& c);

  int n() const { return n_; }
  int degree() const { return degree_; }
  const FieldSpec& field() const { return field_; }
  const std::map<std::vector<GraphMonomial>, Scalar>& terms() const {
    return terms_;
  }
  bool zero() const { return terms_.empty(); }
  // Common valence of all factors; throws std::logic_error if zero().
  std::vector<int> factor_valence() const;

  // Multiply the terms out and bracket-expand; true iff the result is the
  // zero polynomial.  This is the definition of being a relation.
  bool has_zero_image() const;

  SymbolicRelation apply_permutation(const std::vector<int>& sigma) const;
  SymbolicRelation scaled(const Scalar& c) const;

  bool operator==(const SymbolicRelation& o) const {
    return n_ == o.n_ && degree_ == o.degree_ && field_ == o.field_ &&
           terms_ == o.terms_;
  }

private:
  int n_;
  int degree_;
  FieldSpec field_;
  std::map<std::vector<GraphMonomial>, Scalar> terms_;
};

// --- named relations ---------------------------------------------------

// The binomial quadric on 8 points: two different splittings of one
// multigraph into a pair of perfect matchings.  Both products expand to the
// same bracket polynomial, so the difference is a relation; the two
// unordered pairs differ, so it is nonzero in Sym^2.
SymbolicRelation simple_quadric(int n = 8,
                                FieldSpec field = FieldSpec::rationals());

// Add the same extra edges (a perfect matching on vertices n+1..n') to
// every factor of every term.  Throws if `extra` touches 1..n or fails to
// cover the new vertices exactly once each.
SymbolicRelation extend_relation(const SymbolicRelation& rel,
                                 const std::vector<Edge>& extra);

// The five rotations of one binomial quadric among the degree-(2,...,2)
// generators on 5 points (two Hamiltonian-cycle splittings of the complete
// graph K_5), under the 5-cycle (1 2 3 4 5).
std::vector<SymbolicRelation> del_pezzo_quadrics(
    FieldSpec field = FieldSpec::rationals());

// The binomial cubic on 6 points: two triples of perfect matchings with
// equal total superposition (the two parity classes of bijections between
// {1,3,5} and {2,4,6}).
SymbolicRelation segre_binomial_cubic(FieldSpec field = FieldSpec::rationals());

// Alternating symmetrization of Gamma^3 over S_n, as an element of
// Sym^3 of the degree-1 piece: sum over sigma of sgn(sigma) (sigma Gamma)^3
// with each factor straightened to the noncrossing basis.  Nonzero only for
// n in {6, 8}; for larger even n the sign representation does not occur in
// Sym^3 and the zero relation is returned (certified by character theory
// rather than the n!-term sum).
SymbolicRelation skew_cubic(int n, const GraphMonomial& matching,
                            FieldSpec field = FieldSpec::rationals());
SymbolicRelation skew_cubic(int n, FieldSpec field = FieldSpec::rationals());

// Formal partial derivatives of a degree-3 relation with respect to the
// dual coordinates of a basis of the degree-1 piece.  With no basis given,
// the noncrossing monomial basis is used; otherwise `basis` lists
// straightened degree-1 elements forming a basis, and the derivatives are
// taken in those coordinates and mapped back.  One relation per basis
// element, in basis order.
std::vector<SymbolicRelation> partials(const SymbolicRelation& cubic);
std::vector<SymbolicRelation> partials(const SymbolicRelation& cubic,
                                       const std::vector<GraphPolynomial>& basis);

// --- spans and generation ----------------------------------------------

struct OrbitSpanResult {
  std::size_t dimension = 0;
  std::size_t elements = 0;  // orbit vectors examined
  std::size_t sweeps = 0;    // full generator sweeps until stable
  SpanBuilder span;          // rows in Sym^d coordinates
};

// Span of the S_n-orbit of rel inside Sym^d coordinates of the noncrossing
// basis of the factors' graded piece.  Generated incrementally from the
// transposition (1 2) and the n-cycle, sweeping until one full pass adds
// nothing.
OrbitSpanResult orbit_span(const SymbolicRelation& rel);

enum class GenerationVerdict { Equal, StrictlyContained };

struct GenerationCheck {
  GenerationVerdict verdict = GenerationVerdict::Equal;
  std::size_t kernel2_dim = 0;
  std::size_t kernel_d_dim = 0;
  std::size_t generated_dim = 0;  // dim of degree-(d-2) multiples of kernel 2
  std::size_t defect = 0;         // kernel_d_dim - generated_dim
  // Set when n = 8, d = 3 and the verdict is StrictlyContained: whether
  // adding the alternating cubic fills the defect exactly.
  bool defect_filled_by_skew_cubic = false;
};

// Does degree 2 generate the degree-d part of the relation ideal?  Compares
// relation_kernel(n, 1^n, d) with the span of formal products of kernel-2
// elements by degree-(d-2) monomials, inside Sym^d coordinates.
GenerationCheck generation_check(int n, int d,
                                 FieldSpec field = FieldSpec::rationals());

// --- catalog ------------------------------------------------------------

struct CatalogEntry {
  std::string name;
  SymbolicRelation relation;
  std::string note;
};

// The named relations above with their default representatives, for the
// catalog dump: sign/Plücker linear relations, the binomial quadric and its
// 12-point extension, the five rotated quadrics on 5 points, the binomial
// cubic on 6 points, the alternating cubic on 8 points and one partial.
std::vector<CatalogEntry> relation_catalog(
    FieldSpec field = FieldSpec::rationals());

// One entry per line: `name | n | degree | terms`.
std::string catalog_dump(const std::vector<CatalogEntry>& entries);

// Relation text format, one tuple term per line:
// "<coeff>*[<lit>]*[<lit>]..." with full graph literals; zero prints "0".
std::string relation_to_text(const SymbolicRelation& rel);
SymbolicRelation parse_relation(std::string_view text, int n, int degree,
                                FieldSpec field);

}  // namespace ginv
