/*
 * Rewriting graph polynomials into the noncrossing basis.
 *
 * The elementary move replaces one crossing pair of edges: for canonical
 * edges (p,q), (r,s) with p < r < q < s (the interleaving that makes two
 * chords cross),
 *
 *     [pq][rs] = [pr][qs] + [ps][rq]
 *
 * and all four replacement edges are already in canonical orientation, so
 * both coefficients stay +1.  Each move strictly decreases the total number
 * of crossing pairs, which gives termination and, inductively, nonnegative
 * integer coefficients for the straightening of any canonical graph.
 *
 * straighten() processes a worklist bucketed by crossing count, always
 * expanding a graph from the highest bucket.  Children land strictly lower,
 * so every intermediate graph is expanded at most once per call with its
 * coefficient fully collected — this keeps the rewriting polynomial-sized
 * in the number of reachable graphs instead of branching exponentially.
 */
#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <map>

#include "ginv/graph.hpp"

namespace ginv {

// Hard bound on elementary moves per straighten() call; exceeding it throws
// CapExceeded (it would indicate a termination bug or an absurd input).
inline constexpr std::size_t kStraightenStepCap = 10'000'000;

// Apply the two-term move to one crossing pair of g (indices as returned by
// crossings()).  Throws std::invalid_argument if the pair does not cross.
GraphPolynomial plucker_step(const GraphMonomial& g,
                             std::pair<std::size_t, std::size_t> pair,
                             FieldSpec field = FieldSpec::rationals());

// Integer combination of noncrossing graphs (keys carry sign +1).
using ZCombo = std::map<GraphMonomial, mpz_class>;

// Straightening of a single graph monomial over the integers; the graph's
// sign multiplies the (otherwise nonnegative) coefficients.  Results for
// graphs with at most 16 edges are memoized process-wide (thread safe).
ZCombo straighten_graph(const GraphMonomial& g,
                        std::size_t step_cap = kStraightenStepCap);

GraphPolynomial straighten(const GraphPolynomial& p,
                           std::size_t step_cap = kStraightenStepCap);

// Independent oracle: bracket-expand p, then solve exactly for its
// coordinates against the bracket expansions of the noncrossing graphs of
// the same valence.  Agrees with straighten() coefficientwise.
GraphPolynomial straighten_by_solve(const GraphPolynomial& p);

}  // namespace ginv
