/*
 * Graded pieces R_v of the invariant ring and the linear algebra on them:
 * coordinatization (full bracket coefficients or sampled evaluations),
 * dimensions, multiplication maps Sym^d(R_w) -> R_{dw} with their kernels,
 * and the degree-1 generation test for arbitrary positive weights.
 */
#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "ginv/graph.hpp"
#include "ginv/relations.hpp"
#include "ginv/sparse.hpp"
#include "ginv/straighten.hpp"

namespace ginv {

enum class CoordMode { FullCoefficients, SampledEvaluations };

// Full coefficient vectors are used while the coordinate space (of size
// prod(v_i + 1)) stays within 2^20; beyond that, sampled evaluations.
CoordMode default_mode(const std::vector<int>& v);

struct SpaceOptions {
  std::optional<CoordMode> mode;   // override the size-based default
  std::uint64_t seed = 0;
  std::size_t spanning_cap = 2'000'000;
  std::size_t sample_margin = 32;
};

// One evaluation point per vertex, as a homogeneous pair (x_i, y_i).
using PointTuple = std::vector<std::pair<Scalar, Scalar>>;

// Value of the bracket product at one point tuple (sign included).
Scalar eval_at_point(const GraphMonomial& g, const PointTuple& pts,
                     const Field& f);
// One value per sample.
std::vector<Scalar> eval_at(const GraphMonomial& g,
                            const std::vector<PointTuple>& samples,
                            const Field& f);

// Dense coefficient vector of the bracket expansion, indexed by exponent
// tuples in mixed radix (vertex 1 most significant, digit e_i in
// [0, v_i]).  Throws CapExceeded when the coordinate space exceeds 2^26.
std::vector<Scalar> bracket_expand(const GraphMonomial& g, const Field& f);

// Same expansion with plain machine integers (coefficients are bounded by
// 2^edges, safe under the 40-edge cap).
std::vector<long long> expand_dense_int(const GraphMonomial& g,
                                        std::size_t cap = 1u << 26);

class MultidegreeSpace {
public:
  static MultidegreeSpace create(int n, std::vector<int> valence,
                                 FieldSpec field,
                                 const SpaceOptions& opts = {});

  int n() const { return n_; }
  const std::vector<int>& valence() const { return valence_; }
  const FieldSpec& field_spec() const { return field_; }
  CoordMode mode() const { return mode_; }

  const std::vector<GraphMonomial>& basis() const { return basis_; }
  std::size_t dim() const { return basis_.size(); }
  std::size_t basis_index(const GraphMonomial& g) const;  // abs graph; throws

  std::size_t coord_len() const;
  std::vector<Scalar> coordinates(const GraphMonomial& g) const;
  const std::vector<PointTuple>& samples() const { return samples_; }

private:
  MultidegreeSpace() = default;
  int n_ = 0;
  std::vector<int> valence_;
  FieldSpec field_;
  CoordMode mode_ = CoordMode::FullCoefficients;
  std::vector<GraphMonomial> basis_;
  std::map<GraphMonomial, std::size_t> index_;
  std::vector<PointTuple> samples_;  // empty in FullCoefficients mode
};

struct GradedDimension {
  std::size_t dimension = 0;    // rank of the spanning coordinate matrix
  std::size_t noncrossing = 0;  // |noncrossing graphs| (= dimension, char 0)
  std::size_t spanning = 0;
  CoordMode mode = CoordMode::FullCoefficients;
};

GradedDimension graded_dimension(int n, const std::vector<int>& v,
                                 FieldSpec field = FieldSpec::rationals(),
                                 const SpaceOptions& opts = {});

// Monomial basis of Sym^d on b letters: weakly decreasing d-tuples of
// indices in [0, b), enumerated in increasing lexicographic order.
class SymIndex {
public:
  SymIndex(std::size_t b, int d);
  std::size_t size() const { return tuples_.size(); }
  int degree() const { return d_; }
  std::size_t letters() const { return b_; }
  const std::vector<std::vector<std::size_t>>& tuples() const {
    return tuples_;
  }
  // Sorts the argument descending, then looks it up.
  std::size_t index_of(std::vector<std::size_t> t) const;

private:
  std::size_t b_;
  int d_;
  std::vector<std::vector<std::size_t>> tuples_;
  std::map<std::vector<std::size_t>, std::size_t> pos_;
};

struct KernelOptions {
  bool verify_expansion = true;  // bracket-expand every kernel element
  // Use raw bracket-expansion coordinates for the multiplication matrix
  // instead of straightened noncrossing coordinates.  Slower, but makes no
  // assumption that the noncrossing monomials stay independent — the honest
  // choice in positive characteristic.
  bool expansion_coordinates = false;
  std::size_t workload_cap = 80'000'000;  // |Sym^d| x |target dim| guard
  std::uint64_t seed = 0;
};

struct KernelResult {
  std::vector<GraphMonomial> basis;  // noncrossing basis of R_w
  std::size_t sym_dim = 0;           // dim Sym^d(R_w)
  std::size_t target_dim = 0;        // dim R_{dw} (noncrossing count)
  std::size_t image_rank = 0;
  std::vector<SymbolicRelation> relations;  // basis of the kernel
};

// Kernel of Sym^d(R_w) -> R_{dw}.  Requires d >= 2 and R_w nonzero.
KernelResult relation_kernel(int n, const std::vector<int>& w, int d,
                             FieldSpec field = FieldSpec::rationals(),
                             const KernelOptions& opts = {});

// Coordinates of a relation in the Sym^d monomial basis over the
// noncrossing basis of R_w (factors are straightened as needed).
std::vector<Scalar> relation_coordinates(const SymbolicRelation& rel,
                                         const std::vector<GraphMonomial>& basis,
                                         const SymIndex& sym);

struct KempeResult {
  bool generated = false;
  bool vacuous = false;               // zero weight ring (odd total weight)
  std::size_t target_dim = 0;         // dim R_{kw}
  std::size_t image_rank = 0;
  FieldSpec certificate = FieldSpec::rationals();  // field of the rank proof
};

// Does R_{(k-1)w} (x) R_w surject onto R_{kw}?  Over the rationals a
// full-rank evaluation certificate modulo a large prime already proves
// surjectivity (the integer evaluation matrix can only gain rank over Q);
// only a failed certificate falls back to exact straightening coordinates.
KempeResult kempe_check(int n, const std::vector<int>& w, int k,
                        FieldSpec field = FieldSpec::rationals(),
                        std::uint64_t seed = 0);

// Kernel of the map from the free span of all spanning graphs of valence v
// onto R_v: the linear relations among graph monomials themselves.
// Returned combinations are primitive-integer normalized (first nonzero
// coefficient positive) and each straightens to zero.
std::vector<GraphPolynomial> linear_relation_space(
    int n, const std::vector<int>& v, FieldSpec field = FieldSpec::rationals(),
    const SpaceOptions& opts = {});

}  // namespace ginv
