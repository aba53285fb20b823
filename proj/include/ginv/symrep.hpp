/*
 * Symmetric-group machinery: partitions, hook-length dimensions, character
 * tables by the Murnaghan-Nakayama border-strip recursion, characters of
 * graded pieces via permute-and-straighten traces, symmetric-power
 * plethysms for d = 2, 3, and decomposition into irreducibles.
 *
 * Character values and multiplicities are exact integers throughout.
 */
#pragma once

#include <gmpxx.h>

#include <map>
#include <vector>

#include "ginv/ring.hpp"

namespace ginv {

using Partition = std::vector<int>;  // weakly decreasing positive parts

// All partitions of n in decreasing lexicographic order, (n) first,
// (1,...,1) last.
std::vector<Partition> partitions_of(int n);

mpz_class hook_dimension(const Partition& lambda);

// |conjugacy class| = n! / prod(k^{m_k} m_k!) for cycle type mu.
mpz_class class_size(int n, const Partition& mu);

// Sign of any permutation of cycle type mu: (-1)^(n - #parts).
int class_sign(int n, const Partition& mu);

// Canonical representative: cycles in weakly decreasing length order on
// consecutive labels; returned as the image vector (sigma[i-1] = image of i).
std::vector<int> class_representative(int n, const Partition& mu);

// Cycle type of sigma^k when sigma has cycle type mu.
Partition cycle_type_power(const Partition& mu, int k);

class CharacterTable {
public:
  explicit CharacterTable(int n);  // throws for n > 14

  int n() const { return n_; }
  const std::vector<Partition>& partitions() const { return parts_; }
  std::size_t index_of(const Partition& p) const;  // throws if absent
  const std::vector<mpz_class>& class_sizes() const { return sizes_; }
  // chi[lambda index][class index]
  const mpz_class& value(std::size_t lambda, std::size_t cls) const {
    return chi_[lambda][cls];
  }
  const std::vector<std::vector<mpz_class>>& values() const { return chi_; }

private:
  int n_;
  std::vector<Partition> parts_;
  std::vector<mpz_class> sizes_;
  std::vector<std::vector<mpz_class>> chi_;
};

inline CharacterTable character_table(int n) { return CharacterTable(n); }

// One integer value per cycle type, indexed like partitions_of(n).
struct ClassFunction {
  int n = 0;
  std::vector<mpz_class> values;
};

// Trace of one representative per cycle type acting on the noncrossing
// basis (permute each basis graph, straighten, read off the diagonal
// coefficient).  Requires a symmetric valence c*(1,...,1), since otherwise
// the action does not preserve the graded piece.
ClassFunction module_character(const MultidegreeSpace& space);

// Symmetric-power plethysm for d in {2, 3}:
//   Sym^2: (chi(s)^2 + chi(s^2)) / 2
//   Sym^3: (chi(s)^3 + 3 chi(s) chi(s^2) + 2 chi(s^3)) / 6
ClassFunction sym_power_character(const ClassFunction& chi, int d);

// Multiplicities by the class-size-weighted inner product with the
// irreducible characters.  Throws std::logic_error if any multiplicity
// fails to be a nonnegative integer (an upstream bug, not a math fact).
std::map<Partition, long long> decompose(const ClassFunction& chi);

long long sign_multiplicity(const ClassFunction& chi);

}  // namespace ginv
