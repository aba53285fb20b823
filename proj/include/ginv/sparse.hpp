/*
 * Exact sparse linear algebra over the fields in field.hpp.  Matrices are
 * row-major with each row kept as a column-sorted vector of nonzero entries.
 * Reduction switches to a dense working copy when the input is more than a
 * third full, since sparse row merges lose to flat arrays well before that.
 *
 * The pivot rule is deterministic: in the leftmost column containing a
 * nonzero entry of an unresolved row, take the entry minimizing
 * Field::bit_size, breaking ties by the lowest original row index.
 */
#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "ginv/common.hpp"
#include "ginv/field.hpp"

namespace ginv {

class SparseMatrix {
public:
  using Entry = std::pair<std::size_t, Scalar>;  // (column, value)
  using Row = std::vector<Entry>;

  SparseMatrix(std::size_t nrows, std::size_t ncols, FieldSpec field)
      : nrows_(nrows), ncols_(ncols), field_(field), rows_(nrows) {}

  std::size_t nrows() const { return nrows_; }
  std::size_t ncols() const { return ncols_; }
  const FieldSpec& field() const { return field_; }

  // Setting an exact zero erases any stored entry.
  void set(std::size_t r, std::size_t c, const Scalar& v);
  Scalar get(std::size_t r, std::size_t c) const;  // zero() if absent
  const Row& row(std::size_t r) const { return rows_[r]; }

  std::size_t entry_count() const;
  double density() const;

  void append_row(Row row);  // entries must be column-sorted, nonzero

  static SparseMatrix from_columns(FieldSpec field, std::size_t nrows,
                                   const std::vector<std::vector<Scalar>>& cols);
  static SparseMatrix from_rows(FieldSpec field, std::size_t ncols,
                                const std::vector<std::vector<Scalar>>& rows);

  std::vector<Scalar> apply(const std::vector<Scalar>& v) const;  // M v

private:
  std::size_t nrows_, ncols_;
  FieldSpec field_;
  std::vector<Row> rows_;
};

struct RrefResult {
  SparseMatrix matrix;            // fully reduced; zero rows trail
  std::vector<std::size_t> pivot_cols;
  std::size_t rank = 0;
  // The pivot entries as chosen (before normalization), in elimination
  // order; used by the cross-field rank consistency checks.
  std::vector<Scalar> pivot_values;
};

RrefResult rref(const SparseMatrix& m);

// Basis of the right kernel {x : Mx = 0}, one vector per free column, in
// increasing free-column order.  Size always equals ncols - rank.
std::vector<std::vector<Scalar>> kernel_basis(const SparseMatrix& m);

// Is v in the column span of `columns`?  Throws std::invalid_argument if
// v.size() != columns.nrows().
bool span_contains(const SparseMatrix& columns, const std::vector<Scalar>& v);

// Do two matrices with the same row count have equal column spans?
bool subspace_equal(const SparseMatrix& a, const SparseMatrix& b);

// Incrementally maintained row space in echelon form; used for orbit spans
// and rank computations with early exit.  Rows are stored forward-reduced
// with unit pivots, indexed by pivot column.
class SpanBuilder {
public:
  SpanBuilder(FieldSpec field, std::size_t dim);

  // Reduces v against the current rows; if a nonzero remainder survives it
  // joins the span and insert() returns true.
  bool insert(std::vector<Scalar> v);
  bool contains(const std::vector<Scalar>& v) const;
  // Remainder of v after forward reduction (zero vector iff contained).
  std::vector<Scalar> reduce(std::vector<Scalar> v) const;

  std::size_t rank() const { return rows_.size(); }
  std::size_t dim() const { return dim_; }
  const Field& field() const { return f_; }

  // Rows as a matrix (rank x dim), in increasing pivot-column order.
  SparseMatrix to_matrix() const;

private:
  Field f_;
  std::size_t dim_;
  std::vector<std::vector<Scalar>> rows_;      // insertion order
  std::vector<std::size_t> pivot_cols_;        // parallel to rows_
  std::map<std::size_t, std::size_t> by_col_;  // pivot column -> row index
};

}  // namespace ginv
