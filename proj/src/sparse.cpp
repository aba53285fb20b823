#include "ginv/sparse.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace ginv {

void SparseMatrix::set(std::size_t r, std::size_t c, const Scalar& v) {
  if (r >= nrows_ || c >= ncols_)
    throw std::out_of_range("SparseMatrix::set index out of range");
  Row& row = rows_[r];
  auto it = std::lower_bound(
      row.begin(), row.end(), c,
      [](const Entry& e, std::size_t col) { return e.first < col; });
  Field f(field_);
  bool zero = f.is_zero(v);
  if (it != row.end() && it->first == c) {
    if (zero)
      row.erase(it);
    else
      it->second = v;
  } else if (!zero) {
    row.insert(it, {c, v});
  }
}

Scalar SparseMatrix::get(std::size_t r, std::size_t c) const {
  const Row& row = rows_[r];
  auto it = std::lower_bound(
      row.begin(), row.end(), c,
      [](const Entry& e, std::size_t col) { return e.first < col; });
  if (it != row.end() && it->first == c) return it->second;
  return Field(field_).zero();
}

std::size_t SparseMatrix::entry_count() const {
  std::size_t n = 0;
  for (const Row& r : rows_) n += r.size();
  return n;
}

double SparseMatrix::density() const {
  if (nrows_ == 0 || ncols_ == 0) return 0.0;
  return static_cast<double>(entry_count()) /
         (static_cast<double>(nrows_) * static_cast<double>(ncols_));
}

void SparseMatrix::append_row(Row row) {
  rows_.push_back(std::move(row));
  ++nrows_;
}

SparseMatrix SparseMatrix::from_columns(
    FieldSpec field, std::size_t nrows,
    const std::vector<std::vector<Scalar>>& cols) {
  SparseMatrix m(nrows, cols.size(), field);
  Field f(field);
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != nrows)
      throw std::invalid_argument("column length mismatch");
    for (std::size_t i = 0; i < nrows; ++i)
      if (!f.is_zero(cols[j][i])) m.rows_[i].push_back({j, cols[j][i]});
  }
  return m;
}

SparseMatrix SparseMatrix::from_rows(
    FieldSpec field, std::size_t ncols,
    const std::vector<std::vector<Scalar>>& rows) {
  SparseMatrix m(0, ncols, field);
  Field f(field);
  for (const auto& r : rows) {
    if (r.size() != ncols) throw std::invalid_argument("row length mismatch");
    Row sr;
    for (std::size_t j = 0; j < ncols; ++j)
      if (!f.is_zero(r[j])) sr.push_back({j, r[j]});
    m.append_row(std::move(sr));
  }
  return m;
}

std::vector<Scalar> SparseMatrix::apply(const std::vector<Scalar>& v) const {
  if (v.size() != ncols_)
    throw std::invalid_argument("apply: dimension mismatch");
  Field f(field_);
  std::vector<Scalar> out(nrows_, f.zero());
  for (std::size_t i = 0; i < nrows_; ++i)
    for (const Entry& e : rows_[i])
      out[i] = f.add(out[i], f.mul(e.second, v[e.first]));
  return out;
}

namespace {

// Shared elimination driver.  Both representations expose the same tiny
// interface; the pivot rule and sweep order live here once.
struct SparseRows {
  Field f;
  std::vector<SparseMatrix::Row> rows;

  bool row_zero(std::size_t i) const { return rows[i].empty(); }
  std::size_t lead_col(std::size_t i) const { return rows[i].front().first; }

  Scalar at(std::size_t i, std::size_t c) const {
    const auto& r = rows[i];
    auto it = std::lower_bound(
        r.begin(), r.end(), c,
        [](const SparseMatrix::Entry& e, std::size_t col) { return e.first < col; });
    if (it != r.end() && it->first == c) return it->second;
    return f.zero();
  }

  void scale(std::size_t i, const Scalar& s) {
    for (auto& e : rows[i]) e.second = f.mul(e.second, s);
  }

  // rows[i] -= c * rows[j], sorted merge.
  void axpy(std::size_t i, const Scalar& c, std::size_t j) {
    SparseMatrix::Row out;
    out.reserve(rows[i].size() + rows[j].size());
    auto a = rows[i].begin(), ae = rows[i].end();
    auto b = rows[j].begin(), be = rows[j].end();
    while (a != ae || b != be) {
      if (b == be || (a != ae && a->first < b->first)) {
        out.push_back(*a++);
      } else if (a == ae || b->first < a->first) {
        Scalar v = f.neg(f.mul(c, b->second));
        if (!f.is_zero(v)) out.push_back({b->first, v});
        ++b;
      } else {
        Scalar v = f.sub(a->second, f.mul(c, b->second));
        if (!f.is_zero(v)) out.push_back({a->first, v});
        ++a;
        ++b;
      }
    }
    rows[i] = std::move(out);
  }
};

struct DenseRows {
  Field f;
  std::size_t ncols = 0;
  std::vector<std::vector<Scalar>> rows;
  std::vector<std::size_t> lead;  // first nonzero col, ncols if zero row

  void recompute_lead(std::size_t i, std::size_t from) {
    std::size_t c = from;
    while (c < ncols && f.is_zero(rows[i][c])) ++c;
    lead[i] = c;
  }

  bool row_zero(std::size_t i) const { return lead[i] >= ncols; }
  std::size_t lead_col(std::size_t i) const { return lead[i]; }
  Scalar at(std::size_t i, std::size_t c) const { return rows[i][c]; }

  void scale(std::size_t i, const Scalar& s) {
    for (std::size_t c = lead[i]; c < ncols; ++c)
      if (!f.is_zero(rows[i][c])) rows[i][c] = f.mul(rows[i][c], s);
  }

  void axpy(std::size_t i, const Scalar& c0, std::size_t j) {
    std::size_t start = std::min(lead[i], lead[j]);
    for (std::size_t c = lead[j]; c < ncols; ++c) {
      if (f.is_zero(rows[j][c])) continue;
      rows[i][c] = f.sub(rows[i][c], f.mul(c0, rows[j][c]));
    }
    recompute_lead(i, start);
  }
};

template <class Rows>
void eliminate(Rows& rep, std::size_t nrows, std::size_t ncols,
               const std::vector<std::size_t>& orig_index,
               std::vector<std::size_t>& order,
               std::vector<std::size_t>& pivot_cols,
               std::vector<Scalar>& pivot_values) {
  const Field& f = rep.f;
  std::size_t next = 0;  // rows [0, next) of `order` are settled pivot rows
  while (true) {
    // Leftmost column with a nonzero entry in an unresolved row.
    std::size_t best_col = ncols;
    for (std::size_t k = next; k < nrows; ++k) {
      std::size_t i = order[k];
      if (!rep.row_zero(i)) best_col = std::min(best_col, rep.lead_col(i));
    }
    if (best_col == ncols) break;
    // Among unresolved rows with a nonzero there, minimize the bit-size
    // metric; break ties by the smallest original row index.
    std::size_t best_k = nrows;
    std::size_t best_bits = 0;
    std::size_t best_orig = 0;
    for (std::size_t k = next; k < nrows; ++k) {
      std::size_t i = order[k];
      if (rep.row_zero(i) || rep.lead_col(i) != best_col) continue;
      std::size_t bits = f.bit_size(rep.at(i, best_col));
      std::size_t orig = orig_index[i];
      if (best_k == nrows || bits < best_bits ||
          (bits == best_bits && orig < best_orig)) {
        best_k = k;
        best_bits = bits;
        best_orig = orig;
      }
    }
    std::swap(order[next], order[best_k]);
    std::size_t p = order[next];
    Scalar pv = rep.at(p, best_col);
    pivot_values.push_back(pv);
    rep.scale(p, f.inv(pv));
    for (std::size_t k = 0; k < nrows; ++k) {
      std::size_t i = order[k];
      if (i == p) continue;
      Scalar c = rep.at(i, best_col);
      if (!f.is_zero(c)) rep.axpy(i, c, p);
    }
    pivot_cols.push_back(best_col);
    ++next;
  }
}

}  // namespace

RrefResult rref(const SparseMatrix& m) {
  Field f(m.field());
  const std::size_t nrows = m.nrows(), ncols = m.ncols();
  std::vector<std::size_t> order(nrows), orig(nrows);
  for (std::size_t i = 0; i < nrows; ++i) order[i] = orig[i] = i;
  std::vector<std::size_t> pivot_cols;
  std::vector<Scalar> pivot_values;

  bool dense = m.density() > 1.0 / 3.0;
  SparseMatrix out(nrows, ncols, m.field());
  if (dense) {
    DenseRows rep{f, ncols, {}, {}};
    rep.rows.assign(nrows, std::vector<Scalar>(ncols, f.zero()));
    rep.lead.assign(nrows, ncols);
    for (std::size_t i = 0; i < nrows; ++i) {
      for (const auto& e : m.row(i)) rep.rows[i][e.first] = e.second;
      rep.recompute_lead(i, 0);
    }
    eliminate(rep, nrows, ncols, orig, order, pivot_cols, pivot_values);
    for (std::size_t k = 0; k < nrows; ++k) {
      std::size_t i = order[k];
      for (std::size_t c = rep.lead[i]; c < ncols; ++c)
        if (c < ncols && !f.is_zero(rep.rows[i][c]))
          out.set(k, c, rep.rows[i][c]);
    }
  } else {
    SparseRows rep{f, {}};
    rep.rows.reserve(nrows);
    for (std::size_t i = 0; i < nrows; ++i) rep.rows.push_back(m.row(i));
    eliminate(rep, nrows, ncols, orig, order, pivot_cols, pivot_values);
    for (std::size_t k = 0; k < nrows; ++k)
      for (const auto& e : rep.rows[order[k]]) out.set(k, e.first, e.second);
  }
  const std::size_t rank = pivot_cols.size();
  return RrefResult{std::move(out), std::move(pivot_cols), rank,
                    std::move(pivot_values)};
}

std::vector<std::vector<Scalar>> kernel_basis(const SparseMatrix& m) {
  Field f(m.field());
  RrefResult r = rref(m);
  const std::size_t ncols = m.ncols();
  std::vector<bool> is_pivot(ncols, false);
  for (std::size_t c : r.pivot_cols) is_pivot[c] = true;

  std::vector<std::vector<Scalar>> basis;
  for (std::size_t free_c = 0; free_c < ncols; ++free_c) {
    if (is_pivot[free_c]) continue;
    std::vector<Scalar> v(ncols, f.zero());
    v[free_c] = f.one();
    for (std::size_t i = 0; i < r.rank; ++i) {
      Scalar e = r.matrix.get(i, free_c);
      if (!f.is_zero(e)) v[r.pivot_cols[i]] = f.neg(e);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

bool span_contains(const SparseMatrix& columns, const std::vector<Scalar>& v) {
  if (v.size() != columns.nrows())
    throw std::invalid_argument("span_contains: dimension mismatch");
  Field f(columns.field());
  SparseMatrix aug(columns.nrows(), columns.ncols() + 1, columns.field());
  for (std::size_t i = 0; i < columns.nrows(); ++i)
    for (const auto& e : columns.row(i)) aug.set(i, e.first, e.second);
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!f.is_zero(v[i])) aug.set(i, columns.ncols(), v[i]);
  return rref(aug).rank == rref(columns).rank;
}

bool subspace_equal(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.nrows() != b.nrows())
    throw std::invalid_argument("subspace_equal: ambient dimension mismatch");
  if (!(a.field() == b.field()))
    throw std::invalid_argument("subspace_equal: field mismatch");
  std::size_t ra = rref(a).rank, rb = rref(b).rank;
  if (ra != rb) return false;
  SparseMatrix joint(a.nrows(), a.ncols() + b.ncols(), a.field());
  for (std::size_t i = 0; i < a.nrows(); ++i) {
    for (const auto& e : a.row(i)) joint.set(i, e.first, e.second);
    for (const auto& e : b.row(i)) joint.set(i, a.ncols() + e.first, e.second);
  }
  return rref(joint).rank == ra;
}

SpanBuilder::SpanBuilder(FieldSpec field, std::size_t dim)
    : f_(field), dim_(dim) {}

std::vector<Scalar> SpanBuilder::reduce(std::vector<Scalar> v) const {
  if (v.size() != dim_)
    throw std::invalid_argument("SpanBuilder: dimension mismatch");
  for (const auto& [col, idx] : by_col_) {
    if (f_.is_zero(v[col])) continue;
    Scalar c = v[col];
    const auto& row = rows_[idx];
    for (std::size_t j = col; j < dim_; ++j)
      if (!f_.is_zero(row[j])) v[j] = f_.sub(v[j], f_.mul(c, row[j]));
  }
  return v;
}

bool SpanBuilder::insert(std::vector<Scalar> v) {
  v = reduce(std::move(v));
  std::size_t lead = dim_;
  for (std::size_t j = 0; j < dim_; ++j) {
    if (!f_.is_zero(v[j])) {
      lead = j;
      break;
    }
  }
  if (lead == dim_) return false;
  Scalar inv = f_.inv(v[lead]);
  for (std::size_t j = lead; j < dim_; ++j)
    if (!f_.is_zero(v[j])) v[j] = f_.mul(v[j], inv);
  by_col_[lead] = rows_.size();
  rows_.push_back(std::move(v));
  pivot_cols_.push_back(lead);
  return true;
}

bool SpanBuilder::contains(const std::vector<Scalar>& v) const {
  std::vector<Scalar> r = reduce(v);
  for (std::size_t j = 0; j < dim_; ++j)
    if (!f_.is_zero(r[j])) return false;
  return true;
}

SparseMatrix SpanBuilder::to_matrix() const {
  SparseMatrix m(0, dim_, f_.spec());
  for (const auto& [col, idx] : by_col_) {
    (void)col;
    SparseMatrix::Row r;
    for (std::size_t j = 0; j < dim_; ++j)
      if (!f_.is_zero(rows_[idx][j])) r.push_back({j, rows_[idx][j]});
    m.append_row(std::move(r));
  }
  return m;
}

}  // namespace ginv
