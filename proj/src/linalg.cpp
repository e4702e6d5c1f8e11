#include "fsb/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace fsb {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

std::vector<Rational> Matrix::row(std::size_t r) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

Matrix Matrix::transposed() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shapes do not compose");
  Matrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += x * b(k, j);
    }
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix shapes differ");
  Matrix out = a;
  for (std::size_t k = 0; k < out.data_.size(); ++k) out.data_[k] -= b.data_[k];
  return out;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (x != 0) return false;
  return true;
}

std::size_t Matrix::rank() const {
  RowSpace space(cols_);
  for (std::size_t r = 0; r < rows_ && !space.full(); ++r) space.add(row(r));
  return space.rank();
}

void RowSpace::reduce(std::vector<Rational>& v, std::vector<Rational>* combo) const {
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const Rational c = v[pivots_[k]];
    if (c == 0) continue;
    const auto& row = rows_[k];
    for (std::size_t j = pivots_[k]; j < dim_; ++j)
      if (row[j] != 0) v[j] -= c * row[j];
    if (combo) {
      const auto& rc = combos_[k];
      for (std::size_t j = 0; j < rc.size(); ++j)
        if (rc[j] != 0) (*combo)[j] -= c * rc[j];
    }
  }
}

bool RowSpace::add(std::vector<Rational> v) {
  if (v.size() != dim_) throw std::invalid_argument("vector dimension mismatch");
  const std::size_t slot = combos_.empty() ? 0 : combos_.front().size();
  std::vector<Rational> combo(slot + 1);
  combo[slot] = 1;
  reduce(v, &combo);
  std::size_t p = 0;
  while (p < dim_ && v[p] == 0) ++p;
  if (p == dim_) return false;
  const Rational inv = 1 / v[p];
  for (std::size_t j = p; j < dim_; ++j) v[j] *= inv;
  for (auto& c : combo) c *= inv;
  for (auto& rc : combos_) rc.emplace_back(0);
  // Keep reduced echelon form: clear column p in existing rows.
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const Rational c = rows_[k][p];
    if (c == 0) continue;
    for (std::size_t j = p; j < dim_; ++j) rows_[k][j] -= c * v[j];
    for (std::size_t j = 0; j < combo.size(); ++j) combos_[k][j] -= c * combo[j];
  }
  // Insert keeping pivots sorted.
  std::size_t pos = 0;
  while (pos < pivots_.size() && pivots_[pos] < p) ++pos;
  rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(v));
  pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(pos), p);
  combos_.insert(combos_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(combo));
  return true;
}

bool RowSpace::contains(std::vector<Rational> v) const {
  if (v.size() != dim_) throw std::invalid_argument("vector dimension mismatch");
  reduce(v, nullptr);
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

std::vector<Rational> RowSpace::coordinates(std::vector<Rational> v) const {
  if (v.size() != dim_) throw std::invalid_argument("vector dimension mismatch");
  const std::size_t slots = combos_.empty() ? 0 : combos_.front().size();
  std::vector<Rational> combo(slots);
  // v = sum_k c_k row_k with c_k = v[pivot_k] after reduction; accumulate the
  // negated reduction combination.
  reduce(v, &combo);
  for (const auto& x : v)
    if (x != 0) return {};
  for (auto& c : combo) c = -c;
  return combo;
}

}  // namespace fsb
