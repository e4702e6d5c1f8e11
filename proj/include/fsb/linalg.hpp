#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "fsb/numeric.hpp"

namespace fsb {

/// Dense row-major matrix over Q.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<Rational> row(std::size_t r) const;

  Matrix transposed() const;
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix&, const Matrix&) = default;

  bool is_zero() const;
  std::size_t rank() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Incrementally grown row space in reduced echelon form.
class RowSpace {
 public:
  explicit RowSpace(std::size_t dim) : dim_(dim) {}

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }
  bool full() const { return rows_.size() == dim_; }

  /// Adds v; returns false (and leaves the space unchanged) if v already lies in it.
  bool add(std::vector<Rational> v);
  bool contains(std::vector<Rational> v) const;

  /// Coordinates of v in terms of the vectors passed to add(), in insertion
  /// order of the independent ones; empty if v is not in the space.
  std::vector<Rational> coordinates(std::vector<Rational> v) const;

 private:
  void reduce(std::vector<Rational>& v, std::vector<Rational>* combo) const;

  std::size_t dim_;
  std::vector<std::vector<Rational>> rows_;     // echelon rows, pivot entry 1
  std::vector<std::size_t> pivots_;
  std::vector<std::vector<Rational>> combos_;   // row k as combination of inserted vectors
};

}  // namespace fsb
