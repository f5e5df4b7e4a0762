#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "beztate/field.hpp"

namespace beztate {

using Vector = std::vector<Scalar>;

/// Sparse exact matrix over a Field.  Only nonzero entries are stored;
/// rows are kept as ordered maps so iteration (and serialization) is
/// deterministic.
class ExactMatrix {
 public:
  using Row = std::map<std::size_t, Scalar>;

  ExactMatrix() = default;
  ExactMatrix(Field field, std::size_t rows, std::size_t cols);

  static ExactMatrix identity(Field field, std::size_t size);
  /// Columns given as dense vectors of length `rows`.
  static ExactMatrix from_columns(Field field, std::size_t rows, const std::vector<Vector>& columns);
  static ExactMatrix from_rows(Field field, std::size_t cols, const std::vector<Vector>& rows);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t nonzeros() const;
  bool is_zero() const { return nonzeros() == 0; }

  Scalar at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const Scalar& v);
  void add_to(std::size_t r, std::size_t c, const Scalar& v);
  const Row& row(std::size_t r) const { return data_[r]; }

  Vector column(std::size_t c) const;
  ExactMatrix transpose() const;
  ExactMatrix scaled(const Scalar& s) const;
  /// Copy of the rectangle starting at (r0, c0).
  ExactMatrix block(std::size_t r0, std::size_t c0, std::size_t nrows, std::size_t ncols) const;
  /// Writes `src` into this matrix with its top-left corner at (r0, c0).
  void set_block(std::size_t r0, std::size_t c0, const ExactMatrix& src);

  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b);

 private:
  void check_index(std::size_t r, std::size_t c) const;

  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Row> data_;
};

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b);
ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b);
Vector apply(const ExactMatrix& m, const Vector& v);

ExactMatrix hconcat(const ExactMatrix& left, const ExactMatrix& right);
ExactMatrix vconcat(const ExactMatrix& top, const ExactMatrix& bottom);

/// Reduced row echelon form together with its pivot columns.
struct RowEchelon {
  ExactMatrix reduced;
  std::vector<std::size_t> pivot_columns;
};

/// Gauss-Jordan elimination.  Columns are scanned left to right and the
/// pivot is the first remaining row with a nonzero entry in that column.
RowEchelon rref(const ExactMatrix& m);

std::size_t rank(const ExactMatrix& m);

/// Basis of the right kernel, returned as the rows of the reduced echelon
/// form of the kernel (each vector has leading entry 1).
std::vector<Vector> kernel_basis(const ExactMatrix& m);

/// Basis of the column space (rows of the reduced echelon form of m^T).
std::vector<Vector> image_basis(const ExactMatrix& m);

/// True iff m is square of full rank.
bool is_nondegenerate_pairing(const ExactMatrix& m);

/// Rank of the column span of `a` intersected with the column span of `b`.
std::size_t intersection_dim(const ExactMatrix& a, const ExactMatrix& b);

}  // namespace beztate
