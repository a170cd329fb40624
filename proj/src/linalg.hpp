#pragma once

#include <vector>

#include "field.hpp"

namespace gradecheck {

// Dense exact matrix over the coefficient field. Only the little linear
// algebra the graded computations need: reduced row echelon form and kernels
// of degreewise multiplication maps.
class DenseMatrix {
 public:
  DenseMatrix(size_t rows, size_t cols, const FieldDesc& field)
      : rows_(rows), cols_(cols), field_(field),
        a_(rows * cols, FieldElement::zero(field)) {}

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  const FieldDesc& field() const { return field_; }
  FieldElement& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
  const FieldElement& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }
  void append_row(const std::vector<FieldElement>& row);

 private:
  size_t rows_, cols_;
  FieldDesc field_;
  std::vector<FieldElement> a_;
};

// In-place reduced row echelon form; returns the rank. pivot_cols, when
// given, receives the pivot column of each nonzero row.
size_t row_reduce(DenseMatrix& m, std::vector<size_t>* pivot_cols = nullptr);

// Basis of { v : M v = 0 }.
std::vector<std::vector<FieldElement>> kernel_basis(DenseMatrix m);

// Reduces `row` against an already row-reduced matrix (RREF rows with the
// given pivot columns). Returns true if the residual is nonzero, in which
// case `row` holds the residual.
bool reduce_row_against(std::vector<FieldElement>& row, const DenseMatrix& rref,
                        const std::vector<size_t>& pivot_cols);

}  // namespace gradecheck
