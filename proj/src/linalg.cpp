#include "linalg.hpp"

namespace gradecheck {

void DenseMatrix::append_row(const std::vector<FieldElement>& row) {
  if (row.size() != cols_) throw InternalError("appended row has wrong width");
  a_.insert(a_.end(), row.begin(), row.end());
  ++rows_;
}

size_t row_reduce(DenseMatrix& m, std::vector<size_t>* pivot_cols) {
  size_t rank = 0;
  if (pivot_cols) pivot_cols->clear();
  for (size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    size_t sel = rank;
    while (sel < m.rows() && m.at(sel, col).is_zero()) ++sel;
    if (sel == m.rows()) continue;
    if (sel != rank)
      for (size_t j = col; j < m.cols(); ++j) std::swap(m.at(sel, j), m.at(rank, j));
    FieldElement inv = m.at(rank, col).inverse();
    for (size_t j = col; j < m.cols(); ++j) m.at(rank, j) = m.at(rank, j) * inv;
    for (size_t i = 0; i < m.rows(); ++i) {
      if (i == rank || m.at(i, col).is_zero()) continue;
      FieldElement f = m.at(i, col);
      for (size_t j = col; j < m.cols(); ++j)
        m.at(i, j) = m.at(i, j) - f * m.at(rank, j);
    }
    if (pivot_cols) pivot_cols->push_back(col);
    ++rank;
  }
  return rank;
}

std::vector<std::vector<FieldElement>> kernel_basis(DenseMatrix m) {
  std::vector<size_t> pivots;
  size_t rank = row_reduce(m, &pivots);
  std::vector<bool> is_pivot(m.cols(), false);
  for (size_t c : pivots) is_pivot[c] = true;

  std::vector<std::vector<FieldElement>> basis;
  const FieldElement zero = FieldElement::zero(m.field());
  const FieldElement one = FieldElement::one(m.field());
  for (size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<FieldElement> v(m.cols(), zero);
    v[free] = one;
    for (size_t r = 0; r < rank; ++r) v[pivots[r]] = -m.at(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

bool reduce_row_against(std::vector<FieldElement>& row, const DenseMatrix& rref,
                        const std::vector<size_t>& pivot_cols) {
  for (size_t r = 0; r < pivot_cols.size(); ++r) {
    const size_t c = pivot_cols[r];
    if (row[c].is_zero()) continue;
    FieldElement f = row[c];
    for (size_t j = 0; j < row.size(); ++j) row[j] = row[j] - f * rref.at(r, j);
  }
  for (const FieldElement& v : row)
    if (!v.is_zero()) return true;
  return false;
}

}  // namespace gradecheck
