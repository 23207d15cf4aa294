#include "sympow/linalg.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace sympow {

void Matrix::append_row(const std::vector<Scalar>& row) {
  assert(row.size() == cols_ || rows_ == 0);
  if (rows_ == 0 && cols_ == 0) cols_ = row.size();
  data_.insert(data_.end(), row.begin(), row.end());
  ++rows_;
}

std::vector<Scalar> Matrix::row(std::size_t r) const {
  return {data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_};
}

Matrix Matrix::transposed(const Field& f) const {
  Matrix t(cols_, rows_, f);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

bool Matrix::operator==(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (std::size_t i = 0; i < data_.size(); ++i)
    if (data_[i] != o.data_[i]) return false;
  return true;
}

RrefResult rref(const Matrix& m, const Field& f) {
  RrefResult res;
  res.matrix = m;
  Matrix& a = res.matrix;
  std::size_t lead = 0;
  for (std::size_t col = 0; col < a.cols() && lead < a.rows(); ++col) {
    std::size_t piv = lead;
    while (piv < a.rows() && a.at(piv, col).is_zero()) ++piv;
    if (piv == a.rows()) continue;
    if (piv != lead)
      for (std::size_t c = 0; c < a.cols(); ++c)
        std::swap(a.at(piv, c), a.at(lead, c));
    Scalar inv = a.at(lead, col).inv();
    for (std::size_t c = col; c < a.cols(); ++c) a.at(lead, c) *= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == lead || a.at(r, col).is_zero()) continue;
      Scalar factor = a.at(r, col);
      for (std::size_t c = col; c < a.cols(); ++c)
        a.at(r, c) -= factor * a.at(lead, c);
    }
    res.pivots.push_back(col);
    ++lead;
  }
  res.rank = res.pivots.size();
  return res;
}

std::vector<std::vector<Scalar>> kernel_basis(const Matrix& m, const Field& f) {
  RrefResult r = rref(m, f);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : r.pivots) is_pivot[p] = true;
  std::vector<std::vector<Scalar>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Scalar> v(m.cols(), f.zero());
    v[free] = f.one();
    for (std::size_t i = 0; i < r.pivots.size(); ++i)
      v[r.pivots[i]] = -r.matrix.at(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

void SpanBuilder::reduce(std::vector<Scalar>& row) const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Scalar& c = row[pivots_[i]];
    if (c.is_zero()) continue;
    Scalar factor = c;
    const auto& b = rows_[i];
    for (std::size_t j = pivots_[i]; j < cols_; ++j)
      if (!b[j].is_zero()) row[j] -= factor * b[j];
  }
}

bool SpanBuilder::add(std::vector<Scalar> row) {
  assert(row.size() == cols_);
  reduce(row);
  std::size_t piv = 0;
  while (piv < cols_ && row[piv].is_zero()) ++piv;
  if (piv == cols_) return false;
  Scalar inv = row[piv].inv();
  for (std::size_t j = piv; j < cols_; ++j) row[j] *= inv;
  // back-eliminate to keep the basis in rref
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    Scalar c = rows_[i][piv];
    if (c.is_zero()) continue;
    for (std::size_t j = piv; j < cols_; ++j) rows_[i][j] -= c * row[j];
  }
  rows_.push_back(std::move(row));
  pivots_.push_back(piv);
  return true;
}

bool SpanBuilder::contains(std::vector<Scalar> row) const {
  assert(row.size() == cols_);
  reduce(row);
  return std::all_of(row.begin(), row.end(),
                     [](const Scalar& s) { return s.is_zero(); });
}

std::vector<std::vector<Scalar>> SpanBuilder::canonical_basis() const {
  std::vector<std::size_t> idx(rows_.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(),
            [&](std::size_t a, std::size_t b) { return pivots_[a] < pivots_[b]; });
  std::vector<std::vector<Scalar>> out;
  out.reserve(rows_.size());
  for (std::size_t i : idx) out.push_back(rows_[i]);
  return out;
}

}  // namespace sympow
