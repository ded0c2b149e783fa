#include "troplift/trop_matrix.hpp"

#include "troplift/errors.hpp"

#include <sstream>

namespace troplift {

TropMatrix::TropMatrix(std::size_t rows, std::size_t cols, const Rational& fill)
    : rows_(rows), cols_(cols), entries_(rows, std::vector<Rational>(cols, fill)) {}

TropMatrix::TropMatrix(std::vector<std::vector<Rational>> entries, bool symmetric)
    : rows_(entries.size()), cols_(entries.empty() ? 0 : entries[0].size()), entries_(std::move(entries)) {
  if (rows_ == 0 || cols_ == 0) throw Error(ErrorKind::DimensionMismatch, "empty matrix");
  for (const auto& row : entries_) {
    if (row.size() != cols_) throw Error(ErrorKind::DimensionMismatch, "ragged matrix rows");
  }
  if (symmetric) {
    if (!is_symmetric_valued()) throw Error(ErrorKind::InvalidArgument, "matrix flagged symmetric is not symmetric");
    symmetric_ = true;
  }
}

TropMatrix TropMatrix::from_ints(const std::vector<std::vector<long>>& entries, bool symmetric) {
  std::vector<std::vector<Rational>> e;
  for (const auto& row : entries) {
    std::vector<Rational> r;
    for (long v : row) r.emplace_back(v);
    e.push_back(std::move(r));
  }
  return TropMatrix(std::move(e), symmetric);
}

bool TropMatrix::is_symmetric_valued() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = i + 1; j < cols_; ++j) {
      if (entries_[i][j] != entries_[j][i]) return false;
    }
  }
  return true;
}

TropMatrix TropMatrix::as_symmetric() const { return TropMatrix(entries_, true); }

void TropMatrix::set(std::size_t i, std::size_t j, const Rational& v) {
  entries_.at(i).at(j) = v;
  if (symmetric_) entries_.at(j).at(i) = v;
}

TropMatrix TropMatrix::transpose() const {
  std::vector<std::vector<Rational>> t(cols_, std::vector<Rational>(rows_));
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t[j][i] = entries_[i][j];
  }
  return TropMatrix(std::move(t), symmetric_);
}

TropMatrix TropMatrix::submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const {
  std::vector<std::vector<Rational>> s;
  for (std::size_t i : rows) {
    std::vector<Rational> r;
    for (std::size_t j : cols) r.push_back(entries_.at(i).at(j));
    s.push_back(std::move(r));
  }
  return TropMatrix(std::move(s), symmetric_ && rows == cols);
}

Rational TropMatrix::max_abs() const {
  Rational m = 0;
  for (const auto& row : entries_) {
    for (const auto& v : row) m = std::max(m, v < 0 ? Rational(-v) : v);
  }
  return m;
}

std::string TropMatrix::str() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << to_string(entries_[i][j]);
    os << "]";
  }
  os << "]";
  return os.str();
}

TropMatrix trop_mat_mul(const TropMatrix& b, const TropMatrix& c) {
  if (b.cols() != c.rows()) throw Error(ErrorKind::DimensionMismatch, "inner dimensions differ");
  std::vector<std::vector<Rational>> out(b.rows(), std::vector<Rational>(c.cols()));
  for (std::size_t i = 0; i < b.rows(); ++i) {
    for (std::size_t j = 0; j < c.cols(); ++j) {
      Rational best = b(i, 0) + c(0, j);
      for (std::size_t k = 1; k < b.cols(); ++k) best = std::min(best, Rational(b(i, k) + c(k, j)));
      out[i][j] = best;
    }
  }
  return TropMatrix(std::move(out));
}

}  // namespace troplift
