#pragma once

#include "troplift/rational.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace troplift {

/// d x n matrix over the min-plus semiring with finite rational entries.
class TropMatrix {
 public:
  TropMatrix() = default;
  TropMatrix(std::size_t rows, std::size_t cols, const Rational& fill = Rational(0));
  /// Throws DimensionMismatch for ragged input, InvalidArgument when
  /// `symmetric` is set but the entries are not symmetric.
  explicit TropMatrix(std::vector<std::vector<Rational>> entries, bool symmetric = false);

  static TropMatrix from_ints(const std::vector<std::vector<long>>& entries, bool symmetric = false);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool symmetric() const { return symmetric_; }
  /// True when square with entries equal to the transpose, regardless of flag.
  bool is_symmetric_valued() const;
  TropMatrix as_symmetric() const;  // throws InvalidArgument if not symmetric-valued

  const Rational& operator()(std::size_t i, std::size_t j) const { return entries_[i][j]; }
  void set(std::size_t i, std::size_t j, const Rational& v);
  const std::vector<std::vector<Rational>>& entries() const { return entries_; }

  TropMatrix transpose() const;
  TropMatrix submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;
  Rational max_abs() const;

  friend bool operator==(const TropMatrix& a, const TropMatrix& b) {
    return a.entries_ == b.entries_ && a.rows_ == b.rows_ && a.cols_ == b.cols_;
  }
  std::string str() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  bool symmetric_ = false;
  std::vector<std::vector<Rational>> entries_;
};

/// (B ⊙ C)_ij = min_k B_ik + C_kj. Throws DimensionMismatch.
TropMatrix trop_mat_mul(const TropMatrix& b, const TropMatrix& c);

}  // namespace troplift
