#pragma once

#include <cstddef>
#include <vector>

#include "cohfm/rational.hpp"

namespace cohfm {

/// Dense exact-rational matrix. Everything in this project is 6x6 or
/// smaller, so there is no sparsity or pivoting cleverness beyond exact
/// Gaussian elimination.
class Matrix {
public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, Rat(0)) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Rat& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

private:
  std::size_t rows_, cols_;
  std::vector<Rat> a_;
};

Matrix mat_mul(const Matrix& a, const Matrix& b);
std::vector<Rat> mat_vec(const Matrix& a, const std::vector<Rat>& v);
std::size_t mat_rank(Matrix a);
// Throws MapError on a non-square or singular input.
Matrix mat_inverse(const Matrix& a);

// The unique dim x dim matrix M with M * xs[i] = ys[i] for all i.
// Throws MapError if the xs do not span (rank-deficient) or if an
// overdetermined system is inconsistent.
Matrix mat_from_pairs(const std::vector<std::vector<Rat>>& xs,
                      const std::vector<std::vector<Rat>>& ys, std::size_t dim);

}  // namespace cohfm
