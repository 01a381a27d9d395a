#include "cohfm/matrix.hpp"

#include "cohfm/error.hpp"

namespace cohfm {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw MapError("matrix dimension mismatch in product");
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rat& aik = a.at(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        const Rat& bkj = b.at(k, j);
        if (bkj == 0) continue;
        out.at(i, j) += aik * bkj;
      }
    }
  return out;
}

std::vector<Rat> mat_vec(const Matrix& a, const std::vector<Rat>& v) {
  if (a.cols() != v.size()) throw MapError("matrix/vector dimension mismatch");
  std::vector<Rat> out(a.rows(), Rat(0));
  for (std::size_t j = 0; j < a.cols(); ++j) {
    if (v[j] == 0) continue;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      const Rat& aij = a.at(i, j);
      if (aij == 0) continue;
      out[i] += aij * v[j];
    }
  }
  return out;
}

std::size_t mat_rank(Matrix a) {
  std::size_t rank = 0;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < a.rows() && a.at(pivot, col) == 0) ++pivot;
    if (pivot == a.rows()) continue;
    for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a.at(row, j), a.at(pivot, j));
    const Rat inv = Rat(1) / a.at(row, col);
    for (std::size_t j = col; j < a.cols(); ++j) a.at(row, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == row || a.at(i, col) == 0) continue;
      const Rat f = a.at(i, col);
      for (std::size_t j = col; j < a.cols(); ++j) a.at(i, j) -= f * a.at(row, j);
    }
    ++row;
    ++rank;
  }
  return rank;
}

Matrix mat_inverse(const Matrix& a) {
  if (a.rows() != a.cols()) throw MapError("cannot invert a non-square matrix");
  const std::size_t n = a.rows();
  Matrix work = a;
  Matrix inv = Matrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && work.at(pivot, col) == 0) ++pivot;
    if (pivot == n) throw MapError("matrix is singular");
    if (pivot != col)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(work.at(col, j), work.at(pivot, j));
        std::swap(inv.at(col, j), inv.at(pivot, j));
      }
    const Rat scale = Rat(1) / work.at(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      work.at(col, j) *= scale;
      inv.at(col, j) *= scale;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || work.at(i, col) == 0) continue;
      const Rat f = work.at(i, col);
      for (std::size_t j = 0; j < n; ++j) {
        work.at(i, j) -= f * work.at(col, j);
        inv.at(i, j) -= f * inv.at(col, j);
      }
    }
  }
  return inv;
}

Matrix mat_from_pairs(const std::vector<std::vector<Rat>>& xs,
                      const std::vector<std::vector<Rat>>& ys, std::size_t dim) {
  if (xs.size() != ys.size()) throw MapError("input/output pair count mismatch");
  for (const auto& x : xs)
    if (x.size() != dim) throw MapError("input vector has wrong dimension");
  for (const auto& y : ys)
    if (y.size() != dim) throw MapError("output vector has wrong dimension");

  // Select dim independent input columns by running elimination on copies.
  std::vector<std::size_t> chosen;
  Matrix probe(dim, 0);
  for (std::size_t i = 0; i < xs.size() && chosen.size() < dim; ++i) {
    Matrix trial(dim, chosen.size() + 1);
    for (std::size_t c = 0; c < chosen.size(); ++c)
      for (std::size_t r = 0; r < dim; ++r) trial.at(r, c) = xs[chosen[c]][r];
    for (std::size_t r = 0; r < dim; ++r) trial.at(r, chosen.size()) = xs[i][r];
    if (mat_rank(trial) == chosen.size() + 1) chosen.push_back(i);
  }
  if (chosen.size() < dim)
    throw MapError("rank-deficient input set: inputs span only " +
                   std::to_string(chosen.size()) + " of " + std::to_string(dim) + " dimensions");

  Matrix x_sub(dim, dim), y_sub(dim, dim);
  for (std::size_t c = 0; c < dim; ++c)
    for (std::size_t r = 0; r < dim; ++r) {
      x_sub.at(r, c) = xs[chosen[c]][r];
      y_sub.at(r, c) = ys[chosen[c]][r];
    }
  Matrix m = mat_mul(y_sub, mat_inverse(x_sub));

  // Overdetermined systems must agree with the solved map exactly.
  for (std::size_t i = 0; i < xs.size(); ++i)
    if (mat_vec(m, xs[i]) != ys[i])
      throw MapError("inconsistent pair set: pair " + std::to_string(i) +
                     " disagrees with the map determined by the others");
  return m;
}

}  // namespace cohfm
