#pragma once

#include <cstddef>
#include <vector>

#include "pqs/mpoly.hpp"

namespace pqs {

/// Row and column index sets of a square submatrix.
struct IndexPair {
  std::vector<std::size_t> U;
  std::vector<std::size_t> W;
  bool operator==(const IndexPair&) const = default;
};

/// Row-major matrix of polynomials sharing one variable count.
template <class C>
class PolyMatrix {
 public:
  using Entry = MPoly<C>;

  PolyMatrix() = default;
  PolyMatrix(std::size_t rows, std::size_t cols, std::size_t nvars)
      : rows_(rows), cols_(cols), nvars_(nvars), e_(rows * cols, Entry(nvars)) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t nvars() const { return nvars_; }

  Entry& at(std::size_t i, std::size_t j) {
    require(i < rows_ && j < cols_, ErrorKind::Dimension, "matrix index out of range");
    return e_[i * cols_ + j];
  }
  const Entry& at(std::size_t i, std::size_t j) const {
    require(i < rows_ && j < cols_, ErrorKind::Dimension, "matrix index out of range");
    return e_[i * cols_ + j];
  }
  /// Stores `v`, checking the variable count.
  void set(std::size_t i, std::size_t j, Entry v) {
    require(v.nvars() == nvars_, ErrorKind::Dimension, "entry variable count mismatch");
    at(i, j) = std::move(v);
  }

  PolyMatrix transposed() const {
    PolyMatrix t(cols_, rows_, nvars_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
    require(a.cols_ == b.rows_, ErrorKind::Shape, "matrix product shape mismatch");
    PolyMatrix r(a.rows_, b.cols_, a.nvars_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < b.cols_; ++j) {
        Entry s(a.nvars_);
        for (std::size_t k = 0; k < a.cols_; ++k) s += a.at(i, k) * b.at(k, j);
        r.at(i, j) = std::move(s);
      }
    return r;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0, nvars_ = 0;
  std::vector<Entry> e_;
};

/// Coefficients of det(lambda I - M), highest first (Berkowitz, division-free).
template <class C>
std::vector<MPoly<C>> charpoly_berkowitz(const PolyMatrix<C>& M) {
  require(M.rows() == M.cols(), ErrorKind::Shape, "characteristic polynomial of a non-square matrix");
  using E = MPoly<C>;
  std::size_t n = M.rows(), nv = M.nvars();
  E one(nv, scalar_one<C>());
  std::vector<E> v{one};
  for (std::size_t k = 0; k < n; ++k) {
    // A_k = [[A, S],[R, a]] with A the leading k x k block.
    std::vector<E> col{one, -M.at(k, k)};
    // powers: w = A^t S, starting with S
    std::vector<E> w(k, E(nv));
    for (std::size_t i = 0; i < k; ++i) w[i] = M.at(i, k);
    for (std::size_t t = 0; t + 1 <= k && k > 0; ++t) {
      E rs(nv);
      for (std::size_t i = 0; i < k; ++i) rs += M.at(k, i) * w[i];
      col.push_back(-rs);
      if (t + 1 == k) break;
      std::vector<E> nw(k, E(nv));
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) nw[i] += M.at(i, j) * w[j];
      w = std::move(nw);
    }
    // Toeplitz (k+2) x (k+1) lower-triangular product with v (length k+1).
    std::vector<E> nv_(k + 2, E(nv));
    for (std::size_t i = 0; i < k + 2; ++i)
      for (std::size_t j = 0; j <= i && j < k + 1; ++j) nv_[i] += col[i - j] * v[j];
    v = std::move(nv_);
  }
  return v;
}

/// Division-free determinant; the 0 x 0 determinant is 1.
template <class C>
MPoly<C> det(const PolyMatrix<C>& M) {
  require(M.rows() == M.cols(), ErrorKind::Shape, "determinant of a non-square matrix");
  auto v = charpoly_berkowitz(M);
  MPoly<C> d = v.back();
  return (M.rows() % 2 == 0) ? d : -d;
}

template <class C>
PolyMatrix<C> submatrix(const PolyMatrix<C>& M, const IndexPair& p) {
  PolyMatrix<C> s(p.U.size(), p.W.size(), M.nvars());
  for (std::size_t i = 0; i < p.U.size(); ++i)
    for (std::size_t j = 0; j < p.W.size(); ++j) s.at(i, j) = M.at(p.U[i], p.W[j]);
  return s;
}

/// Matrix with row i and column j removed.
template <class C>
PolyMatrix<C> minor_matrix(const PolyMatrix<C>& M, std::size_t i, std::size_t j) {
  IndexPair p;
  for (std::size_t r = 0; r < M.rows(); ++r)
    if (r != i) p.U.push_back(r);
  for (std::size_t c = 0; c < M.cols(); ++c)
    if (c != j) p.W.push_back(c);
  return submatrix(M, p);
}

/// adj(M), so that M adj(M) = det(M) I.
template <class C>
PolyMatrix<C> adjugate(const PolyMatrix<C>& M) {
  require(M.rows() == M.cols(), ErrorKind::Shape, "adjugate of a non-square matrix");
  std::size_t n = M.rows();
  PolyMatrix<C> a(n, n, M.nvars());
  if (n == 1) {
    a.at(0, 0) = MPoly<C>(M.nvars(), scalar_one<C>());
    return a;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      MPoly<C> d = det(minor_matrix(M, i, j));
      a.at(j, i) = ((i + j) % 2 == 0) ? d : -d;
    }
  return a;
}

/// (w, Omega) with w = adj(M) v and Omega = det M, so M w = Omega v.
template <class C>
std::pair<std::vector<MPoly<C>>, MPoly<C>> cramer_solve(const PolyMatrix<C>& M,
                                                        const std::vector<MPoly<C>>& v) {
  require(M.rows() == M.cols(), ErrorKind::Shape, "cramer_solve needs a square matrix");
  require(v.size() == M.rows(), ErrorKind::Dimension, "right-hand side length mismatch");
  PolyMatrix<C> a = adjugate(M);
  std::size_t n = M.rows();
  std::vector<MPoly<C>> w(n, MPoly<C>(M.nvars()));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) w[i] += a.at(i, j) * v[j];
  return {std::move(w), det(M)};
}

/// All (U, W) with r <= |U| = |W| <= min(rows, cols), ordered by size then
/// lexicographically by U, then W.
std::vector<IndexPair> enum_uw(std::size_t rows, std::size_t cols, std::size_t r);

/// Sorted k-subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<std::size_t>> k_subsets(std::size_t n, std::size_t k);

}  // namespace pqs
