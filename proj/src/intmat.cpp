#include "qcb/intmat.hpp"

#include <cstdlib>
#include <stdexcept>

namespace qcb {

long long det(IntMat m) {
  if (m.rows != m.cols) throw std::invalid_argument("det: matrix not square");
  int n = m.rows;
  if (n == 0) return 1;
  long long prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m.at(k, k) == 0) {
      int p = -1;
      for (int r = k + 1; r < n; ++r)
        if (m.at(r, k) != 0) { p = r; break; }
      if (p < 0) return 0;
      for (int c = 0; c < n; ++c) std::swap(m.at(k, c), m.at(p, c));
      sign = -sign;
    }
    for (int r = k + 1; r < n; ++r) {
      for (int c = k + 1; c < n; ++c) {
        __int128 t = (__int128)m.at(r, c) * m.at(k, k) -
                     (__int128)m.at(r, k) * m.at(k, c);
        m.at(r, c) = (long long)(t / prev);
      }
      m.at(r, k) = 0;
    }
    prev = m.at(k, k);
  }
  return sign * m.at(n - 1, n - 1);
}

int rank(IntMat m) {
  int r = 0;
  long long prev = 1;
  for (int c = 0; c < m.cols && r < m.rows; ++c) {
    int p = -1;
    for (int i = r; i < m.rows; ++i)
      if (m.at(i, c) != 0) { p = i; break; }
    if (p < 0) continue;
    if (p != r)
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(r, j), m.at(p, j));
    for (int i = r + 1; i < m.rows; ++i) {
      for (int j = c + 1; j < m.cols; ++j) {
        __int128 t = (__int128)m.at(i, j) * m.at(r, c) -
                     (__int128)m.at(i, c) * m.at(r, j);
        m.at(i, j) = (long long)(t / prev);
      }
      m.at(i, c) = 0;
    }
    prev = m.at(r, c);
    ++r;
  }
  return r;
}

std::optional<std::vector<long long>> solve_integer(const IntMat& A,
                                                    const std::vector<long long>& b) {
  if ((int)b.size() != A.rows) throw std::invalid_argument("solve_integer: size mismatch");
  int m = A.rows, n = A.cols;
  IntMat H = A;
  IntMat U(n, n);
  for (int i = 0; i < n; ++i) U.at(i, i) = 1;

  auto col_swap = [&](int i, int j) {
    if (i == j) return;
    for (int r = 0; r < m; ++r) std::swap(H.at(r, i), H.at(r, j));
    for (int r = 0; r < n; ++r) std::swap(U.at(r, i), U.at(r, j));
  };
  auto col_addmul = [&](int dst, int src, long long q) {
    // C_dst -= q * C_src
    for (int r = 0; r < m; ++r) H.at(r, dst) -= q * H.at(r, src);
    for (int r = 0; r < n; ++r) U.at(r, dst) -= q * U.at(r, src);
  };

  std::vector<std::pair<int, int>> pivots;  // (row, col) in echelon order
  int col = 0;
  for (int row = 0; row < m && col < n; ++row) {
    while (true) {
      int best = -1;
      for (int j = col; j < n; ++j) {
        long long v = H.at(row, j);
        if (v != 0 && (best < 0 || std::llabs(v) < std::llabs(H.at(row, best)))) best = j;
      }
      if (best < 0) break;
      col_swap(col, best);
      bool clean = true;
      for (int j = col + 1; j < n; ++j) {
        if (H.at(row, j) == 0) continue;
        long long q = H.at(row, j) / H.at(row, col);
        col_addmul(j, col, q);
        if (H.at(row, j) != 0) clean = false;
      }
      if (clean) break;
    }
    if (H.at(row, col) != 0) {
      pivots.push_back({row, col});
      ++col;
    }
  }

  // Forward substitution on the pivot columns, free columns stay zero.
  std::vector<long long> y(n, 0);
  for (size_t k = 0; k < pivots.size(); ++k) {
    auto [r, c] = pivots[k];
    long long acc = b[r];
    for (size_t j = 0; j < k; ++j) acc -= H.at(r, pivots[j].second) * y[pivots[j].second];
    if (acc % H.at(r, c) != 0) return std::nullopt;
    y[c] = acc / H.at(r, c);
  }
  if (mat_vec(H, y) != b) return std::nullopt;
  return mat_vec(U, y);
}

std::vector<long long> mat_vec(const IntMat& A, const std::vector<long long>& x) {
  if ((int)x.size() != A.cols) throw std::invalid_argument("mat_vec: size mismatch");
  std::vector<long long> out(A.rows, 0);
  for (int r = 0; r < A.rows; ++r)
    for (int c = 0; c < A.cols; ++c) out[r] += A.at(r, c) * x[c];
  return out;
}

IntMat mat_mul(const IntMat& A, const IntMat& B) {
  if (A.cols != B.rows) throw std::invalid_argument("mat_mul: size mismatch");
  IntMat out(A.rows, B.cols);
  for (int i = 0; i < A.rows; ++i)
    for (int k = 0; k < A.cols; ++k) {
      long long v = A.at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < B.cols; ++j) out.at(i, j) += v * B.at(k, j);
    }
  return out;
}

}  // namespace qcb
