#ifndef QCB_INTMAT_HPP
#define QCB_INTMAT_HPP

#include <optional>
#include <vector>

namespace qcb {

// Dense integer matrix, row major.
struct IntMat {
  int rows = 0;
  int cols = 0;
  std::vector<long long> a;

  IntMat() = default;
  IntMat(int r, int c) : rows(r), cols(c), a((size_t)r * c, 0) {}

  long long& at(int r, int c) { return a[(size_t)r * cols + c]; }
  long long at(int r, int c) const { return a[(size_t)r * cols + c]; }

  std::vector<long long> column(int c) const {
    std::vector<long long> out(rows);
    for (int r = 0; r < rows; ++r) out[r] = at(r, c);
    return out;
  }

  IntMat transposed() const {
    IntMat t(cols, rows);
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < cols; ++c) t.at(c, r) = at(r, c);
    return t;
  }

  friend bool operator==(const IntMat& x, const IntMat& y) {
    return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
  }
};

// Determinant of a square matrix by fraction-free (Bareiss) elimination.
long long det(IntMat m);

// Rank over the rationals, again fraction-free.
int rank(IntMat m);

// Integer solution x of A x = b, if one exists, via column echelon reduction
// with a unimodular transformation. Returns nullopt when the system has no
// solution over the integers.
std::optional<std::vector<long long>> solve_integer(const IntMat& A,
                                                    const std::vector<long long>& b);

// A x for an integer vector x.
std::vector<long long> mat_vec(const IntMat& A, const std::vector<long long>& x);

// A B.
IntMat mat_mul(const IntMat& A, const IntMat& B);

}  // namespace qcb

#endif
