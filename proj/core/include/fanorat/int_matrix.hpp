#pragma once

#include <utility>
#include <vector>

#include "fanorat/ints.hpp"

namespace fanorat {

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols) : r_(rows), c_(cols), a_(static_cast<std::size_t>(rows) * cols) {}

  static IntMatrix identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  int rows() const { return r_; }
  int cols() const { return c_; }
  Int& at(int i, int j) { return a_[static_cast<std::size_t>(i) * c_ + j]; }
  const Int& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * c_ + j]; }

  IntMatrix mul(const IntMatrix& o) const;
  IntMatrix transpose() const;
  bool operator==(const IntMatrix& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }

  // Exact determinant by fraction-free elimination.
  Int det() const;

 private:
  int r_ = 0, c_ = 0;
  std::vector<Int> a_;
};

struct SnfResult {
  IntMatrix d;       // diagonal, entries in divisibility order, nonnegative
  IntMatrix u, v;    // u * input * v = d
  Int det_u, det_v;  // tracked through the elementary operations; always +-1

  std::vector<Int> invariant_factors() const;  // nonzero diagonal entries
  int rank() const;
};

// Smith normal form with unimodular transforms. Pivots are chosen by smallest
// nonzero magnitude to keep intermediate entries small.
SnfResult smith_normal_form(const IntMatrix& a);

// Invariant factors only. The sparse variant first runs an incremental row
// echelon pass (gcd pivots, machine integers with overflow detection and an
// arbitrary-precision retry), which collapses tall sparse inputs to a block of
// at most ncols rows before the dense routine runs.
using SparseIntRow = std::vector<std::pair<int, long long>>;
std::vector<Int> invariant_factors_sparse(const std::vector<SparseIntRow>& rows, int ncols);
std::vector<Int> invariant_factors(const IntMatrix& a);

// Basis of the integer kernel lattice {x : a x = 0}, returned as columns.
// The basis spans a saturated sublattice.
IntMatrix kernel_basis(const IntMatrix& a);

// Writes each column of b in coordinates of the lattice spanned by the
// columns of k. Errors if a column lies outside the span or the coordinates
// are not integral.
IntMatrix express_in_lattice(const IntMatrix& k, const IntMatrix& b);

}  // namespace fanorat
