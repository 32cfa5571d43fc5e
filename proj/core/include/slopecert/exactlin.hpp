#pragma once

#include <array>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "slopecert/errors.hpp"

namespace slopecert::exactlin {

// Exact arithmetic only: relation matrices of group presentations blow up
// under elimination, so every matrix entry is arbitrary precision.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Dense row-major integer matrix. Degenerate shapes (0 x n, n x 0) are legal
// and show up naturally as relator matrices of free groups.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

  static IntMatrix identity(int n);
  // Convenience for literals in tests and small fixed matrices.
  static IntMatrix from_rows(const std::vector<std::vector<long long>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Int& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
  const Int& at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

  IntMatrix operator*(const IntMatrix& rhs) const;
  IntMatrix transposed() const;
  bool operator==(const IntMatrix& rhs) const = default;

  bool is_zero() const;

  // Exact determinant (Bareiss fraction-free elimination); square only.
  Int determinant() const;

  void swap_rows(int i, int j);
  void swap_cols(int i, int j);
  void negate_row(int i);
  // row dst -= q * row src
  void row_axpy(int dst, int src, const Int& q);
  void col_axpy(int dst, int src, const Int& q);

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Int> a_;
};

// U * A * V = S with U, V unimodular and S = diag(d1, d2, ...), di >= 0,
// d1 | d2 | ... The diagonal is the sequence of invariant factors of A.
struct SmithDecomposition {
  IntMatrix u;
  IntMatrix s;
  IntMatrix v;

  std::vector<Int> invariant_factors() const;  // nonzero diagonal entries
};

SmithDecomposition smith_normal_form(const IntMatrix& a);

// Rank over the rationals, by fraction-free Gaussian elimination. Always
// equals the number of nonzero invariant factors of the Smith form.
int rational_rank(const IntMatrix& a);

// Basis of { v : A v = 0 } over Q, from the reduced row echelon form.
// Size is always cols - rational_rank(a).
std::vector<std::vector<Rational>> rational_kernel_basis(const IntMatrix& a);

// Bijection of {0, ..., degree-1}.
class Permutation {
 public:
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int degree);

  int degree() const { return static_cast<int>(images_.size()); }
  int apply(int x) const { return images_[x]; }
  Permutation inverse() const;
  // this followed by next (right-action composition order).
  Permutation then(const Permutation& next) const;
  bool is_identity() const;
  bool commutes_with(const Permutation& other) const;
  bool operator==(const Permutation& rhs) const = default;

 private:
  std::vector<int> images_;
};

// Multiset of cycle lengths, sorted ascending; sums to the degree.
std::vector<int> cycle_decomposition(const Permutation& p);

// Small 2x2 integer matrix for monodromies and mod-p reductions.
struct Mat2 {
  long long a = 1, b = 0, c = 0, d = 1;

  long long det() const { return a * d - b * c; }
  long long trace() const { return a + d; }
  Mat2 operator*(const Mat2& rhs) const;
  bool operator==(const Mat2& rhs) const = default;
};

// Inverse of m mod p; requires det(m) invertible mod p.
Mat2 mat2_inverse_mod(const Mat2& m, int p);

// Permutation of the p^2 points of (Z_p)^2 given by v -> M v mod p.
// Point (x, y) is indexed x*p + y. Rejects matrices singular mod p.
Permutation mod_p_permutation(const Mat2& m, int p);

struct Vec2 {
  long long x = 0, y = 0;
  bool operator==(const Vec2& rhs) const = default;
};

// Finite-index sublattice of Z^2, stored as its Hermite normal form basis
//   [ a  b ]
//   [ 0  d ]     a > 0, d > 0, 0 <= b < d.
// The basis is a canonical form: equal lattices get equal bases.
class Lattice2 {
 public:
  Lattice2(Int a, Int b, Int d);

  const IntMatrix& basis() const { return basis_; }
  Int index() const;  // index in Z^2 = a * d

  // Primitive lattice vector on the second axis: (0, d).
  long long second_axis_exponent() const;
  // Minimal k > 0 with (k, 0) in the lattice: a * d / gcd(b, d).
  long long first_axis_exponent() const;

  bool operator==(const Lattice2& rhs) const = default;

 private:
  IntMatrix basis_;
};

// HNF basis of the sublattice of Z^2 generated by the given vectors.
// Throws DegenerateLatticeError when the span has rank < 2.
Lattice2 hermite_lattice(const std::vector<Vec2>& gens);

}  // namespace slopecert::exactlin
