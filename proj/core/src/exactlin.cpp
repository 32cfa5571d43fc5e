#include "slopecert/exactlin.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace slopecert::exactlin {

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long long>>& rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
  IntMatrix m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c) throw InputError("ragged matrix literal");
    for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw InputError("matrix product shape mismatch");
  IntMatrix out(rows_, rhs.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Int& aik = at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < rhs.cols_; ++j) out.at(i, j) += aik * rhs.at(k, j);
    }
  return out;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix out(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
  return out;
}

bool IntMatrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const Int& x) { return x == 0; });
}

Int IntMatrix::determinant() const {
  if (rows_ != cols_) throw InputError("determinant of non-square matrix");
  const int n = rows_;
  if (n == 0) return 1;
  IntMatrix m = *this;
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m.at(k, k) == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (m.at(i, k) != 0) {
          p = i;
          break;
        }
      if (p < 0) return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j)
        m.at(i, j) = (m.at(k, k) * m.at(i, j) - m.at(i, k) * m.at(k, j)) / prev;
      m.at(i, k) = 0;
    }
    prev = m.at(k, k);
  }
  return sign > 0 ? m.at(n - 1, n - 1) : Int(-m.at(n - 1, n - 1));
}

void IntMatrix::swap_rows(int i, int j) {
  if (i == j) return;
  for (int k = 0; k < cols_; ++k) std::swap(at(i, k), at(j, k));
}

void IntMatrix::swap_cols(int i, int j) {
  if (i == j) return;
  for (int k = 0; k < rows_; ++k) std::swap(at(k, i), at(k, j));
}

void IntMatrix::negate_row(int i) {
  for (int k = 0; k < cols_; ++k) at(i, k) = -at(i, k);
}

void IntMatrix::row_axpy(int dst, int src, const Int& q) {
  if (q == 0) return;
  for (int k = 0; k < cols_; ++k) at(dst, k) -= q * at(src, k);
}

void IntMatrix::col_axpy(int dst, int src, const Int& q) {
  if (q == 0) return;
  for (int k = 0; k < rows_; ++k) at(k, dst) -= q * at(k, src);
}

std::vector<Int> SmithDecomposition::invariant_factors() const {
  std::vector<Int> out;
  const int n = std::min(s.rows(), s.cols());
  for (int i = 0; i < n; ++i)
    if (s.at(i, i) != 0) out.push_back(s.at(i, i));
  return out;
}

namespace {

Int int_abs(const Int& x) { return x < 0 ? Int(-x) : x; }

// balanced quotient: |e - q * p| <= |p| / 2, which curbs entry growth
Int balanced_quotient(const Int& e, const Int& p) {
  Int q = e / p;
  const Int r = e - q * p;
  if (2 * int_abs(r) > int_abs(p)) q += ((r > 0) == (p > 0)) ? 1 : -1;
  return q;
}

struct Bezout {
  Int g, x, y;  // x*a + y*b = g >= 0
};

Bezout gcdx(const Int& a, const Int& b) {
  Int old_r = a, r = b;
  Int old_x = 1, x = 0;
  Int old_y = 0, y = 1;
  while (r != 0) {
    const Int q = old_r / r;
    Int tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_x - q * x;
    old_x = x;
    x = tmp;
    tmp = old_y - q * y;
    old_y = y;
    y = tmp;
  }
  if (old_r < 0) return {-old_r, -old_x, -old_y};
  return {old_r, old_x, old_y};
}

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& a) {
  const int r = a.rows(), c = a.cols();
  SmithDecomposition d{IntMatrix::identity(r), a, IntMatrix::identity(c)};
  IntMatrix& s = d.s;
  IntMatrix& u = d.u;
  IntMatrix& v = d.v;

  auto row_swap = [&](int i, int j) { s.swap_rows(i, j); u.swap_rows(i, j); };
  auto col_swap = [&](int i, int j) { s.swap_cols(i, j); v.swap_cols(i, j); };
  auto row_sub = [&](int dst, int src, const Int& q) { s.row_axpy(dst, src, q); u.row_axpy(dst, src, q); };
  auto col_sub = [&](int dst, int src, const Int& q) { s.col_axpy(dst, src, q); v.col_axpy(dst, src, q); };

  const int n = std::min(r, c);

  // Fused Bezout transform: replaces (row t, row i) by the unimodular
  // combination with s(t,t) = gcd and s(i,t) = 0 in one pass. A plain
  // elimination when the pivot already divides, so a converged pivot stops
  // dirtying the cross direction.
  auto fuse_rows = [&](int t, int i) {
    const Int a = s.at(t, t), b = s.at(i, t);
    if (b % a == 0) {
      row_sub(i, t, b / a);
      return;
    }
    const Bezout bz = gcdx(a, b);
    const Int af = a / bz.g, bf = b / bz.g;
    for (IntMatrix* m : {&s, &u}) {
      const int cols = m->cols();
      for (int k = 0; k < cols; ++k) {
        const Int mt = m->at(t, k), mi = m->at(i, k);
        m->at(t, k) = bz.x * mt + bz.y * mi;
        m->at(i, k) = af * mi - bf * mt;
      }
    }
  };
  auto fuse_cols = [&](int t, int j) {
    const Int a = s.at(t, t), b = s.at(t, j);
    if (b % a == 0) {
      col_sub(j, t, b / a);
      return;
    }
    const Bezout bz = gcdx(a, b);
    const Int af = a / bz.g, bf = b / bz.g;
    for (IntMatrix* m : {&s, &v}) {
      const int rows = m->rows();
      for (int k = 0; k < rows; ++k) {
        const Int mt = m->at(k, t), mj = m->at(k, j);
        m->at(k, t) = bz.x * mt + bz.y * mj;
        m->at(k, j) = af * mj - bf * mt;
      }
    }
  };

  // phase 1: diagonalize, smallest-magnitude pivoting
  for (int t = 0; t < n; ++t) {
    int pi = -1, pj = -1;
    for (int i = t; i < r; ++i)
      for (int j = t; j < c; ++j) {
        const Int& e = s.at(i, j);
        if (e == 0) continue;
        if (pi < 0 || int_abs(e) < int_abs(s.at(pi, pj))) {
          pi = i;
          pj = j;
        }
      }
    if (pi < 0) break;  // trailing block is zero
    row_swap(t, pi);
    col_swap(t, pj);

    for (bool acted = true; acted;) {
      acted = false;
      for (int i = t + 1; i < r; ++i)
        if (s.at(i, t) != 0) {
          fuse_rows(t, i);
          acted = true;
        }
      for (int j = t + 1; j < c; ++j)
        if (s.at(t, j) != 0) {
          fuse_cols(t, j);
          acted = true;
        }
    }
  }

  // phase 2: divisibility chain by pairwise gcd/lcm steps on the diagonal.
  // Working on 2x2 blocks keeps entries bounded by the pair's lcm.
  auto clear_pair = [&](int i, int j) {
    for (;;) {
      if (s.at(i, i) == 0) {
        if (s.at(j, i) != 0) row_swap(i, j);
        else if (s.at(i, j) != 0) col_swap(i, j);
        else break;
      }
      bool dirty = false;
      if (s.at(j, i) != 0) {
        row_sub(j, i, balanced_quotient(s.at(j, i), s.at(i, i)));
        if (s.at(j, i) != 0) {
          row_swap(i, j);
          dirty = true;
        }
      }
      if (s.at(i, j) != 0) {
        col_sub(j, i, balanced_quotient(s.at(i, j), s.at(i, i)));
        if (s.at(i, j) != 0) {
          col_swap(i, j);
          dirty = true;
        }
      }
      if (!dirty && s.at(j, i) == 0 && s.at(i, j) == 0) break;
    }
  };

  for (bool changed = true; changed;) {
    changed = false;
    for (int i = 0; i + 1 < n; ++i) {
      const Int& di = s.at(i, i);
      const Int& dj = s.at(i + 1, i + 1);
      if (di == 0 || dj % di == 0) continue;
      row_sub(i, i + 1, Int(-1));  // row i += row i+1, then re-diagonalize
      clear_pair(i, i + 1);
      changed = true;
    }
  }

  for (int i = 0; i < n; ++i)
    if (s.at(i, i) < 0) {
      s.negate_row(i);
      u.negate_row(i);
    }
  return d;
}

int rational_rank(const IntMatrix& a) {
  IntMatrix m = a;
  const int r = m.rows(), c = m.cols();
  int rank = 0;
  Int prev = 1;
  for (int col = 0; col < c && rank < r; ++col) {
    int p = -1;
    for (int i = rank; i < r; ++i)
      if (m.at(i, col) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    m.swap_rows(rank, p);
    for (int i = rank + 1; i < r; ++i) {
      for (int j = col + 1; j < c; ++j)
        m.at(i, j) = (m.at(rank, col) * m.at(i, j) - m.at(i, col) * m.at(rank, j)) / prev;
      m.at(i, col) = 0;
    }
    prev = m.at(rank, col);
    ++rank;
  }
  return rank;
}

std::vector<std::vector<Rational>> rational_kernel_basis(const IntMatrix& a) {
  const int r = a.rows(), c = a.cols();
  std::vector<std::vector<Rational>> q(r, std::vector<Rational>(c));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) q[i][j] = Rational(a.at(i, j));

  std::vector<int> pivot_row_of_col(c, -1);
  int row = 0;
  for (int col = 0; col < c && row < r; ++col) {
    int p = -1;
    for (int i = row; i < r; ++i)
      if (q[i][col] != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(q[row], q[p]);
    const Rational inv = q[row][col];
    for (int j = col; j < c; ++j) q[row][j] /= inv;
    for (int i = 0; i < r; ++i) {
      if (i == row || q[i][col] == 0) continue;
      const Rational f = q[i][col];
      for (int j = col; j < c; ++j) q[i][j] -= f * q[row][j];
    }
    pivot_row_of_col[col] = row;
    ++row;
  }

  std::vector<std::vector<Rational>> basis;
  for (int f = 0; f < c; ++f) {
    if (pivot_row_of_col[f] >= 0) continue;
    std::vector<Rational> vec(c);
    vec[f] = 1;
    for (int col = 0; col < c; ++col)
      if (pivot_row_of_col[col] >= 0) vec[col] = -q[pivot_row_of_col[col]][f];
    basis.push_back(std::move(vec));
  }
  return basis;
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int x : images_) {
    if (x < 0 || x >= static_cast<int>(images_.size()) || seen[x])
      throw InputError("permutation images are not a bijection");
    seen[x] = true;
  }
}

Permutation Permutation::identity(int degree) {
  std::vector<int> im(degree);
  std::iota(im.begin(), im.end(), 0);
  return Permutation(std::move(im));
}

Permutation Permutation::inverse() const {
  std::vector<int> im(images_.size());
  for (int i = 0; i < degree(); ++i) im[images_[i]] = i;
  return Permutation(std::move(im));
}

Permutation Permutation::then(const Permutation& next) const {
  if (degree() != next.degree()) throw InputError("permutation degree mismatch");
  std::vector<int> im(images_.size());
  for (int i = 0; i < degree(); ++i) im[i] = next.images_[images_[i]];
  return Permutation(std::move(im));
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (images_[i] != i) return false;
  return true;
}

bool Permutation::commutes_with(const Permutation& other) const {
  return then(other) == other.then(*this);
}

std::vector<int> cycle_decomposition(const Permutation& p) {
  std::vector<int> lengths;
  std::vector<bool> seen(p.degree(), false);
  for (int i = 0; i < p.degree(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int j = i; !seen[j]; j = p.apply(j)) {
      seen[j] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

Mat2 Mat2::operator*(const Mat2& rhs) const {
  return Mat2{a * rhs.a + b * rhs.c, a * rhs.b + b * rhs.d,
              c * rhs.a + d * rhs.c, c * rhs.b + d * rhs.d};
}

namespace {

long long mod_p(long long x, int p) {
  long long m = x % p;
  return m < 0 ? m + p : m;
}

// Inverse of x mod p for small prime p.
long long inv_mod(long long x, int p) {
  x = mod_p(x, p);
  for (long long y = 1; y < p; ++y)
    if (x * y % p == 1) return y;
  throw PreconditionError("element not invertible mod p");
}

}  // namespace

Mat2 mat2_inverse_mod(const Mat2& m, int p) {
  const long long det = mod_p(m.det(), p);
  if (det == 0) throw PreconditionError("matrix singular mod p");
  const long long di = inv_mod(det, p);
  return Mat2{mod_p(m.d * di, p), mod_p(-m.b * di, p),
              mod_p(-m.c * di, p), mod_p(m.a * di, p)};
}

Permutation mod_p_permutation(const Mat2& m, int p) {
  if (mod_p(m.det(), p) == 0) throw PreconditionError("matrix singular mod p");
  std::vector<int> images(static_cast<size_t>(p) * p);
  for (long long x = 0; x < p; ++x)
    for (long long y = 0; y < p; ++y) {
      const long long nx = mod_p(m.a * x + m.b * y, p);
      const long long ny = mod_p(m.c * x + m.d * y, p);
      images[x * p + y] = static_cast<int>(nx * p + ny);
    }
  return Permutation(std::move(images));
}

Lattice2::Lattice2(Int a, Int b, Int d) : basis_(2, 2) {
  if (a <= 0 || d <= 0 || b < 0 || b >= d)
    throw DegenerateLatticeError("basis is not in Hermite normal form");
  basis_.at(0, 0) = std::move(a);
  basis_.at(0, 1) = std::move(b);
  basis_.at(1, 1) = std::move(d);
}

Int Lattice2::index() const { return basis_.at(0, 0) * basis_.at(1, 1); }

namespace {

long long to_ll(const Int& x) {
  if (x > std::numeric_limits<long long>::max() || x < std::numeric_limits<long long>::min())
    throw Error("lattice entry out of machine range");
  return static_cast<long long>(x);
}

}  // namespace

long long Lattice2::second_axis_exponent() const { return to_ll(basis_.at(1, 1)); }

long long Lattice2::first_axis_exponent() const {
  const Int b = basis_.at(0, 1), d = basis_.at(1, 1);
  const Int g = boost::multiprecision::gcd(b, d);
  return to_ll(basis_.at(0, 0) * d / g);
}

Lattice2 hermite_lattice(const std::vector<Vec2>& gens) {
  std::vector<std::array<Int, 2>> rows;
  rows.reserve(gens.size());
  for (const Vec2& g : gens)
    if (g.x != 0 || g.y != 0) rows.push_back({Int(g.x), Int(g.y)});

  // Euclid on first coordinates until a single row carries x != 0.
  for (;;) {
    int best = -1;
    for (int i = 0; i < static_cast<int>(rows.size()); ++i)
      if (rows[i][0] != 0 && (best < 0 || int_abs(rows[i][0]) < int_abs(rows[best][0]))) best = i;
    if (best < 0) throw DegenerateLatticeError("generators span rank < 2");
    bool reduced = true;
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
      if (i == best || rows[i][0] == 0) continue;
      const Int q = rows[i][0] / rows[best][0];
      rows[i][0] -= q * rows[best][0];
      rows[i][1] -= q * rows[best][1];
      if (rows[i][0] != 0) reduced = false;
    }
    if (reduced) {
      std::swap(rows[0], rows[best]);
      break;
    }
  }

  // gcd of second coordinates among the x == 0 rows.
  Int d = 0;
  for (size_t i = 1; i < rows.size(); ++i) d = boost::multiprecision::gcd(d, rows[i][1]);
  if (d == 0) throw DegenerateLatticeError("generators span rank < 2");

  Int a = rows[0][0], b = rows[0][1];
  if (a < 0) {
    a = -a;
    b = -b;
  }
  Int bb = b % d;
  if (bb < 0) bb += d;
  return Lattice2(a, bb, d);
}

}  // namespace slopecert::exactlin
