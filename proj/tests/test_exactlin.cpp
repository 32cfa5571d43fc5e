#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "slopecert/exactlin.hpp"

using namespace slopecert;
using namespace slopecert::exactlin;

namespace {

// Independent oracle for Smith forms: the k-th determinantal divisor is the
// gcd of all k x k minors, and d_k = D_k / D_{k-1}. No elimination involved.
Int determinantal_divisor(const IntMatrix& a, int k) {
  std::vector<int> rows(k), cols(k);
  Int g = 0;
  std::vector<int> rsel(k), csel(k);
  // enumerate k-subsets of rows and columns
  std::vector<int> ridx(k);
  for (int i = 0; i < k; ++i) ridx[i] = i;
  auto next_subset = [](std::vector<int>& idx, int n) {
    int k = static_cast<int>(idx.size());
    for (int i = k - 1; i >= 0; --i) {
      if (idx[i] < n - (k - i)) {
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
        return true;
      }
    }
    return false;
  };
  do {
    std::vector<int> cidx(k);
    for (int i = 0; i < k; ++i) cidx[i] = i;
    do {
      IntMatrix sub(k, k);
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) sub.at(i, j) = a.at(ridx[i], cidx[j]);
      g = boost::multiprecision::gcd(g, sub.determinant());
    } while (next_subset(cidx, a.cols()));
  } while (next_subset(ridx, a.rows()));
  return g < 0 ? Int(-g) : g;
}

std::vector<Int> smith_diagonal_oracle(const IntMatrix& a) {
  std::vector<Int> out;
  Int prev = 1;
  for (int k = 1; k <= std::min(a.rows(), a.cols()); ++k) {
    const Int dk = determinantal_divisor(a, k);
    if (dk == 0) break;
    out.push_back(dk / prev);
    prev = dk;
  }
  return out;
}

IntMatrix random_matrix(std::mt19937& rng, int r, int c, int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  IntMatrix m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m.at(i, j) = dist(rng);
  return m;
}

void check_snf_contract(const IntMatrix& a) {
  const auto d = smith_normal_form(a);
  CHECK(d.u * a * d.v == d.s);
  const Int du = d.u.determinant(), dv = d.v.determinant();
  CHECK((du == 1 || du == -1));
  CHECK((dv == 1 || dv == -1));
  // diagonal, nonnegative, divisibility chain
  for (int i = 0; i < d.s.rows(); ++i)
    for (int j = 0; j < d.s.cols(); ++j)
      if (i != j) CHECK(d.s.at(i, j) == 0);
  const int n = std::min(d.s.rows(), d.s.cols());
  for (int i = 0; i < n; ++i) CHECK(d.s.at(i, i) >= 0);
  for (int i = 0; i + 1 < n; ++i) {
    if (d.s.at(i, i) == 0) CHECK(d.s.at(i + 1, i + 1) == 0);
    else CHECK(d.s.at(i + 1, i + 1) % d.s.at(i, i) == 0);
  }
}

}  // namespace

TEST_CASE("smith normal form of [[2,4],[6,8]] is diag(2,4)") {
  const auto a = IntMatrix::from_rows({{2, 4}, {6, 8}});
  const auto d = smith_normal_form(a);
  CHECK(d.s.at(0, 0) == 2);
  CHECK(d.s.at(1, 1) == 4);
  check_snf_contract(a);
  CHECK(smith_diagonal_oracle(a) == std::vector<Int>{2, 4});
}

TEST_CASE("smith normal form: identity and zero") {
  for (int n : {1, 2, 5}) {
    const auto d = smith_normal_form(IntMatrix::identity(n));
    CHECK(d.s == IntMatrix::identity(n));
  }
  const IntMatrix z(3, 4);
  CHECK(smith_normal_form(z).s == z);
}

TEST_CASE("smith normal form agrees with the determinantal-divisor oracle") {
  std::mt19937 rng(20260810);
  for (int iter = 0; iter < 200; ++iter) {
    const int r = 1 + static_cast<int>(rng() % 5), c = 1 + static_cast<int>(rng() % 5);
    const auto a = random_matrix(rng, r, c, -9, 9);
    check_snf_contract(a);
    const auto d = smith_normal_form(a);
    CHECK(d.invariant_factors() == smith_diagonal_oracle(a));
  }
}

TEST_CASE("rational rank") {
  CHECK(rational_rank(IntMatrix::from_rows({{2, 0}, {0, 4}})) == 2);
  CHECK(rational_rank(IntMatrix::from_rows({{1, 1, 1}})) == 1);
  // determinant 0, nonzero matrix
  CHECK(rational_rank(IntMatrix::from_rows({{2, 4}, {1, 2}})) == 1);
}

TEST_CASE("rank equals rank of the transpose and counts invariant factors") {
  std::mt19937 rng(7);
  for (int iter = 0; iter < 100; ++iter) {
    const auto a = random_matrix(rng, 1 + rng() % 5, 1 + rng() % 5, -6, 6);
    const int rk = rational_rank(a);
    CHECK(rk == rational_rank(a.transposed()));
    CHECK(rk == static_cast<int>(smith_normal_form(a).invariant_factors().size()));
  }
}

TEST_CASE("rational kernel basis") {
  CHECK(rational_kernel_basis(IntMatrix::from_rows({{1, 1}, {0, 1}})).empty());

  const auto k1 = rational_kernel_basis(IntMatrix::from_rows({{1, 1, 1}}));
  REQUIRE(k1.size() == 2);

  const auto a = IntMatrix::from_rows({{2, 4}});
  const auto k2 = rational_kernel_basis(a);
  REQUIRE(k2.size() == 1);
  // spans (2, -1)
  CHECK(k2[0][0] * Rational(-1) == k2[0][1] * Rational(2));

  std::mt19937 rng(99);
  for (int iter = 0; iter < 100; ++iter) {
    const auto m = random_matrix(rng, 1 + rng() % 4, 1 + rng() % 5, -5, 5);
    const auto basis = rational_kernel_basis(m);
    CHECK(static_cast<int>(basis.size()) == m.cols() - rational_rank(m));
    for (const auto& v : basis)
      for (int i = 0; i < m.rows(); ++i) {
        Rational s = 0;
        for (int j = 0; j < m.cols(); ++j) s += Rational(m.at(i, j)) * v[j];
        CHECK(s == 0);
      }
  }
}

TEST_CASE("hermite lattice basics") {
  // {(2,0),(0,3),(1,1)} generate all of Z^2: integer row reduction gives
  // (1,1),(0,-2),(0,3) hence (0,1), hence (1,0).
  const auto l = hermite_lattice({{2, 0}, {0, 3}, {1, 1}});
  CHECK(l.basis() == IntMatrix::identity(2));
  CHECK(l.index() == 1);

  const auto l2 = hermite_lattice({{2, 0}, {0, 2}});
  CHECK(l2.basis() == IntMatrix::from_rows({{2, 0}, {0, 2}}));
  CHECK(l2.index() == 4);

  CHECK_THROWS_AS(hermite_lattice({}), DegenerateLatticeError);
  CHECK_THROWS_AS(hermite_lattice({{1, 2}, {2, 4}, {-3, -6}}), DegenerateLatticeError);
  CHECK_THROWS_AS(hermite_lattice({{0, 5}}), DegenerateLatticeError);
}

TEST_CASE("hermite lattice is a canonical form") {
  std::mt19937 rng(41);
  std::uniform_int_distribution<long long> dist(-6, 6);
  for (int iter = 0; iter < 200; ++iter) {
    const long long a = 1 + rng() % 5, b = dist(rng), d = 1 + rng() % 5;
    const Vec2 r0{a, b}, r1{0, d};
    // two different generating sets of the same lattice: unimodular
    // recombinations plus a redundant sum
    const long long k = dist(rng), m = dist(rng);
    const std::vector<Vec2> gen1{{r0.x, r0.y}, {r1.x + k * r0.x, r1.y + k * r0.y}};
    const std::vector<Vec2> gen2{
        {r0.x + m * r1.x, r0.y + m * r1.y}, {-r1.x, -r1.y}, {r0.x + r1.x, r0.y + r1.y}};
    CHECK(hermite_lattice(gen1) == hermite_lattice(gen2));
    CHECK(hermite_lattice(gen1).index() == a * d);
  }
}

TEST_CASE("lattice axis exponents") {
  const auto l = hermite_lattice({{2, 1}, {0, 3}});
  CHECK(l.second_axis_exponent() == 3);
  // (k, 0) in the lattice iff k multiple of 2*3/gcd(1,3) = 6
  CHECK(l.first_axis_exponent() == 6);
  const auto z2 = hermite_lattice({{1, 0}, {0, 1}});
  CHECK(z2.first_axis_exponent() == 1);
  CHECK(z2.second_axis_exponent() == 1);
}

TEST_CASE("cycle decomposition") {
  CHECK(cycle_decomposition(Permutation::identity(9)) == std::vector<int>(9, 1));
  CHECK(cycle_decomposition(mod_p_permutation(Mat2{1, 1, 0, 1}, 3)) ==
        std::vector<int>{1, 1, 1, 3, 3});
  CHECK(cycle_decomposition(mod_p_permutation(Mat2{0, 2, 1, 0}, 3)) ==
        std::vector<int>{1, 4, 4});
}

TEST_CASE("mod-p permutations") {
  CHECK(cycle_decomposition(mod_p_permutation(Mat2{2, 0, 0, 2}, 3)) ==
        std::vector<int>{1, 2, 2, 2, 2});
  CHECK(cycle_decomposition(mod_p_permutation(Mat2{2, 1, 0, 2}, 3)) ==
        std::vector<int>{1, 2, 6});
  CHECK(mod_p_permutation(Mat2{1, 0, 0, 1}, 3).is_identity());
  CHECK_THROWS_AS(mod_p_permutation(Mat2{1, 1, 1, 1}, 3), PreconditionError);
}

TEST_CASE("every determinant-one matrix mod 3 fixes the zero vector") {
  int count = 0;
  for (long long a = 0; a < 3; ++a)
    for (long long b = 0; b < 3; ++b)
      for (long long c = 0; c < 3; ++c)
        for (long long d = 0; d < 3; ++d) {
          const Mat2 m{a, b, c, d};
          if ((m.det() % 3 + 3) % 3 != 1) continue;
          ++count;
          const auto p = mod_p_permutation(m, 3);
          CHECK(p.apply(0) == 0);
          // inverse has the same cycle structure
          CHECK(cycle_decomposition(p) == cycle_decomposition(p.inverse()));
        }
  CHECK(count == 24);
}

TEST_CASE("permutation validation") {
  CHECK_THROWS_AS(Permutation({0, 0, 1}), InputError);
  CHECK_THROWS_AS(Permutation({0, 3, 1}), InputError);
  const Permutation p({1, 2, 0});
  CHECK(p.then(p.inverse()).is_identity());
}
