#include <random>

#include "doctest.h"
#include "lieplan/errors.hpp"
#include "lieplan/exactlin.hpp"

using namespace lieplan;

namespace {

Matrix diag(std::initializer_list<long> d) {
  Matrix m(d.size(), d.size());
  std::size_t i = 0;
  for (long v : d) {
    m(i, i) = v;
    ++i;
  }
  return m;
}

Matrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int radius) {
  std::uniform_int_distribution<int> dist(-radius, radius);
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = dist(rng);
  return m;
}

Matrix random_invertible(std::mt19937_64& rng, std::size_t n) {
  for (;;) {
    Matrix p = random_matrix(rng, n, n, 3);
    if (determinant(p) != 0) return p;
  }
}

// Naive determinant by cofactor expansion, independent of the elimination code.
Rational cofactor_det(const Matrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Rational total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    Matrix minor(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t j = 0, jj = 0; j < n; ++j)
        if (j != c) minor(i - 1, jj++) = m(i, j);
    const Rational term = m(0, c) * cofactor_det(minor);
    total += (c % 2 == 0) ? term : Rational(-term);
  }
  return total;
}

}  // namespace

TEST_CASE("rational parsing and printing") {
  CHECK(to_string(parse_rational("6/4")) == "3/2");
  CHECK(to_string(parse_rational("-7")) == "-7");
  CHECK(to_string(parse_rational("0/5")) == "0");
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("abc"), ParseError);
  CHECK_THROWS_AS(parse_rational(""), ParseError);
  Rational root;
  CHECK(rational_sqrt(Rational(9, 4), root));
  CHECK(root == Rational(3, 2));
  CHECK_FALSE(rational_sqrt(Rational(2), root));
  CHECK_FALSE(rational_sqrt(Rational(-1), root));
}

TEST_CASE("polynomial gcd and division") {
  const Polynomial a = Polynomial::linear_factor(1) * Polynomial::linear_factor(2);
  const Polynomial b = Polynomial::linear_factor(2) * Polynomial::linear_factor(3);
  CHECK(gcd(a, b) == Polynomial::linear_factor(2));
  CHECK(lcm(a, b).degree() == 3);
  Polynomial q, r;
  Polynomial::divide(a * b, a, q, r);
  CHECK(q == b);
  CHECK(r.is_zero());
}

TEST_CASE("rank examples") {
  CHECK(rank(Matrix(3, 3)) == 0);
  CHECK(rank(Matrix::identity(3)) == 3);
  Matrix e(3, 3);
  e(0, 2) = 1;
  e(2, 0) = 1;
  CHECK(rank(e) == 2);
  CHECK(rank(Matrix{{1, 2, 3}, {2, 4, 6}}) == 1);
  CHECK(rank(Matrix{{Rational(1, 2), Rational(1, 3)}, {Rational(3, 2), 1}}) == 1);
}

TEST_CASE("rank agrees with nullspace dimension on random matrices") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
    Matrix m = random_matrix(rng, r, c, 2);
    const auto ns = nullspace(m);
    CHECK(rank(m) + ns.size() == c);
    for (const auto& v : ns)
      for (const auto& x : m.apply(v)) CHECK(x == 0);
  }
}

TEST_CASE("determinant and inverse") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 1 + rng() % 5;
    Matrix m = random_matrix(rng, n, n, 4);
    CHECK(determinant(m) == cofactor_det(m));
    if (determinant(m) != 0) CHECK(m * inverse(m) == Matrix::identity(n));
  }
  CHECK_THROWS_AS(inverse(Matrix(2, 2)), PreconditionViolation);
}

TEST_CASE("is_semisimple examples") {
  CHECK(is_semisimple(Matrix::identity(2)));
  CHECK_FALSE(is_semisimple(Matrix{{0, 1}, {0, 0}}));
  CHECK(is_semisimple(Matrix{{0, -1}, {1, 0}}));
  CHECK(minimal_polynomial(Matrix{{0, -1}, {1, 0}}) == Polynomial({1, 0, 1}));
  CHECK(minimal_polynomial(Matrix::identity(3)) == Polynomial::linear_factor(1));
  CHECK_FALSE(is_semisimple(Matrix{{2, 1, 0}, {0, 2, 0}, {0, 0, 3}}));
  CHECK(is_semisimple(Matrix(3, 3)));
}

TEST_CASE("semisimplicity is invariant under conjugation") {
  std::mt19937_64 rng(17);
  const std::vector<Matrix> seeds = {diag({1, 2, 2, 3}), Matrix{{0, 1, 0, 0}, {0, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}},
                                     Matrix{{0, -1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, -1}, {0, 0, 1, 0}},
                                     Matrix{{0, -1, 1, 0}, {1, 0, 0, 1}, {0, 0, 0, -1}, {0, 0, 1, 0}}};
  for (const auto& a : seeds) {
    const bool base = is_semisimple(a);
    for (int trial = 0; trial < 10; ++trial) {
      const Matrix p = random_invertible(rng, 4);
      const Matrix conj = inverse(p) * a * p;
      CHECK(is_semisimple(conj) == base);
      CHECK(characteristic_polynomial(conj) == characteristic_polynomial(a));
    }
  }
}

TEST_CASE("characteristic polynomial matches det(xI - A) at sample points") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t n = 1 + rng() % 5;
    const Matrix a = random_matrix(rng, n, n, 3);
    const Polynomial chi = characteristic_polynomial(a);
    CHECK(chi.degree() == static_cast<int>(n));
    for (int x = -2; x <= 2; ++x) {
      const Matrix shifted = Rational(x) * Matrix::identity(n) - a;
      CHECK(chi.evaluate(x) == cofactor_det(shifted));
    }
  }
}

TEST_CASE("signature examples") {
  CHECK(signature(Matrix::identity(3)) == SignaturePair{3, 0});
  CHECK(signature(diag({1, -1})) == SignaturePair{1, 1});
  CHECK(signature(diag({1, 1, -2, -2})) == SignaturePair{2, 2});
  CHECK(signature(Matrix{{0, 1}, {1, 0}}) == SignaturePair{1, 1});
  CHECK(signature(Matrix(2, 2)) == SignaturePair{0, 0});
  CHECK_THROWS_AS(signature(Matrix{{0, 1}, {0, 0}}), FormError);
}

TEST_CASE("Sylvester: signature is a congruence invariant and p + q = rank") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 80; ++trial) {
    const std::size_t n = 1 + rng() % 6;
    Matrix s = random_matrix(rng, n, n, 2);
    if (trial % 3 == 0) {
      // force a zero diagonal to exercise the hyperbolic pivots
      for (std::size_t i = 0; i < n; ++i) s(i, i) = 0;
    }
    const Matrix g = s + s.transpose();
    const SignaturePair sig = signature(g);
    CHECK(sig.rank() == rank(g));
    const Matrix p = random_invertible(rng, n);
    CHECK(signature(p.transpose() * g * p) == sig);
  }
}

TEST_CASE("gram_of examples") {
  const SymplecticSpace v1(1);
  CHECK(gram_of(Matrix(2, 2), v1).is_zero());
  CHECK(gram_of(Matrix{{0, 1}, {-1, 0}}, v1) == Matrix::identity(2));
  // blockdiag(J, -2J) in the (x1, x2, y1, y2) ordering
  const SymplecticSpace v2(2);
  const Matrix a{{0, 0, 1, 0}, {0, 0, 0, -2}, {-1, 0, 0, 0}, {0, 2, 0, 0}};
  CHECK(gram_of(a, v2) == diag({1, -2, 1, -2}));
  CHECK(signature(gram_of(a, v2)) == SignaturePair{2, 2});
  CHECK_THROWS_AS(gram_of(Matrix::identity(2), v1), FormError);
  CHECK_THROWS_AS(gram_of(Matrix::identity(3), v1), DimensionError);
}

TEST_CASE("random_symplectic") {
  for (std::size_t n = 1; n <= 4; ++n) {
    const SymplecticSpace v(n);
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
      const Matrix g = random_symplectic(n, seed);
      CHECK(g.transpose() * v.omega() * g == v.omega());
      CHECK(is_symplectic(g, v));
      CHECK(g * symplectic_inverse(g, v) == Matrix::identity(2 * n));
      CHECK(random_symplectic(n, seed) == g);
      if (transvection_plan(n, seed).empty()) CHECK(g == Matrix::identity(2 * n));
    }
  }
  bool saw_empty = false;
  for (std::uint64_t seed = 0; seed < 200 && !saw_empty; ++seed) saw_empty = transvection_plan(1, seed).empty();
  CHECK(saw_empty);
  CHECK_THROWS_AS(random_symplectic(0, 1), InvalidSpec);
}

TEST_CASE("restrict_gram examples") {
  const Matrix g = diag({1, -1, 5});
  const std::vector<Vector> e12 = {{1, 0, 0}, {0, 1, 0}};
  CHECK(restrict_gram(g, e12) == diag({1, -1}));
  CHECK(restrict_gram(g, std::vector<Vector>{}).rows() == 0);
  const std::vector<Vector> iso = {{1, 1}};
  CHECK(restrict_gram(diag({1, -1}), iso) == Matrix{{0}});
  const std::vector<Vector> wrong = {{1, 1}};
  CHECK_THROWS_AS(restrict_gram(g, wrong), DimensionError);
}
