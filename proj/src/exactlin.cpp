#include "lieplan/exactlin.hpp"

#include <random>
#include <utility>

#include "lieplan/errors.hpp"

namespace lieplan {

SymplecticSpace::SymplecticSpace(std::size_t half_dim) : half_dim_(half_dim), omega_(2 * half_dim, 2 * half_dim) {
  for (std::size_t i = 0; i < half_dim; ++i) {
    omega_(i, half_dim + i) = 1;
    omega_(half_dim + i, i) = -1;
  }
}

Rational SymplecticSpace::pairing(const Vector& u, const Vector& v) const {
  if (u.size() != dim() || v.size() != dim()) throw DimensionError("vector length differs from 2n");
  Rational acc = 0;
  for (std::size_t i = 0; i < half_dim_; ++i) acc += u[i] * v[half_dim_ + i] - u[half_dim_ + i] * v[i];
  return acc;
}

std::size_t rank(const Matrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    mpz_class scale = 1;
    for (std::size_t j = 0; j < cols; ++j) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), m(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < cols; ++j) a[i][j] = m(i, j).get_num() * (scale / m(i, j).get_den());
  }
  mpz_class prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]);
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

Rational determinant(const Matrix& m) {
  if (!m.is_square()) throw DimensionError("determinant of a non-square matrix");
  Matrix a = m;
  const std::size_t n = a.rows();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && sgn(a(piv, c)) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(piv, j), a(c, j));
      det = -det;
    }
    det *= a(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (sgn(a(i, c)) == 0) continue;
      const Rational f = a(i, c) / a(c, c);
      for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
    }
  }
  return det;
}

namespace {

/// In-place reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(Matrix& a) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t piv = r;
    while (piv < a.rows() && sgn(a(piv, c)) == 0) ++piv;
    if (piv == a.rows()) continue;
    if (piv != r)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(piv, j), a(r, j));
    const Rational lead = a(r, c);
    for (std::size_t j = c; j < a.cols(); ++j) a(r, j) /= lead;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || sgn(a(i, c)) == 0) continue;
      const Rational f = a(i, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

Matrix inverse(const Matrix& m) {
  if (!m.is_square()) throw DimensionError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  const auto pivots = rref(aug);
  if (pivots.size() < n || (n > 0 && pivots[n - 1] != n - 1)) throw PreconditionViolation("matrix is singular");
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

std::vector<Vector> nullspace(const Matrix& m) {
  Matrix a = m;
  const auto pivots = rref(a);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

namespace {

/// Monic annihilator of v under M: the least-degree p with p(M) v = 0.
Polynomial krylov_annihilator(const Matrix& m, const Vector& v) {
  const std::size_t n = m.rows();
  // Echelon rows of reduced Krylov vectors, each paired with its expression
  // as a polynomial in M applied to v.
  struct Reduced {
    Vector vec;
    std::size_t pivot;
    Polynomial expr;
  };
  std::vector<Reduced> basis;
  Vector w = v;
  for (int k = 0; k <= static_cast<int>(n); ++k) {
    Vector r = w;
    Polynomial expr = Polynomial::monomial(k);
    for (const auto& b : basis) {
      if (sgn(r[b.pivot]) == 0) continue;
      const Rational f = r[b.pivot];
      for (std::size_t i = 0; i < n; ++i) r[i] -= f * b.vec[i];
      expr = expr - Polynomial::constant(f) * b.expr;
    }
    std::size_t piv = 0;
    while (piv < n && sgn(r[piv]) == 0) ++piv;
    if (piv == n) return expr.monic();
    const Rational lead = r[piv];
    for (auto& x : r) x /= lead;
    basis.push_back({std::move(r), piv, Polynomial::constant(1 / lead) * expr});
    w = m.apply(w);
  }
  throw std::logic_error("Krylov sequence failed to become dependent");
}

}  // namespace

Polynomial minimal_polynomial(const Matrix& m) {
  if (!m.is_square()) throw DimensionError("minimal polynomial of a non-square matrix");
  Polynomial result = Polynomial::constant(1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Vector e(m.rows());
    e[i] = 1;
    result = lcm(result, krylov_annihilator(m, e));
  }
  return result;
}

Polynomial characteristic_polynomial(const Matrix& m) {
  if (!m.is_square()) throw DimensionError("characteristic polynomial of a non-square matrix");
  const std::size_t n = m.rows();
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  Matrix mk(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    mk = m * mk;
    for (std::size_t i = 0; i < n; ++i) mk(i, i) += c[n - k + 1];
    const Matrix amk = m * mk;
    Rational tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += amk(i, i);
    c[n - k] = -tr / static_cast<long>(k);
  }
  return Polynomial(std::move(c));
}

bool is_semisimple(const Matrix& m) {
  if (!m.is_square()) throw DimensionError("semisimplicity test needs a square matrix");
  const Polynomial p = minimal_polynomial(m);
  return gcd(p, p.derivative()).degree() == 0;
}

SignaturePair signature(const Matrix& g) {
  if (!g.is_square() || !g.is_symmetric()) throw FormError("signature requires a symmetric matrix");
  Matrix w = g;
  std::vector<std::size_t> active(g.rows());
  for (std::size_t i = 0; i < active.size(); ++i) active[i] = i;
  SignaturePair sig;

  auto erase = [&](std::size_t idx) { std::erase(active, idx); };

  while (!active.empty()) {
    std::size_t diag = active.size();
    for (std::size_t k = 0; k < active.size(); ++k)
      if (sgn(w(active[k], active[k])) != 0) {
        diag = k;
        break;
      }
    if (diag < active.size()) {
      const std::size_t i = active[diag];
      const Rational d = w(i, i);
      (sgn(d) > 0 ? sig.p : sig.q) += 1;
      erase(i);
      for (auto j : active) {
        if (sgn(w(j, i)) == 0) continue;
        const Rational f = w(j, i) / d;
        for (auto l : active) w(j, l) -= f * w(i, l);
      }
      continue;
    }
    // Zero diagonal: use a hyperbolic pivot [[0, b], [b, 0]], inertia (1, 1).
    std::size_t pi = 0, pj = 0;
    bool found = false;
    for (std::size_t a = 0; a < active.size() && !found; ++a)
      for (std::size_t b = a + 1; b < active.size() && !found; ++b)
        if (sgn(w(active[a], active[b])) != 0) {
          pi = active[a];
          pj = active[b];
          found = true;
        }
    if (!found) break;
    const Rational b = w(pi, pj);
    sig.p += 1;
    sig.q += 1;
    erase(pi);
    erase(pj);
    for (auto k : active)
      for (auto l : active) w(k, l) -= (w(k, pi) * w(pj, l) + w(k, pj) * w(pi, l)) / b;
  }
  return sig;
}

bool is_infinitesimally_symplectic(const Matrix& a, const SymplecticSpace& v) {
  if (a.rows() != v.dim() || a.cols() != v.dim()) return false;
  const Matrix& om = v.omega();
  return (a.transpose() * om + om * a).is_zero();
}

bool is_symplectic(const Matrix& g, const SymplecticSpace& v) {
  if (g.rows() != v.dim() || g.cols() != v.dim()) return false;
  return g.transpose() * v.omega() * g == v.omega();
}

Matrix gram_of(const Matrix& a, const SymplecticSpace& v) {
  if (a.rows() != v.dim() || a.cols() != v.dim()) throw DimensionError("matrix size differs from 2n");
  if (!is_infinitesimally_symplectic(a, v)) throw FormError("not infinitesimally symplectic");
  return a.transpose() * v.omega();
}

std::vector<Transvection> transvection_plan(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const std::size_t factors = rng() % (2 * n + 3);
  std::uniform_int_distribution<int> entry(-2, 2);
  std::uniform_int_distribution<int> scale(1, 2);
  std::vector<Transvection> plan;
  plan.reserve(factors);
  while (plan.size() < factors) {
    Vector v(2 * n);
    bool nonzero = false;
    for (auto& x : v) {
      x = entry(rng);
      nonzero = nonzero || sgn(x) != 0;
    }
    const int c = scale(rng) * ((rng() & 1U) ? 1 : -1);
    if (!nonzero) continue;
    plan.push_back({std::move(v), Rational(c)});
  }
  return plan;
}

Matrix transvection_matrix(const Transvection& t, const SymplecticSpace& v) {
  // I + c v (Omega^T v)^T  since <v, x> = v^T Omega x
  const std::size_t d = v.dim();
  const Vector w = v.omega().transpose().apply(t.v);
  Matrix m = Matrix::identity(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) m(i, j) += t.c * t.v[i] * w[j];
  return m;
}

Matrix random_symplectic(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw InvalidSpec("random_symplectic needs n >= 1");
  const SymplecticSpace space(n);
  Matrix g = Matrix::identity(2 * n);
  for (const auto& t : transvection_plan(n, seed)) g = transvection_matrix(t, space) * g;
  return g;
}

Matrix symplectic_inverse(const Matrix& g, const SymplecticSpace& v) {
  const Matrix& om = v.omega();
  return -(om * g.transpose() * om);
}

Matrix restrict_gram(const Matrix& g, std::span<const Vector> basis) {
  if (!g.is_square()) throw DimensionError("Gram matrix must be square");
  const Matrix b = Matrix::from_columns(basis, g.rows());
  return b.transpose() * g * b;
}

}  // namespace lieplan
