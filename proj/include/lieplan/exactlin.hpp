#pragma once

// Exact rational linear algebra: rank, inertia of symmetric forms,
// semisimplicity and the symplectic utilities used by the moment-map
// criteria. No floating point anywhere in this module.

#include <cstdint>
#include <span>
#include <vector>

#include "lieplan/matrix.hpp"
#include "lieplan/polynomial.hpp"

namespace lieplan {

/// Inertia indices of a real symmetric form.
struct SignaturePair {
  std::size_t p = 0;
  std::size_t q = 0;

  std::size_t max() const { return p > q ? p : q; }
  std::size_t rank() const { return p + q; }
  friend bool operator==(const SignaturePair&, const SignaturePair&) = default;
};

/// (R^{2n}, <.,.>) with the standard form Omega = [[0, I_n], [-I_n, 0]].
/// Coordinates are ordered (x_1..x_n, y_1..y_n) so that <x_i, y_i> = 1.
class SymplecticSpace {
 public:
  explicit SymplecticSpace(std::size_t half_dim);

  std::size_t half_dim() const { return half_dim_; }
  std::size_t dim() const { return 2 * half_dim_; }
  const Matrix& omega() const { return omega_; }

  /// <u, v> = u^T Omega v
  Rational pairing(const Vector& u, const Vector& v) const;

 private:
  std::size_t half_dim_;
  Matrix omega_;
};

/// Rank over Q by fraction-free (Bareiss) elimination on row-scaled integers.
std::size_t rank(const Matrix& m);

Rational determinant(const Matrix& m);

/// Gauss-Jordan inverse; throws PreconditionViolation on a singular input.
Matrix inverse(const Matrix& m);

/// Basis of {v : M v = 0}, from the reduced row echelon form.
std::vector<Vector> nullspace(const Matrix& m);

/// Minimal polynomial as the lcm of the Krylov annihilators of the
/// standard basis vectors. Monic.
Polynomial minimal_polynomial(const Matrix& m);

/// det(x I - M) by Faddeev-LeVerrier. Monic of degree rows().
Polynomial characteristic_polynomial(const Matrix& m);

/// True iff the minimal polynomial is squarefree over Q.
bool is_semisimple(const Matrix& m);

/// Inertia of a symmetric matrix by congruence elimination: diagonal pivots
/// when one is available, hyperbolic 2x2 pivots when the remaining diagonal
/// vanishes.
SignaturePair signature(const Matrix& g);

bool is_infinitesimally_symplectic(const Matrix& a, const SymplecticSpace& v);
bool is_symplectic(const Matrix& g, const SymplecticSpace& v);

/// Gram matrix of (v1, v2)_A = <A v1, v2>, i.e. A^T Omega.
/// Throws FormError when A is not in sp(V).
Matrix gram_of(const Matrix& a, const SymplecticSpace& v);

/// x -> x + c <v, x> v
struct Transvection {
  Vector v;
  Rational c;
};

/// The seed-deterministic list of transvections multiplied by random_symplectic.
std::vector<Transvection> transvection_plan(std::size_t n, std::uint64_t seed);

Matrix transvection_matrix(const Transvection& t, const SymplecticSpace& v);

/// Product of transvection_plan(n, seed), so g^T Omega g = Omega exactly.
Matrix random_symplectic(std::size_t n, std::uint64_t seed);

/// g^{-1} = -Omega g^T Omega for symplectic g.
Matrix symplectic_inverse(const Matrix& g, const SymplecticSpace& v);

/// B^T G B where B has the basis vectors as columns.
Matrix restrict_gram(const Matrix& g, std::span<const Vector> basis);

}  // namespace lieplan
