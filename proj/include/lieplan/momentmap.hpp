#pragma once

// Moment-map membership for Sp(2n,R)/Sp(2m,R) and GL(n,R)/GL(m,R).
//
// For semisimple A in sp(2n,R) with sign(A) = (p, q), A lies in
// G.h^perp iff max{p, q} <= 2n - 2m; over C the condition is
// rank A <= 4n - 4m. Witnesses are 2m-dimensional subspaces on which the
// symplectic form is nondegenerate and (.,.)_A vanishes; they are built
// blockwise from a BlockSpec normal form.

#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "lieplan/exactlin.hpp"

namespace lieplan {

/// Compact Cartan block, eigenvalues +-|a| sqrt(-1), form sign = sign(a).
struct Elliptic2 {
  Rational a;
};
/// Split block diag(c, -c).
struct Hyperbolic2 {
  Rational c;
};
/// Indecomposable 4-dim block with eigenvalues +-p +- q sqrt(-1), q != 0.
struct Quad4 {
  Rational p;
  Rational q;
};
/// 2-dim kernel block.
struct Zero2 {};

using Block = std::variant<Elliptic2, Hyperbolic2, Quad4, Zero2>;

/// Number of symplectic pairs (x_i, y_i) the block occupies: 1 or 2.
std::size_t block_half_dim(const Block& b);

struct BlockSpec {
  std::vector<Block> blocks;

  std::size_t half_dim() const;
  void validate() const;
};

struct Realization {
  Matrix a;
  SymplecticSpace space;
};

/// Block-diagonal element of sp(2n, Q) with one block per entry of the
/// spec, laid out on consecutive symplectic pairs.
///
/// Elliptic2(a) is realized as [[0, a|a|], [-sign(a), 0]] on (x_i, y_i),
/// the Sp(2,R)-conjugate of a*J whose Gram matrix sign(a)*diag(1, a^2)
/// admits rational isotropic planes when paired with an opposite block.
/// Quad4(p, q) is diag(B, -B^T) on (x_i, x_{i+1}, y_i, y_{i+1}) with
/// B = [[p, q], [-q, p]].
Realization realize(const BlockSpec& spec);

/// max{p, q} <= 2n - 2m for sign(A) = (p, q). Requires A semisimple and in sp(V), 0 <= m <= n.
bool sp_membership(const Matrix& a, const SymplecticSpace& v, std::size_t m);

/// Complex criterion rank A <= 4n - 4m.
bool sp_complex_membership(const Matrix& a, std::size_t n, std::size_t m);

struct Witness {
  std::vector<Vector> basis;
};

/// Greedy constructive witness: Zero2 blocks, then Quad4 blocks, then
/// pairs of Hyperbolic2 blocks, then opposite-sign Elliptic2 pairs, each
/// contributing a 2-dim piece, until 2m dimensions are collected.
/// nullopt when no witness exists.
std::optional<Witness> sp_witness(const BlockSpec& spec, std::size_t m);

/// Exact check of rank 2m, nondegenerate Omega and vanishing (.,.)_A on the span.
bool verify_witness(const Matrix& a, const SymplecticSpace& v, const Witness& w, std::size_t m);

/// A real or complex-conjugate eigenvalue pair given by its trace
/// (lambda_1 + lambda_2) and product (lambda_1 lambda_2).
struct EigenPair {
  Rational trace;
  Rational product;
};

/// n x n matrix with the prescribed eigenvalues, built from 2x2 companion
/// blocks [[a, b], [1, 0]] with a = trace and b = -product, padded with the
/// singles on the diagonal and zeros elsewhere. The layout puts every
/// nonzero diagonal entry ahead of the last m indices, so the bottom-right
/// m x m block vanishes. Requires 2|pairs| + |singles| <= n and
/// |pairs| + |singles| <= n - m.
Matrix gl_companion(std::span<const EigenPair> pairs, std::span<const Rational> singles, std::size_t n, std::size_t m);

/// rank A <= 2n - 2m
bool gl_rank_bound(const Matrix& a, std::size_t n, std::size_t m);

/// One Elliptic2(a_i) per entry; all entries nonzero.
BlockSpec elliptic_element(std::span<const Rational> a);

}  // namespace lieplan
