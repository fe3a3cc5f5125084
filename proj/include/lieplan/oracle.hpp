#pragma once

// Brute-force and numeric cross-checks. Everything here is deliberately
// computed along a different route from the symbolic modules: strata by
// sweeping representatives through the matrix criterion, Weyl questions by
// walking the whole group, signatures by floating-point eigenvalues.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lieplan/momentmap.hpp"
#include "lieplan/plancherel.hpp"
#include "lieplan/rootsys.hpp"

namespace lieplan {

struct OracleConfig {
  std::uint64_t seed = 1;
  std::size_t trials = 8;
  int grid_radius = 12;
  double float_tolerance = 1e-8;

  void validate() const;
};

/// Sp only, n <= 5. For every s1 in [0, s], draws regular integer
/// representatives of the real form (s1 positive and s - s1 negative compact
/// parameters, t Quad4 and u Hyperbolic2 blocks, Zero2 on the tail) and
/// keeps s1 when sp_membership accepts them.
SupportStratum strata_bruteforce(const SpaceSpec& space, const RealForm& form, const OracleConfig& cfg);

/// Inertia from the eigenvalues of a symmetric row-major double matrix;
/// eigenvalues with |x| < tol count as zero.
SignaturePair numeric_signature(const std::vector<double>& entries, std::size_t dim, double tol);
SignaturePair numeric_signature(const Matrix& g, double tol);

/// Seeded search for a witness subspace assembled from the radical of
/// (.,.)_A and from isotropic pairs of its diagonalized form. Any returned
/// witness has passed verify_witness; nullopt is inconclusive. 2n <= 8.
std::optional<Witness> randomized_witness_search(const Matrix& a, const SymplecticSpace& v, std::size_t m,
                                                 const OracleConfig& cfg);

/// Unit directions of the points whose norm exceeds `norm_threshold`,
/// clustered greedily within `angular_tolerance` radians. A bounded sample
/// (nothing beyond the threshold) yields no directions.
std::vector<std::vector<double>> ac_sample(const std::vector<Vector>& points, double norm_threshold,
                                           double angular_tolerance = 1e-6);
std::vector<std::vector<double>> ac_sample(const std::vector<Vector>& points, const OracleConfig& cfg);

/// Literal walk over all of W (n! or 2^n n! elements). n <= 6.
bool weyl_bruteforce_intersect(const RootSystemSpec& spec, const Weight& xi, const AffinePattern& pattern);

struct WeylCase {
  Weight xi;
  AffinePattern pattern;
};

/// Seeded (xi, pattern) pair with small integer coordinates, biased so that
/// roughly half of the cases have an orbit point inside the pattern.
WeylCase random_weyl_case(const RootSystemSpec& spec, std::uint64_t seed);

/// Every multiset of blocks (each block parameter drawn from `params`) with
/// total half dimension between 1 and max_half_dim.
std::vector<BlockSpec> enumerate_block_specs(std::size_t max_half_dim, const std::vector<Rational>& params);

/// Gram matrices of realized block specs with 2n <= 8 and parameters in
/// {+-1, +-2}, plus symplectic conjugates whose entries stay within 10^3.
std::vector<Matrix> gram_corpus(const OracleConfig& cfg);

struct OracleReport {
  bool agree = true;
  std::size_t checks = 0;
  std::vector<std::string> mismatches;

  void check(bool ok, const std::string& what);
};

/// "strata", "weyl", "signature", "witness" or "all".
OracleReport run_oracle_suite(const std::string& suite, const OracleConfig& cfg);

}  // namespace lieplan
