#pragma once

// Classical root systems in epsilon coordinates: A_{n-1} inside gl(n) and
// C_n inside sp(2n). Weights are pairs of rational vectors (real and
// imaginary parts); Weyl groups are handled implicitly as (signed)
// permutations.

#include <optional>
#include <string>
#include <vector>

#include "lieplan/rational.hpp"

namespace lieplan {

enum class RootFamily { A, C };

struct RootSystemSpec {
  RootFamily family = RootFamily::C;
  int rank = 1;  ///< n, meaning gl(n) or sp(2n)

  void validate() const;
  friend bool operator==(const RootSystemSpec&, const RootSystemSpec&) = default;
};

/// Complex number with rational real and imaginary parts.
struct ComplexRational {
  Rational re;
  Rational im;

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  bool is_real_positive() const { return sgn(im) == 0 && sgn(re) > 0; }
  Rational modulus_squared() const { return re * re + im * im; }
  friend bool operator==(const ComplexRational&, const ComplexRational&) = default;
};

/// re + sqrt(-1) im, in epsilon coordinates.
class Weight {
 public:
  Weight() = default;
  explicit Weight(std::size_t n) : re_(n), im_(n) {}
  Weight(Vector re, Vector im);

  static Weight real(Vector re);
  static Weight imaginary(Vector im);

  std::size_t size() const { return re_.size(); }
  const Vector& re() const { return re_; }
  const Vector& im() const { return im_; }
  ComplexRational at(std::size_t i) const { return {re_[i], im_[i]}; }
  void set(std::size_t i, const ComplexRational& z);

  Weight operator-() const;
  friend Weight operator+(const Weight& a, const Weight& b);
  friend Weight operator-(const Weight& a, const Weight& b);
  friend bool operator==(const Weight&, const Weight&) = default;

 private:
  Vector re_;
  Vector im_;
};

enum class RootKind { EpsDiff, EpsSum, TwoEps };

/// sign * (e_i - e_j), sign * (e_i + e_j) or sign * 2 e_i, with i < j.
/// Indices are zero-based.
struct Root {
  RootKind kind = RootKind::TwoEps;
  int i = 0;
  int j = 0;
  int sign = 1;

  static Root eps_diff(int i, int j, int sign = 1);
  static Root eps_sum(int i, int j, int sign = 1);
  static Root two_eps(int i, int sign = 1);

  Root negated() const;
  bool is_positive() const { return sign > 0; }
  std::vector<int> coefficients(int n) const;
  /// Largest coordinate index touched.
  int max_index() const { return kind == RootKind::TwoEps ? i : j; }

  friend bool operator==(const Root&, const Root&) = default;
  friend auto operator<=>(const Root&, const Root&) = default;
};

/// e.g. "e1-e2", "-e2-e3", "2e1", "-2e4" (one-based).
std::string to_string(const Root& r);
Root parse_root(const std::string& text);

std::vector<Root> roots(const RootSystemSpec& spec);
std::vector<Root> positive_roots(const RootSystemSpec& spec);

/// The root with the given epsilon coefficients, if it belongs to the system.
std::optional<Root> root_from_coefficients(const RootSystemSpec& spec, const std::vector<int>& coeffs);

/// <lambda, alpha^vee>, applied to the real and imaginary parts separately.
ComplexRational pairing(const Weight& lambda, const Root& alpha);

/// Complex Levi of shape "abelian coordinates + one classical tail": the
/// first `abelian` coordinates carry gl(1) factors, the remaining ones a
/// gl(n - abelian) (family A) or sp(2(n - abelian)) (family C) block.
struct LeviDescriptor {
  RootSystemSpec spec;
  int abelian = 0;

  static LeviDescriptor cartan(const RootSystemSpec& spec);
  static LeviDescriptor full(const RootSystemSpec& spec);
  static LeviDescriptor with_abelian(const RootSystemSpec& spec, int abelian);

  int tail_size() const { return spec.rank - abelian; }
  bool is_tail(int coordinate) const { return coordinate >= abelian; }
  /// Root lies in Delta(l), i.e. is supported on the tail block.
  bool contains(const Root& alpha) const;
  std::vector<Root> levi_roots() const;
  std::vector<Root> complement_roots() const;

  void validate() const;
  friend bool operator==(const LeviDescriptor&, const LeviDescriptor&) = default;
};

/// Half the sum of the Levi's positive roots (standard positive system).
Weight rho(const RootSystemSpec& spec, const LeviDescriptor& levi);
Weight rho(const RootSystemSpec& spec);

/// Canonical W-orbit representative: family A sorts coordinates descending;
/// family C first flips each coordinate to its nonnegative sign and then
/// sorts. Coordinates compare lexicographically on (re, im).
Weight weyl_canonical(const RootSystemSpec& spec, const Weight& lambda);

/// {shift + v : v_i = 0 wherever forced_zero[i]}
struct AffinePattern {
  Weight shift;
  std::vector<bool> forced_zero;

  static AffinePattern whole_space(std::size_t n);
  bool contains(const Weight& w) const;
};

inline constexpr int kMaxWeylRank = 8;

/// Whether some w in W moves xi into the pattern. Decided by matching the
/// forced coordinates of the shift against the coordinates of xi (up to
/// sign for family C) rather than by walking W.
bool weyl_orbit_intersects_affine(const RootSystemSpec& spec, const Weight& xi, const AffinePattern& pattern);

}  // namespace lieplan
