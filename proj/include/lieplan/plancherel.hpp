#pragma once

// Asymptotic Plancherel support data for
//   GL(n,R) / (GL(m,R) x GL(k,Z))   and   Sp(2n,R) / (Sp(2m,R) x Sp(2k,Z)):
// the Levi l_X, its real forms, the admitted strata per real form, the
// discrete-series verdict, Harish-Chandra parameters and theta-stable
// parabolic root sets. k never changes the answers; it is carried along.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "lieplan/exactlin.hpp"
#include "lieplan/rootsys.hpp"

namespace lieplan {

enum class GroupFamily { GL, Sp };

struct SpaceSpec {
  GroupFamily family = GroupFamily::Sp;
  int n = 1;
  int m = 0;
  int k = 0;

  void validate() const;
  /// 2m <= n: l_X is a Cartan subalgebra.
  bool cartan_regime() const { return 2 * m <= n; }
  RootSystemSpec root_system() const;
  friend bool operator==(const SpaceSpec&, const SpaceSpec&) = default;
};

/// Sp: U(1)^s x GL(1,C)^t x GL(1,R)^u x Sp(...), with s + 2t + u = r.
/// GL: GL(1,C)^s x GL(1,R)^u x GL(2m-n,R), with 2s + u = r and t = 0.
struct RealForm {
  int s = 0;
  int t = 0;
  int u = 0;

  friend bool operator==(const RealForm&, const RealForm&) = default;
};

/// Sp, 2m <= n: admitted numbers s1 of positive compact parameters.
struct SpCartanRange {
  std::vector<int> s1_values;
  friend bool operator==(const SpCartanRange&, const SpCartanRange&) = default;
};
/// Sp, 2m > n, s even: s1 = s2 = s/2.
struct SpBalanced {
  int half = 0;
  friend bool operator==(const SpBalanced&, const SpBalanced&) = default;
};
/// Sp, 2m > n, s odd.
struct EmptyRegion {
  friend bool operator==(const EmptyRegion&, const EmptyRegion&) = default;
};
/// GL, 2m <= n: every regular parameter.
struct GLFull {
  friend bool operator==(const GLFull&, const GLFull&) = default;
};
/// GL, 2m > n: parameters whose tail scalar coordinate vanishes.
struct GLRankCut {
  friend bool operator==(const GLRankCut&, const GLRankCut&) = default;
};

using Region = std::variant<SpCartanRange, SpBalanced, EmptyRegion, GLFull, GLRankCut>;

struct SupportStratum {
  RealForm form;
  Region region;
  friend bool operator==(const SupportStratum&, const SupportStratum&) = default;
};

/// The admitted s1 values of an Sp stratum (empty for GL regions).
std::vector<int> admitted_s1(const SupportStratum& stratum);

LeviDescriptor levi_lX(const SpaceSpec& space);

std::vector<RealForm> real_forms(const SpaceSpec& space);

SupportStratum support_strata(const SpaceSpec& space, const RealForm& form);

/// (2 s1 + 2t + u, 2 s2 + 2t + u) with s2 = s - s1.
SignaturePair stratum_signature(const RealForm& form, int s1);

enum class DsKind { Exists, NotDetermined, Degenerate };

struct DsVerdict {
  DsKind kind = DsKind::NotDetermined;
  std::string reason;
};

std::string to_string(DsKind kind);

/// Integer Harish-Chandra parameter with |a_1| > ... > |a_n| > 0.
struct HCParam {
  std::vector<long> a;
  friend bool operator==(const HCParam&, const HCParam&) = default;
};

/// Sp only. Exists (with the structural witness named in `reason`) when
/// (m, k) != (n, 0), Degenerate when h = g, NotDetermined for GL.
DsVerdict discrete_series_verdict(const SpaceSpec& space);

/// All HC parameters with |a_1| <= bound whose elliptic realization passes
/// sp_membership. Sp and 2m <= n only. Ordered by the absolute values
/// (lexicographically) and then by sign pattern.
std::vector<HCParam> enumerate_hc_params(const SpaceSpec& space, int bound);

/// Roots of n_S for S a subset of {1, ..., 2n-2m} (one-based) of size n-m.
/// Sp and n < 2m only.
std::vector<Root> theta_parabolic_roots(const SpaceSpec& space, const std::vector<int>& S);

/// Every valid S, in lexicographic order.
std::vector<std::vector<int>> theta_parabolic_index_sets(const SpaceSpec& space);

/// lambda + rho_l
Weight inf_char(const Weight& lambda, const LeviDescriptor& levi);

/// a_X^* + rho_{l_X} as a pattern for weyl_orbit_intersects_affine.
AffinePattern ax_pattern(const SpaceSpec& space);

bool inf_char_consistent(const Weight& xi, const SpaceSpec& space);

struct ParabolicFamily {
  std::vector<int> S;
  std::vector<Root> roots;
  friend bool operator==(const ParabolicFamily&, const ParabolicFamily&) = default;
};

struct SupportReport {
  SpaceSpec space;
  LeviDescriptor levi;
  std::vector<SupportStratum> strata;
  DsVerdict ds;
  std::optional<std::vector<HCParam>> hc_params;
  std::optional<std::vector<ParabolicFamily>> parabolics;
};

SupportReport build_report(const SpaceSpec& space, int bound);

}  // namespace lieplan
