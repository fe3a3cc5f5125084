#include "lieplan/plancherel.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "lieplan/errors.hpp"
#include "lieplan/levi.hpp"
#include "lieplan/momentmap.hpp"

namespace lieplan {

void SpaceSpec::validate() const {
  if (n < 1) throw InvalidSpec("space needs n >= 1");
  if (m < 0 || k < 0) throw InvalidSpec("m and k must be nonnegative");
  if (m + k > n) throw InvalidSpec("space needs m + k <= n");
}

RootSystemSpec SpaceSpec::root_system() const {
  return {family == GroupFamily::Sp ? RootFamily::C : RootFamily::A, n};
}

std::vector<int> admitted_s1(const SupportStratum& stratum) {
  if (const auto* r = std::get_if<SpCartanRange>(&stratum.region)) return r->s1_values;
  if (const auto* b = std::get_if<SpBalanced>(&stratum.region)) return {b->half};
  return {};
}

LeviDescriptor levi_lX(const SpaceSpec& space) {
  space.validate();
  const RootSystemSpec rs = space.root_system();
  if (space.cartan_regime()) return LeviDescriptor::cartan(rs);
  // Sp: l^{2(n-m)} = gl(1)^{2(n-m)} + sp(2(2m-n)); GL: gl(1)^{2n-2m} + gl(2m-n).
  return LeviDescriptor::with_abelian(rs, 2 * (space.n - space.m));
}

std::vector<RealForm> real_forms(const SpaceSpec& space) {
  const int r = levi_lX(space).abelian;
  std::vector<RealForm> forms;
  if (space.family == GroupFamily::Sp) {
    for (int s = r; s >= 0; --s)
      for (int t = (r - s) / 2; t >= 0; --t) forms.push_back({s, t, r - s - 2 * t});
  } else {
    for (int s = 0; 2 * s <= r; ++s) forms.push_back({s, 0, r - 2 * s});
  }
  return forms;
}

SupportStratum support_strata(const SpaceSpec& space, const RealForm& form) {
  const auto forms = real_forms(space);
  if (std::find(forms.begin(), forms.end(), form) == forms.end())
    throw InvalidSpec("real form does not belong to the Levi of this space");
  if (space.family == GroupFamily::GL) {
    if (space.cartan_regime()) return {form, GLFull{}};
    return {form, GLRankCut{}};
  }
  const int n = space.n, m = space.m, s = form.s;
  if (space.cartan_regime()) {
    // (2m - n + s)/2 <= s1 <= (n - 2m + s)/2, compared after doubling.
    SpCartanRange range;
    for (int s1 = 0; s1 <= s; ++s1)
      if (2 * s1 >= 2 * m - n + s && 2 * s1 <= n - 2 * m + s) range.s1_values.push_back(s1);
    return {form, range};
  }
  if (s % 2 != 0) return {form, EmptyRegion{}};
  return {form, SpBalanced{s / 2}};
}

SignaturePair stratum_signature(const RealForm& form, int s1) {
  if (s1 < 0 || s1 > form.s) throw PreconditionViolation("s1 must lie in [0, s]");
  const int s2 = form.s - s1;
  return {static_cast<std::size_t>(2 * s1 + 2 * form.t + form.u), static_cast<std::size_t>(2 * s2 + 2 * form.t + form.u)};
}

std::string to_string(DsKind kind) {
  switch (kind) {
    case DsKind::Exists:
      return "exists";
    case DsKind::NotDetermined:
      return "not_determined";
    case DsKind::Degenerate:
      return "degenerate";
  }
  return "not_determined";
}

namespace {

std::string join(const std::vector<long>& v) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? ", " : "") << v[i];
  out << ')';
  return out.str();
}

std::string join(const std::vector<int>& v) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  out << '}';
  return out.str();
}

void require_sp_cartan(const SpaceSpec& space) {
  space.validate();
  if (space.family != GroupFamily::Sp || !space.cartan_regime())
    throw PreconditionViolation("Harish-Chandra enumeration needs family Sp with 2m <= n");
}

bool hc_admissible(const std::vector<long>& a, std::size_t m) {
  std::vector<Rational> params(a.begin(), a.end());
  const Realization r = realize(elliptic_element(params));
  return sp_membership(r.a, r.space, m);
}

/// Visits admissible parameters in enumeration order until the visitor returns false.
void for_each_hc_param(const SpaceSpec& space, int bound, const std::function<bool(HCParam)>& visit) {
  const int n = space.n;
  if (bound < n) return;
  // Strictly decreasing absolute values, built as increasing combinations
  // of {1..bound} read in reverse.
  std::vector<int> comb(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) comb[static_cast<std::size_t>(i)] = i + 1;
  while (true) {
    for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
      HCParam p;
      for (int i = 0; i < n; ++i) {
        const long v = comb[static_cast<std::size_t>(n - 1 - i)];
        p.a.push_back((mask >> i) & 1UL ? -v : v);
      }
      if (hc_admissible(p.a, static_cast<std::size_t>(space.m)) && !visit(std::move(p))) return;
    }
    // colex successor, i.e. the next decreasing tuple in lexicographic order
    int j = 0;
    while (j < n - 1 && comb[static_cast<std::size_t>(j)] + 1 == comb[static_cast<std::size_t>(j + 1)]) ++j;
    if (j == n - 1 && comb[static_cast<std::size_t>(j)] == bound) return;
    ++comb[static_cast<std::size_t>(j)];
    for (int t = 0; t < j; ++t) comb[static_cast<std::size_t>(t)] = t + 1;
  }
}

}  // namespace

std::vector<HCParam> enumerate_hc_params(const SpaceSpec& space, int bound) {
  require_sp_cartan(space);
  if (bound < 0) throw InvalidSpec("bound must be nonnegative");
  std::vector<HCParam> out;
  for_each_hc_param(space, bound, [&](HCParam p) {
    out.push_back(std::move(p));
    return true;
  });
  return out;
}

std::vector<std::vector<int>> theta_parabolic_index_sets(const SpaceSpec& space) {
  space.validate();
  if (space.family != GroupFamily::Sp || space.cartan_regime())
    throw PreconditionViolation("theta-stable parabolics q_S need family Sp with n < 2m");
  const int r = 2 * (space.n - space.m), size = space.n - space.m;
  std::vector<std::vector<int>> out;
  std::vector<bool> pick(static_cast<std::size_t>(r), false);
  std::fill(pick.begin(), pick.begin() + size, true);
  do {
    std::vector<int> S;
    for (int i = 0; i < r; ++i)
      if (pick[static_cast<std::size_t>(i)]) S.push_back(i + 1);
    out.push_back(std::move(S));
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

std::vector<Root> theta_parabolic_roots(const SpaceSpec& space, const std::vector<int>& S) {
  space.validate();
  if (space.family != GroupFamily::Sp || space.cartan_regime())
    throw PreconditionViolation("theta-stable parabolics q_S need family Sp with n < 2m");
  const int n = space.n, r = 2 * (space.n - space.m);
  if (static_cast<int>(S.size()) != space.n - space.m) throw InvalidSpec("S must have n - m elements");
  std::vector<bool> in_s(static_cast<std::size_t>(r), false);
  for (int i : S) {
    if (i < 1 || i > r) throw InvalidSpec("S must be a subset of {1, ..., 2n-2m}");
    if (in_s[static_cast<std::size_t>(i - 1)]) throw InvalidSpec("S has a repeated index");
    in_s[static_cast<std::size_t>(i - 1)] = true;
  }
  // i in S:  e_i +- e_j (j > i), 2e_i;  i in S':  -e_i +- e_j (j > i), -2e_i
  std::vector<Root> out;
  for (int i = 0; i < r; ++i) {
    const int sg = in_s[static_cast<std::size_t>(i)] ? 1 : -1;
    for (int j = i + 1; j < n; ++j) {
      out.push_back(Root::eps_diff(i, j, sg));
      out.push_back(Root::eps_sum(i, j, sg));
    }
    out.push_back(Root::two_eps(i, sg));
  }
  return out;
}

DsVerdict discrete_series_verdict(const SpaceSpec& space) {
  space.validate();
  if (space.family == GroupFamily::GL) return {DsKind::NotDetermined, "no discrete-series statement for the GL family"};
  if (space.m == space.n) return {DsKind::Degenerate, "h = g"};
  if (space.cartan_regime()) {
    std::optional<HCParam> found;
    for_each_hc_param(space, space.n + 1, [&](HCParam p) {
      found = std::move(p);
      return false;
    });
    if (!found) return {DsKind::NotDetermined, "no admissible Harish-Chandra parameter at bound n+1"};
    return {DsKind::Exists, "Harish-Chandra parameter " + join(found->a)};
  }
  const auto sets = theta_parabolic_index_sets(space);
  if (sets.empty()) return {DsKind::NotDetermined, "no theta-stable parabolic q_S"};
  return {DsKind::Exists, "theta-stable parabolic q_S with S = " + join(sets.front())};
}

Weight inf_char(const Weight& lambda, const LeviDescriptor& levi) {
  require_center_support(lambda, levi);
  return lambda + rho(levi.spec, levi);
}

AffinePattern ax_pattern(const SpaceSpec& space) {
  const LeviDescriptor levi = levi_lX(space);
  const auto n = static_cast<std::size_t>(space.n);
  if (space.cartan_regime()) return AffinePattern::whole_space(n);
  AffinePattern pattern{rho(levi.spec, levi), std::vector<bool>(n, false)};
  for (std::size_t i = static_cast<std::size_t>(levi.abelian); i < n; ++i) pattern.forced_zero[i] = true;
  return pattern;
}

bool inf_char_consistent(const Weight& xi, const SpaceSpec& space) {
  space.validate();
  if (space.n > kMaxWeylRank) throw CapabilityError("Weyl group enumeration limited to rank 8");
  return weyl_orbit_intersects_affine(space.root_system(), xi, ax_pattern(space));
}

SupportReport build_report(const SpaceSpec& space, int bound) {
  space.validate();
  SupportReport report{space, levi_lX(space), {}, discrete_series_verdict(space), std::nullopt, std::nullopt};
  for (const auto& form : real_forms(space)) report.strata.push_back(support_strata(space, form));
  if (space.family == GroupFamily::Sp && report.ds.kind != DsKind::Degenerate) {
    if (space.cartan_regime()) {
      report.hc_params = enumerate_hc_params(space, bound);
    } else {
      std::vector<ParabolicFamily> families;
      for (auto& S : theta_parabolic_index_sets(space)) {
        auto roots_S = theta_parabolic_roots(space, S);
        families.push_back({std::move(S), std::move(roots_S)});
      }
      report.parabolics = std::move(families);
    }
  }
  return report;
}

}  // namespace lieplan
