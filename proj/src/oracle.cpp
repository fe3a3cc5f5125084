#include "lieplan/oracle.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>

#include "lieplan/errors.hpp"

namespace lieplan {

void OracleConfig::validate() const {
  if (trials < 1) throw InvalidSpec("oracle trials must be at least 1");
  if (!(float_tolerance > 0)) throw InvalidSpec("oracle tolerance must be positive");
  if (grid_radius < 1) throw InvalidSpec("oracle grid radius must be at least 1");
}

void OracleReport::check(bool ok, const std::string& what) {
  ++checks;
  if (!ok) {
    agree = false;
    mismatches.push_back(what);
  }
}

namespace {

std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
  // splitmix64 step on the combined key
  std::uint64_t z = a * 0x9E3779B97F4A7C15ULL + b + 0x632BE59BD9B4E5F5ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::string describe(const SpaceSpec& space) {
  std::ostringstream out;
  out << (space.family == GroupFamily::Sp ? "sp" : "gl") << "(n=" << space.n << ",m=" << space.m << ",k=" << space.k << ")";
  return out.str();
}

std::string describe(const RealForm& f) {
  std::ostringstream out;
  out << "(s=" << f.s << ",t=" << f.t << ",u=" << f.u << ")";
  return out.str();
}

}  // namespace

SupportStratum strata_bruteforce(const SpaceSpec& space, const RealForm& form, const OracleConfig& cfg) {
  space.validate();
  cfg.validate();
  if (space.family != GroupFamily::Sp) throw PreconditionViolation("strata brute force covers the Sp family");
  if (space.n > 5) throw CapabilityError("strata brute force limited to n <= 5");
  const int abelian = form.s + 2 * form.t + form.u;
  if (form.s < 0 || form.t < 0 || form.u < 0 || abelian > space.n) throw InvalidSpec("real form does not fit in n");
  if (cfg.grid_radius < abelian) throw CapabilityError("grid radius too small for distinct representatives");

  std::vector<int> admitted;
  for (int s1 = 0; s1 <= form.s; ++s1) {
    int accepted = 0;
    for (std::size_t trial = 0; trial < cfg.trials; ++trial) {
      std::mt19937_64 rng(mix(mix(cfg.seed, static_cast<std::uint64_t>(s1)), trial));
      std::vector<int> grid(static_cast<std::size_t>(cfg.grid_radius));
      std::iota(grid.begin(), grid.end(), 1);
      std::shuffle(grid.begin(), grid.end(), rng);
      // Distinct magnitudes keep the representative regular.
      std::vector<int> mags(grid.begin(), grid.begin() + abelian);
      std::vector<int> check = mags;
      std::sort(check.begin(), check.end());
      if (std::adjacent_find(check.begin(), check.end()) != check.end()) throw std::logic_error("grid magnitudes repeat");
      BlockSpec spec;
      std::size_t next = 0;
      for (int i = 0; i < form.s; ++i) {
        const int v = mags[next++];
        spec.blocks.push_back(Elliptic2{Rational(i < s1 ? v : -v)});
      }
      for (int i = 0; i < form.t; ++i) {
        const int p = mags[next++], q = mags[next++];
        spec.blocks.push_back(Quad4{Rational((rng() & 1U) ? p : -p), Rational(q)});
      }
      for (int i = 0; i < form.u; ++i) {
        const int c = mags[next++];
        spec.blocks.push_back(Hyperbolic2{Rational((rng() & 1U) ? c : -c)});
      }
      for (int i = abelian; i < space.n; ++i) spec.blocks.push_back(Zero2{});
      std::shuffle(spec.blocks.begin(), spec.blocks.end(), rng);
      const Realization r = realize(spec);
      if (sp_membership(r.a, r.space, static_cast<std::size_t>(space.m))) ++accepted;
    }
    if (accepted != 0 && accepted != static_cast<int>(cfg.trials))
      throw std::logic_error("membership varies within one stratum pattern");
    if (accepted != 0) admitted.push_back(s1);
  }

  if (space.cartan_regime()) return {form, SpCartanRange{admitted}};
  if (admitted.empty()) return {form, EmptyRegion{}};
  if (admitted.size() == 1 && 2 * admitted[0] == form.s) return {form, SpBalanced{admitted[0]}};
  return {form, SpCartanRange{admitted}};
}

SignaturePair numeric_signature(const std::vector<double>& entries, std::size_t dim, double tol) {
  if (entries.size() != dim * dim) throw DimensionError("entry count differs from dim^2");
  if (dim == 0) return {};
  Eigen::MatrixXd m(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = entries[i * dim + j];
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
  SignaturePair sig;
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
    const double e = solver.eigenvalues()(i);
    if (e > tol) ++sig.p;
    else if (e < -tol) ++sig.q;
  }
  return sig;
}

SignaturePair numeric_signature(const Matrix& g, double tol) {
  if (!g.is_square()) throw DimensionError("numeric signature needs a square matrix");
  std::vector<double> entries;
  entries.reserve(g.entries().size());
  for (const auto& x : g.entries()) entries.push_back(x.get_d());
  return numeric_signature(entries, g.rows(), tol);
}

namespace {

struct Diagonalized {
  std::vector<Vector> basis;  // columns with G-diagonal values `diag`
  std::vector<Rational> diag;
  std::vector<Vector> radical;
};

Rational form_value(const Matrix& g, const Vector& u, const Vector& w) {
  Rational acc = 0;
  const Vector gw = g.apply(w);
  for (std::size_t i = 0; i < u.size(); ++i) acc += u[i] * gw[i];
  return acc;
}

/// Orthogonal basis for the symmetric form g, tracking the change of basis.
Diagonalized diagonalize(const Matrix& g) {
  const std::size_t d = g.rows();
  std::vector<Vector> rest;
  for (std::size_t i = 0; i < d; ++i) {
    Vector e(d);
    e[i] = 1;
    rest.push_back(std::move(e));
  }
  Diagonalized out;
  while (!rest.empty()) {
    std::size_t piv = rest.size();
    for (std::size_t i = 0; i < rest.size(); ++i)
      if (sgn(form_value(g, rest[i], rest[i])) != 0) {
        piv = i;
        break;
      }
    if (piv == rest.size()) {
      for (std::size_t i = 0; i < rest.size() && piv == rest.size(); ++i)
        for (std::size_t j = i + 1; j < rest.size(); ++j)
          if (sgn(form_value(g, rest[i], rest[j])) != 0) {
            for (std::size_t k = 0; k < d; ++k) rest[i][k] += rest[j][k];
            piv = i;
            break;
          }
    }
    if (piv == rest.size()) {
      out.radical = std::move(rest);
      break;
    }
    Vector p = rest[piv];
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(piv));
    const Rational dp = form_value(g, p, p);
    for (auto& w : rest) {
      const Rational f = form_value(g, w, p) / dp;
      if (sgn(f) == 0) continue;
      for (std::size_t k = 0; k < d; ++k) w[k] -= f * p[k];
    }
    out.basis.push_back(std::move(p));
    out.diag.push_back(dp);
  }
  return out;
}

}  // namespace

std::optional<Witness> randomized_witness_search(const Matrix& a, const SymplecticSpace& v, std::size_t m,
                                                 const OracleConfig& cfg) {
  cfg.validate();
  if (v.dim() > 8) throw CapabilityError("witness search limited to 2n <= 8");
  if (m > v.half_dim()) throw PreconditionViolation("m exceeds n");
  if (m == 0) return Witness{};
  const Matrix g = gram_of(a, v);
  const Diagonalized dz = diagonalize(g);
  const std::size_t d = v.dim();

  std::vector<std::size_t> pos, neg;
  for (std::size_t i = 0; i < dz.diag.size(); ++i) (sgn(dz.diag[i]) > 0 ? pos : neg).push_back(i);

  std::mt19937_64 rng(cfg.seed);
  std::uniform_int_distribution<int> coef(-2, 2);
  for (std::size_t trial = 0; trial < cfg.trials; ++trial) {
    // Totally isotropic pool: the radical plus one null vector from each
    // of a random set of disjoint opposite-sign pairs.
    std::vector<Vector> pool = dz.radical;
    std::shuffle(pos.begin(), pos.end(), rng);
    std::shuffle(neg.begin(), neg.end(), rng);
    std::vector<bool> used(neg.size(), false);
    for (auto i : pos) {
      for (std::size_t t = 0; t < neg.size(); ++t) {
        if (used[t]) continue;
        Rational ratio;
        if (!rational_sqrt(-dz.diag[i] / dz.diag[neg[t]], ratio)) continue;
        used[t] = true;
        const Rational s = (rng() & 1U) ? ratio : Rational(-ratio);
        Vector atom = dz.basis[i];
        for (std::size_t k = 0; k < d; ++k) atom[k] += s * dz.basis[neg[t]][k];
        pool.push_back(std::move(atom));
        break;
      }
    }
    if (pool.size() < 2 * m) continue;
    // Random integer combinations of the pool; repair a degenerate draw by
    // redrawing the coefficients a few times.
    for (int repair = 0; repair < 4; ++repair) {
      Witness w;
      for (std::size_t c = 0; c < 2 * m; ++c) {
        Vector vec(d);
        for (const auto& p : pool) {
          const int k = coef(rng);
          if (k == 0) continue;
          for (std::size_t i = 0; i < d; ++i) vec[i] += k * p[i];
        }
        w.basis.push_back(std::move(vec));
      }
      if (sgn(determinant(restrict_gram(v.omega(), w.basis))) == 0) continue;
      if (verify_witness(a, v, w, m)) return w;
    }
  }
  return std::nullopt;
}

std::vector<std::vector<double>> ac_sample(const std::vector<Vector>& points, double norm_threshold,
                                           double angular_tolerance) {
  if (points.empty()) throw InvalidSpec("asymptotic cone sample needs at least one point");
  std::vector<std::vector<double>> reps;
  std::vector<std::vector<double>> sums;
  for (const auto& p : points) {
    std::vector<double> x;
    double norm = 0;
    for (const auto& c : p) {
      x.push_back(c.get_d());
      norm += x.back() * x.back();
    }
    norm = std::sqrt(norm);
    if (!(norm > norm_threshold)) continue;
    for (auto& c : x) c /= norm;
    bool placed = false;
    for (std::size_t k = 0; k < reps.size() && !placed; ++k) {
      const double dot = std::inner_product(x.begin(), x.end(), reps[k].begin(), 0.0);
      if (std::acos(std::clamp(dot, -1.0, 1.0)) <= angular_tolerance) {
        for (std::size_t i = 0; i < x.size(); ++i) sums[k][i] += x[i];
        placed = true;
      }
    }
    if (!placed) {
      reps.push_back(x);
      sums.push_back(x);
    }
  }
  for (auto& s : sums) {
    const double norm = std::sqrt(std::inner_product(s.begin(), s.end(), s.begin(), 0.0));
    for (auto& c : s) c /= norm;
  }
  std::sort(sums.begin(), sums.end(), std::greater<>());
  return sums;
}

std::vector<std::vector<double>> ac_sample(const std::vector<Vector>& points, const OracleConfig& cfg) {
  cfg.validate();
  return ac_sample(points, static_cast<double>(cfg.grid_radius));
}

bool weyl_bruteforce_intersect(const RootSystemSpec& spec, const Weight& xi, const AffinePattern& pattern) {
  spec.validate();
  if (spec.rank > 6) throw CapabilityError("Weyl brute force limited to n <= 6");
  const auto n = static_cast<std::size_t>(spec.rank);
  if (xi.size() != n || pattern.shift.size() != n) throw DimensionError("weight or pattern rank mismatch");
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  const unsigned long sign_masks = spec.family == RootFamily::C ? (1UL << n) : 1UL;
  do {
    for (unsigned long mask = 0; mask < sign_masks; ++mask) {
      Weight w(n);
      for (std::size_t i = 0; i < n; ++i) {
        ComplexRational z = xi.at(perm[i]);
        if ((mask >> i) & 1UL) z = {-z.re, -z.im};
        w.set(i, z);
      }
      if (pattern.contains(w)) return true;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

WeylCase random_weyl_case(const RootSystemSpec& spec, std::uint64_t seed) {
  spec.validate();
  const auto n = static_cast<std::size_t>(spec.rank);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> small(-3, 3);
  std::bernoulli_distribution coin(0.5);
  std::bernoulli_distribution imaginary(0.25);
  auto draw = [&] {
    Weight w(n);
    for (std::size_t i = 0; i < n; ++i) w.set(i, {Rational(small(rng)), imaginary(rng) ? Rational(small(rng)) : Rational(0)});
    return w;
  };
  Weight xi = draw();
  AffinePattern pattern{draw(), std::vector<bool>(n, false)};
  for (std::size_t i = 0; i < n; ++i) pattern.forced_zero[i] = coin(rng);
  if (coin(rng)) {
    // Copy forced coordinates from a random signed permutation of xi.
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    for (std::size_t i = 0; i < n; ++i) {
      if (!pattern.forced_zero[i]) continue;
      ComplexRational z = xi.at(perm[i]);
      if (spec.family == RootFamily::C && coin(rng)) z = {-z.re, -z.im};
      pattern.shift.set(i, z);
    }
    // Occasionally spoil one coordinate to create near misses.
    if (coin(rng)) {
      const std::size_t i = rng() % n;
      pattern.shift.set(i, {pattern.shift.re()[i] + 1, pattern.shift.im()[i]});
    }
  }
  return {std::move(xi), std::move(pattern)};
}

std::vector<BlockSpec> enumerate_block_specs(std::size_t max_half_dim, const std::vector<Rational>& params) {
  std::vector<Block> catalog;
  for (const auto& a : params)
    if (sgn(a) != 0) catalog.push_back(Elliptic2{a});
  for (const auto& c : params)
    if (sgn(c) != 0) catalog.push_back(Hyperbolic2{c});
  for (const auto& p : params)
    for (const auto& q : params)
      if (sgn(q) != 0) catalog.push_back(Quad4{p, q});
  catalog.push_back(Zero2{});

  std::vector<BlockSpec> out;
  std::vector<std::size_t> picks;
  // Nondecreasing catalog indices enumerate multisets once each.
  auto rec = [&](auto&& self, std::size_t start, std::size_t used) -> void {
    if (used >= 1) {
      BlockSpec spec;
      for (auto i : picks) spec.blocks.push_back(catalog[i]);
      out.push_back(std::move(spec));
    }
    for (std::size_t i = start; i < catalog.size(); ++i) {
      const std::size_t h = block_half_dim(catalog[i]);
      if (used + h > max_half_dim) continue;
      picks.push_back(i);
      self(self, i, used + h);
      picks.pop_back();
    }
  };
  rec(rec, 0, 0);
  return out;
}

std::vector<Matrix> gram_corpus(const OracleConfig& cfg) {
  cfg.validate();
  const std::vector<Rational> params{1, -1, 2, -2};
  std::vector<Matrix> corpus;
  std::size_t index = 0;
  for (const auto& spec : enumerate_block_specs(4, params)) {
    const Realization r = realize(spec);
    const Matrix g = gram_of(r.a, r.space);
    corpus.push_back(g);
    // Every 7th spec also contributes a conjugate g^{-T} G g^{-1}.
    if (index++ % 7 != 0) continue;
    const Matrix s = random_symplectic(r.space.half_dim(), mix(cfg.seed, index));
    const Matrix si = symplectic_inverse(s, r.space);
    const Matrix conj = si.transpose() * g * si;
    bool bounded = true;
    for (const auto& x : conj.entries())
      if (abs_value(x) > 1000) bounded = false;
    if (bounded) corpus.push_back(conj);
  }
  return corpus;
}

namespace {

void strata_suite(OracleReport& report, const OracleConfig& cfg) {
  for (int n = 1; n <= 5; ++n)
    for (int m = 0; m <= n; ++m) {
      const SpaceSpec space{GroupFamily::Sp, n, m, 0};
      for (const auto& form : real_forms(space)) {
        const bool ok = support_strata(space, form) == strata_bruteforce(space, form, cfg);
        report.check(ok, "strata " + describe(space) + " form " + describe(form));
      }
    }
}

void weyl_suite(OracleReport& report, const OracleConfig& cfg) {
  for (int n = 1; n <= 6; ++n)
    for (auto family : {RootFamily::A, RootFamily::C}) {
      const RootSystemSpec spec{family, n};
      for (std::size_t t = 0; t < cfg.trials; ++t) {
        const WeylCase c = random_weyl_case(spec, mix(cfg.seed, (static_cast<std::uint64_t>(n) << 8) + t));
        const bool ok = weyl_orbit_intersects_affine(spec, c.xi, c.pattern) == weyl_bruteforce_intersect(spec, c.xi, c.pattern);
        report.check(ok, std::string("weyl ") + (family == RootFamily::A ? "A" : "C") + std::to_string(n) + " case " + std::to_string(t));
      }
    }
}

void signature_suite(OracleReport& report, const OracleConfig& cfg) {
  std::size_t i = 0;
  for (const auto& g : gram_corpus(cfg)) {
    report.check(signature(g) == numeric_signature(g, cfg.float_tolerance), "signature corpus entry " + std::to_string(i));
    ++i;
  }
}

void witness_suite(OracleReport& report, const OracleConfig& cfg) {
  const std::vector<Rational> params{1, -1, 2, -3};
  std::size_t i = 0;
  for (const auto& spec : enumerate_block_specs(3, params)) {
    const Realization r = realize(spec);
    for (std::size_t m = 0; m <= r.space.half_dim(); ++m) {
      const bool member = sp_membership(r.a, r.space, m);
      OracleConfig local = cfg;
      local.seed = mix(cfg.seed, i++);
      const auto w = randomized_witness_search(r.a, r.space, m, local);
      if (w) report.check(member && verify_witness(r.a, r.space, *w, m), "random witness contradicts criterion, spec " + std::to_string(i));
      else report.check(true, "");
    }
  }
}

}  // namespace

OracleReport run_oracle_suite(const std::string& suite, const OracleConfig& cfg) {
  cfg.validate();
  OracleReport report;
  const bool all = suite == "all";
  if (!all && suite != "strata" && suite != "weyl" && suite != "signature" && suite != "witness")
    throw InvalidSpec("unknown oracle suite: " + suite);
  if (all || suite == "strata") strata_suite(report, cfg);
  if (all || suite == "weyl") weyl_suite(report, cfg);
  if (all || suite == "signature") signature_suite(report, cfg);
  if (all || suite == "witness") witness_suite(report, cfg);
  return report;
}

}  // namespace lieplan
