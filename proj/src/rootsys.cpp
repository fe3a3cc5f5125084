#include "lieplan/rootsys.hpp"

#include <algorithm>
#include <map>
#include <regex>
#include <sstream>
#include <utility>

#include "lieplan/errors.hpp"

namespace lieplan {

void RootSystemSpec::validate() const {
  if (rank < 1) throw InvalidSpec("root system rank must be at least 1");
}

Weight::Weight(Vector re, Vector im) : re_(std::move(re)), im_(std::move(im)) {
  if (re_.size() != im_.size()) throw DimensionError("weight real and imaginary parts differ in length");
}

Weight Weight::real(Vector re) {
  const std::size_t n = re.size();
  return Weight(std::move(re), Vector(n));
}

Weight Weight::imaginary(Vector im) {
  const std::size_t n = im.size();
  return Weight(Vector(n), std::move(im));
}

void Weight::set(std::size_t i, const ComplexRational& z) {
  re_[i] = z.re;
  im_[i] = z.im;
}

Weight Weight::operator-() const {
  Weight w = *this;
  for (auto& x : w.re_) x = -x;
  for (auto& x : w.im_) x = -x;
  return w;
}

Weight operator+(const Weight& a, const Weight& b) {
  if (a.size() != b.size()) throw DimensionError("weight rank mismatch");
  Weight w = a;
  for (std::size_t i = 0; i < a.size(); ++i) {
    w.re_[i] += b.re_[i];
    w.im_[i] += b.im_[i];
  }
  return w;
}

Weight operator-(const Weight& a, const Weight& b) { return a + (-b); }

Root Root::eps_diff(int i, int j, int sign) {
  if (i == j) throw InvalidSpec("e_i - e_i is not a root");
  if (i > j) {
    std::swap(i, j);
    sign = -sign;
  }
  return {RootKind::EpsDiff, i, j, sign};
}

Root Root::eps_sum(int i, int j, int sign) {
  if (i == j) throw InvalidSpec("e_i + e_i is written 2e_i");
  if (i > j) std::swap(i, j);
  return {RootKind::EpsSum, i, j, sign};
}

Root Root::two_eps(int i, int sign) { return {RootKind::TwoEps, i, i, sign}; }

Root Root::negated() const {
  Root r = *this;
  r.sign = -sign;
  return r;
}

std::vector<int> Root::coefficients(int n) const {
  std::vector<int> c(static_cast<std::size_t>(n), 0);
  switch (kind) {
    case RootKind::EpsDiff:
      c[static_cast<std::size_t>(i)] = sign;
      c[static_cast<std::size_t>(j)] = -sign;
      break;
    case RootKind::EpsSum:
      c[static_cast<std::size_t>(i)] = sign;
      c[static_cast<std::size_t>(j)] = sign;
      break;
    case RootKind::TwoEps:
      c[static_cast<std::size_t>(i)] = 2 * sign;
      break;
  }
  return c;
}

std::string to_string(const Root& r) {
  std::ostringstream out;
  const int a = r.i + 1, b = r.j + 1;
  switch (r.kind) {
    case RootKind::EpsDiff:
      if (r.sign > 0) out << 'e' << a << "-e" << b;
      else out << "-e" << a << "+e" << b;
      break;
    case RootKind::EpsSum:
      out << (r.sign > 0 ? "" : "-") << 'e' << a << (r.sign > 0 ? "+e" : "-e") << b;
      break;
    case RootKind::TwoEps:
      out << (r.sign > 0 ? "" : "-") << "2e" << a;
      break;
  }
  return out.str();
}

Root parse_root(const std::string& text) {
  static const std::regex two(R"(^(-?)2e([0-9]+)$)");
  static const std::regex pair(R"(^(-?)e([0-9]+)([+-])e([0-9]+)$)");
  std::smatch m;
  if (std::regex_match(text, m, two)) {
    return Root::two_eps(std::stoi(m[2]) - 1, m[1].length() ? -1 : 1);
  }
  if (std::regex_match(text, m, pair)) {
    const int s1 = m[1].length() ? -1 : 1;
    const int s2 = m[3] == "-" ? -1 : 1;
    const int a = std::stoi(m[2]) - 1, b = std::stoi(m[4]) - 1;
    if (a >= b) throw ParseError("root indices must increase: " + text);
    if (s1 == -s2) return Root::eps_diff(a, b, s1);
    return Root::eps_sum(a, b, s1);
  }
  throw ParseError("malformed root: " + text);
}

std::vector<Root> positive_roots(const RootSystemSpec& spec) {
  spec.validate();
  std::vector<Root> out;
  const int n = spec.rank;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) out.push_back(Root::eps_diff(i, j));
  if (spec.family == RootFamily::C) {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) out.push_back(Root::eps_sum(i, j));
    for (int i = 0; i < n; ++i) out.push_back(Root::two_eps(i));
  }
  return out;
}

std::vector<Root> roots(const RootSystemSpec& spec) {
  std::vector<Root> out;
  for (const auto& r : positive_roots(spec)) {
    out.push_back(r);
    out.push_back(r.negated());
  }
  return out;
}

std::optional<Root> root_from_coefficients(const RootSystemSpec& spec, const std::vector<int>& coeffs) {
  if (coeffs.size() != static_cast<std::size_t>(spec.rank)) return std::nullopt;
  std::vector<int> support;
  for (int i = 0; i < spec.rank; ++i)
    if (coeffs[static_cast<std::size_t>(i)] != 0) support.push_back(i);
  const bool c_type = spec.family == RootFamily::C;
  if (support.size() == 1) {
    const int v = coeffs[static_cast<std::size_t>(support[0])];
    if (c_type && (v == 2 || v == -2)) return Root::two_eps(support[0], v / 2);
    return std::nullopt;
  }
  if (support.size() != 2) return std::nullopt;
  const int a = coeffs[static_cast<std::size_t>(support[0])];
  const int b = coeffs[static_cast<std::size_t>(support[1])];
  if ((a != 1 && a != -1) || (b != 1 && b != -1)) return std::nullopt;
  if (a == -b) return Root::eps_diff(support[0], support[1], a);
  if (c_type) return Root::eps_sum(support[0], support[1], a);
  return std::nullopt;
}

ComplexRational pairing(const Weight& lambda, const Root& alpha) {
  if (alpha.max_index() >= static_cast<int>(lambda.size())) throw DimensionError("weight rank does not match root");
  const auto i = static_cast<std::size_t>(alpha.i), j = static_cast<std::size_t>(alpha.j);
  ComplexRational z;
  switch (alpha.kind) {
    case RootKind::EpsDiff:
      z = {lambda.re()[i] - lambda.re()[j], lambda.im()[i] - lambda.im()[j]};
      break;
    case RootKind::EpsSum:
      z = {lambda.re()[i] + lambda.re()[j], lambda.im()[i] + lambda.im()[j]};
      break;
    case RootKind::TwoEps:
      z = {lambda.re()[i], lambda.im()[i]};
      break;
  }
  if (alpha.sign < 0) z = {-z.re, -z.im};
  return z;
}

LeviDescriptor LeviDescriptor::cartan(const RootSystemSpec& spec) { return {spec, spec.rank}; }
LeviDescriptor LeviDescriptor::full(const RootSystemSpec& spec) { return {spec, 0}; }

LeviDescriptor LeviDescriptor::with_abelian(const RootSystemSpec& spec, int abelian) {
  LeviDescriptor l{spec, abelian};
  l.validate();
  return l;
}

void LeviDescriptor::validate() const {
  spec.validate();
  if (abelian < 0 || abelian > spec.rank) throw InvalidSpec("Levi abelian count out of range");
}

bool LeviDescriptor::contains(const Root& alpha) const { return is_tail(alpha.i) && is_tail(alpha.j); }

std::vector<Root> LeviDescriptor::levi_roots() const {
  std::vector<Root> out;
  for (const auto& r : roots(spec))
    if (contains(r)) out.push_back(r);
  return out;
}

std::vector<Root> LeviDescriptor::complement_roots() const {
  std::vector<Root> out;
  for (const auto& r : roots(spec))
    if (!contains(r)) out.push_back(r);
  return out;
}

Weight rho(const RootSystemSpec& spec, const LeviDescriptor& levi) {
  if (!(levi.spec == spec)) throw InvalidSpec("Levi belongs to a different root system");
  levi.validate();
  const int n = spec.rank;
  std::vector<long> twice(static_cast<std::size_t>(n), 0);
  for (const auto& r : positive_roots(spec)) {
    if (!levi.contains(r)) continue;
    const auto c = r.coefficients(n);
    for (int i = 0; i < n; ++i) twice[static_cast<std::size_t>(i)] += c[static_cast<std::size_t>(i)];
  }
  Vector re(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) re[static_cast<std::size_t>(i)] = Rational(twice[static_cast<std::size_t>(i)], 2);
  for (auto& x : re) x.canonicalize();
  return Weight::real(std::move(re));
}

Weight rho(const RootSystemSpec& spec) { return rho(spec, LeviDescriptor::full(spec)); }

namespace {

using Coord = std::pair<Rational, Rational>;

Coord flip_nonnegative(const Coord& c) {
  const int s = sgn(c.first) != 0 ? sgn(c.first) : sgn(c.second);
  return s < 0 ? Coord{-c.first, -c.second} : c;
}

struct CoordLess {
  bool operator()(const Coord& a, const Coord& b) const {
    if (a.first != b.first) return a.first < b.first;
    return a.second < b.second;
  }
};

}  // namespace

Weight weyl_canonical(const RootSystemSpec& spec, const Weight& lambda) {
  if (lambda.size() != static_cast<std::size_t>(spec.rank)) throw DimensionError("weight rank mismatch");
  std::vector<Coord> coords;
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    Coord c{lambda.re()[i], lambda.im()[i]};
    coords.push_back(spec.family == RootFamily::C ? flip_nonnegative(c) : c);
  }
  std::sort(coords.begin(), coords.end(), [](const Coord& a, const Coord& b) { return CoordLess{}(b, a); });
  Weight out(lambda.size());
  for (std::size_t i = 0; i < coords.size(); ++i) out.set(i, {coords[i].first, coords[i].second});
  return out;
}

AffinePattern AffinePattern::whole_space(std::size_t n) { return {Weight(n), std::vector<bool>(n, false)}; }

bool AffinePattern::contains(const Weight& w) const {
  if (w.size() != shift.size()) throw DimensionError("pattern rank mismatch");
  for (std::size_t i = 0; i < w.size(); ++i)
    if (forced_zero[i] && !(w.at(i) == shift.at(i))) return false;
  return true;
}

bool weyl_orbit_intersects_affine(const RootSystemSpec& spec, const Weight& xi, const AffinePattern& pattern) {
  spec.validate();
  if (spec.rank > kMaxWeylRank) throw CapabilityError("Weyl group enumeration limited to rank 8");
  const auto n = static_cast<std::size_t>(spec.rank);
  if (xi.size() != n || pattern.shift.size() != n || pattern.forced_zero.size() != n)
    throw DimensionError("weight or pattern rank mismatch");
  // A W-translate of xi meets the pattern iff the forced coordinates of the
  // shift can be filled by distinct coordinates of xi (each up to sign for
  // family C). Compatibility is an equivalence relation, so a saturating
  // matching exists iff every class has enough sources.
  auto key = [&](const Coord& c) { return spec.family == RootFamily::C ? flip_nonnegative(c) : c; };
  std::map<Coord, int, CoordLess> balance;
  for (std::size_t i = 0; i < n; ++i) balance[key({xi.re()[i], xi.im()[i]})] += 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (!pattern.forced_zero[i]) continue;
    if (--balance[key({pattern.shift.re()[i], pattern.shift.im()[i]})] < 0) return false;
  }
  return true;
}

}  // namespace lieplan
