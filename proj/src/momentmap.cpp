#include "lieplan/momentmap.hpp"

#include "lieplan/errors.hpp"

namespace lieplan {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

Vector unit(std::size_t dim, std::size_t i) {
  Vector v(dim);
  v[i] = 1;
  return v;
}

}  // namespace

std::size_t block_half_dim(const Block& b) { return std::holds_alternative<Quad4>(b) ? 2 : 1; }

std::size_t BlockSpec::half_dim() const {
  std::size_t n = 0;
  for (const auto& b : blocks) n += block_half_dim(b);
  return n;
}

void BlockSpec::validate() const {
  if (blocks.empty()) throw InvalidSpec("block spec is empty");
  for (const auto& b : blocks) {
    std::visit(overloaded{
                   [](const Elliptic2& e) {
                     if (sgn(e.a) == 0) throw InvalidSpec("elliptic block needs a nonzero parameter");
                   },
                   [](const Hyperbolic2& h) {
                     if (sgn(h.c) == 0) throw InvalidSpec("hyperbolic block needs a nonzero parameter");
                   },
                   [](const Quad4& q) {
                     if (sgn(q.q) == 0) throw InvalidSpec("quad block needs q != 0");
                   },
                   [](const Zero2&) {},
               },
               b);
  }
}

Realization realize(const BlockSpec& spec) {
  spec.validate();
  const std::size_t n = spec.half_dim();
  SymplecticSpace space(n);
  Matrix a(2 * n, 2 * n);
  std::size_t k = 0;
  for (const auto& b : spec.blocks) {
    const std::size_t xk = k, yk = n + k;
    std::visit(overloaded{
                   [&](const Elliptic2& e) {
                     a(xk, yk) = e.a * abs_value(e.a);
                     a(yk, xk) = -sgn(e.a);
                   },
                   [&](const Hyperbolic2& h) {
                     a(xk, xk) = h.c;
                     a(yk, yk) = -h.c;
                   },
                   [&](const Quad4& q) {
                     // x-part B = [[p, q], [-q, p]], y-part -B^T = [[-p, q], [-q, -p]]
                     a(xk, xk) = q.p;
                     a(xk, xk + 1) = q.q;
                     a(xk + 1, xk) = -q.q;
                     a(xk + 1, xk + 1) = q.p;
                     a(yk, yk) = -q.p;
                     a(yk, yk + 1) = q.q;
                     a(yk + 1, yk) = -q.q;
                     a(yk + 1, yk + 1) = -q.p;
                   },
                   [](const Zero2&) {},
               },
               b);
    k += block_half_dim(b);
  }
  return {std::move(a), std::move(space)};
}

bool sp_membership(const Matrix& a, const SymplecticSpace& v, std::size_t m) {
  const Matrix g = gram_of(a, v);
  if (m > v.half_dim()) throw PreconditionViolation("m exceeds n");
  if (!is_semisimple(a)) throw PreconditionViolation("membership criterion requires a semisimple element");
  const SignaturePair sig = signature(g);
  return sig.max() <= 2 * (v.half_dim() - m);
}

bool sp_complex_membership(const Matrix& a, std::size_t n, std::size_t m) {
  const SymplecticSpace v(n);
  if (a.rows() != v.dim() || a.cols() != v.dim()) throw DimensionError("matrix size differs from 2n");
  if (!is_infinitesimally_symplectic(a, v)) throw FormError("not infinitesimally symplectic");
  if (m > n) throw PreconditionViolation("m exceeds n");
  if (!is_semisimple(a)) throw PreconditionViolation("membership criterion requires a semisimple element");
  return rank(a) <= 4 * (n - m);
}

std::optional<Witness> sp_witness(const BlockSpec& spec, std::size_t m) {
  spec.validate();
  const std::size_t n = spec.half_dim();
  if (m > n) throw PreconditionViolation("m exceeds n");
  const std::size_t dim = 2 * n;
  auto x = [&](std::size_t k) { return unit(dim, k); };
  auto y = [&](std::size_t k) { return unit(dim, n + k); };
  auto combine = [&](const Vector& u, const Rational& s, const Vector& w) {
    Vector out = u;
    for (std::size_t i = 0; i < dim; ++i) out[i] += s * w[i];
    return out;
  };

  std::vector<std::size_t> zeros, quads, hyps, pos, neg;
  std::vector<std::size_t> offset;
  std::size_t k = 0;
  for (std::size_t i = 0; i < spec.blocks.size(); ++i) {
    offset.push_back(k);
    const Block& b = spec.blocks[i];
    if (std::holds_alternative<Zero2>(b)) zeros.push_back(i);
    else if (std::holds_alternative<Quad4>(b)) quads.push_back(i);
    else if (std::holds_alternative<Hyperbolic2>(b)) hyps.push_back(i);
    else (sgn(std::get<Elliptic2>(b).a) > 0 ? pos : neg).push_back(i);
    k += block_half_dim(b);
  }

  Witness w;
  auto done = [&] { return w.basis.size() >= 2 * m; };
  auto add = [&](Vector u, Vector v) {
    w.basis.push_back(std::move(u));
    w.basis.push_back(std::move(v));
  };

  for (auto i : zeros) {
    if (done()) break;
    add(x(offset[i]), y(offset[i]));
  }
  for (auto i : quads) {
    if (done()) break;
    // B e_1 = (p, -q) is orthogonal to (q, p), and e_1 . (q, p) = q != 0.
    const auto& q = std::get<Quad4>(spec.blocks[i]);
    const std::size_t o = offset[i];
    Vector v2 = y(o);
    v2[n + o] = q.q;
    add(x(o), combine(v2, q.p, y(o + 1)));
  }
  for (std::size_t t = 0; t + 1 < hyps.size(); t += 2) {
    if (done()) break;
    const Rational c = std::get<Hyperbolic2>(spec.blocks[hyps[t]]).c;
    const Rational c2 = std::get<Hyperbolic2>(spec.blocks[hyps[t + 1]]).c;
    const std::size_t o = offset[hyps[t]], o2 = offset[hyps[t + 1]];
    if (c != c2) {
      add(combine(x(o), 1, x(o2)), combine(y(o), -c / c2, y(o2)));
    } else {
      add(combine(x(o), 1, y(o2)), combine(y(o), -1, x(o2)));
    }
  }
  for (std::size_t t = 0; t < pos.size() && t < neg.size(); ++t) {
    if (done()) break;
    const Rational a = std::get<Elliptic2>(spec.blocks[pos[t]]).a;
    const Rational b = abs_value(std::get<Elliptic2>(spec.blocks[neg[t]]).a);
    const std::size_t o = offset[pos[t]], o2 = offset[neg[t]];
    Vector v2 = y(o);
    for (auto& e : v2) e /= a;
    add(combine(x(o), 1, x(o2)), combine(v2, 1 / b, y(o2)));
  }
  if (!done()) return std::nullopt;
  return w;
}

bool verify_witness(const Matrix& a, const SymplecticSpace& v, const Witness& w, std::size_t m) {
  if (w.basis.size() != 2 * m) return false;
  for (const auto& b : w.basis)
    if (b.size() != v.dim()) return false;
  if (a.rows() != v.dim() || a.cols() != v.dim() || !is_infinitesimally_symplectic(a, v)) return false;
  if (m == 0) return true;
  const Matrix basis = Matrix::from_columns(w.basis, v.dim());
  if (rank(basis) != 2 * m) return false;
  if (sgn(determinant(restrict_gram(v.omega(), w.basis))) == 0) return false;
  return restrict_gram(gram_of(a, v), w.basis).is_zero();
}

Matrix gl_companion(std::span<const EigenPair> pairs, std::span<const Rational> singles, std::size_t n, std::size_t m) {
  const std::size_t p = pairs.size(), s = singles.size();
  if (n == 0) throw DimensionError("gl_companion needs n >= 1");
  if (m > n) throw DimensionError("m exceeds n");
  if (2 * p + s > n) throw DimensionError("more eigenvalues prescribed than the matrix size");
  if (p + s > n - m) throw DimensionError("prescription does not fit beside a zero bottom-right m x m block");
  const std::size_t pad = n - 2 * p - s;
  Matrix a(n, n);
  for (std::size_t i = 0; i < s; ++i) a(i, i) = singles[i];
  for (std::size_t j = 0; j < p; ++j) {
    const std::size_t top = s + j, bottom = s + p + pad + j;
    a(top, top) = pairs[j].trace;
    a(top, bottom) = -pairs[j].product;
    a(bottom, top) = 1;
  }
  return a;
}

bool gl_rank_bound(const Matrix& a, std::size_t n, std::size_t m) {
  if (a.rows() != n || a.cols() != n) throw DimensionError("matrix is not n x n");
  if (m > n) throw PreconditionViolation("m exceeds n");
  return rank(a) <= 2 * (n - m);
}

BlockSpec elliptic_element(std::span<const Rational> a) {
  if (a.empty()) throw InvalidSpec("elliptic element needs n >= 1");
  BlockSpec spec;
  for (const auto& x : a) {
    if (sgn(x) == 0) throw InvalidSpec("elliptic parameters must be nonzero");
    spec.blocks.push_back(Elliptic2{x});
  }
  return spec;
}

}  // namespace lieplan
