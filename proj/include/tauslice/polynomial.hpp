// Dense univariate polynomials over an exact field, coefficients low degree first.
#pragma once

#include "tauslice/linalg.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <complex>
#include <random>
#include <type_traits>

namespace tauslice {

template <class S>
using Poly = std::vector<S>;

template <class S>
void trim(Poly<S>& p) {
  while (!p.empty() && is_zero(p.back())) p.pop_back();
}

template <class S>
int degree(const Poly<S>& p) {
  return static_cast<int>(p.size()) - 1;
}

template <class S>
Poly<S> poly_sub(Poly<S> a, const Poly<S>& b) {
  if (a.size() < b.size()) a.resize(b.size(), S(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

template <class S>
Poly<S> poly_mul(const Poly<S>& a, const Poly<S>& b) {
  if (a.empty() || b.empty()) return {};
  Poly<S> c(a.size() + b.size() - 1, S(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (is_zero(a[i])) continue;
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  }
  trim(c);
  return c;
}

/// Returns {quotient, remainder}.
template <class S>
std::pair<Poly<S>, Poly<S>> poly_divmod(Poly<S> a, Poly<S> b) {
  trim(a);
  trim(b);
  if (b.empty()) throw std::domain_error("polynomial division by zero");
  if (a.size() < b.size()) return {{}, a};
  Poly<S> q(a.size() - b.size() + 1, S(0));
  const S lead_inv = S(1) / b.back();
  for (int k = degree(a) - degree(b); k >= 0; --k) {
    const S c = a[static_cast<std::size_t>(k) + b.size() - 1] * lead_inv;
    q[static_cast<std::size_t>(k)] = c;
    if (is_zero(c)) continue;
    for (std::size_t j = 0; j < b.size(); ++j) a[static_cast<std::size_t>(k) + j] -= c * b[j];
  }
  trim(a);
  trim(q);
  return {q, a};
}

template <class S>
Poly<S> make_monic(Poly<S> p) {
  trim(p);
  if (p.empty()) return p;
  const S inv = S(1) / p.back();
  for (auto& c : p) c *= inv;
  return p;
}

template <class S>
Poly<S> poly_gcd(Poly<S> a, Poly<S> b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    auto r = poly_divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(a);
}

template <class S>
Poly<S> derivative(const Poly<S>& p) {
  Poly<S> d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * S(static_cast<long long>(i)));
  trim(d);
  return d;
}

template <class S>
S evaluate(const Poly<S>& p, const S& x) {
  S acc(0);
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

/// Characteristic polynomial det(x I - m), monic, via reduction to Hessenberg form.
template <class S>
Poly<S> charpoly(Matrix<S> h) {
  const Index n = h.rows();
  if (n != h.cols()) throw std::invalid_argument("charpoly: matrix is not square");
  for (Index m = 1; m + 1 < n; ++m) {
    Index i = m;
    while (i < n && is_zero(h(i, m - 1))) ++i;
    if (i == n) continue;
    if (i != m) {
      h.row(i).swap(h.row(m));
      h.col(i).swap(h.col(m));
    }
    const S t_inv = S(1) / h(m, m - 1);
    for (Index j = m + 1; j < n; ++j) {
      const S u = h(j, m - 1) * t_inv;
      if (is_zero(u)) continue;
      h.row(j) -= u * h.row(m);
      h.col(m) += u * h.col(j);
    }
  }
  std::vector<Poly<S>> p(static_cast<std::size_t>(n) + 1);
  p[0] = {S(1)};
  for (Index m = 1; m <= n; ++m) {
    p[m] = poly_mul<S>(p[m - 1], Poly<S>{-h(m - 1, m - 1), S(1)});
    S t(1);
    for (Index i = m - 1; i >= 1; --i) {
      t *= h(i, i - 1);
      if (is_zero(t)) break;
      const S c = h(i - 1, m - 1) * t;
      if (is_zero(c)) continue;
      Poly<S> term = p[i - 1];
      for (auto& x : term) x *= c;
      p[m] = poly_sub(p[m], term);
    }
  }
  return p[n];
}

namespace detail {

inline std::vector<Rational> continued_fraction_candidates(double x) {
  std::vector<Rational> out;
  if (!std::isfinite(x)) return out;
  BigInt h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  double r = x;
  for (int step = 0; step < 40; ++step) {
    const double fl = std::floor(r);
    if (std::fabs(fl) > 1e15) break;
    const BigInt a(static_cast<long long>(fl));
    const BigInt h2 = a * h1 + h0, k2 = a * k1 + k0;
    out.emplace_back(h2, k2);
    h0 = h1, h1 = h2, k0 = k1, k1 = k2;
    const double frac = r - fl;
    if (frac < 1e-12) break;
    r = 1.0 / frac;
  }
  return out;
}

inline std::vector<Rational> rational_roots_q(const Poly<Rational>& f) {
  std::vector<Rational> roots;
  Poly<Rational> g = make_monic(f);
  if (degree(g) < 1) return roots;
  // Square-free part, so the numerical roots are simple.
  const auto d = derivative(g);
  g = poly_divmod(g, poly_gcd(g, d)).first;
  g = make_monic(g);
  // Strip the root at zero before going numeric.
  if (!g.empty() && is_zero(g[0])) {
    roots.emplace_back(0);
    g.erase(g.begin());
  }
  const int n = degree(g);
  if (n < 1) return roots;
  Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(n, n);
  for (int i = 1; i < n; ++i) comp(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) comp(i, n - 1) = -g[static_cast<std::size_t>(i)].convert_to<double>();
  Eigen::EigenSolver<Eigen::MatrixXd> es(comp, false);
  for (Index i = 0; i < n; ++i) {
    const std::complex<double> z = es.eigenvalues()(i);
    if (std::fabs(z.imag()) > 1e-6 * (1.0 + std::abs(z))) continue;
    for (const auto& c : continued_fraction_candidates(z.real())) {
      if (is_zero(evaluate(g, c))) {
        if (std::find(roots.begin(), roots.end(), c) == roots.end()) roots.push_back(c);
        break;
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

inline Poly<ModInt> powmod(Poly<ModInt> base, std::uint64_t e, const Poly<ModInt>& mod) {
  Poly<ModInt> result{ModInt(1)};
  base = poly_divmod(base, mod).second;
  while (e) {
    if (e & 1) result = poly_divmod(poly_mul(result, base), mod).second;
    base = poly_divmod(poly_mul(base, base), mod).second;
    e >>= 1;
  }
  return result;
}

inline void split_linear_factors(const Poly<ModInt>& g, std::mt19937_64& rng, std::vector<ModInt>& out) {
  const int n = degree(g);
  if (n < 1) return;
  if (n == 1) {
    out.push_back(-g[0] / g[1]);
    return;
  }
  const std::uint64_t p = ModInt::modulus();
  for (;;) {
    const ModInt a(static_cast<long long>(rng() % p));
    auto w = powmod(Poly<ModInt>{a, ModInt(1)}, (p - 1) / 2, g);
    w = poly_sub(w, Poly<ModInt>{ModInt(1)});
    const auto d = poly_gcd(g, w);
    if (degree(d) >= 1 && degree(d) < n) {
      split_linear_factors(d, rng, out);
      split_linear_factors(poly_divmod(g, d).first, rng, out);
      return;
    }
  }
}

inline std::vector<ModInt> rational_roots_p(const Poly<ModInt>& f) {
  std::vector<ModInt> roots;
  auto g = make_monic(f);
  if (degree(g) < 1) return roots;
  const std::uint64_t p = ModInt::modulus();
  if (p <= 3) {
    for (std::uint64_t v = 0; v < p; ++v)
      if (is_zero(evaluate(g, ModInt(static_cast<long long>(v))))) roots.emplace_back(static_cast<long long>(v));
    return roots;
  }
  // gcd with x^p - x isolates the product of distinct linear factors.
  auto xp = powmod(Poly<ModInt>{ModInt(0), ModInt(1)}, p, g);
  xp = poly_sub(xp, Poly<ModInt>{ModInt(0), ModInt(1)});
  const auto lin = poly_gcd(g, xp);
  std::mt19937_64 rng(0x7a75u);
  split_linear_factors(lin, rng, roots);
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace detail

/// Distinct roots of f lying in the base field, in ascending order.
template <class S>
std::vector<S> rational_roots(const Poly<S>& f) {
  if constexpr (std::is_same_v<S, Rational>) {
    return detail::rational_roots_q(f);
  } else {
    return detail::rational_roots_p(f);
  }
}

/// True when some power of m vanishes.
template <class S>
bool is_nilpotent(const Matrix<S>& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("is_nilpotent: matrix is not square");
  Matrix<S> p = m;
  Index r = rank(p);
  while (r > 0) {
    p = p * m;
    const Index next = rank(p);
    if (next == r) return false;
    r = next;
  }
  return true;
}

}  // namespace tauslice
