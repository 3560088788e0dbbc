#pragma once

// Shared machinery for the summability engines: canonical factorization of
// a shift ratio, the polynomial degree bound, and exact linear algebra
// over a coefficient field.

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "betasum/ratfunc.hpp"

namespace betasum::detail {

template <class K>
struct GosperForm {
  Poly<K> a, b, c;
};

// Canonical factorization ratio = (a/b) * (c(x+1)/c(x)) with
// gcd(a(x), b(x+h)) = 1 for every integer h >= 0.  candidates must
// contain every h >= 0 with gcd(u(x), v(x+h)) nonconstant, ascending.
template <class K>
GosperForm<K> gosper_factor(Poly<K> u, Poly<K> v,
                            const std::vector<long>& candidates) {
  GosperForm<K> f{std::move(u), std::move(v), Poly<K>{K(1)}};
  for (const long h : candidates) {
    while (true) {
      Poly<K> g = gcd_poly(f.a, f.b.shifted_arg(K(h)));
      if (g.degree() < 1) break;
      f.a = f.a.divrem(g).first;
      f.b = f.b.divrem(g.shifted_arg(K(-h))).first;
      for (long i = 1; i <= h; ++i) f.c = f.c * g.shifted_arg(K(-i));
    }
  }
  return f;
}

template <class K>
std::optional<long> as_nonneg_int(const K& v);

template <>
inline std::optional<long> as_nonneg_int<Rational>(const Rational& v) {
  if (v.get_den() != 1 || sgn(v) < 0 || !v.get_num().fits_slong_p())
    return std::nullopt;
  return v.get_num().get_si();
}

template <>
inline std::optional<long> as_nonneg_int<RatFuncQ>(const RatFuncQ& v) {
  if (!v.is_constant()) return std::nullopt;
  return as_nonneg_int<Rational>(v.constant_value());
}

// Degree bound for polynomial solutions X of A(x) X(x+1) - B(x) X(x) = rhs
// with deg rhs <= deg_rhs.  Negative means no solution can exist.
template <class K>
long solution_degree_bound(const Poly<K>& a_poly, const Poly<K>& b_poly,
                           long deg_rhs) {
  const long da = a_poly.degree(), db = b_poly.degree();
  if (da != db || !(a_poly.lc() == b_poly.lc()))
    return deg_rhs - std::max(da, db);
  const long mu = da;
  long d = deg_rhs - mu + 1;
  if (mu >= 1) {
    // leading terms cancel; the next coefficient vanishes only at one
    // candidate degree
    K t = (b_poly.coeff(mu - 1) - a_poly.coeff(mu - 1)) / a_poly.lc();
    if (auto ti = as_nonneg_int<K>(t); ti && *ti > d) d = *ti;
  }
  return d;
}

// Reduced row echelon form in place; returns the pivot column of each
// nonzero row.  Deterministic: first nonzero entry in column order.
template <class K>
std::vector<long> rref(std::vector<std::vector<K>>& mat) {
  const long rows = static_cast<long>(mat.size());
  const long cols = rows ? static_cast<long>(mat[0].size()) : 0;
  std::vector<long> pivots;
  long r = 0;
  for (long c = 0; c < cols && r < rows; ++c) {
    long pr = -1;
    for (long i = r; i < rows; ++i)
      if (!(mat[i][c] == K(0))) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    std::swap(mat[r], mat[pr]);
    const K inv = K(1) / mat[r][c];
    for (long j = c; j < cols; ++j) mat[r][j] = mat[r][j] * inv;
    for (long i = 0; i < rows; ++i) {
      if (i == r || mat[i][c] == K(0)) continue;
      const K f = mat[i][c];
      for (long j = c; j < cols; ++j)
        mat[i][j] = mat[i][j] - f * mat[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

// Null-space basis of M x = 0, one vector per free column in column
// order, normalized to 1 at its free column.
template <class K>
std::vector<std::vector<K>> null_space(std::vector<std::vector<K>> mat,
                                       long cols) {
  const auto pivots = rref(mat);
  std::vector<bool> is_pivot(static_cast<size_t>(cols), false);
  for (long c : pivots) is_pivot[static_cast<size_t>(c)] = true;
  std::vector<std::vector<K>> basis;
  for (long fc = 0; fc < cols; ++fc) {
    if (is_pivot[static_cast<size_t>(fc)]) continue;
    std::vector<K> v(static_cast<size_t>(cols), K(0));
    v[static_cast<size_t>(fc)] = K(1);
    for (size_t r = 0; r < pivots.size(); ++r)
      v[static_cast<size_t>(pivots[r])] = -mat[r][static_cast<size_t>(fc)];
    basis.push_back(std::move(v));
  }
  return basis;
}

// Solve M x = rhs; free variables are set to zero; nullopt when
// inconsistent.
template <class K>
std::optional<std::vector<K>> solve_linear(std::vector<std::vector<K>> mat,
                                           const std::vector<K>& rhs,
                                           long cols) {
  for (size_t r = 0; r < mat.size(); ++r) mat[r].push_back(rhs[r]);
  const auto pivots = rref(mat);
  if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
  std::vector<K> x(static_cast<size_t>(cols), K(0));
  for (size_t r = 0; r < pivots.size(); ++r)
    x[static_cast<size_t>(pivots[r])] = mat[r][static_cast<size_t>(cols)];
  return x;
}

// Any polynomial solution of a(x) X(x+1) - b(x-1) X(x) = c(x).
template <class K>
std::optional<Poly<K>> solve_gosper_equation(const Poly<K>& a,
                                             const Poly<K>& b,
                                             const Poly<K>& c) {
  if (c.is_zero()) return Poly<K>{};
  const Poly<K> bsh = b.shifted_arg(K(-1));
  const long d = solution_degree_bound(a, bsh, c.degree());
  if (d < 0) return std::nullopt;

  // column t: coefficients of a (x+1)^t - b(x-1) x^t
  std::vector<Poly<K>> col;
  Poly<K> xp{K(1)};  // x^t
  Poly<K> sp{K(1)};  // (x+1)^t
  const Poly<K> x = Poly<K>::variable();
  const Poly<K> xp1{K(1), K(1)};
  for (long t = 0; t <= d; ++t) {
    col.push_back(a * sp - bsh * xp);
    xp = xp * x;
    sp = sp * xp1;
  }
  long maxdeg = c.degree();
  for (const auto& p : col) maxdeg = std::max(maxdeg, p.degree());

  std::vector<std::vector<K>> mat(
      static_cast<size_t>(maxdeg + 1),
      std::vector<K>(static_cast<size_t>(d + 1), K(0)));
  std::vector<K> rhs(static_cast<size_t>(maxdeg + 1), K(0));
  for (long row = 0; row <= maxdeg; ++row) {
    for (long t = 0; t <= d; ++t)
      mat[static_cast<size_t>(row)][static_cast<size_t>(t)] =
          col[static_cast<size_t>(t)].coeff(row);
    rhs[static_cast<size_t>(row)] = c.coeff(row);
  }
  auto sol = solve_linear(std::move(mat), rhs, d + 1);
  if (!sol) return std::nullopt;
  return Poly<K>::from_coeffs(std::move(*sol));
}

}  // namespace betasum::detail
