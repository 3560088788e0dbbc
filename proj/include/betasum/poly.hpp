#pragma once

#include <initializer_list>
#include <stdexcept>
#include <utility>
#include <vector>

#include "betasum/integer.hpp"

namespace betasum {

// Dense univariate polynomial over a field K.  K must supply default
// construction (= 0), construction from long, field arithmetic, and
// equality.  Coefficients are stored ascending; the leading stored
// coefficient is nonzero.
template <class K>
class Poly {
 public:
  Poly() = default;
  Poly(std::initializer_list<K> cs) : c_(cs) { trim(); }
  explicit Poly(K constant) {
    c_.push_back(std::move(constant));
    trim();
  }

  static Poly variable() { return Poly{K(0), K(1)}; }
  static Poly from_coeffs(std::vector<K> cs) {
    Poly p;
    p.c_ = std::move(cs);
    p.trim();
    return p;
  }

  bool is_zero() const { return c_.empty(); }
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const K& coeff(long i) const {
    if (i < 0 || i >= static_cast<long>(c_.size())) return kZero;
    return c_[static_cast<size_t>(i)];
  }
  const K& lc() const {
    if (is_zero())
      throw std::logic_error("leading coefficient of zero polynomial");
    return c_.back();
  }
  const std::vector<K>& coeffs() const { return c_; }

  Poly& operator+=(const Poly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] + o.c_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] - o.c_[i];
    trim();
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) {
    a += b;
    return a;
  }
  friend Poly operator-(Poly a, const Poly& b) {
    a -= b;
    return a;
  }
  Poly operator-() const {
    Poly out = *this;
    for (auto& c : out.c_) c = -c;
    return out;
  }
  Poly operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<K> out(c_.size() + o.c_.size() - 1, K(0));
    for (size_t i = 0; i < c_.size(); ++i)
      for (size_t k = 0; k < o.c_.size(); ++k)
        out[i + k] = out[i + k] + c_[i] * o.c_[k];
    return from_coeffs(std::move(out));
  }
  bool operator==(const Poly&) const = default;

  Poly scaled(const K& k) const {
    Poly out = *this;
    for (auto& c : out.c_) c = c * k;
    out.trim();
    return out;
  }

  // Quotient and remainder; exact over the coefficient field.
  std::pair<Poly, Poly> divrem(const Poly& d) const {
    if (d.is_zero()) throw std::domain_error("polynomial division by zero");
    Poly r = *this;
    const long dd = d.degree();
    if (r.degree() < dd) return {Poly{}, r};
    std::vector<K> qc(static_cast<size_t>(r.degree() - dd) + 1, K(0));
    const K& dlc = d.lc();
    while (!r.is_zero() && r.degree() >= dd) {
      const long k = r.degree() - dd;
      K f = r.lc() / dlc;
      qc[static_cast<size_t>(k)] = f;
      for (long i = 0; i <= dd; ++i) {
        const size_t idx = static_cast<size_t>(k + i);
        r.c_[idx] = r.c_[idx] - f * d.c_[static_cast<size_t>(i)];
      }
      r.trim();
    }
    return {from_coeffs(std::move(qc)), r};
  }

  // p(x + delta).
  Poly shifted_arg(const K& delta) const {
    Poly result;
    const Poly lin{delta, K(1)};
    for (long i = degree(); i >= 0; --i) {
      result = result * lin;
      result += Poly(coeff(i));
    }
    return result;
  }

  K eval(const K& x) const {
    K acc = K(0);
    for (long i = degree(); i >= 0; --i) acc = acc * x + c_[static_cast<size_t>(i)];
    return acc;
  }

  Poly derivative() const {
    if (degree() < 1) return {};
    std::vector<K> out(static_cast<size_t>(degree()));
    for (long i = 1; i <= degree(); ++i)
      out[static_cast<size_t>(i - 1)] = c_[static_cast<size_t>(i)] * K(i);
    return from_coeffs(std::move(out));
  }

 private:
  std::vector<K> c_;
  inline static const K kZero{};

  void trim() {
    while (!c_.empty() && c_.back() == K(0)) c_.pop_back();
  }
};

template <class K>
K kpow(K base, long e) {
  K r = K(1);
  while (e-- > 0) r = r * base;
  return r;
}

// Monic gcd by the Euclidean algorithm.
template <class K>
Poly<K> gcd_poly(Poly<K> a, Poly<K> b) {
  while (!b.is_zero()) {
    auto r = a.divrem(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a.scaled(K(1) / a.lc());
}

template <class K>
Poly<K> lcm_poly(const Poly<K>& a, const Poly<K>& b) {
  if (a.is_zero() || b.is_zero()) return {};
  auto g = gcd_poly(a, b);
  auto l = a.divrem(g).first * b;
  return l.scaled(K(1) / l.lc());
}

// Resultant via the Euclidean remainder sequence:
// Res(A,B) = (-1)^{dA dB} lc(B)^{dA-dR} Res(B, R) with R = A mod B.
template <class K>
K resultant(Poly<K> a, Poly<K> b) {
  if (a.is_zero() || b.is_zero()) return K(0);
  K res = K(1);
  while (true) {
    if (b.degree() == 0) return res * kpow(b.lc(), a.degree());
    auto r = a.divrem(b).second;
    if (r.is_zero()) return K(0);
    const long da = a.degree(), db = b.degree(), dr = r.degree();
    K factor = kpow(b.lc(), da - dr);
    if ((da % 2) && (db % 2)) factor = -factor;
    res = res * factor;
    a = std::move(b);
    b = std::move(r);
  }
}

using PolyQ = Poly<Rational>;

}  // namespace betasum
