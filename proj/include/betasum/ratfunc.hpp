#pragma once

#include <optional>
#include <stdexcept>
#include <utility>

#include "betasum/poly.hpp"

namespace betasum {

// Fraction field of Poly<K>.  Invariants: denominator monic and nonzero,
// gcd(num, den) = 1, zero is 0/1.
template <class K>
class RatFunc {
 public:
  RatFunc() : den_{K(1)} {}
  RatFunc(long v) : num_{K(v)}, den_{K(1)} {}
  explicit RatFunc(Poly<K> n) : num_(std::move(n)), den_{K(1)} {}
  RatFunc(Poly<K> n, Poly<K> d) : num_(std::move(n)), den_(std::move(d)) {
    normalize();
  }

  static RatFunc variable() { return RatFunc(Poly<K>::variable()); }

  const Poly<K>& num() const { return num_; }
  const Poly<K>& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }
  // Requires is_constant().
  K constant_value() const {
    if (!is_constant())
      throw std::logic_error("constant_value of a nonconstant rational function");
    return num_.coeff(0);
  }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw std::domain_error("rational function division by zero");
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
  }
  RatFunc operator-() const {
    RatFunc out = *this;
    out.num_ = -out.num_;
    return out;
  }
  bool operator==(const RatFunc&) const = default;

  RatFunc shifted_arg(const K& delta) const {
    return RatFunc(num_.shifted_arg(delta), den_.shifted_arg(delta));
  }

  // nullopt when the denominator vanishes at x.
  std::optional<K> eval(const K& x) const {
    K d = den_.eval(x);
    if (d == K(0)) return std::nullopt;
    return num_.eval(x) / d;
  }

 private:
  Poly<K> num_, den_;

  void normalize() {
    if (den_.is_zero())
      throw std::domain_error("rational function with zero denominator");
    if (num_.is_zero()) {
      den_ = Poly<K>{K(1)};
      return;
    }
    auto g = gcd_poly(num_, den_);
    if (g.degree() > 0) {
      num_ = num_.divrem(g).first;
      den_ = den_.divrem(g).first;
    }
    const K inv = K(1) / den_.lc();
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
};

using RatFuncQ = RatFunc<Rational>;
// Rational functions of the outer variable serve as the coefficient field
// when telescoping in the running variable.
using PolyQs = Poly<RatFuncQ>;
using RatFuncQs = RatFunc<RatFuncQ>;

}  // namespace betasum
