#include "betasum/laurent.hpp"

#include <algorithm>
#include <stdexcept>

namespace betasum {

LaurentPoly::LaurentPoly(const Int& c) {
  if (c != 0) coeff_.push_back(c);
}

LaurentPoly LaurentPoly::q_power(long e) { return monomial(Int(1), e); }

LaurentPoly LaurentPoly::monomial(const Int& c, long e) {
  LaurentPoly p;
  if (c != 0) {
    p.min_exp_ = e;
    p.coeff_.push_back(c);
  }
  return p;
}

long LaurentPoly::min_exponent() const {
  if (is_zero()) throw std::logic_error("min_exponent of zero polynomial");
  return min_exp_;
}

long LaurentPoly::max_exponent() const {
  if (is_zero()) throw std::logic_error("max_exponent of zero polynomial");
  return min_exp_ + static_cast<long>(coeff_.size()) - 1;
}

Int LaurentPoly::coeff(long e) const {
  const long i = e - min_exp_;
  if (i < 0 || i >= static_cast<long>(coeff_.size())) return 0;
  return coeff_[i];
}

Int LaurentPoly::eval_at_one() const {
  Int acc = 0;
  for (const auto& c : coeff_) acc += c;
  return acc;
}

void LaurentPoly::trim() {
  size_t lo = 0;
  while (lo < coeff_.size() && coeff_[lo] == 0) ++lo;
  if (lo == coeff_.size()) {
    coeff_.clear();
    min_exp_ = 0;
    return;
  }
  size_t hi = coeff_.size();
  while (coeff_[hi - 1] == 0) --hi;
  if (lo > 0) coeff_.erase(coeff_.begin(), coeff_.begin() + lo);
  coeff_.resize(hi - lo);
  min_exp_ += static_cast<long>(lo);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) {
    *this = o;
    return *this;
  }
  const long lo = std::min(min_exp_, o.min_exp_);
  const long hi = std::max(max_exponent(), o.max_exponent());
  std::vector<Int> out(static_cast<size_t>(hi - lo + 1));
  for (size_t i = 0; i < coeff_.size(); ++i)
    out[static_cast<size_t>(min_exp_ - lo) + i] = coeff_[i];
  for (size_t i = 0; i < o.coeff_.size(); ++i)
    out[static_cast<size_t>(o.min_exp_ - lo) + i] += o.coeff_[i];
  min_exp_ = lo;
  coeff_ = std::move(out);
  trim();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  *this += -o;
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (auto& c : out.coeff_) c = -c;
  return out;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  if (is_zero() || o.is_zero()) return {};
  LaurentPoly out;
  out.min_exp_ = min_exp_ + o.min_exp_;
  out.coeff_.assign(coeff_.size() + o.coeff_.size() - 1, Int(0));
  for (size_t i = 0; i < coeff_.size(); ++i) {
    if (coeff_[i] == 0) continue;
    for (size_t k = 0; k < o.coeff_.size(); ++k) {
      if (o.coeff_[k] == 0) continue;
      mpz_addmul(out.coeff_[i + k].get_mpz_t(), coeff_[i].get_mpz_t(),
                 o.coeff_[k].get_mpz_t());
    }
  }
  // Products of canonical nonzero polynomials have nonzero end
  // coefficients over Z, so no trim is needed; keep it for safety.
  out.trim();
  return out;
}

LaurentPoly LaurentPoly::shifted(long e) const {
  LaurentPoly out = *this;
  if (!out.is_zero()) out.min_exp_ += e;
  return out;
}

LaurentPoly LaurentPoly::exact_div(const LaurentPoly& d) const {
  if (d.is_zero()) throw std::domain_error("laurent division by zero");
  if (is_zero()) return {};
  const long qlen =
      static_cast<long>(coeff_.size()) - static_cast<long>(d.coeff_.size()) + 1;
  if (qlen <= 0) throw std::logic_error("laurent division not exact");
  std::vector<Int> rem = coeff_;
  std::vector<Int> qc(static_cast<size_t>(qlen));
  const Int& d0 = d.coeff_.front();
  for (long i = 0; i < qlen; ++i) {
    const size_t ui = static_cast<size_t>(i);
    if (rem[ui] == 0) continue;
    if (!mpz_divisible_p(rem[ui].get_mpz_t(), d0.get_mpz_t()))
      throw std::logic_error("laurent division not exact");
    qc[ui] = rem[ui] / d0;
    for (size_t k = 0; k < d.coeff_.size(); ++k)
      mpz_submul(rem[ui + k].get_mpz_t(), qc[ui].get_mpz_t(),
                 d.coeff_[k].get_mpz_t());
  }
  for (const auto& c : rem)
    if (c != 0) throw std::logic_error("laurent division not exact");
  LaurentPoly out;
  out.min_exp_ = min_exp_ - d.min_exp_;
  out.coeff_ = std::move(qc);
  out.trim();
  return out;
}

std::string LaurentPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (size_t i = 0; i < coeff_.size(); ++i) {
    const Int& c = coeff_[i];
    if (c == 0) continue;
    const long e = min_exp_ + static_cast<long>(i);
    const bool neg = c < 0;
    const Int mag = abs(c);
    if (first) {
      if (neg) out += "-";
      first = false;
    } else {
      out += neg ? " - " : " + ";
    }
    if (e == 0) {
      out += mag.get_str();
    } else {
      if (mag != 1) {
        out += mag.get_str();
        out += " ";
      }
      out += (e == 1) ? "q" : "q^" + std::to_string(e);
    }
  }
  return out;
}

}  // namespace betasum
