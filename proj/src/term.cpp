#include "betasum/term.hpp"

#include <utility>

#include "betasum/combinatorics.hpp"
#include "json.hpp"

namespace betasum {
namespace {

template <class K>
K from_rational(const Rational& v);
template <>
Rational from_rational<Rational>(const Rational& v) {
  return v;
}
template <>
RatFuncQ from_rational<RatFuncQ>(const Rational& v) {
  return RatFuncQ(PolyQ(v));
}

// Falling/rising block X(v+d)! / X(v)! as a rational function of the
// evaluation point: product of (E+1)..(E+d) for d >= 0, else the
// reciprocal of E(E-1)..(E-|d|+1).
template <class K>
RatFunc<K> ff_ratio(const Poly<K>& e, long d) {
  Poly<K> prod{K(1)};
  if (d >= 0) {
    for (long u = 1; u <= d; ++u) prod = prod * (e + Poly<K>(K(u)));
    return RatFunc<K>(std::move(prod));
  }
  for (long u = 0; u < -d; ++u) prod = prod * (e - Poly<K>(K(u)));
  return RatFunc<K>(Poly<K>{K(1)}, std::move(prod));
}

template <class K>
Poly<K> affine_poly(const AffineExpr& a, const K& outer_val) {
  K c0 = K(a.constant) + K(a.outer_slope) * outer_val;
  return Poly<K>{std::move(c0), K(a.slope)};
}

// Shift ratio in the running variable.  Each binomial C(T, B) contributes
// T!/(B! (T-B)!); the v-step changes those arguments by their slopes.
template <class K>
RatFunc<K> v_ratio_impl(const BinomialProductTerm& t, const K& outer_val) {
  RatFunc<K> r(1);
  for (const auto& f : t.factors) {
    const Poly<K> top = affine_poly(f.top, outer_val);
    const Poly<K> bot = affine_poly(f.bottom, outer_val);
    const Poly<K> dif = top - bot;
    const long dt = f.top.slope, db = f.bottom.slope;
    r = r * ff_ratio(top, dt) / ff_ratio(bot, db) / ff_ratio(dif, dt - db);
  }
  if (t.geometric_base != 1)
    r = r * RatFunc<K>(Poly<K>(from_rational<K>(t.geometric_base)));
  if (t.alternating_sign) r = -r;
  return r;
}

// Ratio under an outer shift of i; the running variable is the evaluation
// point, geometric and sign parts cancel.
template <class K>
RatFunc<K> s_ratio_impl(const BinomialProductTerm& t, const K& outer_val,
                        long i) {
  RatFunc<K> r(1);
  for (const auto& f : t.factors) {
    const Poly<K> top = affine_poly(f.top, outer_val);
    const Poly<K> bot = affine_poly(f.bottom, outer_val);
    const Poly<K> dif = top - bot;
    const long dt = f.top.outer_slope * i, db = f.bottom.outer_slope * i;
    r = r * ff_ratio(top, dt) / ff_ratio(bot, db) / ff_ratio(dif, dt - db);
  }
  return r;
}

Rational rational_power(const Rational& z, long e) {
  Int num = z.get_num(), den = z.get_den();
  if (e < 0) {
    std::swap(num, den);
    if (sgn(num) < 0) {
      num = -num;
      den = -den;
    }
    e = -e;
  }
  Int pn, pd;
  mpz_pow_ui(pn.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(pd.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(e));
  Rational out(pn, pd);
  out.canonicalize();
  return out;
}

using Json = nlohmann::json;

[[noreturn]] void bad_doc(const std::string& what) {
  throw std::invalid_argument("term document: " + what);
}

long json_long(const Json& j, const char* field) {
  if (!j.is_number_integer()) bad_doc(std::string(field) + " must be an integer");
  return j.get<long>();
}

int json_slope(const Json& j, const char* field) {
  const long v = json_long(j, field);
  if (v < -1 || v > 1)
    throw unsupported_term_error(std::string("term document: ") + field +
                                 " must be -1, 0, or 1");
  return static_cast<int>(v);
}

Rational json_rational(const Json& j, const char* field) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) {
    Rational r;
    try {
      r = Rational(j.get<std::string>());
    } catch (const std::invalid_argument&) {
      bad_doc(std::string(field) + " is not a rational number");
    }
    if (r.get_den() == 0) bad_doc(std::string(field) + " has denominator zero");
    r.canonicalize();
    return r;
  }
  bad_doc(std::string(field) + " must be an integer or a rational string");
}

AffineExpr parse_affine(const Json& j, const char* field) {
  if (!j.is_object()) bad_doc(std::string(field) + " must be an object");
  AffineExpr e;
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (it.key() == "slope")
      e.slope = json_slope(it.value(), "slope");
    else if (it.key() == "outer_slope")
      e.outer_slope = json_slope(it.value(), "outer_slope");
    else if (it.key() == "constant")
      e.constant = json_long(it.value(), "constant");
    else
      bad_doc("unknown key '" + it.key() + "' in " + field);
  }
  return e;
}

PolyQ parse_coeff_list(const Json& j, const char* field) {
  if (!j.is_array()) bad_doc(std::string(field) + " must be an array");
  std::vector<Rational> cs;
  for (const auto& e : j) cs.push_back(json_rational(e, field));
  return PolyQ::from_coeffs(std::move(cs));
}

}  // namespace

BinomialProductTerm parse_term_document(const std::string& json_text) {
  Json doc;
  try {
    doc = Json::parse(json_text);
  } catch (const Json::exception& e) {
    bad_doc(std::string("invalid json: ") + e.what());
  }
  if (!doc.is_object()) bad_doc("root must be an object");

  BinomialProductTerm t;
  bool has_ratio = false;
  bool has_offset = false;
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    const std::string& key = it.key();
    const Json& val = it.value();
    if (key == "running_variable" || key == "outer_variable") {
      if (!val.is_string() || val.get<std::string>().empty())
        bad_doc(key + " must be a nonempty string");
      (key == "running_variable" ? t.running_variable : t.outer_variable) =
          val.get<std::string>();
    } else if (key == "factors") {
      if (!val.is_array()) bad_doc("factors must be an array");
      for (const auto& fj : val) {
        if (!fj.is_object() || !fj.contains("top") || !fj.contains("bottom"))
          bad_doc("each factor needs top and bottom objects");
        for (auto fit = fj.begin(); fit != fj.end(); ++fit)
          if (fit.key() != "top" && fit.key() != "bottom")
            bad_doc("unknown key '" + fit.key() + "' in factor");
        t.factors.push_back({parse_affine(fj["top"], "top"),
                             parse_affine(fj["bottom"], "bottom")});
      }
    } else if (key == "geometric_base") {
      t.geometric_base = json_rational(val, "geometric_base");
      if (t.geometric_base == 0) bad_doc("geometric_base must be nonzero");
    } else if (key == "alternating_sign") {
      if (!val.is_boolean()) bad_doc("alternating_sign must be a boolean");
      t.alternating_sign = val.get<bool>();
    } else if (key == "ratio") {
      if (!val.is_object() || !val.contains("numerator") ||
          !val.contains("denominator"))
        bad_doc("ratio needs numerator and denominator arrays");
      for (auto rit = val.begin(); rit != val.end(); ++rit)
        if (rit.key() != "numerator" && rit.key() != "denominator")
          bad_doc("unknown key '" + rit.key() + "' in ratio");
      PolyQ num = parse_coeff_list(val["numerator"], "numerator");
      PolyQ den = parse_coeff_list(val["denominator"], "denominator");
      if (den.is_zero()) bad_doc("ratio denominator must be nonzero");
      t.explicit_ratio = RatFuncQ(std::move(num), std::move(den));
      has_ratio = true;
    } else if (key == "offset") {
      t.ratio_offset = json_long(val, "offset");
      if (t.ratio_offset < 0) bad_doc("offset must be >= 0");
      has_offset = true;
    } else {
      bad_doc("unknown key '" + key + "'");
    }
  }
  if (has_ratio && !t.factors.empty())
    bad_doc("ratio and factors are mutually exclusive");
  if (has_offset && !has_ratio) bad_doc("offset requires a ratio");
  if (has_ratio && !t.outer_variable.empty())
    bad_doc("an explicit ratio cannot be combined with an outer variable");
  if (!t.outer_variable.empty() && t.outer_variable == t.running_variable)
    bad_doc("running and outer variables must differ");
  return t;
}

RatFuncQ term_ratio(const BinomialProductTerm& t) {
  if (t.explicit_ratio) return *t.explicit_ratio;
  for (const auto& f : t.factors)
    if (f.top.outer_slope != 0 || f.bottom.outer_slope != 0)
      throw std::invalid_argument(
          "term_ratio: term depends on the outer variable");
  return v_ratio_impl<Rational>(t, Rational(0));
}

RatFuncQs term_ratio_outer(const BinomialProductTerm& t) {
  if (t.explicit_ratio)
    throw std::invalid_argument(
        "term_ratio_outer: explicit-ratio terms are closed");
  return v_ratio_impl<RatFuncQ>(t, RatFuncQ::variable());
}

RatFuncQs outer_shift_ratio(const BinomialProductTerm& t, long i) {
  if (i < 0) throw std::invalid_argument("outer_shift_ratio: shift must be >= 0");
  if (t.explicit_ratio)
    throw std::invalid_argument(
        "outer_shift_ratio: explicit-ratio terms are closed");
  return s_ratio_impl<RatFuncQ>(t, RatFuncQ::variable(), i);
}

std::optional<Rational> eval_term(const BinomialProductTerm& t, long s0,
                                  long v0) {
  if (t.explicit_ratio) {
    if (v0 < t.ratio_offset) return std::nullopt;
    Rational acc(1);
    for (long u = t.ratio_offset; u < v0; ++u) {
      auto step = t.explicit_ratio->eval(Rational(u));
      if (!step) return std::nullopt;
      acc *= *step;
    }
    return acc;
  }
  Rational acc(1);
  for (const auto& f : t.factors) {
    const long tv = f.top.slope * v0 + f.top.outer_slope * s0 + f.top.constant;
    const long bv =
        f.bottom.slope * v0 + f.bottom.outer_slope * s0 + f.bottom.constant;
    if (tv < 0) return std::nullopt;
    acc *= Rational(binomial(tv, bv));
  }
  if (t.geometric_base != 1) acc *= rational_power(t.geometric_base, v0);
  if (t.alternating_sign && v0 % 2 != 0) acc = -acc;
  return acc;
}

}  // namespace betasum
