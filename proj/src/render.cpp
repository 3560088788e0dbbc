#include "betasum/render.hpp"

namespace betasum {
namespace {

std::string maybe_paren(const std::string& s) {
  if (s.find(' ') != std::string::npos || s.find('/') != std::string::npos)
    return "(" + s + ")";
  return s;
}

}  // namespace

std::string poly_to_string(const PolyQ& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (long i = p.degree(); i >= 0; --i) {
    const Rational& c = p.coeff(i);
    if (c == 0) continue;
    const Rational ac = abs(c);
    std::string mag;
    if (i == 0) {
      mag = to_string(ac);
    } else {
      const std::string pw =
          var + (i == 1 ? "" : "^" + std::to_string(i));
      mag = (ac == 1) ? pw : to_string(ac) + " " + pw;
    }
    if (first) {
      out += (sgn(c) < 0 ? "-" : "") + mag;
      first = false;
    } else {
      out += (sgn(c) < 0 ? " - " : " + ") + mag;
    }
  }
  return out;
}

std::string ratfunc_to_string(const RatFuncQ& r, const std::string& var) {
  const std::string num = poly_to_string(r.num(), var);
  if (r.den().degree() == 0) return num;
  return maybe_paren(num) + " / " + maybe_paren(poly_to_string(r.den(), var));
}

}  // namespace betasum
