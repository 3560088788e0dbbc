#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "betasum/ratfunc.hpp"
#include "betasum/report.hpp"

namespace betasum {

// Certificate of indefinite summability: with r(v) = t(v+1)/t(v), the
// function G(v) = R(v) t(v) satisfies G(v+1) - G(v) = t(v).
struct GosperCertificate {
  RatFuncQ R;
};

// All integer shifts h >= 0 with gcd(u(x), v(x+h)) nonconstant,
// ascending.  Exact: the resultant Res_x(u(x), v(x+h)) is interpolated as
// a polynomial in h and its nonnegative integer roots are extracted.
std::vector<long> dispersion_candidates(const PolyQ& u, const PolyQ& v);

// Decide whether a hypergeometric term with the given shift ratio has a
// hypergeometric antidifference; nullopt when none exists.  The ratio
// must be nonzero.
std::optional<GosperCertificate> gosper(const RatFuncQ& ratio);

// Pointwise check of t(v) = R(v+1) t(v+1) - R(v) t(v) on [v_lo, v_hi].
// Points where t or R is undefined, or where t vanishes, are skipped and
// counted.
VerificationReport verify_certificate(
    const std::function<std::optional<Rational>(long)>& term_value,
    const GosperCertificate& cert, long v_lo, long v_hi);

}  // namespace betasum
