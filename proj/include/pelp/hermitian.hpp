#pragma once

#include <optional>
#include <vector>

#include "pelp/codes.hpp"
#include "pelp/pair.hpp"

namespace pelp {

/*
 * The Hermitian curve y^q0 + y = x^(q0+1) over GF(q0^2) with its n = q0^3 affine
 * rational points. Functions in L(m P_inf) are spanned by x^a y^b with b < q0 and
 * pole order a*q0 + b*(q0+1) <= m; distinct monomials have distinct pole orders.
 */
struct HermitianCurve {
    unsigned q0 = 0;
    Field field;
    Word px, py;
    std::size_t genus = 0;

    std::size_t length() const { return px.size(); }
};

struct Monomial {
    unsigned a = 0, b = 0;
    std::size_t pole_order = 0;
};

// Points are sorted by the coefficient vectors of (x, y), constant term compared first.
HermitianCurve hermitian_curve(unsigned q0);

// Monomials of L(m P_inf) in increasing pole order.
std::vector<Monomial> rr_basis(unsigned q0, long m);
std::optional<Monomial> monomial_with_pole_order(unsigned q0, std::size_t w);

struct HermitianCode {
    HermitianCurve curve;
    long m = 0;
    std::vector<Monomial> basis;
    LinearCode code;
};

// Evaluation of L(m P_inf); requires 0 <= m < n.
HermitianCode one_point_code(const HermitianCurve& curve, long m);
// Same construction without the range restriction (m < 0 gives the zero code).
HermitianCode evaluation_code(const HermitianCurve& curve, long m);

Word evaluate_monomial(const HermitianCurve& curve, const Monomial& mono);

// ---- coordinate ring F[x, y] / (y^q0 + y - x^(q0+1)) in the monomial basis ----

// Coefficient vector indexed by pole order; entries at gap orders stay zero.
using RingElem = std::vector<FieldElem>;

void ring_trim(RingElem& r);
long ring_pole_order(const RingElem& r);  // -1 for zero
RingElem ring_mul(const HermitianCurve& curve, const RingElem& a, const RingElem& b);
std::optional<RingElem> ring_exact_div(const HermitianCurve& curve, const RingElem& a, const RingElem& b);
Word ring_eval_all(const HermitianCurve& curve, const RingElem& r);

struct AgPairBuild {
    PelpPair pair;
    bool strict_condition3 = false;  // t < n - ell*degG - 2g
    bool product_proper = false;     // t < n - ell*degG - g - 1, i.e. B^perp * C^(ell-1) is proper
};

/*
 * A = C_L(t + 2g), B = C_L(t + 2g + degG)^perp, C = C_L(degG).
 * Requires degG >= 2g, t <= n - ell*degG - 2g and t + 2g < n - degG.
 * B is cross-checked against C_L(n - 2 - t - degG).
 */
AgPairBuild ag_pelp_pair(const HermitianCurve& curve, long deg_g, std::size_t t, unsigned ell);

}  // namespace pelp
