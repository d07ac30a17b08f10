#pragma once

#include <optional>
#include <vector>

#include "pelp/gf.hpp"

namespace pelp {

// Univariate polynomial, coefficients low degree first, no trailing zeros.
using Poly = std::vector<FieldElem>;

void poly_trim(Poly& p);
// Degree, with -1 for the zero polynomial.
long poly_degree(const Poly& p);
FieldElem poly_eval(const Field& f, const Poly& p, FieldElem x);
Word poly_eval_all(const Field& f, const Poly& p, const Word& xs);
Poly poly_add(const Field& f, const Poly& a, const Poly& b);
Poly poly_sub(const Field& f, const Poly& a, const Poly& b);
Poly poly_mul(const Field& f, const Poly& a, const Poly& b);
// Quotient and remainder; throws on division by zero.
std::pair<Poly, Poly> poly_divmod(const Field& f, const Poly& a, const Poly& b);
// a / b when b divides a exactly.
std::optional<Poly> poly_exact_div(const Field& f, const Poly& a, const Poly& b);
// The unique polynomial of degree < |xs| through the points (xs[i], ys[i]).
Poly poly_interpolate(const Field& f, const Word& xs, const Word& ys);

}  // namespace pelp
