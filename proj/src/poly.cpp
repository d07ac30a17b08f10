#include "pelp/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace pelp {

void poly_trim(Poly& p) {
    while (!p.empty() && p.back().value == 0) p.pop_back();
}

long poly_degree(const Poly& p) {
    long d = static_cast<long>(p.size()) - 1;
    while (d >= 0 && p[static_cast<std::size_t>(d)].value == 0) --d;
    return d;
}

FieldElem poly_eval(const Field& f, const Poly& p, FieldElem x) {
    FieldElem acc = f.zero();
    for (std::size_t i = p.size(); i-- > 0;) acc = f.add(f.mul(acc, x), p[i]);
    return acc;
}

Word poly_eval_all(const Field& f, const Poly& p, const Word& xs) {
    Word out(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) out[i] = poly_eval(f, p, xs[i]);
    return out;
}

Poly poly_add(const Field& f, const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), f.zero());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = f.add(r[i], b[i]);
    poly_trim(r);
    return r;
}

Poly poly_sub(const Field& f, const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), f.zero());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = f.sub(r[i], b[i]);
    poly_trim(r);
    return r;
}

Poly poly_mul(const Field& f, const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, f.zero());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].value == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
    }
    poly_trim(r);
    return r;
}

std::pair<Poly, Poly> poly_divmod(const Field& f, const Poly& a, const Poly& b) {
    Poly d = b;
    poly_trim(d);
    if (d.empty()) throw std::domain_error("polynomial division by zero");
    Poly r = a;
    poly_trim(r);
    if (r.size() < d.size()) return {Poly{}, r};
    Poly q(r.size() - d.size() + 1, f.zero());
    const FieldElem inv_lead = f.inv(d.back());
    while (r.size() >= d.size()) {
        const FieldElem c = f.mul(r.back(), inv_lead);
        const std::size_t shift = r.size() - d.size();
        q[shift] = c;
        for (std::size_t i = 0; i < d.size(); ++i) r[shift + i] = f.sub(r[shift + i], f.mul(c, d[i]));
        poly_trim(r);
    }
    poly_trim(q);
    return {q, r};
}

std::optional<Poly> poly_exact_div(const Field& f, const Poly& a, const Poly& b) {
    auto [q, r] = poly_divmod(f, a, b);
    if (!r.empty()) return std::nullopt;
    return q;
}

Poly poly_interpolate(const Field& f, const Word& xs, const Word& ys) {
    if (xs.size() != ys.size()) throw std::invalid_argument("interpolate: length mismatch");
    // Newton divided differences
    const std::size_t n = xs.size();
    Word coef = ys;
    for (std::size_t j = 1; j < n; ++j) {
        for (std::size_t i = n - 1; i >= j; --i) {
            const FieldElem den = f.sub(xs[i], xs[i - j]);
            if (den.value == 0) throw std::invalid_argument("interpolate: repeated abscissa");
            coef[i] = f.div(f.sub(coef[i], coef[i - 1]), den);
        }
    }
    Poly result;
    for (std::size_t i = n; i-- > 0;) {
        result = poly_mul(f, result, Poly{f.neg(xs[i]), f.one()});
        result = poly_add(f, result, Poly{coef[i]});
    }
    return result;
}

}  // namespace pelp
