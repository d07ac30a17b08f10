#include "pelp/rs.hpp"

#include <set>
#include <stdexcept>
#include <string>

namespace pelp {

Word full_support_points(const Field& f) {
    if (f.order() > (std::uint64_t{1} << 20)) throw std::length_error("full support: field too large to enumerate");
    Word x(f.order());
    for (std::uint64_t i = 0; i < f.order(); ++i) x[i] = FieldElem{i};
    return x;
}

RsCode rs_code(const Field& f, const Word& x, std::size_t k) {
    const std::size_t n = x.size();
    if (k < 1 || k > n) throw std::invalid_argument("rs: need 1 <= k <= n, got k=" + std::to_string(k));
    std::set<std::uint64_t> seen;
    for (auto e : x) {
        if (!f.contains(e)) throw std::invalid_argument("rs: evaluation point outside the field");
        if (!seen.insert(e.value).second) throw std::invalid_argument("rs: repeated evaluation point");
    }
    Matrix g(f, k, n);
    for (std::size_t i = 0; i < n; ++i) {
        FieldElem p = f.one();
        for (std::size_t j = 0; j < k; ++j) {
            g.at(j, i) = p;
            p = f.mul(p, x[i]);
        }
    }
    return RsCode{f, x, k, LinearCode::from_generator(g)};
}

Word rs_encode(const RsCode& c, const Poly& p) {
    if (poly_degree(p) >= static_cast<long>(c.k)) throw std::invalid_argument("rs encode: degree must be below k");
    return poly_eval_all(c.field, p, c.x);
}

PelpPair rs_pelp_pair(const RsCode& c, std::size_t t, unsigned ell) {
    const std::size_t n = c.length(), k = c.k;
    if (t + k > n) throw std::invalid_argument("rs pair: need t + k <= n");
    const RsCode a = rs_code(c.field, c.x, t + 1);
    const RsCode b_dual = rs_code(c.field, c.x, t + k);
    DistanceHints h;
    h.a = DistanceBound{n - t, true};
    h.a_dual = DistanceBound{t + 2, true};  // RS(t+1)^perp = RS(n-t-1) on distinct points is MDS
    h.c = DistanceBound{n - k + 1, true};
    h.b_dual = DistanceBound{n - t - k + 1, true};
    return PelpPair(a.code, dual(b_dual.code), c.code, ell, t, h);
}

}  // namespace pelp
