#include "pelp/hermitian.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <tuple>

namespace pelp {

namespace {

constexpr std::size_t kMaxPoints = std::size_t{1} << 16;

Field hermitian_field(unsigned q0) {
    if (q0 < 2) throw std::invalid_argument("hermitian: q0 must be a prime power >= 2");
    const auto primes = factorize(q0);
    if (primes.front() != primes.back()) throw std::invalid_argument("hermitian: q0 must be a prime power");
    if (static_cast<std::size_t>(q0) * q0 * q0 > kMaxPoints) throw std::invalid_argument("hermitian: q0^3 exceeds the point budget");
    return Field(primes.front(), static_cast<unsigned>(2 * primes.size()));
}

}  // namespace

HermitianCurve hermitian_curve(unsigned q0) {
    HermitianCurve c{q0, hermitian_field(q0), {}, {}, static_cast<std::size_t>(q0) * (q0 - 1) / 2};
    const Field& f = c.field;
    struct Pt {
        std::vector<std::uint64_t> ka, kb;
        FieldElem a, b;
    };
    std::vector<Pt> pts;
    // y -> y^q0 + y is the trace to GF(q0); group y by its trace value.
    std::vector<std::vector<FieldElem>> by_trace(f.order());
    for (std::uint64_t v = 0; v < f.order(); ++v) {
        const FieldElem y{v};
        by_trace[f.add(f.pow(y, q0), y).value].push_back(y);
    }
    for (std::uint64_t u = 0; u < f.order(); ++u) {
        const FieldElem x{u};
        for (FieldElem y : by_trace[f.pow(x, q0 + 1).value]) pts.push_back({f.coeffs(x), f.coeffs(y), x, y});
    }
    std::sort(pts.begin(), pts.end(), [](const Pt& l, const Pt& r) { return std::tie(l.ka, l.kb) < std::tie(r.ka, r.kb); });
    for (const auto& p : pts) {
        c.px.push_back(p.a);
        c.py.push_back(p.b);
    }
    if (c.length() != static_cast<std::size_t>(q0) * q0 * q0) throw std::logic_error("hermitian: unexpected point count");
    return c;
}

std::optional<Monomial> monomial_with_pole_order(unsigned q0, std::size_t w) {
    const std::size_t b = w % q0;
    const std::size_t yb = b * (q0 + 1);
    if (w < yb) return std::nullopt;
    return Monomial{static_cast<unsigned>((w - yb) / q0), static_cast<unsigned>(b), w};
}

std::vector<Monomial> rr_basis(unsigned q0, long m) {
    std::vector<Monomial> out;
    for (long w = 0; w <= m; ++w) {
        if (auto mono = monomial_with_pole_order(q0, static_cast<std::size_t>(w))) out.push_back(*mono);
    }
    return out;
}

Word evaluate_monomial(const HermitianCurve& curve, const Monomial& mono) {
    const Field& f = curve.field;
    Word v(curve.length());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = f.mul(f.pow(curve.px[i], mono.a), f.pow(curve.py[i], mono.b));
    return v;
}

HermitianCode evaluation_code(const HermitianCurve& curve, long m) {
    HermitianCode hc{curve, m, rr_basis(curve.q0, m), LinearCode::zero(curve.field, curve.length())};
    Matrix g(curve.field, 0, curve.length());
    for (const auto& mono : hc.basis) g.append_row(evaluate_monomial(curve, mono));
    hc.code = LinearCode::from_generator(g);
    return hc;
}

HermitianCode one_point_code(const HermitianCurve& curve, long m) {
    if (m < 0 || m >= static_cast<long>(curve.length())) {
        throw std::invalid_argument("hermitian: one-point code needs 0 <= m < n, got m=" + std::to_string(m));
    }
    return evaluation_code(curve, m);
}

// ---- coordinate ring ----

void ring_trim(RingElem& r) {
    while (!r.empty() && r.back().value == 0) r.pop_back();
}

long ring_pole_order(const RingElem& r) {
    long w = static_cast<long>(r.size()) - 1;
    while (w >= 0 && r[static_cast<std::size_t>(w)].value == 0) --w;
    return w;
}

namespace {

// Adds c * x^a y^b to r, reducing y^q0 = x^(q0+1) - y once when b >= q0.
void add_term(const HermitianCurve& curve, RingElem& r, FieldElem c, unsigned a, unsigned b) {
    const Field& f = curve.field;
    const unsigned q0 = curve.q0;
    auto put = [&](unsigned aa, unsigned bb, FieldElem v) {
        const std::size_t w = static_cast<std::size_t>(aa) * q0 + static_cast<std::size_t>(bb) * (q0 + 1);
        if (r.size() <= w) r.resize(w + 1, f.zero());
        r[w] = f.add(r[w], v);
    };
    if (b < q0) {
        put(a, b, c);
    } else {
        put(a + q0 + 1, b - q0, c);
        put(a, b - q0 + 1, f.neg(c));
    }
}

}  // namespace

RingElem ring_mul(const HermitianCurve& curve, const RingElem& a, const RingElem& b) {
    const Field& f = curve.field;
    RingElem r;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].value == 0) continue;
        const auto ma = monomial_with_pole_order(curve.q0, i);
        if (!ma) throw std::invalid_argument("ring: coefficient at a gap pole order");
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (b[j].value == 0) continue;
            const auto mb = monomial_with_pole_order(curve.q0, j);
            if (!mb) throw std::invalid_argument("ring: coefficient at a gap pole order");
            add_term(curve, r, f.mul(a[i], b[j]), ma->a + mb->a, ma->b + mb->b);
        }
    }
    ring_trim(r);
    return r;
}

std::optional<RingElem> ring_exact_div(const HermitianCurve& curve, const RingElem& a, const RingElem& b) {
    const Field& f = curve.field;
    const long wb = ring_pole_order(b);
    if (wb < 0) throw std::domain_error("ring: division by zero");
    const FieldElem inv_lead = f.inv(b[static_cast<std::size_t>(wb)]);
    RingElem rem = a;
    ring_trim(rem);
    RingElem quot;
    // Leading terms multiply without cancellation, so long division on pole order is exact.
    for (long wr = ring_pole_order(rem); wr >= 0; wr = ring_pole_order(rem)) {
        if (wr < wb) return std::nullopt;
        const auto mono = monomial_with_pole_order(curve.q0, static_cast<std::size_t>(wr - wb));
        if (!mono) return std::nullopt;
        const FieldElem c = f.mul(rem[static_cast<std::size_t>(wr)], inv_lead);
        RingElem term(mono->pole_order + 1, f.zero());
        term[mono->pole_order] = c;
        if (quot.size() <= mono->pole_order) quot.resize(mono->pole_order + 1, f.zero());
        quot[mono->pole_order] = f.add(quot[mono->pole_order], c);
        const RingElem sub = ring_mul(curve, term, b);
        for (std::size_t i = 0; i < sub.size(); ++i) rem[i] = f.sub(rem[i], sub[i]);
        ring_trim(rem);
    }
    ring_trim(quot);
    return quot;
}

Word ring_eval_all(const HermitianCurve& curve, const RingElem& r) {
    const Field& f = curve.field;
    Word out(curve.length(), f.zero());
    for (std::size_t w = 0; w < r.size(); ++w) {
        if (r[w].value == 0) continue;
        const auto mono = monomial_with_pole_order(curve.q0, w);
        if (!mono) throw std::invalid_argument("ring: coefficient at a gap pole order");
        const Word v = evaluate_monomial(curve, *mono);
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.add(out[i], f.mul(r[w], v[i]));
    }
    return out;
}

// ---- the AG pair ----

AgPairBuild ag_pelp_pair(const HermitianCurve& curve, long deg_g, std::size_t t, unsigned ell) {
    const long n = static_cast<long>(curve.length());
    const long g = static_cast<long>(curve.genus);
    const long tt = static_cast<long>(t);
    const long L = static_cast<long>(ell);
    if (ell < 1) throw std::invalid_argument("ag pair: ell must be at least 1");
    if (deg_g < 2 * g) {
        throw std::invalid_argument("ag pair: degG >= 2g violated (degG=" + std::to_string(deg_g) +
                                    ", 2g=" + std::to_string(2 * g) + ")");
    }
    if (tt > n - L * deg_g - 2 * g) {
        throw std::invalid_argument("ag pair: t <= n - ell*degG - 2g violated (t=" + std::to_string(t) +
                                    ", bound=" + std::to_string(n - L * deg_g - 2 * g) + ")");
    }
    const long deg_f = tt + 2 * g;
    if (deg_f >= n - deg_g) {
        throw std::invalid_argument("ag pair: deg F = t + 2g < n - degG violated (deg F=" + std::to_string(deg_f) + ")");
    }
    const HermitianCode a = one_point_code(curve, deg_f);
    const HermitianCode b_dual = one_point_code(curve, deg_f + deg_g);
    const HermitianCode c = one_point_code(curve, deg_g);
    LinearCode b = dual(b_dual.code);
    const long m_b = n + 2 * g - 2 - (deg_f + deg_g);
    if (!(evaluation_code(curve, m_b).code == b)) {
        throw std::logic_error("ag pair: B differs from C_L(" + std::to_string(m_b) + ")");
    }
    DistanceHints h;
    h.a = DistanceBound{static_cast<std::size_t>(n - deg_f), false};
    h.a_dual = DistanceBound{t + 2, false};
    h.c = DistanceBound{static_cast<std::size_t>(n - deg_g), false};
    h.b_dual = DistanceBound{static_cast<std::size_t>(n - deg_f - deg_g), false};
    AgPairBuild out{PelpPair(a.code, std::move(b), c.code, ell, t, h), false, false};
    out.strict_condition3 = tt < n - L * deg_g - 2 * g;
    out.product_proper = tt < n - L * deg_g - g - 1;
    return out;
}

}  // namespace pelp
