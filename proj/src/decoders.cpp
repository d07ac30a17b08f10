#include "pelp/decoders.hpp"

#include <stdexcept>
#include <string>

namespace pelp {

const char* to_string(Failure f) {
    switch (f) {
        case Failure::none: return "none";
        case Failure::M_zero: return "M_zero";
        case Failure::J_too_large: return "J_too_large";
        case Failure::erasure_inconsistent: return "erasure_inconsistent";
        case Failure::erasure_ambiguous: return "erasure_ambiguous";
        case Failure::distance_check_failed: return "distance_check_failed";
        case Failure::no_locator: return "no_locator";
        case Failure::division_failed: return "division_failed";
    }
    return "unknown";
}

const std::vector<Failure>& all_failures() {
    static const std::vector<Failure> v{Failure::M_zero,           Failure::J_too_large,
                                        Failure::erasure_inconsistent, Failure::erasure_ambiguous,
                                        Failure::distance_check_failed, Failure::no_locator,
                                        Failure::division_failed};
    return v;
}

namespace {

Word coordinatewise_power(const Field& f, const Word& y, unsigned i) {
    Word out(y.size());
    for (std::size_t j = 0; j < y.size(); ++j) out[j] = f.pow(y[j], i);
    return out;
}

DecodeOutcome fail(Failure f, IndexList j = {}) {
    DecodeOutcome o;
    o.failure = f;
    o.located = std::move(j);
    return o;
}

DecodeOutcome finish_with_codeword(const Word& y, Word c, std::size_t t, IndexList j = {}) {
    DecodeOutcome o;
    o.located = std::move(j);
    if (hamming_distance(c, y) > t) {
        o.failure = Failure::distance_check_failed;
        return o;
    }
    o.error.resize(y.size());
    o.codeword = std::move(c);
    return o;
}

void check_word(const PelpPair& pair, const Word& y) {
    if (y.size() != pair.length()) throw std::invalid_argument("decode: received word has the wrong length");
    for (auto e : y)
        if (!pair.field().contains(e)) throw std::invalid_argument("decode: symbol outside the field");
}

// Shared tail of the ECP and PELP decoders: locate on Z(M), then erasure-decode.
DecodeOutcome locate_and_correct(const PelpPair& pair, const Word& y, const Subspace& m_coords, PelpTrace* trace) {
    const Field& f = pair.field();
    const Subspace m = to_ambient(pair, m_coords);
    if (trace) trace->m = m;
    if (m.dim() == 0) return fail(Failure::M_zero);
    IndexList j = zero_set(m);
    if (j.size() > pair.parity_check().rows()) return fail(Failure::J_too_large, j);
    ErasureResult er = erasure_solve(pair.parity_check(), y, j);
    if (er.failure != Failure::none) return fail(er.failure, j);
    Word c(y.size());
    for (std::size_t i = 0; i < y.size(); ++i) c[i] = f.sub(y[i], er.error[i]);
    DecodeOutcome o = finish_with_codeword(y, std::move(c), pair.t(), std::move(j));
    if (o.ok()) o.error = std::move(er.error);
    return o;
}

}  // namespace

// ---- locating spaces ----

Subspace compute_Mi(const PelpPair& pair, const Word& y, unsigned i) {
    if (i < 1 || i > pair.ell()) throw std::out_of_range("compute_Mi: i must lie in 1..ell");
    check_word(pair, y);
    const Field& f = pair.field();
    const Word yi = coordinatewise_power(f, y, i);
    const Matrix& w = pair.W(i).generator();
    const Matrix& a = pair.A().generator();
    // E[v][r] = < a_r * y^i, w_v >
    Matrix e(f, w.rows(), a.rows());
    for (std::size_t v = 0; v < w.rows(); ++v) {
        const Word u = star(f, yi, w.row(v));
        for (std::size_t r = 0; r < a.rows(); ++r) e.at(v, r) = dot(f, a.row(r), u);
    }
    return Subspace::span(kernel(e));
}

Subspace compute_M(const PelpPair& pair, const Word& y) {
    Subspace m = compute_Mi(pair, y, 1);
    for (unsigned i = 2; i <= pair.ell() && m.dim() > 0; ++i) m = intersect(m, compute_Mi(pair, y, i));
    return m;
}

Subspace to_ambient(const PelpPair& pair, const Subspace& coords) {
    if (coords.ambient() != pair.A().dim()) throw std::invalid_argument("to_ambient: coordinate space mismatch");
    return Subspace::span(coords.basis() * pair.A().generator());
}

ErasureResult erasure_solve(const Matrix& parity, const Word& y, const IndexList& j) {
    if (y.size() != parity.cols()) throw std::invalid_argument("erasure solve: word length mismatch");
    const Field& f = parity.field();
    const Word syndrome = mul_mat_vec(parity, y);
    const SolveResult res = solve(parity.select_columns(j), syndrome);
    ErasureResult out;
    if (std::holds_alternative<NoSolution>(res)) {
        out.failure = Failure::erasure_inconsistent;
    } else if (std::holds_alternative<Underdetermined>(res)) {
        out.failure = Failure::erasure_ambiguous;
    } else {
        const Word& x = std::get<UniqueSolution>(res).x;
        out.error.assign(y.size(), f.zero());
        for (std::size_t i = 0; i < j.size(); ++i) out.error[j[i]] = x[i];
    }
    return out;
}

ErasureResult erasure_solve(const LinearCode& c, const Word& y, const IndexList& j) {
    return erasure_solve(dual(c).generator(), y, j);
}

DecodeOutcome pelp_decode(const PelpPair& pair, const Word& y, PelpTrace* trace) {
    check_word(pair, y);
    Subspace m = compute_Mi(pair, y, 1);
    if (trace) trace->m1 = to_ambient(pair, m);
    for (unsigned i = 2; i <= pair.ell(); ++i) m = intersect(m, compute_Mi(pair, y, i));
    return locate_and_correct(pair, y, m, trace);
}

DecodeOutcome ecp_decode(const PelpPair& pair, const Word& y) {
    if (pair.ell() != 1) throw std::invalid_argument("ecp_decode: pair must have ell = 1");
    check_word(pair, y);
    return locate_and_correct(pair, y, compute_Mi(pair, y, 1), nullptr);
}

// ---- key-equation decoders for RS ----

namespace {

struct KeySystem {
    Matrix m;
    std::size_t lambda_cols = 0;
    std::vector<std::size_t> nu_offset, nu_cols;  // per power j = 1..ell (index j-1)
};

// Unknowns [lambda_t .. lambda_0 | nu_1 | ... | nu_ell], one row per (j, i):
//   lambda(x_i) y_i^j - nu_j(x_i) = 0,  deg nu_j <= t + j(k-1).
KeySystem rs_key_system(const RsCode& c, const Word& y, std::size_t t, unsigned ell) {
    const Field& f = c.field;
    const std::size_t n = c.length();
    KeySystem ks{Matrix(f, 0, 0), t + 1, {}, {}};
    std::size_t cols = t + 1;
    for (unsigned j = 1; j <= ell; ++j) {
        ks.nu_offset.push_back(cols);
        ks.nu_cols.push_back(t + j * (c.k - 1) + 1);
        cols += ks.nu_cols.back();
    }
    ks.m = Matrix(f, ell * n, cols);
    const std::size_t max_deg = cols;  // generous bound on needed powers of x_i
    for (std::size_t i = 0; i < n; ++i) {
        Word xp(max_deg);
        xp[0] = f.one();
        for (std::size_t d = 1; d < max_deg; ++d) xp[d] = f.mul(xp[d - 1], c.x[i]);
        FieldElem yj = f.one();
        for (unsigned j = 1; j <= ell; ++j) {
            yj = f.mul(yj, y[i]);
            const std::size_t row = (j - 1) * n + i;
            for (std::size_t d = 0; d <= t; ++d) ks.m.at(row, t - d) = f.mul(xp[d], yj);
            for (std::size_t d = 0; d < ks.nu_cols[j - 1]; ++d) ks.m.at(row, ks.nu_offset[j - 1] + d) = f.neg(xp[d]);
        }
    }
    return ks;
}

Poly lambda_of(const Word& v, std::size_t t) {
    Poly p(t + 1);
    for (std::size_t d = 0; d <= t; ++d) p[d] = v[t - d];
    poly_trim(p);
    return p;
}

Poly nu_of(const KeySystem& ks, const Word& v, unsigned j) {
    Poly p(v.begin() + static_cast<long>(ks.nu_offset[j - 1]),
           v.begin() + static_cast<long>(ks.nu_offset[j - 1] + ks.nu_cols[j - 1]));
    poly_trim(p);
    return p;
}

// Solution of the key system with lambda of least degree: the last RREF row whose pivot lies
// in the lambda block (columns ordered from the top degree down).
std::optional<Word> least_degree_solution(const Matrix& system, std::size_t lambda_cols) {
    const Matrix k = kernel(system);
    if (k.rows() == 0) return std::nullopt;
    const Echelon e = rref(k);
    std::optional<Word> best;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
        if (e.pivots[r] < lambda_cols) best = e.basis.row_word(r);
    }
    return best;
}

}  // namespace

DecodeOutcome wb_decode(const RsCode& c, const Word& y, std::size_t t) {
    if (y.size() != c.length()) throw std::invalid_argument("wb_decode: received word has the wrong length");
    if (2 * t + 1 > c.distance()) {
        throw std::invalid_argument("wb_decode: t exceeds half the minimum distance, use power or pelp decoding");
    }
    const Field& f = c.field;
    const KeySystem ks = rs_key_system(c, y, t, 1);
    const Matrix k = kernel(ks.m);
    // Any solution with lambda != 0 works below half the distance; take the first one.
    std::optional<Word> sol;
    for (std::size_t r = 0; r < k.rows() && !sol; ++r) {
        Word v = k.row_word(r);
        if (!lambda_of(v, t).empty()) sol = std::move(v);
    }
    if (!sol) return fail(Failure::no_locator);
    const auto g = poly_exact_div(f, nu_of(ks, *sol, 1), lambda_of(*sol, t));
    if (!g || poly_degree(*g) >= static_cast<long>(c.k)) return fail(Failure::division_failed);
    DecodeOutcome o = finish_with_codeword(y, poly_eval_all(f, *g, c.x), t);
    if (o.ok())
        for (std::size_t i = 0; i < y.size(); ++i) o.error[i] = f.sub(y[i], o.codeword[i]);
    return o;
}

DecodeOutcome power_decode_rs(const RsCode& c, const Word& y, std::size_t t, unsigned ell) {
    if (y.size() != c.length()) throw std::invalid_argument("power_decode_rs: received word has the wrong length");
    if (ell < 1) throw std::invalid_argument("power_decode_rs: ell must be at least 1");
    if (t + ell * (c.k - 1) >= c.length()) throw std::invalid_argument("power_decode_rs: need t < n - ell(k-1)");
    const Field& f = c.field;
    const KeySystem ks = rs_key_system(c, y, t, ell);
    const auto sol = least_degree_solution(ks.m, ks.lambda_cols);
    if (!sol) return fail(Failure::no_locator);
    const Poly lambda = lambda_of(*sol, t);
    const auto g = poly_exact_div(f, nu_of(ks, *sol, 1), lambda);
    if (!g || poly_degree(*g) >= static_cast<long>(c.k)) return fail(Failure::division_failed);
    Poly gj = *g;
    for (unsigned j = 2; j <= ell; ++j) {
        gj = poly_mul(f, gj, *g);
        if (poly_mul(f, lambda, gj) != nu_of(ks, *sol, j)) return fail(Failure::division_failed);
    }
    DecodeOutcome o = finish_with_codeword(y, poly_eval_all(f, *g, c.x), t);
    if (o.ok())
        for (std::size_t i = 0; i < y.size(); ++i) o.error[i] = f.sub(y[i], o.codeword[i]);
    return o;
}

DecodeOutcome power_decode_ag(const HermitianCode& c, const Word& y, std::size_t t, unsigned ell, bool enforce_degree) {
    const HermitianCurve& curve = c.curve;
    const Field& f = curve.field;
    const std::size_t n = curve.length();
    const long g = static_cast<long>(curve.genus);
    if (y.size() != n) throw std::invalid_argument("power_decode_ag: received word has the wrong length");
    if (ell < 1) throw std::invalid_argument("power_decode_ag: ell must be at least 1");
    if (enforce_degree && c.m < 2 * g + 1) throw std::invalid_argument("power_decode_ag: need degG >= 2g + 1");
    const long deg_f = static_cast<long>(t) + 2 * g;

    const auto lam_basis = rr_basis(curve.q0, deg_f);
    std::vector<std::vector<Monomial>> nu_basis;
    std::size_t cols = lam_basis.size();
    std::vector<std::size_t> nu_offset;
    for (unsigned j = 1; j <= ell; ++j) {
        nu_basis.push_back(rr_basis(curve.q0, deg_f + static_cast<long>(j) * c.m));
        nu_offset.push_back(cols);
        cols += nu_basis.back().size();
    }
    // Monomial values, indexed by pole order.
    const std::size_t max_w = nu_basis.back().back().pole_order;
    std::vector<Word> values(max_w + 1);
    for (const auto& mono : nu_basis.back()) values[mono.pole_order] = evaluate_monomial(curve, mono);

    // lambda columns in decreasing pole order so the last lambda pivot has least pole order
    Matrix sys(f, ell * n, cols);
    const std::size_t lc = lam_basis.size();
    for (std::size_t i = 0; i < n; ++i) {
        FieldElem yj = f.one();
        for (unsigned j = 1; j <= ell; ++j) {
            yj = f.mul(yj, y[i]);
            const std::size_t row = (j - 1) * n + i;
            for (std::size_t s = 0; s < lc; ++s) sys.at(row, lc - 1 - s) = f.mul(values[lam_basis[s].pole_order][i], yj);
            for (std::size_t s = 0; s < nu_basis[j - 1].size(); ++s)
                sys.at(row, nu_offset[j - 1] + s) = f.neg(values[nu_basis[j - 1][s].pole_order][i]);
        }
    }
    const auto sol = least_degree_solution(sys, lc);
    if (!sol) return fail(Failure::no_locator);

    auto ring_from = [&](const std::vector<Monomial>& basis, std::size_t offset, bool reversed) {
        RingElem r(basis.back().pole_order + 1, f.zero());
        for (std::size_t s = 0; s < basis.size(); ++s) {
            const std::size_t col = reversed ? offset + basis.size() - 1 - s : offset + s;
            r[basis[s].pole_order] = (*sol)[col];
        }
        ring_trim(r);
        return r;
    };
    const RingElem lambda = ring_from(lam_basis, 0, true);
    const auto quotient = ring_exact_div(curve, ring_from(nu_basis[0], nu_offset[0], false), lambda);
    if (!quotient || ring_pole_order(*quotient) > c.m) return fail(Failure::division_failed);
    RingElem gj = *quotient;
    for (unsigned j = 2; j <= ell; ++j) {
        gj = ring_mul(curve, gj, *quotient);
        if (ring_mul(curve, lambda, gj) != ring_from(nu_basis[j - 1], nu_offset[j - 1], false)) {
            return fail(Failure::division_failed);
        }
    }
    DecodeOutcome o = finish_with_codeword(y, ring_eval_all(curve, *quotient), t);
    if (o.ok())
        for (std::size_t i = 0; i < n; ++i) o.error[i] = f.sub(y[i], o.codeword[i]);
    return o;
}

// ---- oracle checks ----

OracleReport pelp_oracle_checks(const PelpPair& pair, const Word& y, const Word& sent, const PelpTrace& trace) {
    if (!trace.m || !trace.m1) throw std::invalid_argument("oracle checks: trace lacks M or M_1");
    const Field& f = pair.field();
    const std::size_t n = pair.length();
    OracleReport rep;

    std::vector<Word> e(pair.ell() + 1);
    for (unsigned i = 1; i <= pair.ell(); ++i) {
        e[i].resize(n);
        for (std::size_t j = 0; j < n; ++j) e[i][j] = f.sub(f.pow(y[j], i), f.pow(sent[j], i));
    }
    const IndexList ie = support(e[1]);
    std::vector<bool> in_ie(n, false);
    for (auto j : ie) in_ie[j] = true;
    for (unsigned i = 2; i <= pair.ell(); ++i)
        for (auto j : support(e[i]))
            if (!in_ie[j]) rep.supports_nested = false;

    const Subspace& m = *trace.m;
    const Subspace& m1 = *trace.m1;
    const Subspace a_ie = shorten(pair.A(), ie).space();
    rep.chain = a_ie.is_subspace_of(m) && m.is_subspace_of(m1) && m1.is_subspace_of(pair.A().space());
    rep.shortened_equals_m = a_ie == m;

    if (ie.empty()) {
        // zero-length projections: M_{I_e} = {0} trivially, and M(I_e) = M
        rep.decomposition = true;
        rep.equivalent_forms = rep.shortened_equals_m;
        return rep;
    }
    const LinearCode m_code(m);
    const LinearCode m_punct = m.dim() ? puncture(m_code, ie) : LinearCode::zero(f, ie.size());
    // right-hand side, built independently of the decoder's M
    Subspace rhs = puncture(pair.A(), ie).space();
    for (unsigned i = 1; i <= pair.ell(); ++i) {
        const Matrix& w = pair.W(i).generator();
        Matrix prod(f, 0, n);
        for (std::size_t r = 0; r < w.rows(); ++r) prod.append_row(star(f, e[i], w.row(r)));
        const Subspace proj = Subspace::span(prod.select_columns(ie));
        rhs = intersect(rhs, proj.orthogonal());
    }
    rep.decomposition = rhs == m_punct.space();

    const bool form1 = rep.shortened_equals_m;
    const bool form2 = shorten(m_code, ie) == m_code;
    const bool form3 = m_punct.dim() == 0;
    rep.equivalent_forms = form1 == form2 && form2 == form3;
    return rep;
}

// ---- Sol <-> M ----

SolMReport sol_m_isomorphism_check(const RsCode& c, const Word& y, std::size_t t) {
    const std::size_t n = c.length(), k = c.k;
    if (t + 2 * (k - 1) >= n) throw std::invalid_argument("sol/M check: need t < n - 2(k-1)");
    const Field& f = c.field;
    const KeySystem ks = rs_key_system(c, y, t, 2);
    const Matrix sol = kernel(ks.m);
    const PelpPair pair = rs_pelp_pair(c, t, 2);
    const Subspace m = to_ambient(pair, compute_M(pair, y));

    SolMReport rep;
    rep.dim_sol = sol.rows();
    rep.dim_m = m.dim();
    bool ok = rep.dim_sol == rep.dim_m;

    // phi: (lambda, nu_1, nu_2) -> ev_x(lambda)
    Matrix images(f, 0, n);
    for (std::size_t r = 0; r < sol.rows() && ok; ++r) {
        const Word v = sol.row_word(r);
        const Word img = poly_eval_all(f, lambda_of(v, t), c.x);
        if (!m.contains(img)) ok = false;
        images.append_row(img);
        // psi(phi(s)) = s
        const Poly lam = poly_interpolate(f, c.x, img);
        if (lam != lambda_of(v, t)) ok = false;
        for (unsigned j = 1; j <= 2 && ok; ++j) {
            Word yj(n);
            for (std::size_t i = 0; i < n; ++i) yj[i] = f.mul(img[i], f.pow(y[i], j));
            if (poly_interpolate(f, c.x, yj) != nu_of(ks, v, j)) ok = false;
        }
    }
    if (ok && rank(images) != rep.dim_m) ok = false;

    // psi: a -> (interp(a), interp(a*y), interp(a*y^2)) must land in Sol, and phi(psi(a)) = a
    for (std::size_t r = 0; r < m.dim() && ok; ++r) {
        const Word a = m.basis().row_word(r);
        Word v(ks.m.cols(), f.zero());
        const Poly lam = poly_interpolate(f, c.x, a);
        if (poly_degree(lam) > static_cast<long>(t)) {
            ok = false;
            break;
        }
        for (std::size_t d = 0; d < lam.size(); ++d) v[t - d] = lam[d];
        for (unsigned j = 1; j <= 2 && ok; ++j) {
            Word aj(n);
            for (std::size_t i = 0; i < n; ++i) aj[i] = f.mul(a[i], f.pow(y[i], j));
            const Poly nu = poly_interpolate(f, c.x, aj);
            if (poly_degree(nu) >= static_cast<long>(ks.nu_cols[j - 1])) {
                ok = false;
                break;
            }
            for (std::size_t d = 0; d < nu.size(); ++d) v[ks.nu_offset[j - 1] + d] = nu[d];
        }
        if (!ok) break;
        for (auto z : mul_mat_vec(ks.m, v))
            if (z.value) ok = false;
        if (poly_eval_all(f, lam, c.x) != a) ok = false;
    }
    rep.bijection_ok = ok;
    return rep;
}

// ---- radii ----

long long floor_rational(const Rational& r) {
    long long q = r.numerator() / r.denominator();
    if (r.numerator() % r.denominator() != 0 && r.numerator() < 0) --q;  // denominator is positive
    return q;
}

namespace {
Radius make_radius(Rational r) { return Radius{r, floor_rational(r)}; }
}  // namespace

Radius radius_rs(long long n, long long k, long long ell) {
    if (n < 1 || k < 1 || k > n || ell < 1) throw std::invalid_argument("radius rs: invalid parameters");
    const Radius r = make_radius(Rational(2 * n * ell - k * ell * (ell + 1) + ell * (ell - 1), 2 * (ell + 1)));
    if (r.value >= n - ell * (k - 1) - 1) {
        throw std::invalid_argument("radius rs: side condition t < n - ell(k-1) - 1 fails at t=" + std::to_string(r.value));
    }
    return r;
}

Radius radius_ag_pelp(long long n, long long g, long long deg_g, long long ell) {
    if (ell < 1 || n < 1 || g < 0) throw std::invalid_argument("radius ag: invalid parameters");
    return make_radius(Rational(2 * n * ell - ell * (ell + 1) * deg_g, 2 * (ell + 1)) - g + Rational(g - ell, ell + 1));
}

Radius radius_ag_sudan(long long n, long long g, long long deg_g, long long ell) {
    if (ell < 1 || n < 1 || g < 0) throw std::invalid_argument("radius sudan: invalid parameters");
    return make_radius(Rational(2 * n * ell - ell * (ell + 1) * deg_g, 2 * (ell + 1)) - g - Rational(1, ell + 1));
}

Radius radius_ag_power(long long n, long long g, long long deg_g, long long ell) {
    if (ell < 1 || n < 1 || g < 0) throw std::invalid_argument("radius ag power: invalid parameters");
    return make_radius(Rational(2 * n * ell - ell * (ell + 1) * deg_g, 2 * (ell + 1)) - g - Rational(ell, ell + 1));
}

Radius radius_cyclic(const CyclicPairReport& report) { return make_radius(Rational(report.radius)); }

}  // namespace pelp
