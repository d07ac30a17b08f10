#include "pelp/pair.hpp"

#include <stdexcept>

namespace pelp {

PelpPair::PelpPair(LinearCode a, LinearCode b, LinearCode c, unsigned ell, std::size_t t, DistanceHints hints)
    : a_(std::move(a)),
      b_(std::move(b)),
      c_(std::move(c)),
      ell_(ell),
      t_(t),
      hints_(hints),
      parity_(c_.field(), 0, c_.length()) {
    if (ell_ < 1) throw std::invalid_argument("pair: power ell must be at least 1");
    if (a_.length() != b_.length() || a_.length() != c_.length() || !(a_.field() == b_.field()) ||
        !(a_.field() == c_.field())) {
        throw std::invalid_argument("pair: A, B, C must share field and length");
    }
    parity_ = dual(c_).generator();
    products_.push_back(dual(b_));
    w_.push_back(b_);
    for (unsigned i = 2; i <= ell_; ++i) {
        products_.push_back(star_product(products_.back(), c_));
        w_.push_back(dual(products_.back()));
    }
}

const LinearCode& PelpPair::W(unsigned i) const {
    if (i < 1 || i > ell_) throw std::out_of_range("pair: W index must lie in 1..ell");
    return w_[i - 1];
}

const LinearCode& PelpPair::product_space(unsigned i) const {
    if (i < 1 || i > ell_) throw std::out_of_range("pair: product index must lie in 1..ell");
    return products_[i - 1];
}

const char* to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::holds: return "holds";
        case CheckStatus::fails: return "fails";
        default: return "unverified";
    }
}

bool PairReport::all_hold() const {
    for (auto& [name, c] : items()) {
        if (name != "genuine_ecp" && c->status != CheckStatus::holds) return false;
    }
    return true;
}

std::vector<std::pair<std::string, const ConditionCheck*>> PairReport::items() const {
    return {{"pelp1", &c1}, {"pelp2", &c2}, {"pelp3", &c3}, {"pelp4", &c4}, {"pelp5", &c5}, {"genuine_ecp", &genuine_ecp}};
}

namespace {

// Best available knowledge of d(code): a hint, or exhaustive search when affordable.
// A zero code gets distance n + 1 so that every "d > x" test with x <= n passes.
std::optional<DistanceBound> distance_of(const LinearCode& code, const std::optional<DistanceBound>& hint,
                                         std::uint64_t budget, std::string& how) {
    if (code.dim() == 0) {
        how = "zero code";
        return DistanceBound{code.length() + 1, true};
    }
    if (hint && hint->exact) {
        how = "exact hint";
        return hint;
    }
    if (min_distance_feasible(code, budget)) {
        how = "enumeration";
        return DistanceBound{min_distance(code, budget), true};
    }
    if (hint) {
        how = "lower bound";
        return hint;
    }
    how = "none";
    return std::nullopt;
}

ConditionCheck greater_than(const std::optional<DistanceBound>& d, std::size_t threshold, const std::string& how) {
    ConditionCheck c;
    c.rhs = static_cast<long>(threshold);
    if (!d) {
        c.detail = "no certified distance";
        return c;
    }
    c.lhs = static_cast<long>(d->value);
    if (d->value > threshold) {
        c.status = CheckStatus::holds;
    } else if (d->exact) {
        c.status = CheckStatus::fails;
    }
    c.detail = "distance via " + how;
    return c;
}

}  // namespace

PairReport validate_pelp_pair(const PelpPair& pair, std::uint64_t budget) {
    const Field& f = pair.field();
    const std::size_t n = pair.length(), t = pair.t();
    PairReport r;

    // (1) every product of basis rows is orthogonal to C
    {
        bool ok = true;
        const Matrix& h = pair.parity_check();
        const Matrix& ga = pair.A().generator();
        const Matrix& gb = pair.B().generator();
        const Matrix& gc = pair.C().generator();
        for (std::size_t i = 0; i < ga.rows() && ok; ++i)
            for (std::size_t j = 0; j < gb.rows() && ok; ++j) {
                const Word p = star(f, ga.row(i), gb.row(j));
                for (std::size_t k = 0; k < gc.rows() && ok; ++k) ok = dot(f, p, gc.row(k)).value == 0;
            }
        r.c1.status = ok ? CheckStatus::holds : CheckStatus::fails;
        r.c1.lhs = static_cast<long>(ga.rows() * gb.rows());
        r.c1.rhs = static_cast<long>(h.rows());
        r.c1.detail = "A*B inside C^perp, checked on all basis products";
    }
    // (2)
    r.c2.lhs = static_cast<long>(pair.A().dim());
    r.c2.rhs = static_cast<long>(t);
    r.c2.status = pair.A().dim() > t ? CheckStatus::holds : CheckStatus::fails;
    r.c2.detail = "dim A > t";
    // (3)
    {
        std::string how;
        const auto d = distance_of(dual(pair.A()), pair.hints().a_dual, budget, how);
        r.c3 = greater_than(d, t, how);
        r.c3.detail = "d(A^perp) > t, " + r.c3.detail;
    }
    // (4)
    {
        std::string how_a, how_c;
        const auto da = distance_of(pair.A(), pair.hints().a, budget, how_a);
        const auto dc = distance_of(pair.C(), pair.hints().c, budget, how_c);
        std::optional<DistanceBound> sum;
        if (da && dc) sum = DistanceBound{da->value + dc->value, da->exact && dc->exact};
        r.c4 = greater_than(sum, n, how_a + " / " + how_c);
        r.c4.detail = "d(A) + d(C) > n, " + r.c4.detail;
    }
    // (5)
    {
        std::size_t lhs = pair.B().dim();
        for (unsigned i = 2; i <= pair.ell(); ++i) lhs += pair.W(i).dim();
        r.c5.lhs = static_cast<long>(lhs);
        r.c5.rhs = static_cast<long>(t);
        r.c5.status = lhs >= t ? CheckStatus::holds : CheckStatus::fails;
        r.c5.detail = "dim B + sum_{i>=2} dim W_i >= t";
    }
    {
        std::string how;
        const auto d = distance_of(dual(pair.B()), pair.hints().b_dual, budget, how);
        r.genuine_ecp = greater_than(d, t, how);
        r.genuine_ecp.detail = "d(B^perp) > t, " + r.genuine_ecp.detail;
    }
    return r;
}

}  // namespace pelp
