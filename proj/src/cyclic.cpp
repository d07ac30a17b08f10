#include "pelp/cyclic.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace pelp {

IndexSet::IndexSet(std::size_t n, std::vector<std::size_t> elems) : n_(n), elems_(std::move(elems)) {
    if (n_ == 0) throw std::invalid_argument("index set: modulus must be positive");
    std::sort(elems_.begin(), elems_.end());
    if (std::adjacent_find(elems_.begin(), elems_.end()) != elems_.end()) {
        throw std::invalid_argument("index set: duplicate element");
    }
    if (!elems_.empty() && elems_.back() >= n_) throw std::invalid_argument("index set: element outside [0, n)");
}

IndexSet IndexSet::range(std::size_t n, std::size_t first, std::size_t last) {
    std::vector<std::size_t> e;
    for (std::size_t i = first; i <= last; ++i) e.push_back(i);
    return IndexSet(n, std::move(e));
}

bool IndexSet::contains(std::size_t i) const { return std::binary_search(elems_.begin(), elems_.end(), i); }

std::string IndexSet::to_string() const {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < elems_.size();) {
        std::size_t j = i;
        while (j + 1 < elems_.size() && elems_[j + 1] == elems_[j] + 1) ++j;
        if (i) os << ',';
        os << elems_[i];
        if (j > i) os << ".." << elems_[j];
        i = j + 1;
    }
    os << '}';
    return os.str();
}

IndexSet IndexSet::parse(std::size_t n, const std::string& text) {
    // accepts "0..24,30", optionally wrapped in braces
    std::string s;
    for (char c : text)
        if (c != '{' && c != '}' && c != ' ') s.push_back(c);
    std::vector<std::size_t> out;
    std::stringstream ss(s);
    std::string tok;
    try {
        while (std::getline(ss, tok, ',')) {
            if (tok.empty()) continue;
            const auto dots = tok.find("..");
            if (dots == std::string::npos) {
                out.push_back(std::stoul(tok));
            } else {
                const std::size_t lo = std::stoul(tok.substr(0, dots)), hi = std::stoul(tok.substr(dots + 2));
                if (hi < lo) throw std::invalid_argument("index set: empty range " + tok);
                for (std::size_t i = lo; i <= hi; ++i) out.push_back(i);
            }
        }
    } catch (const std::logic_error& e) {
        throw std::invalid_argument("index set: cannot parse '" + text + "'");
    }
    return IndexSet(n, std::move(out));
}

IndexSet sum_set(const IndexSet& s, const IndexSet& r) {
    if (s.modulus() != r.modulus()) throw std::invalid_argument("sum set: modulus mismatch");
    const std::size_t n = s.modulus();
    std::vector<bool> hit(n, false);
    for (auto a : s.elems())
        for (auto b : r.elems()) hit[(a + b) % n] = true;
    std::vector<std::size_t> e;
    for (std::size_t i = 0; i < n; ++i)
        if (hit[i]) e.push_back(i);
    return IndexSet(n, std::move(e));
}

IndexSet scale_set(long a, const IndexSet& r) {
    const long n = static_cast<long>(r.modulus());
    const long am = ((a % n) + n) % n;
    if (std::gcd(am, n) != 1) throw std::invalid_argument("scale set: multiplier not coprime to n");
    std::vector<std::size_t> e;
    for (auto x : r.elems()) e.push_back(static_cast<std::size_t>((am * static_cast<long>(x)) % n));
    return IndexSet(r.modulus(), std::move(e));
}

std::size_t closure_size(const IndexSet& s) {
    const auto& e = s.elems();
    if (e.empty()) return 0;
    const std::size_t n = s.modulus();
    std::size_t max_gap = n - e.back() + e.front();  // wrap-around gap
    for (std::size_t i = 1; i < e.size(); ++i) max_gap = std::max(max_gap, e[i] - e[i - 1]);
    return n - (max_gap - 1);
}

std::size_t longest_run(const IndexSet& s) {
    const std::size_t n = s.modulus();
    if (s.size() == n) return n;
    std::size_t best = 0, cur = 0;
    // two passes over the circle handle runs through n-1 -> 0
    for (std::size_t i = 0; i < 2 * n; ++i) {
        cur = s.contains(i % n) ? cur + 1 : 0;
        best = std::max(best, std::min(cur, n));
    }
    return best;
}

std::size_t bch_bound(const IndexSet& defining) {
    if (defining.size() == defining.modulus()) return defining.modulus() + 1;  // zero code
    return longest_run(defining) + 1;
}

IndexSet generating_to_defining(const IndexSet& s) {
    const std::size_t n = s.modulus();
    std::vector<std::size_t> e;
    for (std::size_t i = 0; i < n; ++i)
        if (!s.contains((n - i) % n)) e.push_back(i);
    return IndexSet(n, std::move(e));
}

Matrix root_matrix(const IndexSet& r, const Field& f, FieldElem gamma) {
    const std::size_t n = r.modulus();
    if (gamma.value == 0 || f.multiplicative_order(gamma) != n) {
        throw std::invalid_argument("root matrix: gamma must have multiplicative order n = " + std::to_string(n));
    }
    Matrix m(f, r.size(), n);
    for (std::size_t row = 0; row < r.size(); ++row) {
        const FieldElem g = f.pow(gamma, r.elems()[row]);
        FieldElem p = f.one();
        for (std::size_t j = 0; j < n; ++j) {
            m.at(row, j) = p;
            p = f.mul(p, g);
        }
    }
    return m;
}

LinearCode code_from_defining_set(const IndexSet& r, const Field& f, FieldElem gamma) {
    return LinearCode::from_generator(kernel(root_matrix(r, f, gamma)));
}

LinearCode code_from_generating_set(const IndexSet& r, const Field& f, FieldElem gamma) {
    return LinearCode::from_generator(root_matrix(r, f, gamma));
}

RoosCheck roos_check(const IndexSet& s, const IndexSet& r, std::size_t d_r_lower) {
    if (s.modulus() != r.modulus()) throw std::invalid_argument("roos check: modulus mismatch");
    RoosCheck c;
    c.closure = closure_size(s);
    c.hypothesis_ok = c.closure + 2 <= s.size() + d_r_lower;
    c.d_roos = s.size() + d_r_lower - 1;
    return c;
}

bool nondegeneracy_check(const IndexSet& r) {
    const std::size_t n = r.modulus();
    for (std::size_t d = 2; d <= n; ++d) {
        if (n % d) continue;
        const std::size_t step = n / d;  // the order-d subgroup is step * Z/nZ
        for (std::size_t c = 0; c < step; ++c) {
            bool full = true;
            for (std::size_t j = 0; j < d && full; ++j) full = r.contains(c + j * step);
            if (full) return false;
        }
    }
    return true;
}

CyclicPairReport cyclic_pelp_pair(const IndexSet& s, const IndexSet& r, long a, long b, unsigned ell, const Field& f,
                                  FieldElem gamma, std::optional<std::size_t> d_r_lower,
                                  std::optional<std::size_t> t_opt) {
    if (s.modulus() != r.modulus()) throw std::invalid_argument("cyclic pair: S and R have different moduli");
    if (ell < 1) throw std::invalid_argument("cyclic pair: ell must be at least 1");
    const std::size_t n = s.modulus();
    const long ln = static_cast<long>(n);
    if (std::gcd(((a % ln) + ln) % ln, ln) != 1) throw std::invalid_argument("cyclic pair: gcd(a, n) != 1");
    if (std::gcd(((b % ln) + ln) % ln, ln) != 1) throw std::invalid_argument("cyclic pair: gcd(b, n) != 1");
    const IndexSet as = scale_set(a, s), br = scale_set(b, r);
    const IndexSet sum = sum_set(as, br);
    const std::size_t d_r = d_r_lower.value_or(bch_bound(br));
    if (d_r < 2) throw std::invalid_argument("cyclic pair: d_R lower bound must be at least 2");

    if (!nondegeneracy_check(br)) {
        throw std::invalid_argument("cyclic pair: nondegeneracy condition violated, bR contains a full coset of a nontrivial subgroup");
    }
    const RoosCheck roos = roos_check(as, br, d_r);
    if (!roos.hypothesis_ok) {
        throw std::invalid_argument("cyclic pair: Roos hypothesis |S bar| <= |S| + d_R - 2 violated (" +
                                    std::to_string(roos.closure) + " > " + std::to_string(s.size() + d_r - 2) + ")");
    }

    LinearCode A = code_from_generating_set(as, f, gamma);
    LinearCode B = code_from_generating_set(br, f, gamma);
    LinearCode C = code_from_defining_set(sum, f, gamma);
    const std::size_t k = C.dim();
    const long delta = static_cast<long>(n) - static_cast<long>(k) - static_cast<long>(s.size() + r.size()) + 1;
    const std::size_t d_s = bch_bound(as);

    DistanceHints hints;
    hints.a = DistanceBound{bch_bound(generating_to_defining(as)), false};
    hints.a_dual = DistanceBound{d_s, false};
    hints.c = DistanceBound{bch_bound(sum), false};
    hints.b_dual = DistanceBound{d_r, false};

    // W_i only depends on B and C, so a provisional t is fine here.
    PelpPair probe(A, B, C, ell, 0);
    std::vector<long> gammas;
    long gamma_sum = 0;
    for (unsigned i = 1; i < ell; ++i) {
        if (probe.product_space(i + 1).dim() == n) {
            throw std::invalid_argument("cyclic pair: B^perp * C~^" + std::to_string(i) + " is the full space");
        }
        const long gi = static_cast<long>(B.dim()) - static_cast<long>(probe.W(i + 1).dim()) -
                        static_cast<long>(i) * static_cast<long>(k) + static_cast<long>(i);
        gammas.push_back(gi);
        gamma_sum += gi;
    }
    const long L = static_cast<long>(ell);
    const long radius = L * ln - (L * (L + 1) / 2 * (static_cast<long>(k) - 1) +
                                  L * (static_cast<long>(s.size()) + delta) + gamma_sum);
    const std::size_t t = t_opt.value_or(radius > 0 ? static_cast<std::size_t>(radius) : 0);
    if (s.size() <= t) throw std::invalid_argument("cyclic pair: |S| > t violated");
    if (d_s <= t) throw std::invalid_argument("cyclic pair: d_S > t violated (BCH bound " + std::to_string(d_s) + ")");

    CyclicPairReport rep{PelpPair(std::move(A), std::move(B), std::move(C), ell, t, hints),
                         as, br, sum, k, delta, gammas, radius, roos, d_r, d_s, true, false, false, false};
    rep.comparison_applicable = ell == 2 && closure_size(br) == br.size() && d_r == br.size() + 1;
    rep.comparison_radius_side = 2 * radius >= static_cast<long>(roos.d_roos) - 1;
    if (ell >= 2) {
        rep.comparison_k_side = 5 * static_cast<long>(k) <=
                                3 * ln + 6 - 3 * delta - 2 * gammas[0] - 4 * static_cast<long>(s.size());
    }
    return rep;
}

}  // namespace pelp
